#include "kgspin/spin_tensor.hpp"

#include <cmath>
#include <ostream>

namespace kgspin {

SpinTensor::SpinTensor(int arity, int d, uint64_t cap) : arity_(arity), d_(d) {
  if (arity < 0 || d < 1) throw invalid_parameter("bad tensor shape");
  uint64_t sz = 1;
  for (int i = 0; i < arity; ++i) {
    if (sz > cap / static_cast<uint64_t>(d))
      throw capacity_error("dense table would exceed cap",
                           "d=" + std::to_string(d) +
                               " arity=" + std::to_string(arity) +
                               "; use the orbit backend");
    sz *= static_cast<uint64_t>(d);
  }
  values_.assign(sz, Rat(0));
}

SpinTensor SpinTensor::scalar(const Rat& v, int d) {
  SpinTensor t(0, d);
  t.values_[0] = v;
  return t;
}

uint64_t SpinTensor::flatten(const std::vector<int>& idx) const {
  if (static_cast<int>(idx.size()) != arity_)
    throw invalid_parameter("index tuple length mismatch");
  uint64_t f = 0;
  for (int x : idx) {
    if (x < 0 || x >= d_) throw invalid_parameter("index out of range");
    f = f * d_ + static_cast<uint64_t>(x);
  }
  return f;
}

std::vector<int> SpinTensor::unflatten(uint64_t flat) const {
  std::vector<int> idx(arity_);
  for (int j = arity_ - 1; j >= 0; --j) {
    idx[j] = static_cast<int>(flat % d_);
    flat /= d_;
  }
  return idx;
}

const Rat& SpinTensor::at(const std::vector<int>& idx) const {
  return values_[flatten(idx)];
}
Rat& SpinTensor::at(const std::vector<int>& idx) { return values_[flatten(idx)]; }

bool SpinTensor::is_zero() const {
  for (const auto& v : values_)
    if (v != 0) return false;
  return true;
}

void SpinTensor::dump(std::ostream& os) const {
  for (uint64_t i = 0; i < values_.size(); ++i) {
    if (values_[i] == 0) continue;
    auto idx = unflatten(i);
    for (size_t j = 0; j < idx.size(); ++j) {
      if (j) os << ' ';
      os << idx[j];
    }
    os << '\t' << values_[i].get_num().get_str() << '/'
       << values_[i].get_den().get_str() << '\n';
  }
}

static void check_same_d(const SpinTensor& f, const SpinTensor& g) {
  if (f.d() != g.d()) throw invalid_parameter("spin-set size mismatch");
}

SpinTensor tensor_product(const SpinTensor& f, const SpinTensor& g) {
  check_same_d(f, g);
  SpinTensor r(f.arity() + g.arity(), f.d());
  const uint64_t gs = g.size();
  for (uint64_t i = 0; i < f.size(); ++i) {
    if (f.at_flat(i) == 0) continue;
    for (uint64_t j = 0; j < gs; ++j) {
      if (g.at_flat(j) == 0) continue;
      r.at_flat(i * gs + j) = f.at_flat(i) * g.at_flat(j);
    }
  }
  return r;
}

SpinTensor apply_permutation(const SpinTensor& f, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != f.arity())
    throw invalid_parameter("permutation length mismatch");
  SpinTensor r(f.arity(), f.d());
  std::vector<int> src(f.arity());
  for (uint64_t i = 0; i < r.size(); ++i) {
    auto idx = r.unflatten(i);
    for (int j = 0; j < f.arity(); ++j) src[j] = idx[perm[j]];
    r.at_flat(i) = f.at(src);
  }
  return r;
}

SpinTensor permute_adjacent(const SpinTensor& f, int k) {
  if (k < 1 || k >= f.arity())
    throw invalid_parameter("permute_adjacent: position out of range");
  std::vector<int> perm(f.arity());
  for (int j = 0; j < f.arity(); ++j) perm[j] = j;
  std::swap(perm[k - 1], perm[k]);
  return apply_permutation(f, perm);
}

SpinTensor rotate_fwd(const SpinTensor& f) {
  if (f.arity() == 0) return f;
  std::vector<int> perm(f.arity());
  for (int j = 0; j < f.arity(); ++j) perm[j] = (j + 1) % f.arity();
  return apply_permutation(f, perm);
}

SpinTensor reverse(const SpinTensor& f) {
  std::vector<int> perm(f.arity());
  for (int j = 0; j < f.arity(); ++j) perm[j] = f.arity() - 1 - j;
  return apply_permutation(f, perm);
}

SpinTensor merge(const SpinTensor& f, int i) {
  if (i < 1 || i >= f.arity())
    throw invalid_parameter("merge: position out of range");
  SpinTensor r(f.arity() - 1, f.d());
  std::vector<int> src(f.arity());
  for (uint64_t t = 0; t < r.size(); ++t) {
    auto idx = r.unflatten(t);
    for (int j = 0; j < i; ++j) src[j] = idx[j];
    src[i] = idx[i - 1];
    for (int j = i; j < r.arity(); ++j) src[j + 1] = idx[j];
    r.at_flat(t) = f.at(src);
  }
  return r;
}

SpinTensor sum_out(const SpinTensor& f, int i) {
  if (i < 1 || i > f.arity())
    throw invalid_parameter("sum_out: position out of range");
  SpinTensor r(f.arity() - 1, f.d());
  std::vector<int> src(f.arity());
  for (uint64_t t = 0; t < r.size(); ++t) {
    auto idx = r.unflatten(t);
    for (int j = 0; j < i - 1; ++j) src[j] = idx[j];
    for (int j = i - 1; j < r.arity(); ++j) src[j + 1] = idx[j];
    Rat acc(0);
    for (int y = 0; y < f.d(); ++y) {
      src[i - 1] = y;
      acc += f.at(src);
    }
    r.at_flat(t) = acc;
  }
  return r;
}

SpinTensor split(const SpinTensor& f, int i) {
  if (i < 1 || i > f.arity() + 1)
    throw invalid_parameter("split: position out of range");
  SpinTensor r(f.arity() + 2, f.d());
  std::vector<int> src(f.arity());
  for (uint64_t t = 0; t < f.size(); ++t) {
    if (f.at_flat(t) == 0) continue;
    auto idx = f.unflatten(t);
    std::vector<int> dst(r.arity());
    for (int j = 0; j < i - 1; ++j) dst[j] = idx[j];
    for (int j = i - 1; j < f.arity(); ++j) dst[j + 2] = idx[j];
    for (int y = 0; y < f.d(); ++y) {
      dst[i - 1] = y;
      dst[i] = y;
      r.at(dst) = f.at_flat(t);
    }
  }
  return r;
}

SpinTensor hadamard_product(const SpinTensor& f, const SpinTensor& g) {
  check_same_d(f, g);
  if (f.arity() != g.arity()) throw invalid_parameter("arity mismatch");
  SpinTensor r(f.arity(), f.d());
  for (uint64_t i = 0; i < f.size(); ++i)
    if (f.at_flat(i) != 0 && g.at_flat(i) != 0)
      r.at_flat(i) = f.at_flat(i) * g.at_flat(i);
  return r;
}

Rat inner_product(const SpinTensor& f, const SpinTensor& g) {
  check_same_d(f, g);
  if (f.arity() != g.arity()) throw invalid_parameter("arity mismatch");
  Rat acc(0);
  for (uint64_t i = 0; i < f.size(); ++i)
    if (f.at_flat(i) != 0 && g.at_flat(i) != 0)
      acc += f.at_flat(i) * g.at_flat(i);
  return acc;
}

SpinTensor add(const SpinTensor& f, const SpinTensor& g) {
  check_same_d(f, g);
  if (f.arity() != g.arity()) throw invalid_parameter("arity mismatch");
  SpinTensor r = f;
  for (uint64_t i = 0; i < g.size(); ++i)
    if (g.at_flat(i) != 0) r.at_flat(i) += g.at_flat(i);
  return r;
}

SpinTensor scale(const SpinTensor& f, const Rat& c) {
  SpinTensor r = f;
  for (uint64_t i = 0; i < r.size(); ++i) r.at_flat(i) *= c;
  return r;
}

}  // namespace kgspin
