#include "kgspin/closure.hpp"

#include <algorithm>
#include <deque>

namespace kgspin {

namespace {

Int row_content(const SparseVec& row) {
  Int g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(SparseVec& v) {
  Int g = row_content(v);
  if (g > 1)
    for (auto& [c, val] : v) val /= g;
}

}  // namespace

bool Subspace::reduce(SparseVec& v) const {
  while (!v.empty()) {
    long lead = v.front().first;
    auto it = pivot_.find(lead);
    if (it == pivot_.end()) return true;
    const SparseVec& r = rows_[it->second];
    // v <- pr * v - vl * r, cancelling the leading column
    Int pr = r.front().second, vl = v.front().second;
    SparseVec out;
    out.reserve(v.size() + r.size());
    size_t i = 0, j = 0;
    while (i < v.size() || j < r.size()) {
      if (j == r.size() || (i < v.size() && v[i].first < r[j].first)) {
        out.emplace_back(v[i].first, pr * v[i].second);
        ++i;
      } else if (i == v.size() || r[j].first < v[i].first) {
        out.emplace_back(r[j].first, -vl * r[j].second);
        ++j;
      } else {
        Int val = pr * v[i].second - vl * r[j].second;
        if (val != 0) out.emplace_back(v[i].first, std::move(val));
        ++i;
        ++j;
      }
    }
    make_primitive(out);
    v = std::move(out);
  }
  return false;
}

bool Subspace::insert(SparseVec v, const std::string& expr) {
  if (v.empty()) return false;
  make_primitive(v);
  SparseVec orig = v;
  if (!reduce(v)) return false;
  pivot_[v.front().first] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(v));
  original_.push_back(std::move(orig));
  exprs_.push_back(expr);
  return true;
}

bool Subspace::contains(SparseVec v) const {
  if (v.empty()) return true;
  return !reduce(v);
}

std::optional<std::vector<Rat>> Subspace::express(
    const SparseVec& target) const {
  if (original_.empty()) return std::nullopt;
  // Restrict to the columns that occur anywhere; dense elimination there.
  std::map<long, size_t> colpos;
  for (const auto& r : original_)
    for (const auto& [c, v] : r) colpos.emplace(c, 0);
  for (const auto& [c, v] : target) colpos.emplace(c, 0);
  size_t ncols = 0;
  for (auto& [c, pos] : colpos) pos = ncols++;
  const size_t nr = original_.size();
  std::vector<std::vector<Rat>> eq(ncols, std::vector<Rat>(nr + 1, Rat(0)));
  for (size_t i = 0; i < nr; ++i)
    for (const auto& [c, v] : original_[i]) eq[colpos[c]][i] = Rat(v);
  for (const auto& [c, v] : target) eq[colpos[c]][nr] = Rat(v);
  size_t r = 0;
  std::vector<int> pivot_col;
  for (size_t c = 0; c < nr && r < eq.size(); ++c) {
    size_t piv = r;
    while (piv < eq.size() && eq[piv][c] == 0) ++piv;
    if (piv == eq.size()) continue;
    std::swap(eq[piv], eq[r]);
    for (size_t i = 0; i < eq.size(); ++i) {
      if (i == r || eq[i][c] == 0) continue;
      Rat f = eq[i][c] / eq[r][c];
      for (size_t j = c; j <= nr; ++j) eq[i][j] -= f * eq[r][j];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  for (size_t i = r; i < eq.size(); ++i)
    if (eq[i][nr] != 0) return std::nullopt;
  std::vector<Rat> x(nr, Rat(0));
  for (size_t i = 0; i < r; ++i)
    x[pivot_col[i]] = eq[i][nr] / eq[i][pivot_col[i]];
  return x;
}

long PatternIndex::num_cols(int arity) {
  auto it = maps_.find(arity);
  if (it == maps_.end()) {
    std::map<Pattern, long> m;
    long i = 0;
    for (auto& p : enumerate_patterns(arity, n_)) m.emplace(p, i++);
    it = maps_.emplace(arity, std::move(m)).first;
  }
  return static_cast<long>(it->second.size());
}

long PatternIndex::index_of(int arity, const Pattern& p) {
  num_cols(arity);
  const auto& m = maps_.at(arity);
  auto it = m.find(p);
  if (it == m.end())
    throw invalid_parameter("pattern missing from the coordinate order");
  return it->second;
}

SparseVec PatternIndex::coords(const InvariantTensor& t) {
  num_cols(t.arity());
  const auto& m = maps_.at(t.arity());
  Int lcm = 1;
  for (const auto& [p, v] : t.entries())
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
  SparseVec out;
  out.reserve(t.entries().size());
  for (const auto& [p, v] : t.entries()) {
    Rat scaled = v * Rat(lcm);
    out.emplace_back(m.at(p), scaled.get_num());
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

namespace {

template <typename Backend>
ClosureResult closure_engine(const ClosureConfig& cfg, Backend& be,
                             bool watch_for_r) {
  using Tensor = typename Backend::Tensor;
  if (cfg.max_arity < 4)
    throw invalid_parameter("closure: max_arity must be >= 4");
  ClosureResult res;
  for (int k = 0; k <= cfg.max_arity; ++k)
    res.spaces.emplace(k, Subspace(k, be.num_cols(k)));

  struct Item {
    Tensor t;
    std::string expr;
  };
  std::deque<long> queue;
  std::vector<Item> items;

  std::optional<SparseVec> r_coords;
  if (watch_for_r) r_coords = be.transposition_coords();
  auto check_r = [&]() {
    if (!watch_for_r || res.found_r) return;
    auto& s4 = res.spaces.at(4);
    if (s4.contains(*r_coords)) {
      res.found_r = true;
      auto expr = s4.express(*r_coords);
      if (expr) res.r_combination = *expr;
    }
  };

  auto offer = [&](Tensor t, const std::string& expr) {
    int k = t.arity();
    if (k > cfg.max_arity) return;
    if (!res.spaces.at(k).insert(be.coords(t), expr)) return;
    items.push_back(Item{std::move(t), expr});
    queue.push_back(static_cast<long>(items.size()) - 1);
    if (k == 4) check_r();
  };

  offer(be.seed_scalar(), "1");
  offer(be.seed(TwoBoxName::I), "I");
  offer(be.seed(TwoBoxName::J), "J");
  offer(be.seed(TwoBoxName::A), "A");

  const TwoBox attach_kinds[3] = {TwoBox::I, TwoBox::A, TwoBox::T};
  const char* attach_names[3] = {"I", "A", "T"};

  while (!queue.empty() && res.processed < cfg.iteration_cap &&
         !(watch_for_r && res.found_r)) {
    long id = queue.front();
    queue.pop_front();
    ++res.processed;
    const Tensor f = items[id].t;  // copy: items may reallocate
    const std::string fe = items[id].expr;
    const int k = f.arity();

    if (k >= 1) offer(rotate_fwd(f), "rot(" + fe + ")");
    if (cfg.move_reverse && k >= 2) offer(reverse(f), "rev(" + fe + ")");
    for (int i = 1; i < k; ++i)
      offer(merge(f, i), "merge(" + fe + "," + std::to_string(i) + ")");
    for (int i = 1; i <= k; ++i)
      offer(sum_out(f, i), "sum(" + fe + "," + std::to_string(i) + ")");
    if (cfg.move_split && k + 2 <= cfg.max_arity)
      for (int i = 1; i <= k + 1; ++i)
        offer(split(f, i), "split(" + fe + "," + std::to_string(i) + ")");
    if (cfg.move_attach && k >= 2)
      for (int l = 1; l <= k; ++l) {
        int l2 = l % k + 1;  // cyclically adjacent pair
        if (l2 == l) continue;
        for (int b = 0; b < 3; ++b)
          offer(be.attach(f, attach_kinds[b], l, l2),
                std::string("attach_") + attach_names[b] + "(" + fe + "," +
                    std::to_string(l) + ")");
      }
    if (cfg.move_pass && k >= 1)
      for (int l = 1; l <= k; ++l)
        for (int b = 1; b < 3; ++b)  // A and T; I is the identity
          offer(be.pass(f, attach_kinds[b], l),
                std::string("pass_") + attach_names[b] + "(" + fe + "," +
                    std::to_string(l) + ")");
    if (cfg.move_tensor)
      for (long j = 0; j <= id; ++j) {
        const int kj = items[j].t.arity();
        if (k + kj > cfg.max_arity) continue;
        offer(tensor_product(f, items[j].t),
              "tensor(" + fe + "," + items[j].expr + ")");
        if (j != id)
          offer(tensor_product(items[j].t, f),
                "tensor(" + items[j].expr + "," + fe + ")");
      }
  }
  res.converged = queue.empty();
  check_r();
  return res;
}

struct OrbitBackend {
  using Tensor = InvariantTensor;
  int n;
  PatternIndex index;
  std::map<TwoBox, InvariantTensor> box_cache;

  explicit OrbitBackend(int n_) : n(n_), index(n_) {}
  long num_cols(int k) { return index.num_cols(k); }
  SparseVec coords(const Tensor& t) { return index.coords(t); }
  Tensor seed_scalar() {
    InvariantTensor t(0, n);
    t.set(Pattern{}, 1);
    return t;
  }
  Tensor seed(TwoBoxName b) { return two_box(b, n); }
  SparseVec transposition_coords() {
    return index.coords(four_box(FourBoxName::R, n));
  }
  Tensor attach(const Tensor& f, TwoBox b, int l, int l2) {
    return attach_two_box(f, b, l, l2);
  }
  InvariantTensor two_box_tensor(TwoBox b) {
    auto it = box_cache.find(b);
    if (it != box_cache.end()) return it->second;
    InvariantTensor box(2, n);
    for (const auto& p : enumerate_patterns(2, n)) {
      Rat v = two_box_value(b, pair_rel(p.pairs[0], p.pairs[1]));
      if (v != 0) box.set(p, v);
    }
    box_cache.emplace(b, box);
    return box;
  }
  // sum_z f(..z..) B(z, x_l): rotate leg l last, extend through B, sum.
  Tensor pass(const Tensor& f, TwoBox b, int l) {
    const int k = f.arity();
    Tensor x = f;
    for (int r = 0; r < l % k; ++r) x = rotate_fwd(x);
    x = tensor_product(x, two_box_tensor(b));
    x = merge(x, k);
    x = sum_out(x, k);
    for (int r = 0; r < (k - l) % k; ++r) x = rotate_fwd(x);
    return x;
  }
};

struct DenseBackend {
  using Tensor = SpinTensor;
  KneserGraph g;
  uint64_t cap;
  std::map<TwoBox, SpinTensor> box_cache;

  DenseBackend(int n, uint64_t cap_) : g(KneserGraph::build(n)), cap(cap_) {}
  long num_cols(int k) {
    long long c = 1;
    for (int i = 0; i < k; ++i) c *= g.num_vertices();
    return static_cast<long>(c);
  }
  SparseVec coords(const Tensor& t) {
    Int lcm = 1;
    bool integral = true;
    for (uint64_t i = 0; i < t.size(); ++i) {
      const Rat& v = t.at_flat(i);
      if (v == 0 || v.get_den() == 1) continue;
      integral = false;
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
    }
    SparseVec out;
    for (uint64_t i = 0; i < t.size(); ++i) {
      const Rat& v = t.at_flat(i);
      if (v == 0) continue;
      if (integral) {
        out.emplace_back(static_cast<long>(i), v.get_num());
      } else {
        Rat s = v * Rat(lcm);
        out.emplace_back(static_cast<long>(i), s.get_num());
      }
    }
    return out;
  }
  Tensor seed_scalar() { return SpinTensor::scalar(1, g.num_vertices()); }
  Tensor seed(TwoBoxName b) { return to_dense(two_box(b, g.n()), g, cap); }
  SparseVec transposition_coords() {
    return coords(to_dense(four_box(FourBoxName::R, g.n()), g, cap));
  }
  Tensor attach(const Tensor& f, TwoBox b, int l, int l2) {
    SpinTensor r = f;
    const int k = f.arity(), d = g.num_vertices();
    uint64_t div_l = 1, div_l2 = 1;
    for (int t = 0; t < k - l; ++t) div_l *= d;
    for (int t = 0; t < k - l2; ++t) div_l2 *= d;
    for (uint64_t i = 0; i < r.size(); ++i) {
      if (r.at_flat(i) == 0) continue;
      int x = static_cast<int>(i / div_l % d), y = static_cast<int>(i / div_l2 % d);
      bool keep = false;
      switch (b) {
        case TwoBox::I: keep = x == y; break;
        case TwoBox::J: keep = true; break;
        case TwoBox::A: keep = g.adjacent(x, y); break;
        case TwoBox::T: keep = x != y && !g.adjacent(x, y); break;
      }
      if (!keep) r.at_flat(i) = 0;
    }
    return r;
  }
  SpinTensor two_box_tensor(TwoBox b) {
    auto it = box_cache.find(b);
    if (it != box_cache.end()) return it->second;
    SpinTensor box(2, g.num_vertices());
    for (int u = 0; u < g.num_vertices(); ++u)
      for (int v = 0; v < g.num_vertices(); ++v) {
        bool keep = false;
        switch (b) {
          case TwoBox::I: keep = u == v; break;
          case TwoBox::J: keep = true; break;
          case TwoBox::A: keep = g.adjacent(u, v); break;
          case TwoBox::T: keep = u != v && !g.adjacent(u, v); break;
        }
        if (keep) box.at({u, v}) = 1;
      }
    box_cache.emplace(b, box);
    return box;
  }
  Tensor pass(const Tensor& f, TwoBox b, int l) {
    const int k = f.arity();
    SpinTensor x = f;
    for (int r = 0; r < l % k; ++r) x = rotate_fwd(x);
    x = tensor_product(x, two_box_tensor(b));
    x = merge(x, k);
    x = sum_out(x, k);
    for (int r = 0; r < (k - l) % k; ++r) x = rotate_fwd(x);
    return x;
  }
};

}  // namespace

ClosureResult run_closure(const ClosureConfig& cfg, bool watch_for_r) {
  OrbitBackend be(cfg.n);
  return closure_engine(cfg, be, watch_for_r);
}

ClosureResult run_closure_dense(const ClosureConfig& cfg) {
  DenseBackend be(cfg.n, cfg.dense_cap);
  return closure_engine(cfg, be, false);
}

}  // namespace kgspin
