#include "kgspin/invariant.hpp"

#include <algorithm>
#include <functional>

namespace kgspin {

PairRel pair_rel(const std::array<uint8_t, 2>& x,
                 const std::array<uint8_t, 2>& y) {
  if (x == y) return PairRel::Equal;
  bool meet = x[0] == y[0] || x[0] == y[1] || x[1] == y[0] || x[1] == y[1];
  return meet ? PairRel::Share : PairRel::Disjoint;
}

Rat two_box_value(TwoBox b, PairRel r) {
  switch (b) {
    case TwoBox::I: return r == PairRel::Equal ? 1 : 0;
    case TwoBox::J: return 1;
    case TwoBox::A: return r == PairRel::Disjoint ? 1 : 0;
    case TwoBox::T: return r == PairRel::Share ? 1 : 0;
  }
  return 0;
}

InvariantTensor::InvariantTensor(int arity, int n) : arity_(arity), n_(n) {
  if (arity < 0 || n < 4) throw invalid_parameter("bad invariant shape");
}

Rat InvariantTensor::value(const Pattern& p) const {
  auto it = entries_.find(p);
  return it == entries_.end() ? Rat(0) : it->second;
}

Rat InvariantTensor::value_at(const PairTuple& tuple) const {
  if (static_cast<int>(tuple.size()) != arity_)
    throw invalid_parameter("tuple arity mismatch");
  return value(canonicalize(tuple));
}

void InvariantTensor::set(const Pattern& p, const Rat& v) {
  if (p.arity() != arity_) throw invalid_parameter("pattern arity mismatch");
  if (p.support() > n_)
    throw invalid_parameter("pattern invalid for n=" + std::to_string(n_));
  if (v == 0)
    entries_.erase(p);
  else
    entries_[p] = v;
}

void InvariantTensor::add_to(const Pattern& p, const Rat& v) {
  if (v == 0) return;
  auto it = entries_.find(p);
  if (it == entries_.end()) {
    set(p, v);
  } else {
    it->second += v;
    if (it->second == 0) entries_.erase(it);
  }
}

static void check_same_n(const InvariantTensor& f, const InvariantTensor& g) {
  if (f.n() != g.n()) throw invalid_parameter("n mismatch");
}

InvariantTensor tensor_product(const InvariantTensor& f,
                               const InvariantTensor& g) {
  check_same_n(f, g);
  const int n = f.n();
  InvariantTensor r(f.arity() + g.arity(), n);
  for (const auto& [p, pv] : f.entries()) {
    const int sp = p.support();
    for (const auto& [q, qv] : g.entries()) {
      const int sq = q.support();
      // Enumerate partial injections of q's labels into p's; unmatched
      // labels become fresh points. Each amalgam is one output orbit.
      std::vector<int> img(sq + 1, 0);
      std::vector<char> used(sp + 1, 0);
      Rat val = pv * qv;
      std::function<void(int, int)> rec = [&](int lbl, int fresh) {
        if (sp + fresh > n) return;  // no room over 1..n
        if (lbl > sq) {
          PairTuple t;
          t.reserve(r.arity());
          for (const auto& pr : p.pairs) t.push_back(pr);
          int next_fresh = sp;
          std::vector<int> freshmap(sq + 1, 0);
          for (const auto& pr : q.pairs) {
            std::array<uint8_t, 2> m{};
            for (int e = 0; e < 2; ++e) {
              int l = pr[e];
              int to = img[l];
              if (to == 0) {
                if (freshmap[l] == 0) freshmap[l] = ++next_fresh;
                to = freshmap[l];
              }
              m[e] = static_cast<uint8_t>(to);
            }
            if (m[0] > m[1]) std::swap(m[0], m[1]);
            t.push_back(m);
          }
          r.set(canonicalize(t), val);
          return;
        }
        rec(lbl + 1, fresh + 1);  // lbl stays fresh
        for (int to = 1; to <= sp; ++to) {
          if (used[to]) continue;
          img[lbl] = to;
          used[to] = 1;
          rec(lbl + 1, fresh);
          img[lbl] = 0;
          used[to] = 0;
        }
      };
      rec(1, 0);
    }
  }
  return r;
}

InvariantTensor apply_permutation(const InvariantTensor& f,
                                  const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != f.arity())
    throw invalid_parameter("permutation length mismatch");
  InvariantTensor r(f.arity(), f.n());
  for (const auto& [p, v] : f.entries()) {
    // r(x) = f(x_{perm[0]},...), so the support tuple x satisfies
    // x[perm[j]] = rep[j].
    PairTuple x(p.pairs.size());
    for (size_t j = 0; j < p.pairs.size(); ++j) x[perm[j]] = p.pairs[j];
    r.set(canonicalize(x), v);
  }
  return r;
}

InvariantTensor permute_adjacent(const InvariantTensor& f, int k) {
  if (k < 1 || k >= f.arity())
    throw invalid_parameter("permute_adjacent: position out of range");
  std::vector<int> perm(f.arity());
  for (int j = 0; j < f.arity(); ++j) perm[j] = j;
  std::swap(perm[k - 1], perm[k]);
  return apply_permutation(f, perm);
}

InvariantTensor rotate_fwd(const InvariantTensor& f) {
  if (f.arity() == 0) return f;
  std::vector<int> perm(f.arity());
  for (int j = 0; j < f.arity(); ++j) perm[j] = (j + 1) % f.arity();
  return apply_permutation(f, perm);
}

InvariantTensor reverse(const InvariantTensor& f) {
  std::vector<int> perm(f.arity());
  for (int j = 0; j < f.arity(); ++j) perm[j] = f.arity() - 1 - j;
  return apply_permutation(f, perm);
}

InvariantTensor merge(const InvariantTensor& f, int i) {
  if (i < 1 || i >= f.arity())
    throw invalid_parameter("merge: position out of range");
  InvariantTensor r(f.arity() - 1, f.n());
  for (const auto& [p, v] : f.entries()) {
    if (p.pairs[i - 1] != p.pairs[i]) continue;
    PairTuple t = p.pairs;
    t.erase(t.begin() + i);
    r.set(canonicalize(t), v);
  }
  return r;
}

InvariantTensor sum_out(const InvariantTensor& f, int i) {
  if (i < 1 || i > f.arity())
    throw invalid_parameter("sum_out: position out of range");
  const int n = f.n();
  InvariantTensor r(f.arity() - 1, n);
  // Candidate output orbits: drop the summed slot from f's support.
  std::map<Pattern, char> cands;
  for (const auto& [p, v] : f.entries()) {
    PairTuple t = p.pairs;
    t.erase(t.begin() + (i - 1));
    cands[canonicalize(t)] = 1;
  }
  for (const auto& [rp, unused] : cands) {
    const int s = rp.support();
    Rat acc(0);
    auto probe = [&](uint8_t a, uint8_t b, const Int& count) {
      if (count == 0) return;
      PairTuple t = rp.pairs;
      t.insert(t.begin() + (i - 1),
               {std::min(a, b), std::max(a, b)});
      Rat v = f.value(canonicalize(t));
      if (v != 0) acc += v * Rat(count);
    };
    for (int a = 1; a <= s; ++a)
      for (int b = a + 1; b <= s; ++b) probe(uint8_t(a), uint8_t(b), 1);
    for (int a = 1; a <= s; ++a)
      probe(uint8_t(a), uint8_t(s + 1), Int(n - s));
    if (s + 2 <= 255) probe(uint8_t(s + 1), uint8_t(s + 2), binom(n - s, 2));
    r.set(rp, acc);
  }
  return r;
}

InvariantTensor split(const InvariantTensor& f, int i) {
  if (i < 1 || i > f.arity() + 1)
    throw invalid_parameter("split: position out of range");
  const int n = f.n();
  InvariantTensor r(f.arity() + 2, n);
  for (const auto& [p, v] : f.entries()) {
    const int s = p.support();
    auto emit = [&](uint8_t a, uint8_t b) {
      PairTuple t = p.pairs;
      std::array<uint8_t, 2> y{std::min(a, b), std::max(a, b)};
      t.insert(t.begin() + (i - 1), y);
      t.insert(t.begin() + (i - 1), y);
      r.set(canonicalize(t), v);
    };
    for (int a = 1; a <= s; ++a)
      for (int b = a + 1; b <= s; ++b) emit(uint8_t(a), uint8_t(b));
    if (s + 1 <= n)
      for (int a = 1; a <= s; ++a) emit(uint8_t(a), uint8_t(s + 1));
    if (s + 2 <= n) emit(uint8_t(s + 1), uint8_t(s + 2));
  }
  return r;
}

InvariantTensor hadamard_product(const InvariantTensor& f,
                                 const InvariantTensor& g) {
  check_same_n(f, g);
  if (f.arity() != g.arity()) throw invalid_parameter("arity mismatch");
  InvariantTensor r(f.arity(), f.n());
  for (const auto& [p, v] : f.entries()) {
    Rat w = g.value(p);
    if (w != 0) r.set(p, v * w);
  }
  return r;
}

Rat inner_product(const InvariantTensor& f, const InvariantTensor& g) {
  check_same_n(f, g);
  if (f.arity() != g.arity()) throw invalid_parameter("arity mismatch");
  Rat acc(0);
  for (const auto& [p, v] : f.entries()) {
    Rat w = g.value(p);
    if (w != 0) acc += v * w * Rat(orbit_size(p, f.n()));
  }
  return acc;
}

InvariantTensor add(const InvariantTensor& f, const InvariantTensor& g) {
  check_same_n(f, g);
  if (f.arity() != g.arity()) throw invalid_parameter("arity mismatch");
  InvariantTensor r = f;
  for (const auto& [p, v] : g.entries()) r.add_to(p, v);
  return r;
}

InvariantTensor scale(const InvariantTensor& f, const Rat& c) {
  InvariantTensor r(f.arity(), f.n());
  if (c == 0) return r;
  for (const auto& [p, v] : f.entries()) r.set(p, v * c);
  return r;
}

InvariantTensor attach_two_box(const InvariantTensor& f, TwoBox b, int i,
                               int j) {
  if (i < 1 || j < 1 || i > f.arity() || j > f.arity() || i == j)
    throw invalid_parameter("attach_two_box: bad slots");
  InvariantTensor r(f.arity(), f.n());
  for (const auto& [p, v] : f.entries()) {
    Rat w = two_box_value(b, pair_rel(p.pairs[i - 1], p.pairs[j - 1]));
    if (w != 0) r.set(p, v * w);
  }
  return r;
}

static PairTuple tuple_of_indices(const KneserGraph& g,
                                  const std::vector<int>& idx) {
  PairTuple t;
  t.reserve(idx.size());
  for (int x : idx) {
    const Vertex& v = g.vertex(x);
    t.push_back({uint8_t(v.a), uint8_t(v.b)});
  }
  return t;
}

SpinTensor to_dense(const InvariantTensor& f, const KneserGraph& g,
                    uint64_t cap) {
  const int d = g.num_vertices();
  SpinTensor r(f.arity(), d, cap);
  for (uint64_t t = 0; t < r.size(); ++t) {
    auto idx = r.unflatten(t);
    Rat v = f.value(canonicalize(tuple_of_indices(g, idx)));
    if (v != 0) r.at_flat(t) = v;
  }
  return r;
}

InvariantTensor symmetrize(const SpinTensor& f, const KneserGraph& g) {
  if (f.d() != g.num_vertices())
    throw invalid_parameter("spin-set size is not C(n,2) for this graph");
  InvariantTensor r(f.arity(), g.n());
  std::map<Pattern, std::pair<Rat, Int>> acc;  // orbit sum and size
  for (uint64_t t = 0; t < f.size(); ++t) {
    auto idx = f.unflatten(t);
    Pattern p = canonicalize(tuple_of_indices(g, idx));
    auto& slot = acc[p];
    slot.first += f.at_flat(t);
    slot.second += 1;
  }
  for (const auto& [p, sv] : acc) r.set(p, sv.first / Rat(sv.second));
  return r;
}

}  // namespace kgspin
