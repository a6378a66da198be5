#include "kgspin/invariant.hpp"

#include <random>

#include "doctest.h"

using namespace kgspin;

namespace {

// Generators in orbit coordinates, built directly from their definitions.
InvariantTensor make_two_box(TwoBox b, int n) {
  InvariantTensor t(2, n);
  for (const auto& p : enumerate_patterns(2, n)) {
    Rat v = two_box_value(b, pair_rel(p.pairs[0], p.pairs[1]));
    if (v != 0) t.set(p, v);
  }
  return t;
}

InvariantTensor random_invariant(int arity, int n, std::mt19937& rng) {
  InvariantTensor t(arity, n);
  for (const auto& p : enumerate_patterns(arity, n)) {
    long num = static_cast<long>(rng() % 7) - 3;
    if (num == 0) continue;
    Rat v(num, 1 + static_cast<long>(rng() % 3));
    v.canonicalize();
    t.set(p, v);
  }
  return t;
}

bool dense_matches(const InvariantTensor& f, const SpinTensor& s,
                   const KneserGraph& g) {
  return to_dense(f, g) == s;
}

}  // namespace

TEST_CASE("two-box generators and symmetrize") {
  auto g = KneserGraph::build(5);
  auto A = make_two_box(TwoBox::A, 5);
  // symmetrize(A_dense) has entries {equal:0, share:0, disjoint:1}
  auto Ad = to_dense(A, g);
  auto back = symmetrize(Ad, g);
  CHECK(back == A);
  CHECK(A.entries().size() == 1);  // only the disjoint pattern

  auto I = make_two_box(TwoBox::I, 5);
  CHECK(I.entries().size() == 1);
  CHECK(dense_matches(I, [&] {
          SpinTensor t(2, g.num_vertices());
          for (int x = 0; x < g.num_vertices(); ++x) t.at({x, x}) = 1;
          return t;
        }(), g));
}

TEST_CASE("symmetrize projects by group averaging") {
  auto g = KneserGraph::build(5);
  std::mt19937 rng(3);
  SpinTensor f(1, g.num_vertices());
  for (uint64_t i = 0; i < f.size(); ++i) f.at_flat(i) = Rat(rng() % 5);
  auto s = symmetrize(f, g);
  // average over the single vertex orbit
  Rat total(0);
  for (uint64_t i = 0; i < f.size(); ++i) total += f.at_flat(i);
  CHECK(s.value(canonicalize({{1, 2}})) == total / Rat(g.num_vertices()));
  // projection property: symmetrize(to_dense(s)) == s
  CHECK(symmetrize(to_dense(s, g), g) == s);
}

TEST_CASE("round trips") {
  auto g = KneserGraph::build(5);
  InvariantTensor zero(3, 5);
  CHECK(to_dense(zero, g).is_zero());
  std::mt19937 rng(11);
  for (int t = 0; t < 5; ++t) {
    auto f = random_invariant(2, 5, rng);
    CHECK(symmetrize(to_dense(f, g), g) == f);
  }
}

TEST_CASE("lifted primitives agree with dense, n=5 and n=6") {
  for (int n : {5, 6}) {
    auto g = KneserGraph::build(n);
    std::mt19937 rng(1000 + n);
    for (int trial = 0; trial < 25; ++trial) {
      int arity = 1 + static_cast<int>(rng() % 2);
      auto f = random_invariant(arity, n, rng);
      auto fd = to_dense(f, g);
      for (int i = 1; i <= arity + 1; ++i)
        CHECK(dense_matches(split(f, i), split(fd, i), g));
      for (int i = 1; i <= arity; ++i)
        CHECK(dense_matches(sum_out(f, i), sum_out(fd, i), g));
      for (int i = 1; i < arity; ++i) {
        CHECK(dense_matches(merge(f, i), merge(fd, i), g));
        CHECK(dense_matches(permute_adjacent(f, i),
                            permute_adjacent(fd, i), g));
      }
      auto h = random_invariant(arity, n, rng);
      CHECK(dense_matches(hadamard_product(f, h),
                          hadamard_product(fd, to_dense(h, g)), g));
      CHECK(inner_product(f, h) == inner_product(fd, to_dense(h, g)));
      auto p = random_invariant(1, n, rng);
      CHECK(dense_matches(tensor_product(f, p),
                          tensor_product(fd, to_dense(p, g)), g));
      CHECK(dense_matches(rotate_fwd(f), rotate_fwd(fd), g));
      CHECK(dense_matches(reverse(f), reverse(fd), g));
    }
  }
}

TEST_CASE("lifted examples from the generator catalog") {
  const int n = 5;
  auto g = KneserGraph::build(n);
  auto I = make_two_box(TwoBox::I, n);
  auto A = make_two_box(TwoBox::A, n);

  // lifted merge(I (x) I, 2) is the GHZ3 pattern map
  auto ghz3 = merge(tensor_product(I, I), 2);
  CHECK(ghz3.entries().size() == 1);
  CHECK(ghz3.value(canonicalize({{1, 2}, {1, 2}, {1, 2}})) == 1);

  CHECK(inner_product(A, A) == 30);

  auto deg = sum_out(A, 1);
  CHECK(deg.entries().size() == 1);
  CHECK(deg.value(canonicalize({{1, 2}})) == 3);
}

TEST_CASE("attach_two_box multiplies by the named 2-box") {
  const int n = 6;
  auto g = KneserGraph::build(n);
  std::mt19937 rng(8);
  auto f = random_invariant(2, n, rng);
  auto fa = attach_two_box(f, TwoBox::A, 1, 2);
  auto fd = to_dense(f, g);
  SpinTensor want(2, g.num_vertices());
  for (int x = 0; x < g.num_vertices(); ++x)
    for (int y = 0; y < g.num_vertices(); ++y)
      if (g.adjacent(x, y)) want.at({x, y}) = fd.at({x, y});
  CHECK(to_dense(fa, g) == want);
}
