#pragma once

// Test-only brute-force oracles, independent of the library's evaluation
// paths they are used to check.

#include <functional>
#include <vector>

#include "kgspin/boxes.hpp"

namespace kgspin::oracles {

// chi_{B_k}: tuples (i_1..i_k, i_1..i_k, i_k..i_1) with strict pairwise
// adjacency, enumerated by clique backtracking over KG(n,2).
inline InvariantTensor gamma_indicator(int k, int n) {
  auto g = KneserGraph::build(n);
  const int d = g.num_vertices();
  InvariantTensor out(3 * k, n);
  std::vector<int> clique;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(clique.size()) == k) {
      PairTuple t;
      auto push = [&](int idx) {
        const Vertex& v = g.vertex(idx);
        t.push_back({uint8_t(v.a), uint8_t(v.b)});
      };
      for (int s = 0; s < k; ++s) push(clique[s]);
      for (int s = 0; s < k; ++s) push(clique[s]);
      for (int s = k - 1; s >= 0; --s) push(clique[s]);
      out.set(canonicalize(t), 1);
      return;
    }
    for (int w = 0; w < d; ++w) {
      bool ok = true;
      for (int q : clique)
        if (!g.adjacent(q, w)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      clique.push_back(w);
      rec();
      clique.pop_back();
    }
  };
  rec();
  return out;
}

// Number of ordered k-cliques (the support size of gamma_k).
inline long ordered_clique_count(int k, int n) {
  auto g = KneserGraph::build(n);
  const int d = g.num_vertices();
  long count = 0;
  std::vector<int> clique;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(clique.size()) == k) {
      ++count;
      return;
    }
    for (int w = 0; w < d; ++w) {
      bool ok = true;
      for (int q : clique)
        if (!g.adjacent(q, w)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      clique.push_back(w);
      rec();
      clique.pop_back();
    }
  };
  rec();
  return count;
}

}  // namespace kgspin::oracles
