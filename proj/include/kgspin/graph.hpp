#pragma once

#include <string>
#include <vector>

#include "kgspin/errors.hpp"

namespace kgspin {

// Unordered 2-subset of {1..n}, stored with a < b.
struct Vertex {
  int a = 0, b = 0;
  Vertex() = default;
  Vertex(int x, int y);
  bool operator==(const Vertex&) const = default;
  auto operator<=>(const Vertex&) const = default;
  std::string str() const;
};

struct SrgParams {
  long v = 0, k = 0, lambda = 0, mu = 0;
  bool operator==(const SrgParams&) const = default;
};

struct SrgResult {
  bool ok = false;
  SrgParams params;
  std::string witness;  // offending vertex pair when not strongly regular
};

// Kneser graph KG(n,2): vertices are 2-subsets of {1..n}, edges join
// disjoint pairs. Vertices are indexed lexicographically; every tensor in
// the library indexes spins by this order. Immutable after construction.
class KneserGraph {
 public:
  static constexpr int kDefaultMaxN = 16;

  static KneserGraph build(int n, int max_n = kDefaultMaxN);

  int n() const { return n_; }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  const Vertex& vertex(int i) const { return vertices_.at(i); }
  const std::vector<Vertex>& vertices() const { return vertices_; }

  // Index of a vertex in the lexicographic order; throws on bad input.
  int index_of(const Vertex& v) const;

  bool adjacent(int u, int v) const;
  bool adjacent(const Vertex& u, const Vertex& v) const;

  // Brute-force verification of the strongly-regular parameters.
  SrgResult srg_params() const;

 private:
  int n_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<char> adj_;  // d*d adjacency table

  KneserGraph() = default;
};

}  // namespace kgspin
