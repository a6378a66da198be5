#include "kgspin/graph.hpp"

#include <algorithm>

namespace kgspin {

Vertex::Vertex(int x, int y) : a(std::min(x, y)), b(std::max(x, y)) {
  if (x == y || x < 1 || y < 1)
    throw invalid_parameter("vertex must be a 2-subset of positive points");
}

std::string Vertex::str() const {
  return "{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

KneserGraph KneserGraph::build(int n, int max_n) {
  if (n < 4) throw invalid_parameter("KneserGraph: n must be >= 4");
  if (n > max_n)
    throw capacity_error("KneserGraph: n exceeds the configured limit",
                         "n=" + std::to_string(n) +
                             " limit=" + std::to_string(max_n));
  KneserGraph g;
  g.n_ = n;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) g.vertices_.push_back(Vertex(a, b));
  const int d = g.num_vertices();
  g.adj_.assign(static_cast<size_t>(d) * d, 0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Vertex &u = g.vertices_[i], &v = g.vertices_[j];
      bool disjoint = u.a != v.a && u.a != v.b && u.b != v.a && u.b != v.b;
      g.adj_[static_cast<size_t>(i) * d + j] = disjoint ? 1 : 0;
    }
  return g;
}

int KneserGraph::index_of(const Vertex& v) const {
  if (v.a < 1 || v.b > n_ || v.a >= v.b)
    throw invalid_parameter("vertex " + v.str() + " out of range for n=" +
                            std::to_string(n_));
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  return static_cast<int>(it - vertices_.begin());
}

bool KneserGraph::adjacent(int u, int v) const {
  const int d = num_vertices();
  if (u < 0 || v < 0 || u >= d || v >= d)
    throw invalid_parameter("vertex index out of range");
  return adj_[static_cast<size_t>(u) * d + v] != 0;
}

bool KneserGraph::adjacent(const Vertex& u, const Vertex& v) const {
  return adjacent(index_of(u), index_of(v));
}

SrgResult KneserGraph::srg_params() const {
  SrgResult r;
  const int d = num_vertices();
  std::vector<int> deg(d, 0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (adjacent(i, j)) ++deg[i];
  for (int i = 1; i < d; ++i)
    if (deg[i] != deg[0]) {
      r.witness = "degree mismatch at " + vertex(i).str();
      return r;
    }
  long lambda = -1, mu = -1;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      long common = 0;
      for (int w = 0; w < d; ++w)
        if (adjacent(i, w) && adjacent(j, w)) ++common;
      long& slot = adjacent(i, j) ? lambda : mu;
      if (slot == -1) slot = common;
      if (slot != common) {
        r.witness = "common-neighbour count mismatch at (" + vertex(i).str() +
                    "," + vertex(j).str() + ")";
        return r;
      }
    }
  r.ok = true;
  r.params = SrgParams{d, deg[0], lambda, mu};
  return r;
}

}  // namespace kgspin
