#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kgspin/invariant.hpp"

namespace kgspin {

// A 2-box factor between two summation indices. Higher structure is wired,
// not boxed: a GHZ vertex is an index shared by several factors or boundary
// positions, a crossing is an index renaming.
struct NetFactor {
  TwoBox box;
  int u = 0, v = 0;
  bool operator==(const NetFactor&) const = default;
};

// A multigraph of 2-box factors over named indices with an ordered external
// boundary. Boundary entries may repeat an index (a GHZ-merged leg);
// internal indices are those not on the boundary.
class ContractionNetwork {
 public:
  ContractionNetwork() = default;

  int add_index();                       // returns a fresh index id
  void add_factor(TwoBox b, int u, int v);
  void set_boundary(std::vector<int> boundary);

  int num_indices() const { return num_indices_; }
  const std::vector<NetFactor>& factors() const { return factors_; }
  const std::vector<int>& boundary() const { return boundary_; }
  std::vector<int> internal_indices() const;
  std::vector<int> external_indices() const;  // distinct, in boundary order

  void validate() const;

  // Text form, one line per element: "factor A u v" / "external u v w ...".
  static ContractionNetwork parse(std::istream& is);
  void print(std::ostream& os) const;

 private:
  int num_indices_ = 0;
  std::vector<NetFactor> factors_;
  std::vector<int> boundary_;
};

struct EvalOptions {
  uint64_t table_cap = 10'000'000;  // max sparse entries per table
  // Empty = use choose_order; otherwise a permutation of the internal ids.
  std::vector<int> order;
};

// Greedy min-fill elimination order over the index interaction graph,
// deterministic tie-break by degree then id.
std::vector<int> choose_order(const ContractionNetwork& net);

// Full sum-product evaluation in orbit coordinates. Modes: PerOrbit pins
// each canonical boundary pattern and evaluates; SparseForward eliminates
// internals keeping boundary indices live (for support-sparse outputs).
enum class EvalMode { Auto, PerOrbit, SparseForward };
InvariantTensor evaluate(const ContractionNetwork& net, const KneserGraph& g,
                         EvalMode mode = EvalMode::Auto,
                         const EvalOptions& opts = {});

// Scalar value with the boundary pinned to the given vertex indices.
Rat evaluate_at(const ContractionNetwork& net, const KneserGraph& g,
                const std::vector<int>& boundary_vertices,
                const EvalOptions& opts = {});

}  // namespace kgspin
