#pragma once

#include <string>
#include <vector>

#include "kgspin/network.hpp"

namespace kgspin {

enum class TwoBoxName { I, J, A, T };
enum class FourBoxName { R, R_A, R_T, GHZ4 };

InvariantTensor two_box(TwoBoxName name, int n);
// Indicator of the full diagonal {(x,...,x)}, arity k >= 1.
InvariantTensor ghz(int k, int n);
InvariantTensor four_box(FourBoxName name, int n);

// Partial trace over adjacent legs i, i+1: sum_z f(..,z,z,..).
template <typename Tensor>
Tensor ptrace(const Tensor& f, int i) {
  return sum_out(merge(f, i), i);
}

// Stacking product of m-strand operator boxes with cyclic legs
// (in_1..in_m, out_m..out_1): pairs f's outputs with g's inputs by nested
// partial traces. stack(f,g) applies f first, then g.
template <typename Tensor>
Tensor stack_boxes(const Tensor& f, const Tensor& g, int strands) {
  if (f.arity() != 2 * strands || g.arity() != 2 * strands)
    throw invalid_parameter("stack_boxes: arity must be 2*strands");
  Tensor t = tensor_product(f, g);
  for (int j = 0; j < strands; ++j) t = ptrace(t, 2 * strands - j);
  return t;
}

// The contraction network of gamma_k: indices i_1..i_k, boundary
// (i_1..i_k, i_1..i_k, i_k..i_1), pairwise adjacency factors; built by the
// recursive extension that adds i_{k+1} and its adjacency edges.
ContractionNetwork gamma_network(int k);
InvariantTensor gamma(int k, int n, const EvalOptions& opts = {});

struct YResult {
  InvariantTensor y;
  Rat coefficient;      // (n-3)!/2^m for odd n, (n-3)!/2^(m-1) for even n
  bool matches = false; // y == coefficient * R_T exactly
  std::string wiring;   // textual description of the network used
};

// Even-case wiring flags; the admissible family searched by calibration.
struct EvenYWiring {
  bool v5_all_externals = true;  // v5 A-attached to all four (else v1,v2)
  bool v6_all_externals = true;  // v6 T-attached to all four (else v1,v2)
  bool i_to_externals = true;    // A(i_s, v_t) for t=1..4
  bool t_substitution = true;    // T(v5,i_m) instead of A(v5,i_m)
  std::string str() const;
};

ContractionNetwork y_network_odd(int n);
ContractionNetwork y_network_even(int n, const EvenYWiring& w);

// The unique wiring reproducing y = 6*R_T at n=6 (calibrated once).
EvenYWiring calibrated_even_wiring();

YResult y_element(int n, const EvalOptions& opts = {});

struct WitnessResult {
  std::vector<std::vector<int>> support;  // vertex index per position
  bool all_injective = false;
  bool all_automorphisms = false;
  bool diagonal_invariant = false;
};

// Enumerates all assignments i: V -> V with every edge mapped to an edge,
// by backtracking; n = 5 unless allow_large.
WitnessResult x_witness(int n, bool allow_large = false);

struct RelationReport {
  struct Entry {
    std::string name;
    bool pass = false;
    std::string witness;
  };
  std::vector<Entry> entries;
  bool all_pass() const;
};

enum class Backend { Dense, Orbit };
RelationReport verify_relations(int n, Backend backend = Backend::Orbit);

struct CatalogElement {
  std::string name;
  std::string expression;  // construction term over the named primitives
  ContractionNetwork net;
};

// The nine 4-box diagrams supported on the cyclic-adjacency set.
std::vector<CatalogElement> q_catalog(int n);

}  // namespace kgspin
