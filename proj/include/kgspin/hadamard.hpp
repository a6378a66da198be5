#pragma once

#include <set>
#include <string>
#include <vector>

#include "kgspin/errors.hpp"
#include "kgspin/rational.hpp"

namespace kgspin {

// Permutations of {1..d} as image vectors, 1-based (perm[0] unused).
using Perm = std::vector<int>;

Perm identity_perm(int d);
Perm compose_perms(const Perm& f, const Perm& g);  // f after g
Perm inverse_perm(const Perm& f);
// "(1 2 3)(4 5)" -> image vector; fixed points may be omitted.
Perm parse_cycles(int d, const std::string& text);

// A subgroup of S_d enumerated from generators; elements sorted.
struct SubgroupAction {
  int d = 0;
  std::vector<Perm> generators;
  std::vector<Perm> elements;
};

SubgroupAction make_subgroup(int d, std::vector<Perm> generators,
                             size_t cap = 50'000);
SubgroupAction symmetric_group(int d);

// Indicator support of {(g(1),...,g(d)) : g in G} on X^d, X = {1..d}.
struct Molecule {
  int d = 0;
  std::set<std::vector<int>> support;  // tuples, 1-based values
};

Molecule molecule(const SubgroupAction& G, int max_d = 6);

struct MoleculeDecomposition {
  int d = 0;
  std::vector<Molecule> projections;     // Y_i, pairwise disjoint supports
  std::vector<long> stabilizer_sizes;    // |G_i| under the leg action
  std::vector<long> orbit_sizes;         // |O_i| under the leg action
};

// Splits the S_d molecule into the G-orbit indicators (the minimal
// Hadamard projections of the G-invariant algebra); m = d!/|G| parts.
MoleculeDecomposition decompose_projections(int d, const SubgroupAction& G,
                                            int max_d = 5);

struct OrbitStabilizerReport {
  struct Entry {
    std::string name;
    bool pass = false;
    std::string detail;
  };
  std::vector<Entry> entries;
  bool all_pass() const;
};

// The concrete identities: <Y_i,Y_i> = |G_i|, |G_i||O_i| = |S_d|, all
// |O_i| = m, sum Y_i = Y, <Y,Y> = |S_d|, leg-permutation closure, and the
// Hadamard projection laws.
OrbitStabilizerReport verify_orbit_stabilizer(const MoleculeDecomposition& dec);

}  // namespace kgspin
