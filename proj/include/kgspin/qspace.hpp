#pragma once

#include <optional>

#include "kgspin/boxes.hpp"

namespace kgspin {

// Orbit basis of Q: canonical 4-patterns whose cyclically consecutive
// pairs are disjoint, ordered by the (rel(v1,v3), rel(v2,v4)) grid so the
// list lines up with the b_1..b_9 enumeration where they are valid.
struct QBasis {
  int n = 0;
  std::vector<Pattern> patterns;
};

QBasis q_orbit_basis(int n);
int q_dimension(int n);

struct EvalMatrix {
  std::vector<std::string> row_names;
  QBasis basis;
  std::vector<std::vector<Int>> entries;  // rows = catalog elements
  int rank = 0;
  bool square = false;
  Int det = 0;  // defined when square
};

EvalMatrix evaluation_matrix(const std::vector<CatalogElement>& catalog,
                             const QBasis& basis, const KneserGraph& g);

// Exact elimination helpers.
int matrix_rank(std::vector<std::vector<Rat>> m);
Int matrix_det(std::vector<std::vector<Int>> m);  // fraction-free Bareiss

// Coefficients x with sum_i x_i rows[i] = target, when solvable.
std::optional<std::vector<Rat>> solve_in_row_space(
    const std::vector<std::vector<Int>>& rows, const std::vector<Int>& target);

// Coordinates of an invariant 4-box over the Q basis (value at each
// representative).
std::vector<Int> q_coordinates(const InvariantTensor& f, const QBasis& basis);

}  // namespace kgspin
