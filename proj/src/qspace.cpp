#include "kgspin/qspace.hpp"

#include <algorithm>

namespace kgspin {

namespace {

int rel_class(PairRel r) {
  switch (r) {
    case PairRel::Equal: return 0;
    case PairRel::Share: return 1;
    case PairRel::Disjoint: return 2;
  }
  return 3;
}

bool cyclic_adjacent(const Pattern& p) {
  for (int t = 0; t < 4; ++t)
    if (pair_rel(p.pairs[t], p.pairs[(t + 1) % 4]) != PairRel::Disjoint)
      return false;
  return true;
}

}  // namespace

QBasis q_orbit_basis(int n) {
  if (n < 5) throw invalid_parameter("q_orbit_basis: n must be >= 5");
  QBasis b;
  b.n = n;
  for (const auto& p : enumerate_patterns(4, n))
    if (cyclic_adjacent(p)) b.patterns.push_back(p);
  std::sort(b.patterns.begin(), b.patterns.end(),
            [](const Pattern& x, const Pattern& y) {
              auto key = [](const Pattern& p) {
                return std::tuple(rel_class(pair_rel(p.pairs[0], p.pairs[2])),
                                  rel_class(pair_rel(p.pairs[1], p.pairs[3])),
                                  p);
              };
              return key(x) < key(y);
            });
  return b;
}

int q_dimension(int n) { return static_cast<int>(q_orbit_basis(n).patterns.size()); }

std::vector<Int> q_coordinates(const InvariantTensor& f, const QBasis& basis) {
  if (f.arity() != 4 || f.n() != basis.n)
    throw invalid_parameter("q_coordinates: arity/n mismatch");
  std::vector<Int> out;
  for (const auto& p : basis.patterns) {
    Rat v = f.value(p);
    if (v.get_den() != 1)
      throw invalid_parameter("q_coordinates: non-integer value");
    out.push_back(v.get_num());
  }
  return out;
}

EvalMatrix evaluation_matrix(const std::vector<CatalogElement>& catalog,
                             const QBasis& basis, const KneserGraph& g) {
  if (g.n() != basis.n) throw invalid_parameter("evaluation_matrix: n mismatch");
  EvalMatrix m;
  m.basis = basis;
  for (const auto& e : catalog) {
    m.row_names.push_back(e.name);
    std::vector<Int> row;
    for (const auto& p : basis.patterns) {
      std::vector<int> pins;
      for (const auto& pr : p.pairs)
        pins.push_back(g.index_of(Vertex(pr[0], pr[1])));
      Rat v = evaluate_at(e.net, g, pins);
      if (v.get_den() != 1)
        throw invalid_parameter("evaluation gave a non-integer");
      row.push_back(v.get_num());
    }
    m.entries.push_back(std::move(row));
  }
  std::vector<std::vector<Rat>> rows;
  for (const auto& r : m.entries) {
    std::vector<Rat> rr(r.begin(), r.end());
    rows.push_back(std::move(rr));
  }
  m.rank = matrix_rank(rows);
  m.square = !m.entries.empty() && m.entries.size() == basis.patterns.size();
  if (m.square) m.det = matrix_det(m.entries);
  return m;
}

int matrix_rank(std::vector<std::vector<Rat>> m) {
  if (m.empty()) return 0;
  const size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[r][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

Int matrix_det(std::vector<std::vector<Int>> m) {
  const size_t k = m.size();
  for (const auto& row : m)
    if (row.size() != k) throw invalid_parameter("det of a non-square matrix");
  if (k == 0) return 1;
  // Bareiss fraction-free elimination
  Int prev = 1;
  int sign = 1;
  for (size_t c = 0; c + 1 < k; ++c) {
    size_t piv = c;
    while (piv < k && m[piv][c] == 0) ++piv;
    if (piv == k) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      sign = -sign;
    }
    for (size_t i = c + 1; i < k; ++i)
      for (size_t j = c + 1; j < k; ++j) {
        Int num = m[i][j] * m[c][c] - m[i][c] * m[c][j];
        m[i][j] = num / prev;  // exact by the Bareiss identity
      }
    prev = m[c][c];
  }
  return sign > 0 ? m[k - 1][k - 1] : -m[k - 1][k - 1];
}

std::optional<std::vector<Rat>> solve_in_row_space(
    const std::vector<std::vector<Int>>& rows,
    const std::vector<Int>& target) {
  // Solve x^T rows = target by eliminating the transposed system.
  const size_t nr = rows.size();
  if (nr == 0) return std::nullopt;
  const size_t nc = rows[0].size();
  if (target.size() != nc) throw invalid_parameter("solve: size mismatch");
  // augmented columns-as-equations: for each column j, sum_i x_i rows[i][j]
  // = target[j]
  std::vector<std::vector<Rat>> eq;  // nc equations over nr unknowns (+rhs)
  for (size_t j = 0; j < nc; ++j) {
    std::vector<Rat> row(nr + 1);
    for (size_t i = 0; i < nr; ++i) row[i] = Rat(rows[i][j]);
    row[nr] = Rat(target[j]);
    eq.push_back(std::move(row));
  }
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
  // consistency: no 0 = nonzero row
  for (size_t i = r; i < eq.size(); ++i)
    if (eq[i][nr] != 0) return std::nullopt;
  std::vector<Rat> x(nr, Rat(0));
  for (size_t i = 0; i < r; ++i)
    x[pivot_col[i]] = eq[i][nr] / eq[i][pivot_col[i]];
  return x;
}

}  // namespace kgspin
