#include <carlitz/linalg.hpp>

#include <stdexcept>
#include <utility>

namespace carlitz {

namespace {

const FiniteField* matrix_field(const PolyMatrix& m)
{
  for (const auto& row : m)
    for (const auto& e : row)
      if (e.field()) return e.field();
  return nullptr;
}

// Fraction-free elimination on the columns [0, ncols_pivot) of an augmented
// matrix.  With `jordan`, rows above the pivot are cleared as well.  Returns
// the list of pivot columns and the sign of the row permutation.
struct Elimination {
  std::vector<std::size_t> pivot_cols;
  bool odd_swaps = false;
  Poly last_pivot;
};

Elimination eliminate(PolyMatrix& m, std::size_t ncols_pivot, bool jordan)
{
  Elimination out;
  const FiniteField* F = matrix_field(m);
  Poly prev = Poly::constant(F, 1);
  const std::size_t rows = m.size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols_pivot && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (!m[i][c].is_zero()) {
        // prefer the lowest degree pivot
        if (piv == rows || m[i][c].degree() < m[piv][c].degree()) piv = i;
      }
    }
    if (piv == rows) continue;
    if (piv != r) {
      std::swap(m[piv], m[r]);
      out.odd_swaps = !out.odd_swaps;
    }
    const Poly& p = m[r][c];
    const std::size_t ncols = m[r].size();
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      if (!jordan && i < r) continue;
      const Poly f = m[i][c];
      for (std::size_t j = 0; j < ncols; ++j) {
        if (j == c) continue;
        if (!jordan && j < c) continue;
        Poly v = m[i][j] * p - f * m[r][j];
        m[i][j] = prev.is_one() ? std::move(v) : exact_div(v, prev);
      }
      m[i][c] = Poly(F);
    }
    if (jordan) {
      // Earlier pivot rows must be rescaled to keep every row on the same
      // denominator; the update above already did so for i < r.
    }
    prev = p;
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.last_pivot = prev;
  return out;
}

}  // namespace

PolyMatrix identity_matrix(const FiniteField* field, std::size_t n)
{
  PolyMatrix m(n, std::vector<Poly>(n, Poly(field)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Poly::constant(field, 1);
  return m;
}

PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b)
{
  const FiniteField* F = matrix_field(a);
  if (!F) F = matrix_field(b);
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t m = k ? b[0].size() : 0;
  PolyMatrix out(n, std::vector<Poly>(m, Poly(F)));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw std::invalid_argument("matmul: dimension mismatch");
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!b[l][j].is_zero()) out[i][j] += a[i][l] * b[l][j];
    }
  }
  return out;
}

Poly determinant(PolyMatrix m)
{
  const std::size_t n = m.size();
  const FiniteField* F = matrix_field(m);
  if (n == 0) return Poly::constant(F, 1);
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (!F) return Poly();
  Elimination e = eliminate(m, n, false);
  if (e.pivot_cols.size() < n) return Poly(F);
  Poly det = m[n - 1][n - 1];
  return e.odd_swaps ? -det : det;
}

std::size_t rank(PolyMatrix m)
{
  if (m.empty() || !matrix_field(m)) return 0;
  const std::size_t cols = m[0].size();
  return eliminate(m, cols, false).pivot_cols.size();
}

Adjugate adjugate(const PolyMatrix& m)
{
  const std::size_t n = m.size();
  const FiniteField* F = matrix_field(m);
  PolyMatrix aug(n, std::vector<Poly>(2 * n, Poly(F)));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("adjugate of a non-square matrix");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = Poly::constant(F, 1);
  }
  Elimination e = eliminate(aug, n, true);
  Adjugate out;
  if (e.pivot_cols.size() < n) {
    // Singular: the adjugate is still defined but not produced by this
    // elimination; callers only need the determinant in that case.
    out.det = Poly(F);
    return out;
  }
  // After Gauss-Jordan: left block = det(PM) I, right block = det(PM) M^{-1}.
  out.det = e.odd_swaps ? -e.last_pivot : e.last_pivot;
  out.adj.assign(n, std::vector<Poly>(n, Poly(F)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.adj[i][j] = e.odd_swaps ? -aug[i][n + j] : aug[i][n + j];
  return out;
}

SolveResult solve(const PolyMatrix& m, const std::vector<Poly>& b)
{
  const std::size_t n = m.size();
  const FiniteField* F = matrix_field(m);
  PolyMatrix aug(n, std::vector<Poly>(n + 1, Poly(F)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n] = b[i];
  }
  Elimination e = eliminate(aug, n, true);
  SolveResult out;
  if (e.pivot_cols.size() < n) {
    out.den = Poly(F);
    return out;
  }
  out.den = e.last_pivot;
  for (std::size_t i = 0; i < n; ++i) out.num.push_back(aug[i][n]);
  return out;
}

}  // namespace carlitz
