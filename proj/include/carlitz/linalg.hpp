#pragma once

// Fraction-free (Bareiss) linear algebra over F_{q^d}[θ].  All divisions
// performed are exact; a nonzero remainder throws std::logic_error.

#include <carlitz/poly.hpp>

#include <cstddef>
#include <vector>

namespace carlitz {

using PolyMatrix = std::vector<std::vector<Poly>>;

PolyMatrix identity_matrix(const FiniteField* field, std::size_t n);
PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b);

Poly determinant(PolyMatrix m);

std::size_t rank(PolyMatrix m);

struct Adjugate {
  Poly det;
  PolyMatrix adj;  // adj * m == m * adj == det * I
};

// Fraction-free Gauss-Jordan on [m | I].
Adjugate adjugate(const PolyMatrix& m);

struct SolveResult {
  std::vector<Poly> num;
  Poly den;  // solution is num / den; den == 0 when m is singular
};

// Solves m x = b.
SolveResult solve(const PolyMatrix& m, const std::vector<Poly>& b);

}  // namespace carlitz
