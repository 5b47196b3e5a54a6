#pragma once

// Univariate factorization over a finite field: squarefree decomposition,
// distinct-degree splitting, then equal-degree splitting (Cantor-Zassenhaus
// in odd characteristic, the trace map in characteristic 2).

#include <carlitz/poly.hpp>

#include <cstdint>
#include <vector>

namespace carlitz {

struct Factor {
  Poly poly;  // monic irreducible
  unsigned multiplicity = 0;
};

struct Factorization {
  Elem unit = 0;  // leading coefficient of the input
  std::vector<Factor> factors;  // sorted by degree, then coefficients
  std::uint64_t seed = 0;
};

// Throws std::domain_error on the zero polynomial.
Factorization factor_poly(const Poly& g, std::uint64_t seed = 0);

// Product of the factors with multiplicity, times the unit.
Poly expand(const Factorization& f, const FiniteField* field);

}  // namespace carlitz
