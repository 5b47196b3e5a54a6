#pragma once

// Power-basis coordinates, integrality, the digit-derivative integral basis
// and the normal basis of K_n(ζ) over K_0(ζ).

#include <carlitz/check.hpp>
#include <carlitz/linalg.hpp>
#include <carlitz/omega.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace carlitz {

// Coordinates of y in 1, x_n, ..., x_n^{D-1}.
std::vector<KZetaFun> coords_power_basis(const TorsionElem& y);

struct IntegralityWitness {
  bool integral = true;
  std::optional<std::size_t> index;  // first coordinate that is not a polynomial
  KZetaFun coordinate;
};

IntegralityWitness is_integral(const TorsionElem& y);

struct BasisReport {
  std::vector<DigitExponents> labels;  // column labels
  PolyMatrix matrix;                   // row k: coefficient of x_n^k
  bool all_integral = true;
  std::vector<std::string> non_integral;
  Poly determinant;
  bool is_unit = false;                // determinant is a nonzero constant
  bool adjugate_identity = false;      // M adj(M) = adj(M) M = det I
  bool inverse_integral = false;       // every entry of adj(M)/det is a polynomial
  PolyMatrix adjugate;
  CheckResult result;
};

BasisReport basis_determinant_test(const TorsionField& field);

// For random x with v_i(x) >= 0 at every i (integral numerators over random
// denominators prime to 𝔭), the coordinates of x in the digit basis satisfy
// v_i >= 0 as well.
CheckResult check_basis_for_extension(const TorsionField& field, unsigned samples, std::uint64_t seed);

struct NormalBasisReport {
  std::size_t orbit_size = 0;
  std::size_t rank = 0;
  std::size_t degree = 0;
  bool full = false;
  CheckResult result;
};

// The conjugates σ_a(η_n), a in (1+𝔭A)/(1+𝔭^{n+1}A), times x_0^k for k < |𝔭|-1
// with x_0 = 𝔠_{𝔭^n}(x_n), have full rank D over K(ζ).
NormalBasisReport normal_basis_rank(const TorsionField& field);

struct IsotypicComponent {
  unsigned exponent = 0;  // σ_a acts through a(ζ)^exponent
  TorsionElem value;
};

// Level 0 only; throws std::invalid_argument otherwise.  Nonzero components
// in increasing exponent order.
std::vector<IsotypicComponent> isotypic_decompose(const TorsionElem& y);
CheckResult check_isotypic(const TorsionElem& y, const std::vector<IsotypicComponent>& parts);

}  // namespace carlitz
