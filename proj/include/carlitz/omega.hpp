#pragma once

// The exact values ω^{(j)}(ζ_k) in K_n(ζ) and the objects around them.

#include <carlitz/check.hpp>
#include <carlitz/interp.hpp>
#include <carlitz/torsion.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace carlitz {

// q_{(n)}(θ, T) = sum_i coeffs[i](θ) T^i with deg_T < d and coefficients in A.
struct QPoly {
  unsigned n = 0;
  std::vector<Poly> coeffs;
  bool operator==(const QPoly& o) const { return n == o.n && coeffs == o.coeffs; }
};

// Remainder of ((p(θ) - p(T)) / (θ - T))^{n+1} modulo p(T).
QPoly q_poly(const Poly& p, unsigned n);
// sum_{j=i+1}^{d} a_j θ^{j-i-1}; valid for n = 0.
QPoly q_poly_closed_form(const Poly& p);
// Test oracle: interpolate p^{n+1} / (θ - ζ_j)^{n+1} over the roots of p in
// F_{q^d}[θ] by a Vandermonde solve.
QPoly q_poly_by_interpolation(const Poly& p, unsigned n);

// c_{(n),i} = 𝔠_{q_{(n),i}}(x_n), i = 0..d-1.
std::vector<TorsionElem> torsion_coeffs(const TorsionField& field);

class OmegaTable {
 public:
  explicit OmegaTable(const TorsionField& field);

  const TorsionField& field() const { return *field_; }
  unsigned level() const { return field_->level(); }
  // ω^{(j)}(ζ_k) for 0 <= j <= n and 1 <= k (taken cyclically).
  const TorsionElem& omega(unsigned j, unsigned k) const;
  // c_{(j),i} embedded at level n.
  const TorsionElem& coeff(unsigned j, unsigned i) const;
  const QPoly& qpoly(unsigned j) const { return qpolys_.at(j); }

 private:
  const TorsionField* field_;
  std::vector<QPoly> qpolys_;
  std::vector<std::vector<TorsionElem>> coeffs_;  // [j][i]
  std::vector<std::vector<TorsionElem>> omega_;   // [j][k-1]
};

// Interned per field.
const OmegaTable& omega_table(const TorsionField& field);
TorsionElem omega_value(const TorsionField& field, unsigned j, unsigned k);

// Upper-triangular Toeplitz matrix given by its first row.
class UTToeplitz {
 public:
  UTToeplitz(const FiniteField* field, std::vector<Elem> row);
  static UTToeplitz identity(const FiniteField* field, std::size_t size);

  std::size_t size() const { return row_.size(); }
  const std::vector<Elem>& row() const { return row_; }
  Elem entry(std::size_t r, std::size_t c) const { return c >= r ? row_[c - r] : 0; }
  UTToeplitz operator*(const UTToeplitz& o) const;
  bool operator==(const UTToeplitz& o) const { return row_ == o.row_; }
  bool is_identity() const;
  bool invertible() const { return !row_.empty() && row_[0] != 0; }
  UTToeplitz inverse() const;

 private:
  const FiniteField* field_;
  std::vector<Elem> row_;
};

// ρ_ζ^{[size]}(a_t): first row a^{(0)}(ζ), ..., a^{(size-1)}(ζ).
UTToeplitz rho_matrix(const Poly& a, const FiniteField* fqd, Elem zeta, std::size_t size);

// Exponents e[j][i] for ω^{(j)}(ζ_{i+1}); shape (n+1) x d, entries in [0, q-1].
using DigitExponents = std::vector<std::vector<unsigned>>;

TorsionElem digit_monomial(const OmegaTable& table, const DigitExponents& e);
// The list of the integral basis: e_0 < q-1 as a multi-index and e_j <= q-1.
std::vector<DigitExponents> digit_basis_exponents(const TorsionField& field);
std::string format_exponents(const DigitExponents& e);

// η_n = prod_{k=1}^{n} prod_i ω^{(k)}(ζ_i)^{q-1}.
TorsionElem eta(const OmegaTable& table);

// Identity checks.  Each runs over every unit a mod 𝔭^{n+1}, every order
// j <= n and every root where applicable.
CheckResult check_torsion_coeffs(const OmegaTable& table);
CheckResult check_galois_action(const OmegaTable& table);
CheckResult check_frobenius_shift(const OmegaTable& table);
CheckResult check_recursion(const OmegaTable& table);
// F(ω^{(n)}(ζ)) differs from ω^{(n)}(ζ)^q; meaningful for n >= 1.
CheckResult check_frobenius_not_qpower(const OmegaTable& table);
CheckResult check_rho_multiplicative(const TorsionField& field);
// Lower-order coefficients embedded from level j agree with 𝔠_{q_{(j),i} 𝔭^{n-j}}(x_n).
CheckResult check_tower_consistency(const OmegaTable& table);
// (σ_a - a(ζ)^l)^m kills each digit monomial, m = 1 + sum j e_{j,i}.  When
// that m is not enough the power is raised up to D and the case is counted
// in `escalations`; the check fails only if D applications do not suffice.
CheckResult check_generalized_eigen(const OmegaTable& table, std::size_t* escalations = nullptr);
// q_poly against its closed form (n = 0) and the interpolation oracle.
CheckResult check_q_poly(const Poly& p, unsigned n);

}  // namespace carlitz
