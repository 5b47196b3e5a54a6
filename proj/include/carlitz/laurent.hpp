#pragma once

// Truncated Laurent series sum_{e >= lo} c_e v^e with coefficients in a
// finite field.  Every value carries an absolute precision P: the true series
// agrees with the stored coefficients for all exponents e < P.  Arithmetic
// computes the best precision provable from its inputs and may lower it
// further to a caller-supplied cap; it never fabricates digits.

#include <carlitz/poly.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace carlitz {

class Laurent {
 public:
  static constexpr std::int64_t kExact = std::numeric_limits<std::int64_t>::max() / 4;

  Laurent() = default;
  explicit Laurent(const FiniteField* field, std::int64_t precision = kExact);  // zero
  static Laurent monomial(const FiniteField* field, Elem c, std::int64_t e);
  static Laurent constant(const FiniteField* field, Elem c) { return monomial(field, c, 0); }
  // Exact series with the given coefficients starting at exponent lo.
  static Laurent from_coeffs(const FiniteField* field, std::int64_t lo, std::vector<Elem> coeffs,
                             std::int64_t precision = kExact);
  // θ = -v^{-(q-1)}.
  static Laurent theta(const FiniteField* field, unsigned q);
  // a(θ) for a polynomial in θ; exact.  Coefficients of `a` are read as
  // indices of `field` (valid along the tower inclusions).
  static Laurent from_theta_poly(const FiniteField* field, unsigned q, const Poly& a);

  const FiniteField* field() const { return field_; }
  std::int64_t precision() const { return prec_; }
  bool is_exact() const { return prec_ >= kExact; }
  // True when every known coefficient vanishes.
  bool is_zero() const { return coeffs_.empty(); }
  // Exponent of the first nonzero coefficient; the precision when is_zero().
  std::int64_t valuation() const;
  Elem coeff(std::int64_t e) const;
  Elem leading() const;  // 0 when is_zero()
  std::int64_t lo() const { return lo_; }
  const std::vector<Elem>& coeffs() const { return coeffs_; }

  Laurent operator-() const;
  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent mul(const Laurent& o, std::int64_t cap = kExact) const;
  Laurent operator*(const Laurent& o) const { return mul(o); }
  Laurent scaled(Elem c) const;
  Laurent shifted(std::int64_t e) const;  // times v^e, exact
  // 1/x; for exact inputs the precision is cap.  Throws std::domain_error if
  // no nonzero coefficient is known.
  Laurent inverse(std::int64_t cap) const;
  Laurent div(const Laurent& o, std::int64_t cap) const;
  // x^e for e a power of the characteristic, computed coefficient-wise; loses
  // no precision beyond the cap.  Throws std::invalid_argument for other e.
  Laurent frobenius(std::uint64_t e, std::int64_t cap = kExact) const;
  Laurent pow(std::uint64_t e, std::int64_t cap) const;
  Laurent truncated(std::int64_t cap) const;

  std::string format(std::size_t max_terms = 6) const;

 private:
  void normalize();

  const FiniteField* field_ = nullptr;
  std::int64_t lo_ = 0;
  std::vector<Elem> coeffs_;  // coeffs_[i] is the coefficient of v^{lo_ + i}
  std::int64_t prec_ = kExact;
};

}  // namespace carlitz
