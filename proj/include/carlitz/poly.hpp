#pragma once

// Dense univariate polynomials over a FiniteField.  Used both for A = F_q[θ]
// and for F_{q^d}[θ]; since F_q ⊂ F_{q^d} is the identity on indices, moving
// a polynomial up the tower only rebinds its field pointer.

#include <carlitz/field.hpp>

#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace carlitz {

class Poly {
 public:
  // Degree reported for the zero polynomial.  Callers test is_zero() first.
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  Poly() = default;
  explicit Poly(const FiniteField* field) : field_(field) {}
  Poly(const FiniteField* field, std::vector<Elem> coeffs);

  static Poly constant(const FiniteField* field, Elem c);
  static Poly monomial(const FiniteField* field, Elem c, std::size_t k);
  static Poly variable(const FiniteField* field) { return monomial(field, 1, 1); }

  const FiniteField* field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  Elem lead() const { return c_.empty() ? 0 : c_.back(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Poly rebind(const FiniteField* field) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator+(const Poly& o) const { Poly r = *this; r += o; return r; }
  Poly operator-(const Poly& o) const { Poly r = *this; r -= o; return r; }
  Poly operator*(const Poly& o) const;
  Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
  Poly scaled(Elem c) const;
  Poly shifted(std::size_t k) const;  // multiply by θ^k

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return c_ != o.c_; }

  Elem eval(Elem x) const;
  Poly monic() const;

  // Applies x -> x^e to every coefficient.
  Poly map_coeffs_pow(std::uint64_t e) const;
  // a(θ^k).
  Poly compose_power(std::size_t k) const;

  std::string format(std::string_view var = "theta") const;

  // Mixed-field helpers: if one operand carries no field, it is taken to be
  // the other's.
  const FiniteField* common_field(const Poly& o) const;

 private:
  void trim();

  const FiniteField* field_ = nullptr;
  std::vector<Elem> c_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
// Division that must be exact; throws std::logic_error otherwise.
Poly exact_div(const Poly& a, const Poly& b);
Poly gcd(Poly a, Poly b);  // monic, gcd(0, 0) = 0
Poly pow(const Poly& a, std::uint64_t e);
Poly powmod(const Poly& a, std::uint64_t e, const Poly& m);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m);

// Binomial coefficient mod p by Lucas' theorem.
unsigned binomial_mod_p(std::uint64_t n, std::uint64_t k, unsigned p);

// j-th hyperderivative: coefficient rule binom(k, j) a_k θ^{k-j}.
Poly hyperderivative(const Poly& a, std::uint64_t j);

// Taylor coefficients a^{(0)}(z), ..., a^{(n)}(z) of a about θ = z, computed
// by repeated synthetic division by (θ - z).  `field` must contain z and the
// coefficients of a.
std::vector<Elem> hyper_expand(const Poly& a, const FiniteField* field, Elem z,
                               std::size_t n);

// Order of vanishing at θ = z (the polynomial must be nonzero).
std::size_t order_at(const Poly& a, Elem z);

// Rabin's irreducibility test over the coefficient field.
bool is_irreducible(const Poly& f);

// All roots in the coefficient field, ascending by index.
std::vector<Elem> roots(const Poly& f);

// Polynomial text format: "c0,c1,..." (ascending, at least one comma or a
// single bare constant) or a symbolic expression in `var` and the generator
// names of the field tower, e.g. "theta^2+theta+g".
Poly parse_poly(const FiniteField* field, std::string_view text,
                std::string_view var = "theta");

// Integer encoding used for enumeration: sum c_i |F|^i.
Poly poly_from_index(const FiniteField* field, std::uint64_t index, std::size_t len);

}  // namespace carlitz
