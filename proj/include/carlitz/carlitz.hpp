#pragma once

// The Carlitz module over A = F_q[θ]: 𝔠_θ = τ + θ.

#include <carlitz/poly.hpp>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace carlitz {

// sum_i c_i τ^i with c_i in A; evaluation sends τ^i to X^{q^i}.
class TwistedPoly {
 public:
  TwistedPoly() = default;
  TwistedPoly(unsigned q, std::vector<Poly> coeffs);

  unsigned q() const { return q_; }
  const std::vector<Poly>& coeffs() const { return c_; }
  int tau_degree() const { return static_cast<int>(c_.size()) - 1; }

  TwistedPoly operator+(const TwistedPoly& o) const;
  // (this ∘ o)(X) = this(o(X)).
  TwistedPoly compose(const TwistedPoly& o) const;
  bool operator==(const TwistedPoly& o) const { return q_ == o.q_ && c_ == o.c_; }

  std::string format() const;

 private:
  void trim();
  unsigned q_ = 0;
  std::vector<Poly> c_;
};

TwistedPoly carlitz_coeffs(const Poly& a, unsigned q);

// 𝔠_a(x) by Horner over the θ-digits of a: r <- r^q + θ r + a_i x.  Ops
// supplies qpow(T), mul_theta(T), scale(T, Elem) and add(T, T).
template <class T, class Ops>
T carlitz_eval(const Poly& a, const T& x, const Ops& ops)
{
  if (a.is_zero()) return ops.scale(x, 0);
  const std::size_t m = a.size() - 1;
  T r = ops.scale(x, a.coeff(m));
  for (std::size_t i = m; i-- > 0;) {
    T next = ops.add(ops.qpow(r), ops.mul_theta(r));
    if (a.coeff(i) != 0) next = ops.add(next, ops.scale(x, a.coeff(i)));
    r = std::move(next);
  }
  return r;
}

// Polynomials in X with coefficients in A, ascending in X.
using XPoly = std::vector<Poly>;

XPoly xpoly_trim(XPoly f);
XPoly xpoly_mul(const XPoly& a, const XPoly& b);
// Exact division by a monic divisor; throws std::logic_error on a remainder.
XPoly xpoly_exact_div(const XPoly& a, const XPoly& b);
std::string xpoly_format(const XPoly& f, const char* var = "X");

// 𝔠_a(X) expanded as a polynomial in X.
XPoly carlitz_xpoly(const Poly& a, unsigned q);

struct CyclotomicData {
  unsigned q = 0;
  Poly p;  // monic irreducible over F_q
  unsigned n = 0;
  std::size_t degree = 0;  // D = q^{dn}(q^d - 1)
  XPoly phi;  // monic, 𝔠_{p^{n+1}}(X) / 𝔠_{p^n}(X)
};

using CyclotomicPtr = std::shared_ptr<const CyclotomicData>;

// Validates p (monic, irreducible via factor_poly) and memoizes per (q, p, n).
CyclotomicPtr carlitz_cyclotomic(const Poly& p, unsigned q, unsigned n);

// Canonical representatives of A/p^{n+1}A of degree < d(n+1), ordered by
// their index sum c_i q^i; with units_only, multiples of p are skipped.
std::vector<Poly> residue_enum(const Poly& p, unsigned n, bool units_only);

// D_j = prod_{i<j} (θ^{q^j} - θ^{q^i}).
Poly carlitz_D(unsigned j, const FiniteField* fq);

// Checks that p is monic and irreducible over its field; throws
// std::invalid_argument with a reason otherwise.
void require_prime(const Poly& p);

}  // namespace carlitz
