#pragma once

// Interpolation at the roots ζ_1, ..., ζ_d of 𝔭 and over the unit group
// (A/𝔭A)^×.  The value type T of an F_{q^d}-algebra needs `T + T` and
// `T.scaled(Elem)`; plain field elements go through the Elem overloads.

#include <carlitz/poly.hpp>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace carlitz {

// Exponent tuple (e_1, ..., e_d) with 0 <= e_i <= q - 1.
class MultiIndex {
 public:
  MultiIndex() = default;
  MultiIndex(std::vector<unsigned> e, unsigned q);

  const std::vector<unsigned>& digits() const { return e_; }
  unsigned q() const { return q_; }
  std::size_t size() const { return e_.size(); }
  unsigned operator[](std::size_t i) const { return e_[i]; }

  // Componentwise order.
  bool operator<=(const MultiIndex& o) const;
  bool operator==(const MultiIndex& o) const { return e_ == o.e_ && q_ == o.q_; }

  bool is_all_max() const;  // e == q-1 in every slot
  // k = sum e_i q^{i-1}; a_t^e = a(ζ)^k.
  std::uint64_t character_exponent() const;

  // All e with 0 <= e <= q-1 (with_max) or 0 <= e < q-1, in increasing k.
  static std::vector<MultiIndex> enumerate(unsigned q, unsigned d, bool with_max);

 private:
  std::vector<unsigned> e_;
  unsigned q_ = 0;
};

// Inverse of the Vandermonde matrix V[k][l] = ζ_k^l over `field`.
std::vector<std::vector<Elem>> vandermonde_inverse(const FiniteField* field,
                                                   const std::vector<Elem>& zetas);

// Gauss-Jordan solve over a finite field; throws on a singular system.
std::vector<Elem> solve_elem_system(const FiniteField* field,
                                    std::vector<std::vector<Elem>> m,
                                    std::vector<Elem> b);

// a_{j,l}: t^j mod 𝔭(t) = sum_l a_{j,l} t^l for 0 <= j <= q^d - 1.
std::vector<std::vector<Elem>> power_residues(const Poly& p);

// Unique f_0..f_{d-1} with sum_l f_l ζ_k^l = values[k].
template <class T>
std::vector<T> root_coefficients(const FiniteField* field, const std::vector<Elem>& zetas,
                                 const std::vector<T>& values)
{
  const std::size_t d = zetas.size();
  if (values.size() != d)
    throw std::invalid_argument("root_coefficients: expected one value per root");
  const auto inv = vandermonde_inverse(field, zetas);
  std::vector<T> out;
  out.reserve(d);
  for (std::size_t l = 0; l < d; ++l) {
    T acc = values[0].scaled(inv[l][0]);
    for (std::size_t k = 1; k < d; ++k) acc = acc + values[k].scaled(inv[l][k]);
    out.push_back(std::move(acc));
  }
  return out;
}

std::vector<Elem> root_coefficients(const FiniteField* field, const std::vector<Elem>& zetas,
                                    const std::vector<Elem>& values);

// The same coefficients read off from phi = sum_i phi_i t^i by folding
// positive exponents into [1, q^d - 1] and reducing the powers of t mod 𝔭.
// t^{i + q^d - 1} = t^i mod 𝔭 for i >= 1 holds for every 𝔭, including θ.
template <class T>
std::vector<T> root_coefficients_periodic(const Poly& p, const std::vector<T>& phi, const T& zero)
{
  const auto a = power_residues(p);
  const std::size_t period = a.size() - 1;
  const std::size_t d = static_cast<std::size_t>(p.degree());
  std::vector<T> folded(period + 1, zero);
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const std::size_t slot = i == 0 ? 0 : (i - 1) % period + 1;
    folded[slot] = folded[slot] + phi[i];
  }
  std::vector<T> out(d, zero);
  for (std::size_t j = 0; j <= period; ++j)
    for (std::size_t l = 0; l < d; ++l)
      if (a[j][l] != 0) out[l] = out[l] + folded[j].scaled(a[j][l]);
  return out;
}

std::vector<Elem> root_coefficients_periodic(const Poly& p, const FiniteField* field,
                                             const std::vector<Elem>& phi);

// Given f on the units of A/𝔭A, returns c_e (indexed by the character
// exponent k = 0..q^d-2) with f(a) = sum_e c_e a_t^e.  `units` and `values`
// are parallel; `zeta` is ζ_1.
template <class T>
std::vector<T> lagrange_unit_interpolation(const Poly& p, const FiniteField* field, Elem zeta,
                                           const std::vector<Poly>& units,
                                           const std::vector<T>& values, const T& zero);

std::vector<Elem> lagrange_unit_interpolation(const Poly& p, const FiniteField* field, Elem zeta,
                                              const std::vector<Poly>& units,
                                              const std::vector<Elem>& values);

namespace detail {
// Validates that `units` lists every unit residue of A/𝔭A exactly once and
// returns the values a(ζ).
std::vector<Elem> unit_values(const Poly& p, const FiniteField* field, Elem zeta,
                              const std::vector<Poly>& units);
}  // namespace detail

template <class T>
std::vector<T> lagrange_unit_interpolation(const Poly& p, const FiniteField* field, Elem zeta,
                                           const std::vector<Poly>& units,
                                           const std::vector<T>& values, const T& zero)
{
  if (values.size() != units.size())
    throw std::invalid_argument("lagrange_unit_interpolation: table size mismatch");
  const auto at = detail::unit_values(p, field, zeta, units);
  // the sum over F_{q^d}^x of x^m is -1 when (q^d - 1) | m and 0 otherwise
  std::vector<T> out(at.size(), zero);
  for (std::size_t k = 0; k < at.size(); ++k)
    for (std::size_t u = 0; u < at.size(); ++u)
      out[k] = out[k] + values[u].scaled(field->neg(field->pow(field->inv(at[u]), k)));
  return out;
}

}  // namespace carlitz
