#pragma once

#include <carlitz/torsion.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace test {

inline const carlitz::FiniteField* fq(unsigned q) { return carlitz::base_field(q).get(); }

inline carlitz::Poly P(unsigned q, const std::string& text) { return carlitz::parse_poly(fq(q), text); }

inline const carlitz::TorsionField& field(unsigned q, const std::string& p, unsigned n)
{
  return carlitz::TorsionField::make(q, p, n);
}

inline carlitz::Poly random_poly(std::mt19937_64& rng, const carlitz::FiniteField* f, std::size_t len)
{
  std::vector<carlitz::Elem> c(len);
  for (auto& e : c) e = static_cast<carlitz::Elem>(rng() % f->size());
  return carlitz::Poly(f, c);
}

// Random element of K_n(ζ) with integral coordinates of θ-degree < deg.
inline carlitz::TorsionElem random_elem(std::mt19937_64& rng, const carlitz::TorsionField& F, std::size_t deg)
{
  std::vector<carlitz::Poly> num;
  for (std::size_t k = 0; k < F.degree(); ++k) num.push_back(random_poly(rng, F.fqd(), deg));
  return carlitz::TorsionElem(F, num, carlitz::Poly::constant(F.fqd(), 1));
}

}  // namespace test
