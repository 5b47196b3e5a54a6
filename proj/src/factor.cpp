#include <carlitz/factor.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace carlitz {

namespace {

Poly derivative(const Poly& f)
{
  const FiniteField* F = f.field();
  std::vector<Elem> c;
  for (std::size_t k = 1; k < f.size(); ++k) {
    Elem s = 0;
    for (std::size_t i = 0; i < k % F->characteristic(); ++i) s = F->add(s, f.coeff(k));
    c.push_back(s);
  }
  return Poly(F, std::move(c));
}

// f(x) = g(x^p); returns g with coefficients replaced by their p-th roots.
Poly pth_root(const Poly& f)
{
  const FiniteField* F = f.field();
  const unsigned p = F->characteristic();
  const std::uint64_t root_exp = F->size() / p;  // c^(Q/p) is the p-th root of c
  std::vector<Elem> c;
  for (std::size_t k = 0; k < f.size(); k += p) c.push_back(F->pow(f.coeff(k), root_exp));
  return Poly(F, std::move(c));
}

void squarefree(const Poly& f, unsigned scale, std::vector<std::pair<Poly, unsigned>>& out)
{
  if (f.degree() <= 0) return;
  Poly c = gcd(f, derivative(f));
  Poly w = exact_div(f, c);
  unsigned i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly fac = exact_div(w, y);
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i * scale);
    w = y;
    c = exact_div(c, y);
    ++i;
  }
  if (c.degree() > 0) squarefree(pth_root(c), scale * f.field()->characteristic(), out);
}

Poly frobenius_power(const Poly& a, std::uint64_t Q, const Poly& m) { return powmod(a, Q, m); }

Poly random_poly(const FiniteField* F, std::size_t len, std::mt19937_64& rng)
{
  std::uniform_int_distribution<Elem> dist(0, F->size() - 1);
  std::vector<Elem> c(len);
  for (auto& x : c) x = dist(rng);
  return Poly(F, std::move(c));
}

// g is squarefree, monic, a product of irreducibles of degree k.
void equal_degree(const Poly& g, std::size_t k, std::mt19937_64& rng, std::vector<Poly>& out)
{
  const FiniteField* F = g.field();
  if (static_cast<std::size_t>(g.degree()) == k) {
    out.push_back(g);
    return;
  }
  const std::uint64_t Q = F->size();
  const unsigned p = F->characteristic();
  for (;;) {
    Poly a = random_poly(F, static_cast<std::size_t>(g.degree()), rng);
    if (a.degree() <= 0) continue;
    Poly b;
    if (p == 2) {
      // absolute trace from F_{Q^k} to F_2
      unsigned s = 0;
      for (std::uint64_t t = Q; t > 1; t >>= 1) ++s;
      Poly term = a % g;
      b = term;
      for (std::size_t i = 1; i < s * k; ++i) {
        term = mulmod(term, term, g);
        b += term;
      }
    } else {
      // a^((Q^k - 1)/2) = (a^(1 + Q + ... + Q^(k-1)))^((Q - 1)/2)
      Poly norm = a % g;
      Poly fr = norm;
      for (std::size_t i = 1; i < k; ++i) {
        fr = frobenius_power(fr, Q, g);
        norm = mulmod(norm, fr, g);
      }
      b = powmod(norm, (Q - 1) / 2, g) - Poly::constant(F, 1);
    }
    Poly h = gcd(b, g);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree(h, k, rng, out);
      equal_degree(exact_div(g, h).monic(), k, rng, out);
      return;
    }
  }
}

bool poly_less(const Poly& a, const Poly& b)
{
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.size(); i-- > 0;)
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  return false;
}

}  // namespace

Factorization factor_poly(const Poly& g, std::uint64_t seed)
{
  if (g.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
  const FiniteField* F = g.field();
  Factorization res;
  res.unit = g.lead();
  res.seed = seed;
  std::mt19937_64 rng(seed);

  std::vector<std::pair<Poly, unsigned>> sqf;
  squarefree(g.monic(), 1, sqf);

  std::map<std::vector<Elem>, Factor> merged;
  const Poly x = Poly::variable(F);
  const std::uint64_t Q = F->size();
  for (auto& [f, mult] : sqf) {
    Poly rest = f;
    Poly h = x;
    for (std::size_t k = 1; rest.degree() > 0; ++k) {
      if (2 * k > static_cast<std::size_t>(rest.degree())) {
        std::vector<Poly> one{rest.monic()};
        for (auto& r : one) {
          auto& slot = merged[r.coeffs()];
          slot.poly = r;
          slot.multiplicity += mult;
        }
        break;
      }
      h = frobenius_power(h, Q, rest);
      Poly part = gcd(h - x, rest);
      if (part.degree() > 0) {
        std::vector<Poly> pieces;
        equal_degree(part, k, rng, pieces);
        for (auto& r : pieces) {
          auto& slot = merged[r.coeffs()];
          slot.poly = r;
          slot.multiplicity += mult;
        }
        rest = exact_div(rest, part);
        h = h % rest;
      }
    }
  }
  for (auto& [key, fac] : merged) res.factors.push_back(fac);
  std::sort(res.factors.begin(), res.factors.end(),
            [](const Factor& a, const Factor& b) { return poly_less(a.poly, b.poly); });
  return res;
}

Poly expand(const Factorization& f, const FiniteField* field)
{
  Poly r = Poly::constant(field, f.unit);
  for (const auto& fac : f.factors) r *= pow(fac.poly, fac.multiplicity);
  return r;
}

}  // namespace carlitz
