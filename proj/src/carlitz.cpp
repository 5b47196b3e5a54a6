#include <carlitz/carlitz.hpp>
#include <carlitz/factor.hpp>

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace carlitz {

TwistedPoly::TwistedPoly(unsigned q, std::vector<Poly> coeffs) : q_(q), c_(std::move(coeffs))
{
  trim();
}

void TwistedPoly::trim()
{
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

TwistedPoly TwistedPoly::operator+(const TwistedPoly& o) const
{
  std::vector<Poly> c = c_;
  if (o.c_.size() > c.size()) c.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return TwistedPoly(q_, std::move(c));
}

TwistedPoly TwistedPoly::compose(const TwistedPoly& o) const
{
  if (c_.empty() || o.c_.empty()) return TwistedPoly(q_, {});
  std::vector<Poly> c(c_.size() + o.c_.size() - 1);
  std::uint64_t qi = 1;
  for (std::size_t i = 0; i < c_.size(); ++i, qi *= q_) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      // τ^i b = b^{q^i} τ^i, and b^{q^i} = b(θ^{q^i}) since b has F_q coefficients
      c[i + j] += c_[i] * o.c_[j].compose_power(qi);
    }
  }
  return TwistedPoly(q_, std::move(c));
}

std::string TwistedPoly::format() const
{
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    std::string coef = c_[i].format();
    std::string term;
    if (i == 0) {
      term = coef;
    } else {
      if (coef != "1") term = (c_[i].size() > 1 && coef.find('+') != std::string::npos ? "(" + coef + ")" : coef) + "*";
      term += "tau";
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (!out.empty()) out += "+";
    out += term;
  }
  return out;
}

TwistedPoly carlitz_coeffs(const Poly& a, unsigned q)
{
  const FiniteField* F = a.field();
  if (a.is_zero()) return TwistedPoly(q, {});
  const TwistedPoly ctheta(q, {Poly::variable(F), Poly::constant(F, 1)});
  const std::size_t m = a.size() - 1;
  TwistedPoly r(q, {Poly::constant(F, a.coeff(m))});
  for (std::size_t i = m; i-- > 0;)
    r = ctheta.compose(r) + TwistedPoly(q, {Poly::constant(F, a.coeff(i))});
  return r;
}

XPoly xpoly_trim(XPoly f)
{
  while (!f.empty() && f.back().is_zero()) f.pop_back();
  return f;
}

XPoly xpoly_mul(const XPoly& a, const XPoly& b)
{
  if (a.empty() || b.empty()) return {};
  XPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) c[i + j] += a[i] * b[j];
  }
  return xpoly_trim(std::move(c));
}

XPoly xpoly_exact_div(const XPoly& a, const XPoly& b)
{
  if (b.empty() || !b.back().is_one()) throw std::invalid_argument("xpoly_exact_div: divisor must be monic");
  XPoly r = xpoly_trim(a);
  if (r.size() < b.size()) {
    if (!r.empty()) throw std::logic_error("xpoly_exact_div: nonzero remainder");
    return {};
  }
  const std::size_t db = b.size() - 1;
  XPoly quot(r.size() - db);
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k].is_zero()) continue;
    const Poly c = r[k];
    quot[k - db] = c;
    for (std::size_t i = 0; i <= db; ++i)
      if (!b[i].is_zero()) r[k - db + i] -= c * b[i];
  }
  for (std::size_t i = 0; i < db; ++i)
    if (!r[i].is_zero()) throw std::logic_error("xpoly_exact_div: nonzero remainder");
  return xpoly_trim(std::move(quot));
}

std::string xpoly_format(const XPoly& f, const char* var)
{
  if (f.empty()) return "0";
  std::string out;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i].is_zero()) continue;
    std::string coef = f[i].format();
    std::string term;
    if (i == 0) {
      term = coef;
    } else {
      if (coef != "1") term = (coef.find('+') != std::string::npos ? "(" + coef + ")" : coef) + "*";
      term += var;
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (!out.empty()) out += "+";
    out += term;
  }
  return out;
}

XPoly carlitz_xpoly(const Poly& a, unsigned q)
{
  const TwistedPoly t = carlitz_coeffs(a, q);
  if (t.coeffs().empty()) return {};
  std::uint64_t top = 1;
  for (int i = 0; i < t.tau_degree(); ++i) top *= q;
  XPoly f(top + 1);
  std::uint64_t e = 1;
  for (std::size_t i = 0; i < t.coeffs().size(); ++i, e *= q) f[e] = t.coeffs()[i];
  return xpoly_trim(std::move(f));
}

void require_prime(const Poly& p)
{
  if (p.degree() < 1) throw std::invalid_argument("prime must have positive degree");
  if (!p.is_monic()) throw std::invalid_argument("prime must be monic: " + p.format());
  const Factorization f = factor_poly(p);
  if (f.factors.size() != 1 || f.factors[0].multiplicity != 1)
    throw std::invalid_argument("polynomial is reducible: " + p.format());
}

CyclotomicPtr carlitz_cyclotomic(const Poly& p, unsigned q, unsigned n)
{
  using Key = std::tuple<unsigned, std::vector<Elem>, unsigned>;
  static std::mutex mu;
  static std::map<Key, CyclotomicPtr> cache;
  const Key key{q, p.coeffs(), n};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  require_prime(p);
  const Poly pn = pow(p, n);
  const XPoly top = carlitz_xpoly(pn * p, q);
  const XPoly bottom = carlitz_xpoly(pn, q);
  auto data = std::make_shared<CyclotomicData>();
  data->q = q;
  data->p = p;
  data->n = n;
  data->phi = xpoly_exact_div(top, bottom);
  data->degree = data->phi.size() - 1;
  std::uint64_t Q = 1;
  for (int i = 0; i < p.degree(); ++i) Q *= q;
  std::uint64_t expect = Q - 1;
  for (unsigned i = 0; i < n; ++i) expect *= Q;
  if (data->degree != expect) throw std::logic_error("cyclotomic polynomial has unexpected degree");
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(data)).first->second;
}

std::vector<Poly> residue_enum(const Poly& p, unsigned n, bool units_only)
{
  const FiniteField* F = p.field();
  const std::size_t len = static_cast<std::size_t>(p.degree()) * (n + 1);
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < len; ++i) count *= F->size();
  std::vector<Poly> out;
  out.reserve(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly a = poly_from_index(F, idx, len);
    if (units_only && (a % p).is_zero()) continue;
    out.push_back(std::move(a));
  }
  return out;
}

Poly carlitz_D(unsigned j, const FiniteField* fq)
{
  const unsigned q = fq->size();
  std::uint64_t qj = 1;
  for (unsigned i = 0; i < j; ++i) qj *= q;
  Poly r = Poly::constant(fq, 1);
  std::uint64_t qi = 1;
  for (unsigned i = 0; i < j; ++i, qi *= q)
    r *= Poly::monomial(fq, 1, qj) - Poly::monomial(fq, 1, qi);
  return r;
}

}  // namespace carlitz
