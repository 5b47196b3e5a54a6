#include <carlitz/omega.hpp>

#include <map>
#include <mutex>
#include <stdexcept>

namespace carlitz {

namespace {

using BiPoly = std::vector<Poly>;  // ascending in T, coefficients in A

BiPoly bi_mulmod(const BiPoly& x, const BiPoly& y, const Poly& p)
{
  const std::size_t d = static_cast<std::size_t>(p.degree());
  const FiniteField* F = p.field();
  std::vector<Poly> prod(2 * d - 1, Poly(F));
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (!y[j].is_zero()) prod[i + j] += x[i] * y[j];
  }
  // T^d = -sum_{i<d} a_i T^i
  for (std::size_t k = prod.size(); k-- > d;) {
    if (prod[k].is_zero()) continue;
    const Poly c = prod[k];
    for (std::size_t i = 0; i < d; ++i)
      if (p.coeff(i) != 0) prod[k - d + i] -= c.scaled(p.coeff(i));
  }
  prod.resize(d);
  return prod;
}

}  // namespace

QPoly q_poly_closed_form(const Poly& p)
{
  const std::size_t d = static_cast<std::size_t>(p.degree());
  QPoly out;
  out.n = 0;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Elem> c;
    for (std::size_t j = i + 1; j <= d; ++j) c.push_back(p.coeff(j));
    out.coeffs.emplace_back(p.field(), std::move(c));
  }
  return out;
}

QPoly q_poly(const Poly& p, unsigned n)
{
  const QPoly base = q_poly_closed_form(p);
  BiPoly r = base.coeffs;
  for (unsigned k = 0; k < n; ++k) r = bi_mulmod(r, base.coeffs, p);
  return QPoly{n, std::move(r)};
}

QPoly q_poly_by_interpolation(const Poly& p, unsigned n)
{
  const unsigned q = p.field()->size();
  const unsigned d = static_cast<unsigned>(p.degree());
  const TowerPtr tower = make_tower(q, d);
  const FiniteField* K = tower->fqd.get();
  const std::vector<Elem> zetas = roots(p.rebind(K));
  const Poly top = pow(p.rebind(K), n + 1);
  std::vector<Poly> values;
  for (Elem z : zetas) {
    const Poly lin(K, {K->neg(z), 1});
    values.push_back(exact_div(top, pow(lin, n + 1)));
  }
  QPoly out;
  out.n = n;
  out.coeffs = root_coefficients(K, zetas, values);
  for (auto& c : out.coeffs) {
    bool in_base = true;
    for (Elem e : c.coeffs())
      if (e >= q) in_base = false;
    if (in_base) c = c.rebind(p.field());
  }
  return out;
}

std::vector<TorsionElem> torsion_coeffs(const TorsionField& field)
{
  const QPoly qp = q_poly(field.prime(), field.level());
  std::vector<TorsionElem> out;
  for (const auto& c : qp.coeffs) out.push_back(carlitz_eval(c, field.x()));
  return out;
}

// ---------------------------------------------------------------------------

OmegaTable::OmegaTable(const TorsionField& field) : field_(&field)
{
  const unsigned n = field.level();
  const unsigned d = field.d();
  const FiniteField* K = field.fqd();
  for (unsigned j = 0; j <= n; ++j) {
    const TorsionField& Fj = field.at_level(j);
    qpolys_.push_back(q_poly(field.prime(), j));
    std::vector<TorsionElem> cj;
    for (const auto& c : torsion_coeffs(Fj)) cj.push_back(tower_embed(c, field));
    std::vector<TorsionElem> wj;
    for (unsigned k = 1; k <= d; ++k) {
      const Elem z = field.zeta(k);
      TorsionElem acc = field.zero();
      for (unsigned i = 0; i < d; ++i) acc += cj[i].scaled(K->pow(z, i));
      wj.push_back(std::move(acc));
    }
    coeffs_.push_back(std::move(cj));
    omega_.push_back(std::move(wj));
  }
}

const TorsionElem& OmegaTable::omega(unsigned j, unsigned k) const
{
  if (j > level()) throw std::out_of_range("derivative order exceeds the level");
  if (k == 0) throw std::out_of_range("root index is 1-based");
  return omega_[j][(k - 1) % field_->d()];
}

const TorsionElem& OmegaTable::coeff(unsigned j, unsigned i) const
{
  if (j > level() || i >= field_->d()) throw std::out_of_range("torsion coefficient index");
  return coeffs_[j][i];
}

const OmegaTable& omega_table(const TorsionField& field)
{
  static std::mutex mu;
  static std::map<const TorsionField*, std::unique_ptr<OmegaTable>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(&field);
    if (it != cache.end()) return *it->second;
  }
  auto table = std::make_unique<OmegaTable>(field);
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(&field, std::move(table));
  return *it->second;
}

TorsionElem omega_value(const TorsionField& field, unsigned j, unsigned k)
{
  if (k == 0 || k > field.d()) throw std::out_of_range("root index out of range");
  return omega_table(field).omega(j, k);
}

// ---------------------------------------------------------------------------

UTToeplitz::UTToeplitz(const FiniteField* field, std::vector<Elem> row)
    : field_(field), row_(std::move(row))
{
}

UTToeplitz UTToeplitz::identity(const FiniteField* field, std::size_t size)
{
  std::vector<Elem> r(size, 0);
  if (size) r[0] = 1;
  return UTToeplitz(field, std::move(r));
}

UTToeplitz UTToeplitz::operator*(const UTToeplitz& o) const
{
  if (size() != o.size()) throw std::invalid_argument("Toeplitz size mismatch");
  std::vector<Elem> r(size(), 0);
  for (std::size_t k = 0; k < size(); ++k)
    for (std::size_t i = 0; i <= k; ++i) r[k] = field_->add(r[k], field_->mul(row_[i], o.row_[k - i]));
  return UTToeplitz(field_, std::move(r));
}

bool UTToeplitz::is_identity() const { return *this == identity(field_, size()); }

UTToeplitz UTToeplitz::inverse() const
{
  if (!invertible()) throw std::domain_error("Toeplitz matrix is singular");
  const Elem inv0 = field_->inv(row_[0]);
  std::vector<Elem> s(size(), 0);
  s[0] = inv0;
  for (std::size_t k = 1; k < size(); ++k) {
    Elem acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc = field_->add(acc, field_->mul(row_[i], s[k - i]));
    s[k] = field_->neg(field_->mul(inv0, acc));
  }
  return UTToeplitz(field_, std::move(s));
}

UTToeplitz rho_matrix(const Poly& a, const FiniteField* fqd, Elem zeta, std::size_t size)
{
  if (size == 0) throw std::invalid_argument("rho matrix of size 0");
  return UTToeplitz(fqd, hyper_expand(a.rebind(fqd), fqd, zeta, size - 1));
}

// ---------------------------------------------------------------------------

TorsionElem digit_monomial(const OmegaTable& table, const DigitExponents& e)
{
  const TorsionField& F = table.field();
  if (e.size() != table.level() + 1) throw std::invalid_argument("exponent array must have n+1 rows");
  TorsionElem r = F.one();
  for (unsigned j = 0; j < e.size(); ++j) {
    if (e[j].size() != F.d()) throw std::invalid_argument("exponent row must have d entries");
    for (unsigned i = 0; i < F.d(); ++i) {
      if (e[j][i] >= F.q()) throw std::invalid_argument("digit exponent out of range");
      if (e[j][i]) r *= table.omega(j, i + 1).pow(e[j][i]);
    }
  }
  return r;
}

std::vector<DigitExponents> digit_basis_exponents(const TorsionField& field)
{
  const auto bottom = MultiIndex::enumerate(field.q(), field.d(), false);
  const auto upper = MultiIndex::enumerate(field.q(), field.d(), true);
  std::vector<DigitExponents> out;
  for (const auto& e0 : bottom) out.push_back({e0.digits()});
  for (unsigned j = 1; j <= field.level(); ++j) {
    std::vector<DigitExponents> next;
    for (const auto& ej : upper)
      for (const auto& prefix : out) {
        DigitExponents e = prefix;
        e.push_back(ej.digits());
        next.push_back(std::move(e));
      }
    out = std::move(next);
  }
  return out;
}

std::string format_exponents(const DigitExponents& e)
{
  std::string s;
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (j) s += " ";
    s += "e" + std::to_string(j) + "=(";
    for (std::size_t i = 0; i < e[j].size(); ++i) {
      if (i) s += ",";
      s += std::to_string(e[j][i]);
    }
    s += ")";
  }
  return s;
}

TorsionElem eta(const OmegaTable& table)
{
  const TorsionField& F = table.field();
  TorsionElem r = F.one();
  for (unsigned k = 1; k <= table.level(); ++k)
    for (unsigned i = 1; i <= F.d(); ++i) r *= table.omega(k, i).pow(F.q() - 1);
  return r;
}

// ---------------------------------------------------------------------------

namespace {

std::string where(unsigned j, unsigned k) { return "j=" + std::to_string(j) + " k=" + std::to_string(k); }

Poly zeta_minus_theta(const FiniteField* K, Elem z) { return Poly(K, {z, K->neg(1)}); }

}  // namespace

CheckResult check_torsion_coeffs(const OmegaTable& table)
{
  const TorsionField& F = table.field();
  CheckResult res("torsion coefficients lie in C[p^{j+1}] and not in C[p^j]", true);
  std::size_t count = 0;
  for (unsigned j = 0; j <= table.level(); ++j) {
    const Poly pj = pow(F.prime(), j);
    for (unsigned i = 0; i < F.d(); ++i) {
      const TorsionElem& c = table.coeff(j, i);
      if (!carlitz_eval(pj * F.prime(), c).is_zero()) res.fail("C_{p^{j+1}}(c) != 0 at j=" + std::to_string(j) + " i=" + std::to_string(i));
      if (carlitz_eval(pj, c).is_zero()) res.fail("C_{p^j}(c) = 0 at j=" + std::to_string(j) + " i=" + std::to_string(i));
      ++count;
    }
  }
  if (res.pass) res.detail = std::to_string(count) + " coefficients";
  return res;
}

CheckResult check_galois_action(const OmegaTable& table)
{
  const TorsionField& F = table.field();
  const FiniteField* K = F.fqd();
  CheckResult res("sigma_a(omega^(j)(zeta)) = sum_l a^(l)(zeta) omega^(j-l)(zeta)", true);
  const auto units = residue_enum(F.prime(), F.level(), true);
  std::size_t count = 0;
  for (const auto& a : units) {
    const Substitution& s = F.sigma(a);
    for (unsigned k = 1; k <= F.d(); ++k) {
      const auto h = hyper_expand(a.rebind(K), K, F.zeta(k), table.level());
      for (unsigned j = 0; j <= table.level(); ++j) {
        const TorsionElem lhs = s.apply(table.omega(j, k));
        TorsionElem rhs = F.zero();
        for (unsigned l = 0; l <= j; ++l) rhs += table.omega(j - l, k).scaled(h[l]);
        if (lhs != rhs) res.fail("a=" + a.format() + " " + where(j, k));
        ++count;
      }
    }
  }
  if (res.pass) res.detail = std::to_string(units.size()) + " units, " + std::to_string(count) + " identities";
  return res;
}

CheckResult check_frobenius_shift(const OmegaTable& table)
{
  const TorsionField& F = table.field();
  CheckResult res("F(omega^(j)(zeta_k)) = omega^(j)(zeta_{k+1})", true);
  for (unsigned j = 0; j <= table.level(); ++j)
    for (unsigned k = 1; k <= F.d(); ++k)
      if (table.omega(j, k).frobenius_const(1) != table.omega(j, k + 1)) res.fail(where(j, k));
  return res;
}

CheckResult check_recursion(const OmegaTable& table)
{
  const TorsionField& F = table.field();
  const FiniteField* K = F.fqd();
  CheckResult res("omega^(j)(zeta)^q = (zeta^q - theta) omega^(j)(zeta^q) + omega^(j-1)(zeta^q)", true);
  for (unsigned k = 1; k <= F.d(); ++k) {
    const Poly factor = zeta_minus_theta(K, F.zeta(k + 1));
    for (unsigned j = 0; j <= table.level(); ++j) {
      const TorsionElem lhs = table.omega(j, k).pow(F.q());
      TorsionElem rhs = table.omega(j, k + 1).scaled(factor);
      if (j > 0) rhs += table.omega(j - 1, k + 1);
      if (lhs != rhs) res.fail(where(j, k));
    }
  }
  return res;
}

CheckResult check_frobenius_not_qpower(const OmegaTable& table)
{
  CheckResult res("F(omega^(n)(zeta)) != omega^(n)(zeta)^q", true);
  const unsigned n = table.level();
  if (n == 0) {
    res.detail = "not applicable at level 0";
    return res;
  }
  const TorsionElem& w = table.omega(n, 1);
  if (w.frobenius_const(1) == w.pow(table.field().q())) res.fail("the two elements coincide");
  return res;
}

CheckResult check_rho_multiplicative(const TorsionField& F)
{
  CheckResult res("rho(a) rho(b) = rho(ab) and rho is faithful", true);
  const auto units = residue_enum(F.prime(), F.level(), true);
  const Poly modulus = pow(F.prime(), F.level() + 1);
  const std::size_t size = F.level() + 1;
  std::vector<UTToeplitz> rho;
  for (const auto& a : units) rho.push_back(rho_matrix(a, F.fqd(), F.zeta(1), size));
  for (std::size_t u = 0; u < units.size(); ++u) {
    if (rho[u].is_identity() && !units[u].is_one()) res.fail("rho(" + units[u].format() + ") = I");
    for (std::size_t v = 0; v < units.size(); ++v) {
      const Poly ab = (units[u] * units[v]) % modulus;
      if (rho[u] * rho[v] != rho_matrix(ab, F.fqd(), F.zeta(1), size))
        res.fail("a=" + units[u].format() + " b=" + units[v].format());
    }
  }
  return res;
}

CheckResult check_tower_consistency(const OmegaTable& table)
{
  const TorsionField& F = table.field();
  CheckResult res("embedded c_(j),i = C_{q_(j),i p^{n-j}}(x_n)", true);
  for (unsigned j = 0; j < table.level(); ++j) {
    const Poly shift = pow(F.prime(), table.level() - j);
    for (unsigned i = 0; i < F.d(); ++i)
      if (table.coeff(j, i) != carlitz_eval(table.qpoly(j).coeffs[i] * shift, F.x()))
        res.fail("j=" + std::to_string(j) + " i=" + std::to_string(i));
  }
  return res;
}

CheckResult check_generalized_eigen(const OmegaTable& table, std::size_t* escalations)
{
  const TorsionField& F = table.field();
  const FiniteField* K = F.fqd();
  CheckResult res("(sigma_a - a(zeta)^l)^m kills each digit monomial, m = 1 + sum j e_{j,i}", true);
  const auto units = residue_enum(F.prime(), F.level(), true);
  const auto basis = digit_basis_exponents(F);
  const std::uint64_t order = F.norm_p() - 1;
  std::size_t escalated = 0;
  for (const auto& e : basis) {
    const TorsionElem y = digit_monomial(table, e);
    std::uint64_t l = 0;
    std::uint64_t m = 1;
    for (unsigned j = 0; j < e.size(); ++j) {
      std::uint64_t w = 1;
      for (unsigned i = 0; i < e[j].size(); ++i, w *= F.q()) {
        l += e[j][i] * w;
        m += static_cast<std::uint64_t>(j) * e[j][i];
      }
    }
    l %= order;
    for (const auto& a : units) {
      const Substitution& s = F.sigma(a);
      const Elem lambda = K->pow(a.rebind(K).eval(F.zeta(1)), l);
      TorsionElem z = y;
      std::uint64_t steps = 0;
      for (; steps < m && !z.is_zero(); ++steps) z = s.apply(z) - z.scaled(lambda);
      if (z.is_zero()) continue;
      ++escalated;
      for (; steps < F.degree() && !z.is_zero(); ++steps) z = s.apply(z) - z.scaled(lambda);
      if (!z.is_zero()) res.fail(format_exponents(e) + " a=" + a.format() + " survives m=D");
    }
  }
  if (escalations) *escalations = escalated;
  if (res.pass)
    res.detail = std::to_string(basis.size()) + " monomials x " + std::to_string(units.size()) +
                 " units, escalations=" + std::to_string(escalated);
  return res;
}

CheckResult check_q_poly(const Poly& p, unsigned n)
{
  CheckResult res("q_(n) congruence route equals the root interpolation", true);
  const QPoly a = q_poly(p, n);
  const QPoly b = q_poly_by_interpolation(p, n);
  if (a.coeffs.size() != b.coeffs.size()) {
    res.fail("length mismatch");
    return res;
  }
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    if (a.coeffs[i].coeffs() != b.coeffs[i].coeffs()) res.fail("coefficient " + std::to_string(i));
  if (n == 0 && !(a == q_poly_closed_form(p))) res.fail("closed form at n = 0");
  return res;
}

}  // namespace carlitz
