#include <carlitz/valuation.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace carlitz {

RationalVal::RationalVal(std::int64_t num, std::int64_t den) : num_(num), den_(den)
{
  if (den_ == 0) throw std::domain_error("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

RationalVal RationalVal::infinity()
{
  RationalVal r;
  r.inf_ = true;
  return r;
}

RationalVal RationalVal::operator+(const RationalVal& o) const
{
  if (inf_ || o.inf_) return infinity();
  return RationalVal(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalVal RationalVal::operator-(const RationalVal& o) const
{
  if (o.inf_) throw std::domain_error("subtracting an infinite valuation");
  if (inf_) return infinity();
  return RationalVal(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalVal RationalVal::operator*(const RationalVal& o) const
{
  if (inf_ || o.inf_) return infinity();
  return RationalVal(num_ * o.num_, den_ * o.den_);
}

RationalVal RationalVal::operator/(const RationalVal& o) const
{
  if (inf_ || o.inf_ || o.num_ == 0) throw std::domain_error("invalid valuation division");
  return RationalVal(num_ * o.den_, den_ * o.num_);
}

bool RationalVal::operator==(const RationalVal& o) const
{
  if (inf_ || o.inf_) return inf_ == o.inf_;
  return num_ == o.num_ && den_ == o.den_;
}

bool RationalVal::operator<(const RationalVal& o) const
{
  if (inf_) return false;
  if (o.inf_) return true;
  return num_ * o.den_ < o.num_ * den_;
}

std::string RationalVal::format() const
{
  if (inf_) return "inf";
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

// ---------------------------------------------------------------------------

RationalVal val_kzeta(const KZetaFun& f, Elem zeta)
{
  if (f.is_zero()) return RationalVal::infinity();
  const auto a = static_cast<std::int64_t>(order_at(f.num(), zeta));
  const auto b = static_cast<std::int64_t>(order_at(f.den(), zeta));
  return RationalVal(a - b);
}

namespace {

KZetaFun over_fqd(const KZetaFun& f, const FiniteField* K)
{
  return KZetaFun(f.num().rebind(K), f.den().rebind(K));
}

}  // namespace

RationalVal val_kzeta(const KZetaFun& f, const TorsionField& field, unsigned i)
{
  return val_kzeta(over_fqd(f, field.fqd()), field.zeta(i));
}

RationalVal val_kn(const TorsionElem& y, unsigned i)
{
  if (y.is_zero()) return RationalVal::infinity();
  const TorsionField& F = y.field();
  const RationalVal v = val_kzeta(norm_to_kzeta(y), F, i);
  return v / RationalVal(static_cast<std::int64_t>(F.degree()));
}

std::vector<NewtonSlope> newton_polygon(const std::vector<RationalVal>& vals)
{
  std::vector<std::pair<std::int64_t, RationalVal>> pts;
  for (std::size_t i = 0; i < vals.size(); ++i)
    if (!vals[i].is_infinite()) pts.emplace_back(static_cast<std::int64_t>(i), vals[i]);
  if (pts.empty()) throw std::invalid_argument("Newton polygon of the zero polynomial");
  // lower hull by monotone chain
  std::vector<std::pair<std::int64_t, RationalVal>> hull;
  auto cross_below = [](const auto& o, const auto& a, const auto& b) {
    // true when a lies on or above the segment o-b
    const RationalVal lhs = (a.second - o.second) * RationalVal(b.first - o.first);
    const RationalVal rhs = (b.second - o.second) * RationalVal(a.first - o.first);
    return rhs <= lhs;
  };
  for (const auto& p : pts) {
    while (hull.size() >= 2 && cross_below(hull[hull.size() - 2], hull.back(), p)) hull.pop_back();
    hull.push_back(p);
  }
  std::vector<NewtonSlope> out;
  for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
    const std::int64_t dx = hull[s + 1].first - hull[s].first;
    const RationalVal slope = (hull[s].second - hull[s + 1].second) / RationalVal(dx);
    out.push_back({slope, dx});
  }
  std::reverse(out.begin(), out.end());
  return out;
}

RationalVal expected_omega_valuation(const TorsionField& field, unsigned order, unsigned j)
{
  std::int64_t qj = 1;
  for (unsigned k = 0; k < j; ++k) qj *= field.q();
  std::int64_t den = static_cast<std::int64_t>(field.norm_p()) - 1;
  for (unsigned k = 0; k < order; ++k) den *= static_cast<std::int64_t>(field.norm_p());
  return RationalVal(qj, den);
}

std::vector<NewtonSlope> newton_polygon(const std::vector<Poly>& coeffs, Elem zeta)
{
  std::vector<RationalVal> vals;
  for (const Poly& c : coeffs)
    vals.push_back(c.is_zero() ? RationalVal::infinity()
                               : RationalVal(static_cast<std::int64_t>(order_at(c, zeta))));
  return newton_polygon(vals);
}

std::vector<ValuationEntry> valuation_table(const TorsionField& field)
{
  const OmegaTable& table = omega_table(field);
  std::vector<ValuationEntry> out;
  for (unsigned m = 0; m <= field.level(); ++m)
    for (unsigned i = 1; i <= field.d(); ++i)
      for (unsigned j = 0; j < field.d(); ++j) {
        ValuationEntry e;
        e.n = m;
        e.i = i;
        e.j = j;
        e.value = val_kn(table.omega(m, i + j), i);
        e.expected = expected_omega_valuation(field, m, j);
        out.push_back(e);
      }
  return out;
}

CheckResult check_valuations(const TorsionField& field)
{
  CheckResult res("v_i(omega^(n)(zeta_i^{q^j})) = q^j / (|p|^n (|p|-1))", true);
  const auto table = valuation_table(field);
  for (const auto& e : table)
    if (e.value != e.expected)
      res.fail("n=" + std::to_string(e.n) + " i=" + std::to_string(e.i) + " j=" + std::to_string(e.j) + " got " + e.value.format() +
               " expected " + e.expected.format());
  if (res.pass) res.detail = std::to_string(table.size()) + " entries";
  return res;
}

// ---------------------------------------------------------------------------

std::vector<Poly> beta_hyper(const TorsionField& field, Elem zp, unsigned n)
{
  // β(t) as a polynomial in t with coefficients in A = F_q[θ]
  const FiniteField* K = field.fqd();
  std::vector<Poly> beta{Poly::constant(K, 1)};
  std::uint64_t qh = 1;
  for (unsigned h = 0; h < field.d(); ++h, qh *= field.q()) {
    const Poly root = Poly::monomial(K, 1, qh);
    std::vector<Poly> next(beta.size() + 1, Poly(K));
    for (std::size_t k = 0; k < beta.size(); ++k) {
      next[k + 1] += beta[k];
      next[k] -= beta[k] * root;
    }
    beta = std::move(next);
  }
  const unsigned p = K->characteristic();
  std::vector<Poly> out;
  for (unsigned l = 0; l <= n; ++l) {
    Poly acc(K);
    for (std::size_t k = l; k < beta.size(); ++k) {
      const unsigned b = binomial_mod_p(k, l, p);
      if (b == 0) continue;
      acc += beta[k].scaled(K->mul(K->from_int(b), K->pow(zp, k - l)));
    }
    out.push_back(std::move(acc));
  }
  return out;
}

MinPolyReport min_poly_check(const TorsionField& field, unsigned i, unsigned j)
{
  const OmegaTable& table = omega_table(field);
  const unsigned n = field.level();
  const std::uint64_t Q = field.norm_p();
  MinPolyReport rep;
  rep.i = i;
  rep.j = j;
  rep.result = CheckResult("min poly identity and single Newton slope at i=" + std::to_string(i) +
                               " j=" + std::to_string(j),
                           true);
  const unsigned k = i + j;  // ζ_i^{q^j} = ζ_{i+j}
  const Elem zp = field.zeta(k);
  const auto beta = beta_hyper(field, zp, n);
  const TorsionElem& w = table.omega(n, k);
  std::vector<RationalVal> vals;
  if (n == 0) {
    rep.root_identity = w.pow(Q - 1) == field.scalar(beta[0]);
    vals.assign(Q, RationalVal::infinity());
    vals[0] = val_kzeta(KZetaFun(-beta[0]), field.zeta(i));
    vals[Q - 1] = RationalVal(0);
  } else {
    TorsionElem xi = field.zero();
    for (unsigned l = 1; l <= n; ++l) xi += table.omega(n - l, k).scaled(beta[l]);
    rep.root_identity = w.pow(Q) == w.scaled(beta[0]) + xi;
    vals.assign(Q + 1, RationalVal::infinity());
    vals[0] = val_kn(-xi, i);
    vals[1] = val_kzeta(KZetaFun(-beta[0]), field.zeta(i));
    vals[Q] = RationalVal(0);
  }
  if (!rep.root_identity) rep.result.fail("omega^(n)(zeta') is not a root of the displayed polynomial");
  rep.polygon = newton_polygon(vals);
  rep.expected = expected_omega_valuation(field, n, j);
  rep.val_kn = val_kn(w, i);
  if (rep.polygon.size() != 1) rep.result.fail("Newton polygon has " + std::to_string(rep.polygon.size()) + " slopes");
  else if (rep.polygon[0].slope != rep.expected)
    rep.result.fail("slope " + rep.polygon[0].slope.format() + " != " + rep.expected.format());
  if (rep.val_kn != rep.expected) rep.result.fail("val_kn " + rep.val_kn.format() + " != " + rep.expected.format());
  if (rep.result.pass) rep.result.detail = "slope " + rep.expected.format();
  return rep;
}

NormFactorReport norm_factor_experiment(const TorsionField& field, unsigned j, unsigned i,
                                        std::uint64_t seed)
{
  const OmegaTable& table = omega_table(field);
  NormFactorReport rep;
  rep.j = j;
  rep.i = i;
  rep.norm = norm_to_kzeta(table.omega(j, i));
  const Poly num = rep.norm.num().rebind(field.fqd());
  rep.factors = factor_poly(num, seed);
  for (const auto& f : rep.factors.factors) {
    bool above = false;
    if (f.poly.degree() == 1)
      for (Elem z : field.zetas())
        if (f.poly.coeff(0) == field.fqd()->neg(z)) above = true;
    (above ? rep.above_p : rep.other).push_back(f);
  }
  return rep;
}

}  // namespace carlitz
