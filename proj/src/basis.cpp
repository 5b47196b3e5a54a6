#include <carlitz/basis.hpp>

#include <carlitz/carlitz.hpp>
#include <carlitz/valuation.hpp>

#include <random>
#include <stdexcept>

namespace carlitz {

std::vector<KZetaFun> coords_power_basis(const TorsionElem& y) { return y.coords(); }

IntegralityWitness is_integral(const TorsionElem& y)
{
  IntegralityWitness w;
  if (y.is_integral()) return w;
  const auto c = y.coords();
  for (std::size_t k = 0; k < c.size(); ++k)
    if (!c[k].is_polynomial()) {
      w.integral = false;
      w.index = k;
      w.coordinate = c[k];
      return w;
    }
  return w;
}

BasisReport basis_determinant_test(const TorsionField& field)
{
  const OmegaTable& table = omega_table(field);
  const FiniteField* K = field.fqd();
  const std::size_t D = field.degree();
  BasisReport rep;
  rep.result = CheckResult("digit monomials form an integral basis", true);
  rep.labels = digit_basis_exponents(field);
  if (rep.labels.size() != D)
    throw std::logic_error("digit basis has " + std::to_string(rep.labels.size()) + " elements, expected " +
                           std::to_string(D));
  rep.matrix.assign(D, std::vector<Poly>(D, Poly(K)));
  for (std::size_t c = 0; c < D; ++c) {
    const TorsionElem m = digit_monomial(table, rep.labels[c]);
    if (!m.is_integral()) {
      rep.all_integral = false;
      rep.non_integral.push_back(format_exponents(rep.labels[c]));
    }
    for (std::size_t r = 0; r < D; ++r) rep.matrix[r][c] = m.num()[r];
  }
  if (!rep.all_integral) rep.result.fail("non-integral monomial " + rep.non_integral.front());

  Adjugate adj = adjugate(rep.matrix);
  rep.determinant = adj.det;
  rep.adjugate = std::move(adj.adj);
  rep.is_unit = !rep.determinant.is_zero() && rep.determinant.degree() == 0;
  if (!rep.is_unit) rep.result.fail("determinant " + rep.determinant.format("theta") + " is not a nonzero constant");

  PolyMatrix scaled = identity_matrix(K, D);
  for (std::size_t i = 0; i < D; ++i) scaled[i][i] = rep.determinant;
  rep.adjugate_identity = !rep.determinant.is_zero() && matmul(rep.matrix, rep.adjugate) == scaled &&
                          matmul(rep.adjugate, rep.matrix) == scaled;
  if (!rep.adjugate_identity) rep.result.fail("M adj(M) != det I");

  rep.inverse_integral = !rep.determinant.is_zero();
  for (const auto& row : rep.adjugate)
    for (const auto& e : row)
      if (rep.inverse_integral && !(e % rep.determinant).is_zero()) rep.inverse_integral = false;
  if (!rep.inverse_integral) rep.result.fail("inverse change of basis is not integral");

  if (rep.result.pass)
    rep.result.detail = std::to_string(D) + "x" + std::to_string(D) + ", det = " + rep.determinant.format("theta");
  return rep;
}

namespace {

Poly random_poly(const FiniteField* K, std::mt19937_64& rng, int max_degree)
{
  std::uniform_int_distribution<Elem> coef(0, K->size() - 1);
  std::vector<Elem> c(static_cast<std::size_t>(max_degree) + 1);
  for (auto& e : c) e = coef(rng);
  return Poly(K, std::move(c));
}

}  // namespace

CheckResult check_basis_for_extension(const TorsionField& field, unsigned samples, std::uint64_t seed)
{
  CheckResult res("v_i(x) >= 0 implies v_i of its digit-basis coordinates >= 0", true);
  const BasisReport basis = basis_determinant_test(field);
  if (basis.determinant.is_zero()) {
    res.fail("digit basis is singular");
    return res;
  }
  const FiniteField* K = field.fqd();
  const std::size_t D = field.degree();
  std::mt19937_64 rng(seed);
  for (unsigned s = 0; s < samples; ++s) {
    // a denominator with no zero at any ζ_k keeps every v_i(x) >= 0
    Poly den;
    do {
      den = random_poly(K, rng, 2);
      bool ok = !den.is_zero();
      for (Elem z : field.zetas())
        if (ok && den.eval(z) == 0) ok = false;
      if (ok) break;
    } while (true);
    std::vector<Poly> num(D);
    for (auto& c : num) c = random_poly(K, rng, 3);
    const TorsionElem x(field, num, den.monic());
    for (unsigned i = 1; i <= field.d(); ++i)
      if (val_kn(x, i) < RationalVal(0)) res.fail("sampled x has negative valuation");
    // coordinates: adj (num) / (det den)
    const auto xc = x.num();
    for (std::size_t r = 0; r < D; ++r) {
      Poly acc(K);
      for (std::size_t c = 0; c < D; ++c) acc += basis.adjugate[r][c] * xc[c];
      const KZetaFun coeff(acc, basis.determinant * x.den());
      for (unsigned i = 1; i <= field.d(); ++i)
        if (val_kzeta(coeff, field, i) < RationalVal(0))
          res.fail("sample " + std::to_string(s) + ": coordinate " + std::to_string(r) + " has v_" +
                   std::to_string(i) + " < 0");
    }
  }
  if (res.pass) res.detail = std::to_string(samples) + " samples";
  return res;
}

NormalBasisReport normal_basis_rank(const TorsionField& field)
{
  const OmegaTable& table = omega_table(field);
  const unsigned n = field.level();
  NormalBasisReport rep;
  rep.degree = field.degree();
  rep.result = CheckResult("Galois orbit of eta_n is a normal basis over K_0(zeta)", true);
  const TorsionElem h = eta(table);
  const TorsionElem x0 = carlitz_eval(pow(field.prime(), n), field.x());
  std::vector<TorsionElem> x0_pows{field.one()};
  for (std::uint64_t k = 1; k + 1 < field.norm_p(); ++k) x0_pows.push_back(x0_pows.back() * x0);

  std::uint64_t count = 1;
  for (unsigned k = 0; k < field.d() * n; ++k) count *= field.q();
  PolyMatrix m(rep.degree);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    const Poly b = poly_from_index(field.fq(), idx, field.d() * n);
    const Poly a = Poly::constant(field.fq(), 1) + field.prime() * b;
    const TorsionElem conj = field.sigma(a).apply(h);
    ++rep.orbit_size;
    for (const auto& xp : x0_pows) {
      const TorsionElem col = conj * xp;
      for (std::size_t r = 0; r < rep.degree; ++r) m[r].push_back(col.num()[r]);
    }
  }
  rep.rank = rank(m);
  rep.full = rep.rank == rep.degree;
  if (!rep.full) rep.result.fail("rank " + std::to_string(rep.rank) + " < " + std::to_string(rep.degree));
  else rep.result.detail = std::to_string(rep.orbit_size) + " conjugates, rank " + std::to_string(rep.rank);
  return rep;
}

std::vector<IsotypicComponent> isotypic_decompose(const TorsionElem& y)
{
  const TorsionField& F = y.field();
  if (F.level() != 0) throw std::invalid_argument("isotypic decomposition requires level 0");
  const auto units = residue_enum(F.prime(), 0, true);
  std::vector<TorsionElem> values;
  values.reserve(units.size());
  for (const auto& a : units) values.push_back(F.sigma(a).apply(y));
  const auto comps = lagrange_unit_interpolation(F.prime(), F.fqd(), F.zeta(1), units, values, F.zero());
  std::vector<IsotypicComponent> out;
  for (std::size_t k = 0; k < comps.size(); ++k)
    if (!comps[k].is_zero()) out.push_back({static_cast<unsigned>(k), comps[k]});
  return out;
}

CheckResult check_isotypic(const TorsionElem& y, const std::vector<IsotypicComponent>& parts)
{
  const TorsionField& F = y.field();
  const FiniteField* K = F.fqd();
  CheckResult res("isotypic components sum to y and are eigenvectors", true);
  TorsionElem sum = F.zero();
  for (const auto& c : parts) sum += c.value;
  if (sum != y) res.fail("components do not sum to y");
  for (const auto& a : residue_enum(F.prime(), F.level(), true)) {
    const Elem az = a.rebind(K).eval(F.zeta(1));
    for (const auto& c : parts)
      if (F.sigma(a).apply(c.value) != c.value.scaled(K->pow(az, c.exponent)))
        res.fail("a=" + a.format("theta") + " exponent " + std::to_string(c.exponent));
  }
  if (res.pass) res.detail = std::to_string(parts.size()) + " components";
  return res;
}

}  // namespace carlitz
