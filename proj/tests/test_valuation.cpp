#include "helpers.hpp"

#include <carlitz/valuation.hpp>

#include <algorithm>

#include <doctest.h>

using namespace carlitz;
using test::P;

namespace {

std::vector<Poly> xcoeffs(unsigned q, std::vector<std::string> texts)
{
  std::vector<Poly> out;
  for (const auto& t : texts) out.push_back(P(q, t));
  return out;
}

std::vector<Poly> mul(const std::vector<Poly>& a, const std::vector<Poly>& b)
{
  std::vector<Poly> out(a.size() + b.size() - 1, Poly(a.front().field()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Merge of two slope lists: multiplicities add on equal slopes.
std::vector<NewtonSlope> merge(std::vector<NewtonSlope> a, const std::vector<NewtonSlope>& b)
{
  for (const auto& s : b) {
    auto it = std::find_if(a.begin(), a.end(), [&](const NewtonSlope& x) { return x.slope == s.slope; });
    if (it != a.end()) it->multiplicity += s.multiplicity;
    else a.push_back(s);
  }
  std::sort(a.begin(), a.end(), [](const NewtonSlope& x, const NewtonSlope& y) { return x.slope < y.slope; });
  return a;
}

}  // namespace

TEST_CASE("rational valuations")
{
  CHECK(RationalVal(2, 4) == RationalVal(1, 2));
  CHECK(RationalVal(1, -3).format() == "-1/3");
  CHECK(RationalVal(1, 3) + RationalVal(1, 6) == RationalVal(1, 2));
  CHECK(RationalVal(1, 3) < RationalVal::infinity());
  CHECK(RationalVal::infinity().format() == "inf");
  CHECK(RationalVal(4, 2).format() == "2");
}

TEST_CASE("valuations on K(zeta)")
{
  const auto& F = test::field(2, "theta^2+theta+1", 0);
  const FiniteField* K = F.fqd();
  const Poly t1 = Poly(K, {F.zeta(1), 1}), t2 = Poly(K, {F.zeta(2), 1});
  CHECK(val_kzeta(KZetaFun(t1), F, 1) == RationalVal(1));
  CHECK(val_kzeta(KZetaFun(t2), F, 1) == RationalVal(0));
  CHECK(val_kzeta(KZetaFun(F.prime().rebind(K)), F, 1) == RationalVal(1));
  CHECK(val_kzeta(KZetaFun(F.prime().rebind(K)), F, 2) == RationalVal(1));
  CHECK(val_kzeta(KZetaFun(Poly::constant(K, 1), t1 * t1), F, 1) == RationalVal(-2));
  CHECK(val_kzeta(KZetaFun(Poly(K)), F, 1).is_infinite());
  CHECK(val_kn(F.scalar(t1), 1) == RationalVal(1));
}

TEST_CASE("valuation examples")
{
  const auto& F3 = test::field(3, "theta", 0);
  CHECK(val_kn(F3.x(), 1) == RationalVal(1, 2));
  const auto& F = test::field(2, "theta^2+theta+1", 0);
  CHECK(val_kn(omega_value(F, 0, 1), 1) == RationalVal(1, 3));
  CHECK(val_kn(omega_value(F, 0, 2), 1) == RationalVal(2, 3));
}

TEST_CASE("valuation table for n = 1 over theta^2+theta+1")
{
  const auto table = valuation_table(test::field(2, "theta^2+theta+1", 1));
  std::vector<std::string> seen;
  for (const auto& e : table) {
    CHECK(e.value == e.expected);
    seen.push_back(e.value.format());
  }
  for (const char* v : {"1/12", "1/6", "1/3", "2/3"}) CHECK(std::find(seen.begin(), seen.end(), v) != seen.end());
}

TEST_CASE("valuation theorem on the reference configurations")
{
  for (const auto& [q, p, n] : std::vector<std::tuple<unsigned, std::string, unsigned>>{
           {2, "theta^2+theta+1", 1}, {3, "theta", 2}, {2, "theta", 2}, {4, "theta^2+theta+g", 0}})
    CHECK(check_valuations(test::field(q, p, n)).pass);
}

TEST_CASE("valuation is additive and ultrametric")
{
  std::mt19937_64 rng(41);
  const auto& F = test::field(3, "theta", 1);
  for (int t = 0; t < 6; ++t) {
    const TorsionElem y = test::random_elem(rng, F, 3), z = test::random_elem(rng, F, 3);
    if (y.is_zero() || z.is_zero()) continue;
    CHECK(val_kn(y * z, 1) == val_kn(y, 1) + val_kn(z, 1));
    CHECK(std::min(val_kn(y, 1), val_kn(z, 1)) <= val_kn(y + z, 1));
  }
  const TorsionElem w = omega_value(F, 1, 1);
  const TorsionElem x0 = omega_value(F, 0, 1);
  CHECK(val_kn(w * x0, 1) == val_kn(w, 1) + val_kn(x0, 1));
}

TEST_CASE("Newton polygon examples")
{
  const Elem zero = 0;
  using S = std::vector<NewtonSlope>;
  CHECK(newton_polygon(xcoeffs(3, {"2*theta", "0", "0", "1"}), zero) == S{{RationalVal(1, 3), 3}});
  CHECK(newton_polygon(xcoeffs(3, {"theta", "2*theta+2", "1"}), zero) == S{{RationalVal(0), 1}, {RationalVal(1), 1}});
  CHECK(newton_polygon(xcoeffs(2, {"theta", "theta", "1"}), zero) == S{{RationalVal(1, 2), 2}});
  CHECK(newton_polygon(std::vector<RationalVal>{1, 1, 0}) == S{{RationalVal(1, 2), 2}});
  CHECK_THROWS_AS(newton_polygon(std::vector<RationalVal>{RationalVal::infinity()}), std::invalid_argument);
}

TEST_CASE("Newton polygon of a product is the merge")
{
  const Elem zero = 0;
  const std::vector<std::vector<Poly>> fs{
      xcoeffs(3, {"2*theta", "0", "0", "1"}), xcoeffs(3, {"theta", "2*theta+2", "1"}), xcoeffs(3, {"theta", "theta", "1"}),
      xcoeffs(3, {"theta^2", "1"})};
  for (const auto& a : fs)
    for (const auto& b : fs)
      CHECK(newton_polygon(mul(a, b), zero) == merge(newton_polygon(a, zero), newton_polygon(b, zero)));
}

TEST_CASE("minimal polynomial slopes")
{
  const auto& F = test::field(2, "theta^2+theta+1", 1);
  const MinPolyReport r = min_poly_check(F, 1, 0);
  CHECK(r.root_identity);
  REQUIRE(r.polygon.size() == 1);
  CHECK(r.polygon[0].slope == RationalVal(1, 12));
  CHECK(r.result.pass);
  for (const auto& [q, p, n] : std::vector<std::tuple<unsigned, std::string, unsigned>>{{3, "theta", 2}, {2, "theta", 2}})
    CHECK(min_poly_check(test::field(q, p, n), 1, 0).result.pass);
}

TEST_CASE("norm factorizations")
{
  // Frozen from the exact build.  The norm is not a power of the
  // prime: the primes θ - ζ_k appear with unequal multiplicities.
  const auto& F = test::field(2, "theta^2+theta+1", 0);
  const NormFactorReport r = norm_factor_experiment(F, 0, 1, 1);
  REQUIRE(r.factors.factors.size() == 2);
  CHECK(r.factors.factors[0].poly.format() == "theta+z");
  CHECK(r.factors.factors[0].multiplicity == 1);
  CHECK(r.factors.factors[1].poly.format() == "theta+z+1");
  CHECK(r.factors.factors[1].multiplicity == 2);
  CHECK(r.other.empty());

  const auto& G = test::field(3, "theta", 0);
  const NormFactorReport s = norm_factor_experiment(G, 0, 1, 1);
  CHECK(s.norm.format() == "theta");
  CHECK(s.other.empty());

  const NormFactorReport u = norm_factor_experiment(test::field(2, "theta^2+theta+1", 1), 0, 1, 1);
  REQUIRE(u.factors.factors.size() == 2);
  CHECK(u.factors.factors[0].multiplicity == 4);
  CHECK(u.factors.factors[1].multiplicity == 8);
}
