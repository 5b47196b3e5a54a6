#include "helpers.hpp"

#include <carlitz/analytic.hpp>

#include <doctest.h>

using namespace carlitz;
using test::P;

namespace {

// Every coefficient below min(prec(a), prec(b)) agrees.
bool agree(const Laurent& a, const Laurent& b)
{
  const std::int64_t P0 = std::min(a.precision(), b.precision());
  return (a.truncated(P0) - b.truncated(P0)).is_zero();
}

}  // namespace

TEST_CASE("Laurent arithmetic and precision")
{
  const auto tower = make_tower(3, 1);
  const FiniteField* F = tower->fq2d.get();
  const Laurent t = Laurent::theta(F, 3);
  CHECK(t.valuation() == -2);
  CHECK(t.is_exact());
  const Laurent u = Laurent::constant(F, 1) + Laurent::monomial(F, 1, 1);  // 1 + v
  const Laurent inv = u.inverse(20);
  CHECK(inv.precision() == 20);
  CHECK((u.mul(inv, 20) - Laurent::constant(F, 1)).is_zero());
  CHECK((u.mul(inv, 20) - Laurent::constant(F, 1)).valuation() == 20);
  // 1/(1+v) = sum (-v)^k
  for (int k = 0; k < 20; ++k) CHECK(inv.coeff(k) == (k % 2 ? F->neg(1) : 1));
  CHECK_THROWS_AS(inv.coeff(20), std::out_of_range);
  CHECK_THROWS_AS(Laurent(F).inverse(10), std::domain_error);

  const Laurent approx = Laurent::from_coeffs(F, 0, {1, 2}, 5);
  CHECK(approx.mul(Laurent::monomial(F, 1, 3)).precision() == 8);
  CHECK(approx.frobenius(3).precision() == 15);
  CHECK(approx.frobenius(3).coeff(3) == F->pow(2, 3));
  CHECK_THROWS_AS(approx.frobenius(2), std::invalid_argument);
  CHECK(agree(Laurent::from_theta_poly(F, 3, P(3, "theta^2+1")), Laurent::constant(F, 1) + t.mul(t)));
}

TEST_CASE("exp_C basics")
{
  const auto& F = test::field(3, "theta", 0);
  Analytic A(F, 40);
  CHECK(A.exp_c(Laurent(A.field())).is_zero());
  // exp_C(π̃) = 0 to working precision
  const Laurent e = A.exp_c(A.pi_tilde());
  CHECK(e.is_zero());
  CHECK(e.precision() >= 40);
  CHECK(Analytic::exp_truncation_level(3, -2, 40) >= 1);
}

TEST_CASE("pi tilde leading terms")
{
  // frozen from the series build
  Analytic A3(test::field(3, "theta", 0), 30);
  CHECK(A3.pi_tilde().format(4) == "2*v^-3 + 2*v^1 + 2*v^5 + 2*v^9 + ... + O(v^30)");
  Analytic A2(test::field(2, "theta", 0), 30);
  CHECK(A2.pi_tilde().format(4) == "1*v^-2 + 1*v^-1 + 1*v^0 + 1*v^4 + ... + O(v^30)");
  // π̃^{q-1} has valuation -q
  CHECK(A3.pi_tilde().valuation() == -3);
}

TEST_CASE("functional equation of the exponential")
{
  std::mt19937_64 rng(61);
  for (unsigned q : {2u, 3u}) {
    const auto& F = test::field(q, "theta", 0);
    Analytic A(F, 48);
    for (int t = 0; t < 6; ++t) {
      std::vector<Elem> c(12);
      for (auto& x : c) x = static_cast<Elem>(rng() % q);
      c[0] = 1;
      const std::int64_t lo = static_cast<std::int64_t>(rng() % 4) - 1;  // v(z) in [-1, 2]
      const Laurent z = Laurent::from_coeffs(A.field(), lo, c, 48);
      const Laurent lhs = A.exp_c(A.theta().mul(z, 48));
      const Laurent rhs = A.carlitz_eval(P(q, "theta"), A.exp_c(z));
      CHECK(agree(lhs, rhs));
      CHECK(std::min(lhs.precision(), rhs.precision()) >= 30);
    }
  }
}

TEST_CASE("omega difference equation")
{
  // ω(ζ_{k-1})^q = (ζ_k - θ) ω(ζ_k) on the sum route
  const auto& F = test::field(2, "theta^2+theta+1", 0);
  Analytic A(F, 60);
  const FiniteField* K = A.field();
  for (unsigned k = 1; k <= F.d(); ++k) {
    const Elem zk = F.zeta(k + 1), zprev = F.zeta(k);
    const Laurent lhs = A.omega_sum(0, zprev)[0].frobenius(2, 60);
    const Laurent rhs = (A.constant(zk) - A.theta()).mul(A.omega_sum(0, zk)[0], 60);
    CHECK(agree(lhs, rhs));
    CHECK(std::min(lhs.precision(), rhs.precision()) >= 40);
  }
  (void)K;
}

TEST_CASE("sum and product routes agree")
{
  const auto& F = test::field(3, "theta", 2);
  Analytic A(F, 60);
  const auto s = A.omega_sum(2, 0);
  const auto p = A.omega_product(2, 0);
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(agree(s[j], p[j]));
    CHECK(std::min(s[j].precision(), p[j].precision()) - s[j].valuation() >= 40);
  }
  // ω(0) = λ_θ
  CHECK(agree(p[0], A.lambda()));
}

TEST_CASE("precision soundness: doubling the cap changes no reported digit")
{
  for (const auto& [q, p, n] : std::vector<std::tuple<unsigned, std::string, unsigned>>{
           {2, "theta^2+theta+1", 0}, {3, "theta", 1}}) {
    const auto& F = test::field(q, p, n);
    Analytic lo(F, 48), hi(F, 96);
    CHECK(agree(lo.pi_tilde(), hi.pi_tilde()));
    CHECK(agree(lo.torsion_point(F.prime(), n), hi.torsion_point(F.prime(), n)));
    for (unsigned k = 1; k <= F.d(); ++k) {
      const auto a = lo.omega_sum(n, F.zeta(k)), b = hi.omega_sum(n, F.zeta(k));
      for (std::size_t j = 0; j < a.size(); ++j) CHECK(agree(a[j], b[j]));
      const auto c = lo.omega_product(n, F.zeta(k));
      for (std::size_t j = 0; j < c.size(); ++j) CHECK(agree(c[j], b[j]));
    }
    const LSeries s1 = l_truncated_series(F, 1, 6, 48), s2 = l_truncated_series(F, 1, 6, 96);
    for (std::size_t j = 0; j < s1.values.size(); ++j) CHECK(agree(s1.values[j], s2.values[j]));
  }
}

TEST_CASE("truncated L-series")
{
  const auto& F = test::field(3, "theta", 0);
  Analytic A(F, 20);
  const auto l = A.l_series(0, 0, 0);
  REQUIRE(l.size() == 1);
  CHECK(agree(l[0], Laurent::constant(A.field(), 1)));
}

TEST_CASE("oracle reports pass with no escalation")
{
  for (const auto& [q, p, n] : std::vector<std::tuple<unsigned, std::string, unsigned>>{
           {2, "theta^2+theta+1", 0}, {3, "theta", 0}, {3, "theta", 1}, {2, "theta", 1}}) {
    const auto& F = test::field(q, p, n);
    for (const OracleReport& r : {embed_compare(F, 40), route_agreement(F, 40), pellarin_check(F, 1, 8),
                                  l_cross_check(F, l_matrix(F), 8)}) {
      CAPTURE(r.name);
      CHECK(r.pass);
      CHECK(r.escalations == 0);
      CHECK(r.min_score() >= r.floor);
    }
  }
}

TEST_CASE("residual scoring")
{
  const auto tower = make_tower(2, 1);
  const FiniteField* F = tower->fq2d.get();
  const Laurent a = Laurent::from_coeffs(F, -2, {1, 1}, 30);
  const Laurent b = a + Laurent::monomial(F, 1, 25);
  const Residual r = compare("x", a, b, 20, true);
  CHECK(r.diff_val == 25);
  CHECK(r.score() == 27);
  CHECK(r.pass());
  CHECK_FALSE(compare("x", a, b, 30, true).pass());
  const Residual z = compare("z", a, a, 40, true);
  CHECK(z.zero_to_precision);
  CHECK_FALSE(z.pass());
}
