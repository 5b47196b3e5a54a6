#include "helpers.hpp"

#include <carlitz/omega.hpp>

#include <doctest.h>

using namespace carlitz;
using test::P;

namespace {

const std::vector<std::tuple<unsigned, std::string, unsigned>> kConfigs{
    {2, "theta^2+theta+1", 0}, {2, "theta^2+theta+1", 1}, {3, "theta", 0}, {3, "theta", 1},
    {3, "theta", 2},           {2, "theta", 0},           {2, "theta", 1}, {2, "theta", 2},
    {4, "theta^2+theta+g", 0}};

}  // namespace

TEST_CASE("q_poly examples")
{
  const QPoly q0 = q_poly(P(2, "theta^2+theta+1"), 0);
  REQUIRE(q0.coeffs.size() == 2);
  CHECK(q0.coeffs[0] == P(2, "theta+1"));
  CHECK(q0.coeffs[1] == P(2, "1"));
  CHECK(q0 == q_poly_closed_form(P(2, "theta^2+theta+1")));

  const QPoly q1 = q_poly(P(2, "theta^2+theta+1"), 1);
  CHECK(q1.coeffs[0] == P(2, "theta^2"));
  CHECK(q1.coeffs[1] == P(2, "1"));
  CHECK(q1 == q_poly_by_interpolation(P(2, "theta^2+theta+1"), 1));

  for (unsigned n = 0; n <= 2; ++n) {
    const QPoly lin = q_poly(P(3, "theta+1"), n);
    REQUIRE(lin.coeffs.size() == 1);
    CHECK(lin.coeffs[0] == P(3, "1"));
  }
}

TEST_CASE("q_poly congruence route equals the interpolation route")
{
  for (const auto& [q, p] : std::vector<std::pair<unsigned, std::string>>{
           {2, "theta^2+theta+1"}, {3, "theta"}, {2, "theta"}, {4, "theta^2+theta+g"}, {3, "theta^2+1"}})
    for (unsigned n = 0; n <= 2; ++n) CHECK(check_q_poly(P(q, p), n).pass);
}

TEST_CASE("torsion coefficients examples")
{
  const auto& F3 = test::field(3, "theta", 0);
  CHECK(omega_table(F3).coeff(0, 0) == F3.x());
  CHECK(omega_value(F3, 0, 1) == F3.x());

  const auto& F = test::field(2, "theta^2+theta+1", 0);
  const auto& T = omega_table(F);
  const TorsionElem x = F.x();
  CHECK(T.coeff(0, 1) == x);
  CHECK(T.coeff(0, 0) == x * x + x.scaled(P(2, "theta+1")));
  // frozen from the exact build
  CHECK(T.omega(0, 1).format() == "(theta+z+1)*x+x^2");
  CHECK(T.omega(0, 2).format() == "(theta+z)*x+x^2");
}

TEST_CASE("omega cube equals beta at zeta_1")
{
  // ω(ζ_1)^3 = (ζ_1 - θ)(ζ_1 - θ^2)
  const auto& F = test::field(2, "theta^2+theta+1", 0);
  const FiniteField* K = F.fqd();
  const Elem z = F.zeta(1);
  const Poly beta = Poly(K, {z, 1}) * Poly(K, {z, 0, 1});
  CHECK(omega_value(F, 0, 1).pow(3) == F.scalar(beta));
}

TEST_CASE("omega identities hold on every configuration")
{
  for (const auto& [q, p, n] : kConfigs) {
    CAPTURE(q);
    CAPTURE(p);
    CAPTURE(n);
    const auto& T = omega_table(test::field(q, p, n));
    CHECK(check_torsion_coeffs(T).pass);
    CHECK(check_galois_action(T).pass);
    CHECK(check_frobenius_shift(T).pass);
    CHECK(check_recursion(T).pass);
    CHECK(check_tower_consistency(T).pass);
    CHECK(check_rho_multiplicative(T.field()).pass);
    if (n >= 1 && q == 3) CHECK(check_frobenius_not_qpower(T).pass);
  }
}

TEST_CASE("omega values are integral and Frobenius permutes the roots")
{
  for (const auto& [q, p, n] : kConfigs) {
    const auto& F = test::field(q, p, n);
    const auto& T = omega_table(F);
    for (unsigned j = 0; j <= n; ++j)
      for (unsigned k = 1; k <= F.d(); ++k) {
        CHECK(T.omega(j, k).is_integral());
        CHECK(frobenius_const(T.omega(j, k)) == T.omega(j, k + 1));
      }
  }
}

TEST_CASE("rho matrix examples")
{
  const auto& F = test::field(2, "theta^2+theta+1", 1);
  const FiniteField* K = F.fqd();
  const Elem z = F.zeta(1);
  CHECK(rho_matrix(P(2, "1"), K, z, 2).is_identity());
  CHECK(rho_matrix(P(2, "theta"), K, z, 2).row() == std::vector<Elem>{z, 1});
  CHECK(rho_matrix(P(2, "theta^2"), K, z, 2).row() == std::vector<Elem>{K->mul(z, z), 0});
  const UTToeplitz r = rho_matrix(P(2, "theta+1"), K, z, 2);
  CHECK((r * r.inverse()).is_identity());
}

TEST_CASE("digit monomials and eta")
{
  const auto& F = test::field(2, "theta^2+theta+1", 0);
  const auto& T = omega_table(F);
  CHECK(digit_monomial(T, {{0, 0}}) == F.one());
  CHECK(digit_monomial(T, {{1, 0}}) == T.omega(0, 1));
  CHECK(digit_monomial(T, {{1, 1}}) == T.omega(0, 1) * T.omega(0, 2));
  const auto list = digit_basis_exponents(F);
  CHECK(list.size() == 3);
  for (const auto& e : list) CHECK(e != DigitExponents{{1, 1}});
  CHECK(eta(T) == F.one());

  const auto& G = test::field(3, "theta", 1);
  CHECK(eta(omega_table(G)) == omega_value(G, 1, 1).pow(2));
  const auto& H = test::field(2, "theta^2+theta+1", 1);
  CHECK(eta(omega_table(H)) == omega_value(H, 1, 1) * omega_value(H, 1, 2));
  CHECK(digit_basis_exponents(H).size() == H.degree());
}

TEST_CASE("generalized eigenvectors")
{
  for (const auto& [q, p, n] : std::vector<std::tuple<unsigned, std::string, unsigned>>{
           {2, "theta^2+theta+1", 1}, {3, "theta", 1}, {2, "theta", 2}}) {
    std::size_t esc = 99;
    CHECK(check_generalized_eigen(omega_table(test::field(q, p, n)), &esc).pass);
    CHECK(esc == 0);
  }
}

TEST_CASE("Frobenius differs from the q-th power above level 0")
{
  const auto& T = omega_table(test::field(3, "theta", 1));
  const TorsionElem w = T.omega(1, 1);
  CHECK(frobenius_const(w) != w.pow(3));
}
