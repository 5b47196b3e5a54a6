#include "helpers.hpp"

#include <carlitz/factor.hpp>
#include <carlitz/interp.hpp>

#include <doctest.h>

using namespace carlitz;
using test::P;

namespace {

// a(θ + X) expanded by repeated multiplication; returns the coefficient of X^j.
Poly hyper_oracle(const Poly& a, unsigned j)
{
  const FiniteField* f = a.field();
  const XPoly shift{Poly::variable(f), Poly::constant(f, 1)};
  XPoly acc{Poly(f)};
  XPoly power{Poly::constant(f, 1)};
  for (std::size_t k = 0; k < a.size(); ++k) {
    XPoly term = power;
    for (auto& c : term) c = c.scaled(a.coeff(k));
    if (acc.size() < term.size()) acc.resize(term.size(), Poly(f));
    for (std::size_t i = 0; i < term.size(); ++i) acc[i] += term[i];
    power = xpoly_mul(power, shift);
  }
  return j < acc.size() ? acc[j] : Poly(f);
}

}  // namespace

TEST_CASE("finite field tower")
{
  const auto F4 = base_field(4);
  CHECK(F4->size() == 4);
  CHECK(F4->characteristic() == 2);
  CHECK(parse_element(*F4, "g^2+g+1") == 0);
  CHECK_THROWS_AS(base_field(6), FieldError);
  CHECK_THROWS_AS(F4->inv(0), FieldError);

  const auto tower = make_tower(3, 2);
  CHECK(tower->fqd->size() == 9);
  CHECK(tower->fq2d->size() == 81);
  // inclusions are the identity on indices
  const FiniteField* K = tower->fqd.get();
  for (Elem a = 0; a < 3; ++a)
    for (Elem b = 0; b < 3; ++b) CHECK(K->mul(a, b) == tower->fq->mul(a, b));

  std::mt19937_64 rng(7);
  const FiniteField* L = tower->fq2d.get();
  for (int t = 0; t < 200; ++t) {
    const Elem a = rng() % 81, b = rng() % 81, c = rng() % 81;
    CHECK(L->mul(a, L->add(b, c)) == L->add(L->mul(a, b), L->mul(a, c)));
    if (a) CHECK(L->mul(a, L->inv(a)) == 1);
  }
}

TEST_CASE("polynomial parsing and division")
{
  CHECK(P(2, "1,1,1") == P(2, "theta^2+theta+1"));
  CHECK(P(3, "2*theta^2+1").format() == "2*theta^2+1");
  const Poly a = P(3, "theta^4+2*theta+1"), b = P(3, "theta^2+1");
  const auto [quo, rem] = divmod(a, b);
  CHECK(quo * b + rem == a);
  CHECK(rem.degree() < b.degree());
  CHECK(gcd(P(2, "theta^4+theta"), P(2, "theta^2+1")) == P(2, "theta+1"));
  CHECK_THROWS(parse_poly(test::fq(2), "theta^"));
}

TEST_CASE("hyperderivative examples")
{
  CHECK(hyperderivative(P(2, "theta^2"), 1).is_zero());
  CHECK(hyperderivative(P(3, "theta^2"), 1) == P(3, "2*theta"));
  CHECK(hyperderivative(P(2, "theta^3+theta"), 2) == P(2, "theta"));
  CHECK(hyper_oracle(P(2, "theta^3+theta"), 2) == P(2, "theta"));
}

TEST_CASE("hyperderivative against the shift oracle")
{
  std::mt19937_64 rng(11);
  for (unsigned q : {2u, 3u, 4u}) {
    for (int t = 0; t < 20; ++t) {
      const Poly a = test::random_poly(rng, test::fq(q), 8);
      for (unsigned j = 0; j <= 6; ++j) CHECK(hyperderivative(a, j) == hyper_oracle(a, j));
    }
  }
}

TEST_CASE("Leibniz rule and composition of hyperderivatives")
{
  std::mt19937_64 rng(12);
  for (unsigned q : {2u, 3u, 4u}) {
    const unsigned p = test::fq(q)->characteristic();
    for (int t = 0; t < 10; ++t) {
      const Poly a = test::random_poly(rng, test::fq(q), 6);
      const Poly b = test::random_poly(rng, test::fq(q), 6);
      for (unsigned n = 0; n <= 4; ++n) {
        Poly sum(test::fq(q));
        for (unsigned j = 0; j <= n; ++j) sum += hyperderivative(a, j) * hyperderivative(b, n - j);
        CHECK(hyperderivative(a * b, n) == sum);
      }
      for (unsigned i = 0; i <= 3; ++i)
        for (unsigned j = 0; j <= 3; ++j) {
          const Elem c = test::fq(q)->from_int(binomial_mod_p(i + j, i, p));
          CHECK(hyperderivative(hyperderivative(a, i), j) == hyperderivative(a, i + j).scaled(c));
        }
    }
  }
}

TEST_CASE("hyper_expand examples")
{
  const auto& F = test::field(2, "theta^2+theta+1", 0);
  const FiniteField* K = F.fqd();
  const Elem z = F.zeta(1);
  CHECK(hyper_expand(P(2, "1"), K, z, 2) == std::vector<Elem>{1, 0, 0});
  CHECK(hyper_expand(P(2, "theta^2"), K, z, 2) == std::vector<Elem>{K->mul(z, z), 0, 1});
  CHECK(hyper_expand(P(2, "theta^2+theta+1"), K, z, 2) == std::vector<Elem>{0, 1, 1});
  CHECK(order_at(P(2, "theta^2+theta+1").rebind(K), z) == 1);
}

TEST_CASE("root_coefficients examples")
{
  const auto& F = test::field(2, "theta^2+theta+1", 0);
  const FiniteField* K = F.fqd();
  const Elem z1 = F.zeta(1), z2 = F.zeta(2);
  CHECK(root_coefficients(K, F.zetas(), {z1, z2}) == std::vector<Elem>{0, 1});
  CHECK(root_coefficients(K, F.zetas(), {K->mul(z1, z1), K->mul(z2, z2)}) == std::vector<Elem>{1, 1});
  const Elem c = parse_element(*K, "z");
  CHECK(root_coefficients(K, F.zetas(), {c, c}) == std::vector<Elem>{c, 0});
}

TEST_CASE("root_coefficients: Vandermonde route equals the periodicity route")
{
  std::mt19937_64 rng(13);
  for (const auto& [q, p] : std::vector<std::pair<unsigned, std::string>>{
           {2, "theta^2+theta+1"}, {3, "theta"}, {2, "theta"}, {4, "theta^2+theta+g"}, {2, "theta^3+theta+1"}}) {
    const auto& F = test::field(q, p, 0);
    const FiniteField* K = F.fqd();
    const std::size_t max_len = 3 * (F.norm_p() - 1) + 1;
    for (int t = 0; t < 25; ++t) {
      std::vector<Elem> phi(1 + rng() % max_len);
      for (auto& e : phi) e = static_cast<Elem>(rng() % K->size());
      std::vector<Elem> values;
      for (Elem z : F.zetas()) values.push_back(Poly(K, phi).eval(z));
      CHECK(root_coefficients(K, F.zetas(), values) == root_coefficients_periodic(F.prime(), K, phi));
    }
  }
}

TEST_CASE("twist equivariance of root coefficients")
{
  // φ with coefficients in K_0(ζ); 𝔣 = 𝔠_a acts on the coefficients.
  std::mt19937_64 rng(14);
  const auto& F = test::field(2, "theta^2+theta+1", 0);
  const FiniteField* K = F.fqd();
  for (int t = 0; t < 5; ++t) {
    std::vector<TorsionElem> phi;
    for (int i = 0; i < 4; ++i) phi.push_back(test::random_elem(rng, F, 3));
    const Poly a = test::random_poly(rng, test::fq(2), 3);
    auto values = [&](const std::vector<TorsionElem>& f) {
      std::vector<TorsionElem> out;
      for (Elem z : F.zetas()) {
        TorsionElem acc = F.zero();
        for (std::size_t i = 0; i < f.size(); ++i) acc += f[i].scaled(K->pow(z, i));
        out.push_back(acc);
      }
      return out;
    };
    std::vector<TorsionElem> twisted;
    for (const auto& c : phi) twisted.push_back(carlitz_eval(a, c));
    const auto lhs = root_coefficients(K, F.zetas(), values(twisted));
    const auto rhs = root_coefficients(K, F.zetas(), values(phi));
    for (std::size_t l = 0; l < lhs.size(); ++l) CHECK(lhs[l] == carlitz_eval(a, rhs[l]));
  }
}

TEST_CASE("Lagrange interpolation over the unit group")
{
  const auto& F = test::field(2, "theta^2+theta+1", 0);
  const FiniteField* K = F.fqd();
  const Elem z = F.zeta(1);
  const auto units = residue_enum(F.prime(), 0, true);
  REQUIRE(units.size() == 3);

  const auto ones = lagrange_unit_interpolation(F.prime(), K, z, units, std::vector<Elem>(3, 1));
  CHECK(ones == std::vector<Elem>{1, 0, 0});

  std::vector<Elem> at;
  for (const auto& u : units) at.push_back(u.rebind(K).eval(z));
  CHECK(lagrange_unit_interpolation(F.prime(), K, z, units, at) == std::vector<Elem>{0, 1, 0});

  // indicator of a = 1: brute force over all 64 coefficient triples
  std::vector<Elem> ind;
  for (const auto& u : units) ind.push_back(u.is_one() ? 1 : 0);
  const auto c = lagrange_unit_interpolation(F.prime(), K, z, units, ind);
  int solutions = 0;
  for (Elem c0 = 0; c0 < 4; ++c0)
    for (Elem c1 = 0; c1 < 4; ++c1)
      for (Elem c2 = 0; c2 < 4; ++c2) {
        bool ok = true;
        for (std::size_t u = 0; u < 3; ++u) {
          const Elem v = K->add(K->add(c0, K->mul(c1, at[u])), K->mul(c2, K->mul(at[u], at[u])));
          ok = ok && v == ind[u];
        }
        if (ok) {
          ++solutions;
          CHECK(c == std::vector<Elem>{c0, c1, c2});
        }
      }
  CHECK(solutions == 1);
}

TEST_CASE("factor_poly examples")
{
  auto f1 = factor_poly(P(2, "theta^2+theta+1"));
  REQUIRE(f1.factors.size() == 1);
  CHECK(f1.factors[0].poly == P(2, "theta^2+theta+1"));
  CHECK(f1.factors[0].multiplicity == 1);

  auto f2 = factor_poly(P(2, "theta^2+1"));
  REQUIRE(f2.factors.size() == 1);
  CHECK(f2.factors[0].poly == P(2, "theta+1"));
  CHECK(f2.factors[0].multiplicity == 2);

  auto f3 = factor_poly(P(2, "theta^4+theta"));
  REQUIRE(f3.factors.size() == 3);
  CHECK(f3.factors[0].poly == P(2, "theta"));
  CHECK(f3.factors[1].poly == P(2, "theta+1"));
  CHECK(f3.factors[2].poly == P(2, "theta^2+theta+1"));
  CHECK_THROWS_AS(factor_poly(Poly(test::fq(2))), std::domain_error);
}

TEST_CASE("factor_poly properties")
{
  std::mt19937_64 rng(15);
  for (unsigned q : {2u, 3u, 4u, 9u}) {
    const FiniteField* f = test::fq(q);
    for (int t = 0; t < 20; ++t) {
      Poly g = test::random_poly(rng, f, 2 + rng() % 12);
      if (g.is_zero()) continue;
      if (t % 3 == 0) g = g * g;
      const auto fac = factor_poly(g, rng());
      CHECK(expand(fac, f) == g);
      int total = 0;
      for (const auto& x : fac.factors) {
        CHECK(x.poly.is_monic());
        CHECK(is_irreducible(x.poly));
        total += x.poly.degree() * static_cast<int>(x.multiplicity);
      }
      CHECK(total == g.degree());
    }
  }
}
