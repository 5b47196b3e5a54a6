#include "helpers.hpp"

#include <carlitz/special_l.hpp>

#include <doctest.h>

using namespace carlitz;
using test::P;

TEST_CASE("L-matrix examples")
{
  const auto& F2 = test::field(2, "theta", 0);
  const LMatrix a = l_matrix(F2);
  REQUIRE(a.size() == 1);
  CHECK(a.diagonal(0) == F2.theta().inverse());

  const auto& F3 = test::field(3, "theta", 0);
  const LMatrix b = l_matrix(F3);
  CHECK(b.diagonal(0) == F3.x().inverse());
  CHECK(b.diagonal(0).format() == "(2*x)/(theta)");
}

TEST_CASE("L-matrix equivariance and integrality")
{
  for (const auto& [q, p, n] : std::vector<std::tuple<unsigned, std::string, unsigned>>{
           {2, "theta^2+theta+1", 0}, {2, "theta^2+theta+1", 1}, {3, "theta", 0}, {3, "theta", 1},
           {3, "theta", 2}, {2, "theta", 1}, {2, "theta", 2}}) {
    const auto& F = test::field(q, p, n);
    const LMatrix L = l_matrix(F);
    CHECK(L.is_toeplitz());
    CHECK(l_equivariance_check(F, L).pass);
    const LIntegrality li = l_integrality_check(F, L);
    CHECK(li.result.pass);
    CHECK(li.top_times_p_integral);
    for (std::size_t k = 0; k + 1 < li.integral.size(); ++k) CHECK(li.integral[k]);
  }
}

TEST_CASE("hyperderivatives of multiples of p^{n+1} vanish")
{
  for (const auto& [q, p, n] : std::vector<std::tuple<unsigned, std::string, unsigned>>{
           {2, "theta^2+theta+1", 1}, {3, "theta", 2}})
    CHECK(check_hyper_vanishing(test::field(q, p, n), 20, 5).pass);
}
