#include <carlitz/report.hpp>

#include <algorithm>

#include <doctest.h>

using namespace carlitz;

namespace {

Config cfg(unsigned q, const std::string& p, unsigned n)
{
  Config c;
  c.q = q;
  c.p = p;
  c.n = n;
  return c;
}

}  // namespace

TEST_CASE("verify passes and is deterministic")
{
  const Config c = cfg(2, "theta^2+theta+1", 1);
  const Report a = run_command("verify", c);
  const Report b = run_command("verify", c);
  CHECK(a.pass);
  CHECK(a.json.dump() == b.json.dump());
  CHECK(a.json["version"] == kVersion);
  CHECK(a.json["config"]["seed"] == config_seed(cfg(2, "theta^2+theta+1", 1)));
  for (const auto& check : a.json["checks"]) CHECK(check["pass"] == true);
  // equivalent spellings of the prime give the same report
  CHECK(run_command("verify", cfg(2, "1,1,1", 1)).json.dump() == a.json.dump());
}

TEST_CASE("config errors")
{
  CHECK_THROWS_AS(run_command("verify", cfg(2, "theta^2+theta", 0)), ConfigError);
  CHECK_THROWS_AS(run_command("verify", cfg(6, "theta", 0)), ConfigError);
  CHECK_THROWS_AS(run_command("verify", cfg(2, "theta^", 0)), ConfigError);
  CHECK_THROWS_AS(run_command("nope", cfg(2, "theta", 0)), std::invalid_argument);
  Config bad = cfg(2, "theta", 0);
  bad.digits = 0;
  CHECK_THROWS_AS(run_command("oracle", bad), ConfigError);
}

TEST_CASE("prime-power base field path")
{
  const Report r = run_command("verify", cfg(4, "theta", 0));
  CHECK(r.pass);
  CHECK(r.json["field"]["degree"] == 3);
}

TEST_CASE("valuations command grid")
{
  const Report r = run_command("valuations", cfg(2, "theta^2+theta+1", 1));
  CHECK(r.pass);
  std::vector<std::string> values;
  for (const auto& row : r.json["data"]["table"]) values.push_back(row["value"]);
  for (const char* v : {"1/12", "1/6", "1/3", "2/3"}) CHECK(std::find(values.begin(), values.end(), v) != values.end());
}

TEST_CASE("basis command certificate")
{
  const Report r = run_command("basis", cfg(3, "theta", 1));
  CHECK(r.pass);
  CHECK(r.json["data"]["is_unit"] == true);
  CHECK(r.json["data"]["matrix"].size() == 6);
  CHECK(r.json["data"]["labels"].size() == 6);
}

TEST_CASE("experiment and lmatrix commands")
{
  const Report e = run_command("experiment", cfg(2, "theta^2+theta+1", 1));
  CHECK(e.json["data"]["norm_factors"].size() == 4);
  Config c = cfg(3, "theta", 1);
  c.series_degree = 8;
  const Report l = run_command("lmatrix", c);
  CHECK(l.pass);
  CHECK(l.json["data"]["diagonals"].size() == 2);
  const Report o = run_command("oracle", cfg(3, "theta", 1));
  CHECK(o.pass);
}
