#include <carlitz/report.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

namespace {

int write_json(const nlohmann::json& j, const std::string& path)
{
  const std::string text = j.dump(2) + "\n";
  if (path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return 2;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Carlitz torsion fields: exact omega hyperderivatives, valuations, integral bases, L-matrices"};
  app.set_version_flag("--version", carlitz::kVersion);
  app.require_subcommand(1);

  carlitz::Config cfg;
  std::string json_path;
  std::string certificate;
  bool seed_echo = false;
  bool exact_only = false;
  unsigned analytic_n = 0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--q", cfg.q, "size of the constant field (a prime power)")->required();
    sub->add_option("--p", cfg.p, "monic irreducible prime, e.g. theta^2+theta+1 or 1,1,1")->required();
    sub->add_option("--n", cfg.n, "torsion level: the field of P^(n+1)-torsion")->default_val(0);
    sub->add_option("--digits", cfg.digits, "v-digit floor for analytic comparisons")->default_val(40);
    sub->add_option("--json", json_path, "write the JSON report to PATH ('-' for stdout)");
    sub->add_flag("--seed-echo", seed_echo, "print the deterministic seed");
  };

  std::vector<CLI::App*> subs;
  auto* verify = app.add_subcommand("verify", "run every exact suite and the analytic oracle");
  verify->add_flag("--exact-only", exact_only, "skip the analytic stages");
  verify->add_option("--series-degree", cfg.series_degree, "N for the truncated L-series")->default_val(8);
  subs.push_back(verify);
  subs.push_back(app.add_subcommand("omega", "tabulate q-polynomials, torsion coefficients and omega values"));
  subs.push_back(app.add_subcommand("valuations", "valuation table and minimal polynomial Newton polygons"));
  auto* basis = app.add_subcommand("basis", "digit-derivative integral basis determinant and normal basis");
  basis->add_option("--certificate", certificate, "write the labeled matrix and unit verdict to PATH");
  subs.push_back(basis);
  auto* lmat = app.add_subcommand("lmatrix", "exact L-matrix, equivariance and integrality");
  lmat->add_option("--analytic", analytic_n, "compare with the L-series truncated at degree N");
  subs.push_back(lmat);
  auto* oracle = app.add_subcommand("oracle", "Laurent-series cross-checks at the infinite place");
  oracle->add_option("--series-degree", cfg.series_degree, "N for the truncated L-series")->default_val(8);
  subs.push_back(oracle);
  subs.push_back(app.add_subcommand("experiment", "factor the norms of the omega values"));
  for (auto* s : subs) common(s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  if (command == "verify") cfg.analytic = !exact_only;
  if (command == "lmatrix") {
    cfg.analytic = analytic_n > 0;
    if (analytic_n > 0) cfg.series_degree = analytic_n;
  }

  carlitz::Report rep;
  try {
    rep = carlitz::run_command(command, cfg);
  } catch (const carlitz::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  // with --json - the document owns stdout and the text goes to stderr
  std::ostream& text = json_path == "-" || certificate == "-" ? std::cerr : std::cout;
  for (const auto& line : rep.lines) text << line << "\n";
  text << "timings:";
  for (const auto& t : rep.timings) {
    char buf[96];
    std::snprintf(buf, sizeof buf, " %s=%.1fms", t.stage.c_str(), t.ms);
    text << buf;
  }
  text << "\n";
  if (seed_echo) text << "seed " << rep.json["config"]["seed"].get<std::uint64_t>() << "\n";
  text << (rep.pass ? "RESULT PASS" : "RESULT FAIL") << "\n";

  if (!certificate.empty() && write_json(rep.json, certificate) != 0) return 2;
  if (!json_path.empty() && write_json(rep.json, json_path) != 0) return 2;
  return rep.pass ? 0 : 1;
}
