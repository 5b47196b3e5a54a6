#include <carlitz/report.hpp>

#include <carlitz/analytic.hpp>
#include <carlitz/basis.hpp>
#include <carlitz/carlitz.hpp>
#include <carlitz/special_l.hpp>
#include <carlitz/valuation.hpp>

#include <chrono>
#include <functional>
#include <sstream>

namespace carlitz {

using nlohmann::json;

std::string canonical_config(const Config& c)
{
  std::ostringstream s;
  s << "q=" << c.q << ";p=" << c.p << ";n=" << c.n << ";digits=" << c.digits << ";N=" << c.series_degree
    << ";analytic=" << (c.analytic ? 1 : 0) << ";version=" << kVersion;
  return s.str();
}

std::uint64_t config_seed(const Config& c)
{
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : canonical_config(c)) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

const TorsionField& open_field(const Config& c)
{
  if (c.digits <= 0) throw ConfigError("--digits must be positive");
  try {
    return TorsionField::make(c.q, c.p, c.n);
  } catch (const FieldError& e) {
    throw ConfigError(e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

const std::vector<std::string>& command_names()
{
  static const std::vector<std::string> names{"verify", "omega", "valuations", "basis", "lmatrix", "oracle", "experiment"};
  return names;
}

namespace {

class Builder {
 public:
  Builder(const std::string& command, const Config& c, const TorsionField& F)
  {
    const FiniteField* K = F.fqd();
    json zetas = json::array();
    for (Elem z : F.zetas()) zetas.push_back(K->format(z));
    r_.json = {
        {"tool", "carlitz"},
        {"version", kVersion},
        {"command", command},
        {"config",
         {{"q", c.q}, {"p", c.p}, {"n", c.n}, {"digits", c.digits}, {"series_degree", c.series_degree},
          {"seed", config_seed(c)}}},
        {"field",
         {{"d", F.d()},
          {"degree", F.degree()},
          {"norm_p", F.norm_p()},
          {"phi", xpoly_format(F.cyclotomic().phi)},
          {"zetas", zetas},
          {"generators", {{"F_q", F.fq()->generator_name()}, {"F_q^d", K->generator_name()}}}}},
        {"checks", json::array()},
        {"data", json::object()},
    };
    r_.lines.push_back(F.describe());
    r_.lines.push_back("Phi(X) = " + xpoly_format(F.cyclotomic().phi));
  }

  template <class Fn>
  auto timed(const std::string& stage, Fn&& fn)
  {
    const auto t0 = std::chrono::steady_clock::now();
    auto out = fn();
    const auto t1 = std::chrono::steady_clock::now();
    r_.timings.push_back({stage, std::chrono::duration<double, std::milli>(t1 - t0).count()});
    return out;
  }

  void check(const std::string& id, const CheckResult& res, json extra = json::object())
  {
    json j = {{"id", id}, {"name", res.name}, {"pass", res.pass}, {"detail", res.detail}};
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    r_.json["checks"].push_back(std::move(j));
    r_.lines.push_back(std::string(res.pass ? "PASS " : "FAIL ") + id + ": " + res.name +
                       (res.detail.empty() ? "" : " [" + res.detail + "]"));
    r_.pass = r_.pass && res.pass;
  }

  void oracle(const std::string& id, const OracleReport& rep)
  {
    json residuals = json::array();
    for (const auto& x : rep.residuals)
      residuals.push_back({{"name", x.name},
                           {"diff_valuation", x.diff_val},
                           {"ref_valuation", x.ref_val},
                           {"score", x.exact ? json(nullptr) : json(x.score())},
                           {"relative", x.relative},
                           {"zero_to_precision", x.zero_to_precision},
                           {"pass", x.pass()}});
    const std::int64_t ms = rep.min_score();
    CheckResult res(rep.name + " (floor " + std::to_string(rep.floor) + " v-digits)", rep.pass,
                    "min score " + (ms >= Laurent::kExact ? std::string("exact") : std::to_string(ms)) +
                        ", cap " + std::to_string(rep.cap) + ", escalations " + std::to_string(rep.escalations));
    check(id, res,
          {{"floor", rep.floor},
           {"cap", rep.cap},
           {"escalations", rep.escalations},
           {"residuals", residuals},
           {"notes", rep.notes}});
    for (const auto& n : rep.notes) r_.lines.push_back("  " + n);
  }

  json& data() { return r_.json["data"]; }
  void line(std::string s) { r_.lines.push_back(std::move(s)); }

  void timing(const std::string& stage, double ms) { r_.timings.push_back({stage, ms}); }

  Report finish()
  {
    r_.json["pass"] = r_.pass;
    return std::move(r_);
  }

 private:
  Report r_;
};

std::string fmt_poly(const Poly& p) { return p.format("theta"); }

json omega_json(const TorsionField& F)
{
  const OmegaTable& T = omega_table(F);
  json out = json::array();
  for (unsigned j = 0; j <= F.level(); ++j)
    for (unsigned k = 1; k <= F.d(); ++k)
      out.push_back({{"j", j}, {"k", k}, {"value", T.omega(j, k).format()}});
  return out;
}

// ---------------------------------------------------------------------------

void exact_suite(Builder& b, const TorsionField& F, std::uint64_t seed)
{
  const OmegaTable& T = b.timed("omega table", [&] { return std::cref(omega_table(F)); });
  b.check("torsion_coeffs", b.timed("torsion_coeffs", [&] { return check_torsion_coeffs(T); }));
  b.check("galois_action", b.timed("galois_action", [&] { return check_galois_action(T); }));
  b.check("frobenius_shift", b.timed("frobenius_shift", [&] { return check_frobenius_shift(T); }));
  b.check("recursion", b.timed("recursion", [&] { return check_recursion(T); }));
  b.check("frobenius_not_qpower", b.timed("frobenius_not_qpower", [&] { return check_frobenius_not_qpower(T); }));
  b.check("rho_multiplicative", b.timed("rho_multiplicative", [&] { return check_rho_multiplicative(F); }));
  b.check("tower_consistency", b.timed("tower_consistency", [&] { return check_tower_consistency(T); }));
  std::size_t esc = 0;
  const CheckResult eig = b.timed("generalized_eigen", [&] { return check_generalized_eigen(T, &esc); });
  b.check("generalized_eigen", eig, {{"escalations", esc}});
  CheckResult qp("q_poly congruence matches root interpolation", true);
  for (unsigned j = 0; j <= F.level(); ++j) {
    const CheckResult r = check_q_poly(F.prime(), j);
    if (!r.pass) qp.fail("j=" + std::to_string(j) + ": " + r.detail);
  }
  if (qp.pass) qp.detail = "orders 0.." + std::to_string(F.level());
  b.check("q_poly", qp);

  b.check("valuations", b.timed("valuations", [&] { return check_valuations(F); }));
  CheckResult mp("minimal polynomial identities with a single Newton slope", true);
  for (unsigned i = 1; i <= F.d(); ++i)
    for (unsigned j = 0; j < F.d(); ++j) {
      const MinPolyReport r = min_poly_check(F, i, j);
      if (!r.result.pass) mp.fail(r.result.name + ": " + r.result.detail);
    }
  if (mp.pass) mp.detail = std::to_string(F.d() * F.d()) + " (i, j) pairs";
  b.check("min_poly", mp);

  const BasisReport basis = b.timed("basis_determinant", [&] { return basis_determinant_test(F); });
  b.check("basis_determinant", basis.result,
          {{"determinant", fmt_poly(basis.determinant)},
           {"is_unit", basis.is_unit},
           {"all_integral", basis.all_integral},
           {"inverse_integral", basis.inverse_integral}});
  b.check("basis_for_extension", b.timed("basis_for_extension", [&] { return check_basis_for_extension(F, 8, seed); }));
  const NormalBasisReport nb = b.timed("normal_basis", [&] { return normal_basis_rank(F); });
  b.check("normal_basis", nb.result, {{"orbit_size", nb.orbit_size}, {"rank", nb.rank}});
  if (F.level() == 0) {
    CheckResult iso("isotypic decomposition of digit monomials", true);
    for (const auto& e : digit_basis_exponents(F)) {
      const TorsionElem y = digit_monomial(T, e);
      const auto parts = isotypic_decompose(y);
      const CheckResult r = check_isotypic(y, parts);
      if (!r.pass) iso.fail(format_exponents(e) + ": " + r.detail);
    }
    if (iso.pass) iso.detail = std::to_string(F.degree()) + " monomials";
    b.check("isotypic", iso);
  }
  const LMatrix L = b.timed("l_matrix", [&] { return l_matrix(F); });
  b.check("l_equivariance", b.timed("l_equivariance", [&] { return l_equivariance_check(F, L); }));
  b.check("l_integrality", l_integrality_check(F, L).result);
  b.check("hyper_vanishing", check_hyper_vanishing(F, 16, seed));
}

void analytic_suite(Builder& b, const TorsionField& F, const Config& c)
{
  b.oracle("embed_compare", b.timed("embed_compare", [&] { return embed_compare(F, c.digits); }));
  b.oracle("route_agreement", b.timed("route_agreement", [&] { return route_agreement(F, c.digits); }));
  b.oracle("pellarin", b.timed("pellarin", [&] { return pellarin_check(F, 1, c.series_degree); }));
  const LMatrix L = l_matrix(F);
  b.oracle("l_cross_check", b.timed("l_cross_check", [&] { return l_cross_check(F, L, c.series_degree); }));
}

// ---------------------------------------------------------------------------

void cmd_omega(Builder& b, const TorsionField& F)
{
  const OmegaTable& T = omega_table(F);
  json qp = json::array();
  json coeffs = json::array();
  for (unsigned j = 0; j <= F.level(); ++j) {
    json row = json::array();
    std::string text;
    for (const auto& c : T.qpoly(j).coeffs) {
      row.push_back(fmt_poly(c));
      text += (text.empty() ? "" : " ; ") + fmt_poly(c);
    }
    qp.push_back(row);
    b.line("q_(" + std::to_string(j) + ") coefficients: " + text);
    for (unsigned i = 0; i < F.d(); ++i) coeffs.push_back({{"j", j}, {"i", i}, {"value", T.coeff(j, i).format()}});
  }
  b.data()["q_poly"] = qp;
  b.data()["torsion_coeffs"] = coeffs;
  b.data()["omega"] = omega_json(F);
  for (unsigned j = 0; j <= F.level(); ++j)
    for (unsigned k = 1; k <= F.d(); ++k)
      b.line("omega^(" + std::to_string(j) + ")(zeta_" + std::to_string(k) + ") = " + T.omega(j, k).format());
  b.check("torsion_coeffs", check_torsion_coeffs(T));
  b.check("galois_action", check_galois_action(T));
}

void cmd_valuations(Builder& b, const TorsionField& F)
{
  const auto table = valuation_table(F);
  json rows = json::array();
  CheckResult res = check_valuations(F);
  b.line("slopes are valuations of roots; v_i is normalized by v_i(theta - zeta_i) = 1");
  b.line("  n  i  j  value  expected");
  for (const auto& e : table) {
    rows.push_back({{"n", e.n}, {"i", e.i}, {"j", e.j}, {"value", e.value.format()}, {"expected", e.expected.format()}});
    b.line("  " + std::to_string(e.n) + "  " + std::to_string(e.i) + "  " + std::to_string(e.j) + "  " +
           e.value.format() + "  " + e.expected.format());
  }
  b.data()["table"] = rows;
  json polys = json::array();
  for (unsigned i = 1; i <= F.d(); ++i)
    for (unsigned j = 0; j < F.d(); ++j) {
      const MinPolyReport r = min_poly_check(F, i, j);
      json slopes = json::array();
      for (const auto& s : r.polygon) slopes.push_back({{"slope", s.slope.format()}, {"multiplicity", s.multiplicity}});
      polys.push_back({{"i", i}, {"j", j}, {"root_identity", r.root_identity}, {"slopes", slopes},
                       {"expected", r.expected.format()}, {"pass", r.result.pass}});
      b.check("min_poly_" + std::to_string(i) + "_" + std::to_string(j), r.result);
    }
  b.data()["min_poly"] = polys;
  b.check("valuations", res);
}

void cmd_basis(Builder& b, const TorsionField& F)
{
  const BasisReport rep = basis_determinant_test(F);
  json labels = json::array();
  for (const auto& e : rep.labels) labels.push_back(e);
  json matrix = json::array();
  for (const auto& row : rep.matrix) {
    json r = json::array();
    for (const auto& e : row) r.push_back(fmt_poly(e));
    matrix.push_back(r);
  }
  b.data()["labels"] = labels;
  b.data()["label_format"] = "labels[c][j][i] is the exponent of omega^(j)(zeta_{i+1}) in column c";
  b.data()["matrix"] = matrix;
  b.data()["matrix_rows"] = "row k holds the coefficient of x_n^k";
  b.data()["determinant"] = fmt_poly(rep.determinant);
  b.data()["is_unit"] = rep.is_unit;
  b.data()["all_integral"] = rep.all_integral;
  b.data()["inverse_integral"] = rep.inverse_integral;
  b.data()["adjugate_identity"] = rep.adjugate_identity;
  for (std::size_t c = 0; c < rep.labels.size(); ++c) b.line("  column " + std::to_string(c) + ": " + format_exponents(rep.labels[c]));
  b.line("determinant = " + fmt_poly(rep.determinant) + (rep.is_unit ? " (unit)" : " (not a unit)"));
  b.check("basis_determinant", rep.result);
  const NormalBasisReport nb = normal_basis_rank(F);
  b.data()["normal_basis"] = {{"orbit_size", nb.orbit_size}, {"rank", nb.rank}, {"full", nb.full}};
  b.check("normal_basis", nb.result);
}

void cmd_lmatrix(Builder& b, const TorsionField& F, const Config& c, bool analytic)
{
  const LMatrix L = l_matrix(F);
  json diag = json::array();
  for (unsigned k = 0; k < L.size(); ++k) {
    diag.push_back(L.diagonal(k).format());
    b.line("L^(" + std::to_string(k) + ") = " + L.diagonal(k).format());
  }
  b.data()["diagonals"] = diag;
  b.data()["toeplitz"] = L.is_toeplitz();
  const LIntegrality li = l_integrality_check(F, L);
  json integral = json::array();
  for (bool x : li.integral) integral.push_back(x);
  b.data()["integral"] = integral;
  b.data()["p_times_corner_integral"] = li.top_times_p_integral;
  b.check("l_equivariance", l_equivariance_check(F, L));
  b.check("l_integrality", li.result);
  if (analytic) b.oracle("l_cross_check", l_cross_check(F, L, c.series_degree));
}

void cmd_oracle(Builder& b, const TorsionField& F, const Config& c)
{
  Analytic A(F, c.digits + 8);
  b.data()["pi_tilde"] = A.pi_tilde().format(8);
  b.data()["uniformizer"] = "theta = -v^-(q-1), lambda_theta = v^-1";
  b.line("pi~ = " + A.pi_tilde().format(8));
  analytic_suite(b, F, c);
}

void cmd_experiment(Builder& b, const TorsionField& F, std::uint64_t seed)
{
  json rows = json::array();
  b.line("norm factorizations of omega^(j)(zeta_i) over F_{q^d}[theta]");
  for (unsigned j = 0; j <= F.level(); ++j)
    for (unsigned i = 1; i <= F.d(); ++i) {
      const NormFactorReport r = norm_factor_experiment(F, j, i, seed);
      auto list = [](const std::vector<Factor>& fs) {
        json out = json::array();
        for (const auto& f : fs) out.push_back({{"factor", f.poly.format("theta")}, {"multiplicity", f.multiplicity}});
        return out;
      };
      rows.push_back({{"j", j},
                      {"i", i},
                      {"norm", r.norm.format()},
                      {"unit", F.fqd()->format(r.factors.unit)},
                      {"above_p", list(r.above_p)},
                      {"other_primes", list(r.other)}});
      std::string text;
      for (const auto& f : r.factors.factors)
        text += " (" + f.poly.format("theta") + ")^" + std::to_string(f.multiplicity);
      b.line("  j=" + std::to_string(j) + " i=" + std::to_string(i) + ":" + text +
             (r.other.empty() ? "" : "  [other primes present]"));
    }
  b.data()["norm_factors"] = rows;
  b.data()["factor_seed"] = seed;
}

}  // namespace

Report run_command(const std::string& command, const Config& c)
{
  bool known = false;
  for (const auto& n : command_names()) known = known || n == command;
  if (!known) throw std::invalid_argument("unknown command: " + command);
  const TorsionField& F = open_field(c);
  Config cc = c;
  cc.p = F.prime().format();
  const std::uint64_t seed = config_seed(cc);
  const auto t0 = std::chrono::steady_clock::now();
  Builder b(command, cc, F);
  if (command == "verify") {
    exact_suite(b, F, seed);
    if (c.analytic) analytic_suite(b, F, c);
  } else if (command == "omega") {
    cmd_omega(b, F);
  } else if (command == "valuations") {
    cmd_valuations(b, F);
  } else if (command == "basis") {
    cmd_basis(b, F);
  } else if (command == "lmatrix") {
    cmd_lmatrix(b, F, c, c.analytic);
  } else if (command == "oracle") {
    cmd_oracle(b, F, c);
  } else if (command == "experiment") {
    cmd_experiment(b, F, seed);
  }
  b.timing("total", std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
  return b.finish();
}

}  // namespace carlitz
