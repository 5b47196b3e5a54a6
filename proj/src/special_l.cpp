#include <carlitz/special_l.hpp>

#include <carlitz/basis.hpp>
#include <carlitz/carlitz.hpp>

#include <random>
#include <stdexcept>

namespace carlitz {

bool LMatrix::is_toeplitz() const
{
  for (std::size_t r = 0; r < entries.size(); ++r)
    for (std::size_t c = 0; c < entries.size(); ++c) {
      if (c < r) {
        if (!entries[r][c].is_zero()) return false;
      } else if (entries[r][c] != entries[0][c - r]) {
        return false;
      }
    }
  return true;
}

LMatrix l_matrix(const TorsionField& field, unsigned zeta_index)
{
  const FiniteField* K = field.fqd();
  const unsigned n = field.level();
  const std::size_t size = n + 1;
  LMatrix L;
  L.q = field.q();
  L.prime = field.prime();
  L.n = n;
  L.zeta_index = zeta_index;
  L.entries.assign(size, std::vector<TorsionElem>(size, field.zero()));
  const Elem z = field.zeta(zeta_index);
  for (const Poly& a : residue_enum(field.prime(), n, false)) {
    if (a.is_zero()) continue;
    const TorsionElem inv = carlitz_eval(a, field.x()).inverse();
    const UTToeplitz rho = rho_matrix(a, K, z, size);
    for (std::size_t r = 0; r < size; ++r)
      for (std::size_t c = r; c < size; ++c) {
        const Elem e = rho.entry(r, c);
        if (e != 0) L.entries[r][c] += inv.scaled(K->neg(e));
      }
  }
  return L;
}

CheckResult l_equivariance_check(const TorsionField& field, const LMatrix& L)
{
  const FiniteField* K = field.fqd();
  const std::size_t size = L.size();
  CheckResult res("sigma_a(L) = rho(a)^{-1} L", true);
  std::size_t count = 0;
  for (const Poly& a : residue_enum(field.prime(), field.level(), true)) {
    const Substitution& s = field.sigma(a);
    const UTToeplitz rinv = rho_matrix(a, K, field.zeta(L.zeta_index), size).inverse();
    for (std::size_t r = 0; r < size && res.pass; ++r)
      for (std::size_t c = 0; c < size; ++c) {
        TorsionElem rhs = field.zero();
        for (std::size_t k = 0; k < size; ++k) {
          const Elem e = rinv.entry(r, k);
          if (e != 0) rhs += L.entries[k][c].scaled(e);
        }
        if (s.apply(L.entries[r][c]) != rhs) {
          res.fail("a=" + a.format("theta") + " entry (" + std::to_string(r) + "," + std::to_string(c) + ")");
          break;
        }
      }
    ++count;
  }
  if (res.pass) res.detail = std::to_string(count) + " units";
  return res;
}

LIntegrality l_integrality_check(const TorsionField& field, const LMatrix& L)
{
  LIntegrality out;
  out.result = CheckResult("L entries integral except the corner; p * corner integral", true);
  const std::size_t size = L.size();
  if (!L.is_toeplitz()) out.result.fail("L is not upper-triangular Toeplitz");
  for (std::size_t k = 0; k < size; ++k) {
    out.integral.push_back(is_integral(L.diagonal(static_cast<unsigned>(k))).integral);
    if (k + 1 < size && !out.integral.back())
      out.result.fail("L^(" + std::to_string(k) + ") is not integral");
  }
  out.top_times_p_integral = is_integral(L.diagonal(static_cast<unsigned>(size - 1)).scaled(field.prime())).integral;
  if (!out.top_times_p_integral) out.result.fail("p * L^(n) is not integral");
  if (out.result.pass)
    out.result.detail = std::string("corner ") + (out.integral.back() ? "integral" : "not integral") +
                        ", p * corner integral";
  return out;
}

CheckResult check_hyper_vanishing(const TorsionField& field, unsigned samples, std::uint64_t seed)
{
  const FiniteField* K = field.fqd();
  const unsigned n = field.level();
  CheckResult res("a^(j)(zeta) = 0 for a in p^{n+1}A and j <= n", true);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Elem> coef(0, field.fq()->size() - 1);
  const Poly pn = pow(field.prime(), n + 1);
  for (unsigned s = 0; s < samples; ++s) {
    std::vector<Elem> c(4);
    for (auto& e : c) e = coef(rng);
    const Poly a = pn * Poly(field.fq(), c);
    for (unsigned k = 1; k <= field.d(); ++k) {
      const auto h = hyper_expand(a.rebind(K), K, field.zeta(k), n);
      for (unsigned j = 0; j <= n; ++j)
        if (h[j] != 0) res.fail("a=" + a.format("theta") + " j=" + std::to_string(j));
    }
  }
  if (res.pass) res.detail = std::to_string(samples) + " samples";
  return res;
}

}  // namespace carlitz
