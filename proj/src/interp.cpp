#include <carlitz/interp.hpp>

#include <algorithm>
#include <set>

namespace carlitz {

MultiIndex::MultiIndex(std::vector<unsigned> e, unsigned q) : e_(std::move(e)), q_(q)
{
  for (unsigned x : e_)
    if (x >= q_) throw std::invalid_argument("multi-index digit out of range");
}

bool MultiIndex::operator<=(const MultiIndex& o) const
{
  if (e_.size() != o.e_.size()) throw std::invalid_argument("multi-index length mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

bool MultiIndex::is_all_max() const
{
  return std::all_of(e_.begin(), e_.end(), [&](unsigned x) { return x == q_ - 1; });
}

std::uint64_t MultiIndex::character_exponent() const
{
  std::uint64_t k = 0;
  std::uint64_t w = 1;
  for (unsigned x : e_) {
    k += x * w;
    w *= q_;
  }
  return k;
}

std::vector<MultiIndex> MultiIndex::enumerate(unsigned q, unsigned d, bool with_max)
{
  std::uint64_t total = 1;
  for (unsigned i = 0; i < d; ++i) total *= q;
  std::vector<MultiIndex> out;
  for (std::uint64_t k = 0; k < total; ++k) {
    std::vector<unsigned> e(d);
    std::uint64_t r = k;
    for (unsigned i = 0; i < d; ++i) {
      e[i] = static_cast<unsigned>(r % q);
      r /= q;
    }
    MultiIndex m(std::move(e), q);
    if (!with_max && m.is_all_max()) continue;
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Elem> solve_elem_system(const FiniteField* F, std::vector<std::vector<Elem>> m,
                                    std::vector<Elem> b)
{
  const std::size_t n = m.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) throw std::domain_error("singular linear system over a finite field");
    std::swap(m[piv], m[c]);
    std::swap(b[piv], b[c]);
    const Elem inv = F->inv(m[c][c]);
    for (auto& x : m[c]) x = F->mul(x, inv);
    b[c] = F->mul(b[c], inv);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      const Elem f = m[i][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] = F->sub(m[i][j], F->mul(f, m[c][j]));
      b[i] = F->sub(b[i], F->mul(f, b[c]));
    }
  }
  return b;
}

std::vector<std::vector<Elem>> vandermonde_inverse(const FiniteField* F,
                                                   const std::vector<Elem>& zetas)
{
  const std::size_t d = zetas.size();
  std::vector<std::vector<Elem>> v(d, std::vector<Elem>(d));
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = 0; l < d; ++l) v[k][l] = F->pow(zetas[k], l);
  std::vector<std::vector<Elem>> inv(d, std::vector<Elem>(d));
  for (std::size_t c = 0; c < d; ++c) {
    std::vector<Elem> e(d, 0);
    e[c] = 1;
    const auto col = solve_elem_system(F, v, e);
    for (std::size_t r = 0; r < d; ++r) inv[r][c] = col[r];
  }
  return inv;
}

std::vector<std::vector<Elem>> power_residues(const Poly& p)
{
  const FiniteField* F = p.field();
  const std::size_t d = static_cast<std::size_t>(p.degree());
  std::uint64_t rows = 1;  // exponents 0..q^d-1
  for (std::size_t i = 0; i < d; ++i) rows *= F->size();
  std::vector<std::vector<Elem>> out;
  out.reserve(rows);
  Poly cur = Poly::constant(F, 1);
  const Poly t = Poly::variable(F);
  for (std::uint64_t j = 0; j < rows; ++j) {
    std::vector<Elem> row(d, 0);
    for (std::size_t l = 0; l < d; ++l) row[l] = cur.coeff(l);
    out.push_back(std::move(row));
    cur = mulmod(cur, t, p);
  }
  return out;
}

namespace {

struct Scalar {
  const FiniteField* F;
  Elem v;
  Scalar scaled(Elem c) const { return {F, F->mul(v, c)}; }
  Scalar operator+(const Scalar& o) const { return {F, F->add(v, o.v)}; }
};

std::vector<Scalar> wrap(const FiniteField* F, const std::vector<Elem>& v)
{
  std::vector<Scalar> out;
  out.reserve(v.size());
  for (Elem x : v) out.push_back({F, x});
  return out;
}

std::vector<Elem> unwrap(const std::vector<Scalar>& v)
{
  std::vector<Elem> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.v);
  return out;
}

}  // namespace

std::vector<Elem> root_coefficients(const FiniteField* F, const std::vector<Elem>& zetas,
                                    const std::vector<Elem>& values)
{
  return unwrap(root_coefficients(F, zetas, wrap(F, values)));
}

std::vector<Elem> root_coefficients_periodic(const Poly& p, const FiniteField* F,
                                             const std::vector<Elem>& phi)
{
  return unwrap(root_coefficients_periodic(p, wrap(F, phi), Scalar{F, 0}));
}

namespace detail {

std::vector<Elem> unit_values(const Poly& p, const FiniteField* F, Elem zeta,
                              const std::vector<Poly>& units)
{
  std::uint64_t order = 1;
  for (int i = 0; i < p.degree(); ++i) order *= p.field()->size();
  --order;
  if (units.size() != order)
    throw std::invalid_argument("unit table must have one entry per unit residue");
  std::vector<Elem> out;
  std::set<Elem> seen;
  for (const auto& a : units) {
    const Elem v = (a % p).rebind(F).eval(zeta);
    if (v == 0) throw std::invalid_argument("unit table contains a multiple of p");
    if (!seen.insert(v).second) throw std::invalid_argument("unit table contains a duplicate residue");
    out.push_back(v);
  }
  return out;
}

}  // namespace detail

std::vector<Elem> lagrange_unit_interpolation(const Poly& p, const FiniteField* F, Elem zeta,
                                              const std::vector<Poly>& units,
                                              const std::vector<Elem>& values)
{
  return unwrap(lagrange_unit_interpolation(p, F, zeta, units, wrap(F, values), Scalar{F, 0}));
}

}  // namespace carlitz
