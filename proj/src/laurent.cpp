#include <carlitz/laurent.hpp>

#include <algorithm>
#include <stdexcept>

namespace carlitz {

namespace {

using I64 = std::int64_t;

I64 add_prec(I64 a, I64 b)
{
  if (a >= Laurent::kExact || b >= Laurent::kExact) return Laurent::kExact;
  return a + b;
}

}  // namespace

Laurent::Laurent(const FiniteField* field, std::int64_t precision) : field_(field), prec_(precision) {}

Laurent Laurent::monomial(const FiniteField* field, Elem c, std::int64_t e)
{
  return from_coeffs(field, e, {c});
}

Laurent Laurent::from_coeffs(const FiniteField* field, std::int64_t lo, std::vector<Elem> coeffs,
                             std::int64_t precision)
{
  Laurent r(field, precision);
  r.lo_ = lo;
  r.coeffs_ = std::move(coeffs);
  r.normalize();
  return r;
}

Laurent Laurent::theta(const FiniteField* field, unsigned q)
{
  return monomial(field, field->neg(1), -static_cast<I64>(q - 1));
}

Laurent Laurent::from_theta_poly(const FiniteField* field, unsigned q, const Poly& a)
{
  // c_k θ^k = c_k (-1)^k v^{-(q-1)k}
  if (a.is_zero()) return Laurent(field);
  const I64 deg = a.degree();
  const I64 step = static_cast<I64>(q - 1);
  std::vector<Elem> out(static_cast<std::size_t>(deg * step + 1), 0);
  for (I64 k = 0; k <= deg; ++k) {
    Elem c = a.coeff(static_cast<std::size_t>(k));
    if (c == 0) continue;
    if (k % 2 == 1) c = field->neg(c);
    out[static_cast<std::size_t>((deg - k) * step)] = c;
  }
  return from_coeffs(field, -deg * step, std::move(out));
}

void Laurent::normalize()
{
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  if (first) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
    lo_ += static_cast<I64>(first);
  }
  if (prec_ < kExact) {
    if (prec_ <= lo_) coeffs_.clear();
    else if (static_cast<I64>(coeffs_.size()) > prec_ - lo_) coeffs_.resize(static_cast<std::size_t>(prec_ - lo_));
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) lo_ = 0;
}

std::int64_t Laurent::valuation() const { return coeffs_.empty() ? prec_ : lo_; }

Elem Laurent::coeff(std::int64_t e) const
{
  if (e >= prec_) throw std::out_of_range("coefficient beyond the known precision");
  if (e < lo_ || e >= lo_ + static_cast<I64>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(e - lo_)];
}

Elem Laurent::leading() const { return coeffs_.empty() ? 0 : coeffs_.front(); }

Laurent Laurent::operator-() const
{
  Laurent r = *this;
  for (auto& c : r.coeffs_) c = field_->neg(c);
  return r;
}

Laurent Laurent::operator+(const Laurent& o) const
{
  const FiniteField* F = field_ ? field_ : o.field_;
  const I64 prec = std::min(prec_, o.prec_);
  if (coeffs_.empty() && o.coeffs_.empty()) return Laurent(F, prec);
  I64 lo = std::min(coeffs_.empty() ? o.lo_ : lo_, o.coeffs_.empty() ? lo_ : o.lo_);
  I64 hi = std::max(lo_ + static_cast<I64>(coeffs_.size()), o.lo_ + static_cast<I64>(o.coeffs_.size()));
  hi = std::min(hi, prec);
  if (hi <= lo) return Laurent(F, prec);
  std::vector<Elem> out(static_cast<std::size_t>(hi - lo), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const I64 e = lo_ + static_cast<I64>(i);
    if (e < hi) out[static_cast<std::size_t>(e - lo)] = coeffs_[i];
  }
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    const I64 e = o.lo_ + static_cast<I64>(i);
    if (e < hi) {
      auto& slot = out[static_cast<std::size_t>(e - lo)];
      slot = F->add(slot, o.coeffs_[i]);
    }
  }
  return from_coeffs(F, lo, std::move(out), prec);
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::mul(const Laurent& o, std::int64_t cap) const
{
  const FiniteField* F = field_ ? field_ : o.field_;
  I64 prec = std::min(add_prec(prec_, o.valuation()), add_prec(o.prec_, valuation()));
  prec = std::min(prec, cap);
  if (coeffs_.empty() || o.coeffs_.empty()) return Laurent(F, prec);
  const I64 lo = lo_ + o.lo_;
  I64 hi = lo_ + o.lo_ + static_cast<I64>(coeffs_.size() + o.coeffs_.size()) - 1;
  hi = std::min(hi, prec);
  if (hi <= lo) return Laurent(F, prec);
  const std::size_t len = static_cast<std::size_t>(hi - lo);
  std::vector<Elem> out(len, 0);
  for (std::size_t i = 0; i < coeffs_.size() && i < len; ++i) {
    const Elem a = coeffs_[i];
    if (a == 0) continue;
    const std::size_t lim = std::min(o.coeffs_.size(), len - i);
    for (std::size_t j = 0; j < lim; ++j)
      if (o.coeffs_[j]) out[i + j] = F->add(out[i + j], F->mul(a, o.coeffs_[j]));
  }
  return from_coeffs(F, lo, std::move(out), prec);
}

Laurent Laurent::scaled(Elem c) const
{
  Laurent r = *this;
  for (auto& e : r.coeffs_) e = field_->mul(e, c);
  r.normalize();
  return r;
}

Laurent Laurent::shifted(std::int64_t e) const
{
  Laurent r = *this;
  if (!r.coeffs_.empty()) r.lo_ += e;
  r.prec_ = add_prec(prec_, e);
  return r;
}

Laurent Laurent::inverse(std::int64_t cap) const
{
  if (coeffs_.empty()) throw std::domain_error("inverse of a series with no known nonzero coefficient");
  const I64 va = lo_;
  const I64 prec = std::min(is_exact() ? kExact : prec_ - 2 * va, cap);
  if (prec >= kExact) throw std::invalid_argument("inverse needs a finite precision cap");
  const I64 len = prec + va;  // relative length of the result
  if (len <= 0) return Laurent(field_, prec);
  const FiniteField* F = field_;
  const Elem a0inv = F->inv(coeffs_[0]);
  std::vector<Elem> b(static_cast<std::size_t>(len), 0);
  b[0] = a0inv;
  for (std::size_t k = 1; k < b.size(); ++k) {
    Elem s = 0;
    const std::size_t lim = std::min(k, coeffs_.size() - 1);
    for (std::size_t i = 1; i <= lim; ++i)
      if (coeffs_[i] && b[k - i]) s = F->add(s, F->mul(coeffs_[i], b[k - i]));
    b[k] = F->neg(F->mul(a0inv, s));
  }
  return from_coeffs(F, -va, std::move(b), prec);
}

Laurent Laurent::div(const Laurent& o, std::int64_t cap) const
{
  // 1/o is needed to absolute precision cap - v(this)
  const I64 va = valuation();
  const I64 inner = va >= kExact ? cap : std::min(cap - va, kExact - 1);
  return mul(o.inverse(inner), cap);
}

Laurent Laurent::frobenius(std::uint64_t e, std::int64_t cap) const
{
  const unsigned p = field_->characteristic();
  std::uint64_t t = e;
  while (t > 1 && t % p == 0) t /= p;
  if (e == 0 || t != 1) throw std::invalid_argument("frobenius exponent must be a power of the characteristic");
  const I64 ee = static_cast<I64>(e);
  const I64 prec = std::min(is_exact() ? kExact : prec_ * ee, cap);
  if (coeffs_.empty()) return Laurent(field_, prec);
  if (e == 1) return truncated(prec);
  std::size_t n = coeffs_.size();
  if (prec < kExact) {
    const I64 room = prec - lo_ * ee;  // exponents lo*e + i*e < prec
    if (room <= 0) return Laurent(field_, prec);
    n = std::min<std::size_t>(n, static_cast<std::size_t>((room + ee - 1) / ee));
  }
  std::vector<Elem> out((n - 1) * e + 1, 0);
  for (std::size_t i = 0; i < n; ++i) out[i * e] = field_->pow(coeffs_[i], e);
  return from_coeffs(field_, lo_ * ee, std::move(out), prec);
}

Laurent Laurent::pow(std::uint64_t e, std::int64_t cap) const
{
  Laurent result = constant(field_, 1);
  Laurent base = *this;
  while (e) {
    if (e & 1) result = result.mul(base, cap);
    e >>= 1;
    if (e) base = base.mul(base, cap);
  }
  return result;
}

Laurent Laurent::truncated(std::int64_t cap) const
{
  Laurent r = *this;
  r.prec_ = std::min(prec_, cap);
  r.normalize();
  return r;
}

std::string Laurent::format(std::size_t max_terms) const
{
  std::string out;
  std::size_t shown = 0;
  for (std::size_t i = 0; i < coeffs_.size() && shown < max_terms; ++i) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    std::string c = field_->format(coeffs_[i]);
    if (c.find_first_of("+-*") != std::string::npos) c = "(" + c + ")";
    out += c + "*v^" + std::to_string(lo_ + static_cast<I64>(i));
    ++shown;
  }
  const auto nonzero = std::count_if(coeffs_.begin(), coeffs_.end(), [](Elem c) { return c != 0; });
  if (shown < static_cast<std::size_t>(nonzero)) out += " + ...";
  if (!is_exact()) out += (out.empty() ? "" : " + ") + std::string("O(v^") + std::to_string(prec_) + ")";
  if (out.empty()) out = "0";
  return out;
}

}  // namespace carlitz
