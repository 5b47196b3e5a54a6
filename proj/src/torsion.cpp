#include <carlitz/torsion.hpp>

#include <stdexcept>
#include <tuple>

namespace carlitz {

namespace {

using FieldKey = std::tuple<unsigned, std::vector<Elem>, unsigned>;

std::mutex& registry_mutex()
{
  static std::mutex mu;
  return mu;
}

std::map<FieldKey, std::unique_ptr<TorsionField>>& registry()
{
  static std::map<FieldKey, std::unique_ptr<TorsionField>> r;
  return r;
}

// Reduces v (length >= D) modulo the monic Φ in place, leaving length D.
void reduce_mod_phi(std::vector<Poly>& v, const std::vector<Poly>& phi)
{
  const std::size_t D = phi.size() - 1;
  for (std::size_t k = v.size(); k-- > D;) {
    if (v[k].is_zero()) continue;
    const Poly c = v[k];
    for (std::size_t i = 0; i < D; ++i)
      if (!phi[i].is_zero()) v[k - D + i] -= c * phi[i];
  }
  v.resize(D);
}

}  // namespace

const TorsionField& TorsionField::make(unsigned q, const Poly& p_in, unsigned n)
{
  const FiniteField* fq = base_field(q).get();
  const Poly p = p_in.rebind(fq);
  const FieldKey key{q, p.coeffs(), n};
  {
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto it = registry().find(key);
    if (it != registry().end()) return *it->second;
  }
  std::unique_ptr<TorsionField> f(new TorsionField());
  f->q_ = q;
  f->n_ = n;
  f->cyclo_ = carlitz_cyclotomic(p, q, n);
  f->d_ = static_cast<unsigned>(p.degree());
  f->tower_ = make_tower(q, f->d_);
  f->p_ = p.rebind(f->tower_->fq.get());
  f->D_ = f->cyclo_->degree;
  f->Q_ = 1;
  for (unsigned i = 0; i < f->d_; ++i) f->Q_ *= q;
  const FiniteField* K = f->tower_->fqd.get();
  for (const auto& c : f->cyclo_->phi) f->phi_.push_back(c.rebind(K));
  const auto rts = roots(f->p_.rebind(K));
  if (rts.size() != f->d_) throw std::logic_error("prime does not split in the constant extension");
  Elem z = rts.front();
  for (unsigned k = 0; k < f->d_; ++k) {
    f->zetas_.push_back(z);
    z = K->pow(z, q);
  }
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto [it, inserted] = registry().emplace(key, std::move(f));
  return *it->second;
}

const TorsionField& TorsionField::make(unsigned q, const std::string& p, unsigned n)
{
  return make(q, parse_poly(base_field(q).get(), p), n);
}

Elem TorsionField::zeta(unsigned k) const
{
  if (k == 0) throw std::out_of_range("root index is 1-based");
  return zetas_[(k - 1) % d_];
}

const TorsionField& TorsionField::at_level(unsigned m) const
{
  if (m == n_) return *this;
  return make(q_, p_, m);
}

TorsionElem TorsionField::zero() const { return TorsionElem(*this, {}, Poly::constant(fqd(), 1)); }
TorsionElem TorsionField::one() const { return constant(1); }

TorsionElem TorsionField::x() const
{
  if (D_ == 1) return TorsionElem::from_xpoly(*this, {Poly(fqd()), Poly::constant(fqd(), 1)}, Poly::constant(fqd(), 1));
  return TorsionElem(*this, {Poly(fqd()), Poly::constant(fqd(), 1)}, Poly::constant(fqd(), 1));
}

TorsionElem TorsionField::constant(Elem c) const { return scalar(Poly::constant(fqd(), c)); }

TorsionElem TorsionField::scalar(const Poly& a) const
{
  return TorsionElem(*this, {a.rebind(fqd())}, Poly::constant(fqd(), 1));
}

TorsionElem TorsionField::scalar(const KZetaFun& f) const
{
  return TorsionElem(*this, {f.num().rebind(fqd())}, f.den().rebind(fqd()));
}

TorsionElem TorsionField::theta() const { return scalar(Poly::variable(fqd())); }

const Substitution& TorsionField::sigma(const Poly& a) const
{
  const Poly modulus = pow(p_, n_ + 1);
  const Poly r = (a.rebind(fq()) % modulus).rebind(fq());
  if ((r % p_).is_zero()) throw std::invalid_argument("sigma_a needs a unit a, got " + a.format());
  std::lock_guard<std::mutex> lock(mu_);
  auto& slot = sigma_cache_[r.coeffs()];
  if (!slot) slot = std::make_unique<Substitution>(*this, carlitz_eval(r, x()));
  return *slot;
}

const Substitution& TorsionField::embedding_from(unsigned m) const
{
  if (m > n_) throw std::invalid_argument("cannot embed a higher level into a lower one");
  const TorsionField& src = at_level(m);
  std::lock_guard<std::mutex> lock(mu_);
  auto& slot = embed_cache_[m];
  if (!slot) slot = std::make_unique<Substitution>(src, carlitz_eval(pow(p_, n_ - m), x()));
  return *slot;
}

std::string TorsionField::describe() const
{
  return "q=" + std::to_string(q_) + " p=" + p_.format() + " n=" + std::to_string(n_) +
         " D=" + std::to_string(D_);
}

// ---------------------------------------------------------------------------

TorsionElem::TorsionElem(const TorsionField& field, std::vector<Poly> num, Poly den)
    : field_(&field), num_(std::move(num)), den_(std::move(den))
{
  if (num_.size() > field.degree()) throw std::invalid_argument("too many coordinates; use from_xpoly");
  num_.resize(field.degree(), Poly(field.fqd()));
  normalize();
}

TorsionElem TorsionElem::from_xpoly(const TorsionField& field, std::vector<Poly> num, Poly den)
{
  if (num.size() > field.degree()) reduce_mod_phi(num, field.phi());
  return TorsionElem(field, std::move(num), std::move(den));
}

void TorsionElem::normalize()
{
  const FiniteField* K = field_->fqd();
  if (den_.is_zero()) throw std::domain_error("torsion element with zero denominator");
  for (auto& c : num_) c = c.rebind(K);
  den_ = den_.rebind(K);
  bool all_zero = true;
  for (const auto& c : num_)
    if (!c.is_zero()) all_zero = false;
  if (all_zero) {
    den_ = Poly::constant(K, 1);
    return;
  }
  if (den_.is_one()) return;
  if (den_.degree() > 0) {
    Poly g = den_;
    for (const auto& c : num_) {
      if (c.is_zero()) continue;
      g = gcd(g, c);
      if (g.is_one()) break;
    }
    if (!g.is_one()) {
      for (auto& c : num_)
        if (!c.is_zero()) c = exact_div(c, g);
      den_ = exact_div(den_, g);
    }
  }
  const Elem lc = den_.lead();
  if (lc != 1) {
    const Elem inv = K->inv(lc);
    for (auto& c : num_) c = c.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

std::vector<KZetaFun> TorsionElem::coords() const
{
  std::vector<KZetaFun> out;
  out.reserve(num_.size());
  for (const auto& c : num_) out.emplace_back(c, den_);
  return out;
}

bool TorsionElem::is_zero() const
{
  for (const auto& c : num_)
    if (!c.is_zero()) return false;
  return true;
}

bool TorsionElem::is_scalar() const
{
  for (std::size_t k = 1; k < num_.size(); ++k)
    if (!num_[k].is_zero()) return false;
  return true;
}

TorsionElem TorsionElem::operator-() const
{
  TorsionElem r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

TorsionElem TorsionElem::operator+(const TorsionElem& o) const
{
  if (field_ != o.field_) throw std::invalid_argument("adding elements of different torsion fields");
  if (den_ == o.den_) {
    std::vector<Poly> n = num_;
    for (std::size_t k = 0; k < n.size(); ++k) n[k] += o.num_[k];
    return TorsionElem(*field_, std::move(n), den_);
  }
  std::vector<Poly> n(num_.size());
  for (std::size_t k = 0; k < n.size(); ++k) n[k] = num_[k] * o.den_ + o.num_[k] * den_;
  return TorsionElem(*field_, std::move(n), den_ * o.den_);
}

TorsionElem TorsionElem::operator-(const TorsionElem& o) const { return *this + (-o); }

TorsionElem TorsionElem::operator*(const TorsionElem& o) const
{
  if (field_ != o.field_) throw std::invalid_argument("multiplying elements of different torsion fields");
  const std::size_t D = field_->degree();
  std::vector<Poly> prod(2 * D - 1, Poly(field_->fqd()));
  for (std::size_t i = 0; i < D; ++i) {
    if (num_[i].is_zero()) continue;
    for (std::size_t j = 0; j < D; ++j)
      if (!o.num_[j].is_zero()) prod[i + j] += num_[i] * o.num_[j];
  }
  reduce_mod_phi(prod, field_->phi());
  Poly den = den_.is_one() ? o.den_ : (o.den_.is_one() ? den_ : den_ * o.den_);
  return TorsionElem(*field_, std::move(prod), std::move(den));
}

bool TorsionElem::operator==(const TorsionElem& o) const
{
  return field_ == o.field_ && num_ == o.num_ && den_ == o.den_;
}

TorsionElem TorsionElem::scaled(Elem c) const
{
  if (c == 0) return field_->zero();
  TorsionElem r = *this;
  for (auto& x : r.num_) x = x.scaled(c);
  return r;
}

TorsionElem TorsionElem::scaled(const Poly& a) const
{
  std::vector<Poly> n = num_;
  for (auto& x : n) x = x * a;
  return TorsionElem(*field_, std::move(n), den_);
}

TorsionElem TorsionElem::scaled(const KZetaFun& f) const
{
  std::vector<Poly> n = num_;
  for (auto& x : n) x = x * f.num();
  return TorsionElem(*field_, std::move(n), den_ * f.den());
}

TorsionElem TorsionElem::mul_x() const
{
  std::vector<Poly> n;
  n.reserve(num_.size() + 1);
  n.push_back(Poly(field_->fqd()));
  for (const auto& c : num_) n.push_back(c);
  return from_xpoly(*field_, std::move(n), den_);
}

TorsionElem TorsionElem::pow(std::uint64_t e) const
{
  TorsionElem result = field_->one();
  TorsionElem base = *this;
  bool first = true;
  while (e) {
    if (e & 1) {
      result = first ? base : result * base;
      first = false;
    }
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

TorsionElem TorsionElem::frobenius_const(unsigned k) const
{
  const unsigned d = field_->d();
  std::uint64_t e = 1;
  for (unsigned i = 0; i < k % d; ++i) e *= field_->q();
  if (e == 1) return *this;
  std::vector<Poly> n;
  n.reserve(num_.size());
  for (const auto& c : num_) n.push_back(c.map_coeffs_pow(e));
  return TorsionElem(*field_, std::move(n), den_.map_coeffs_pow(e));
}

TorsionElem TorsionElem::inverse() const
{
  if (is_zero()) throw std::domain_error("inverse of zero in torsion field");
  const PolyMatrix m = multiplication_matrix(*field_, num_);
  std::vector<Poly> e(field_->degree(), Poly(field_->fqd()));
  e[0] = Poly::constant(field_->fqd(), 1);
  const SolveResult sol = solve(m, e);
  if (sol.den.is_zero()) throw std::domain_error("element is a zero divisor: the cyclotomic polynomial is reducible");
  std::vector<Poly> n;
  n.reserve(sol.num.size());
  for (const auto& c : sol.num) n.push_back(c * den_);
  return TorsionElem(*field_, std::move(n), sol.den);
}

std::string TorsionElem::format() const
{
  std::string out;
  for (std::size_t k = 0; k < num_.size(); ++k) {
    if (num_[k].is_zero()) continue;
    std::string c = num_[k].format();
    std::string term;
    if (k == 0) {
      term = c;
    } else {
      if (c != "1") term = (c.find('+') != std::string::npos ? "(" + c + ")" : c) + "*";
      term += "x";
      if (k > 1) term += "^" + std::to_string(k);
    }
    if (!out.empty()) out += "+";
    out += term;
  }
  if (out.empty()) out = "0";
  if (!den_.is_one()) out = "(" + out + ")/(" + den_.format() + ")";
  return out;
}

// ---------------------------------------------------------------------------

Substitution::Substitution(const TorsionField& source, const TorsionElem& image)
    : source_(&source), image_(image)
{
  const std::size_t D = source.degree();
  powers_.reserve(D);
  powers_.push_back(image.field().one());
  for (std::size_t k = 1; k < D; ++k) powers_.push_back(powers_.back() * image);
  for (const auto& p : powers_)
    if (!p.is_integral()) integral_ = false;
}

TorsionElem Substitution::apply(const TorsionElem& y) const
{
  if (y.field_ptr() != source_) throw std::invalid_argument("substitution applied outside its source field");
  const TorsionField& tgt = image_.field();
  if (integral_) {
    std::vector<Poly> acc(tgt.degree(), Poly(tgt.fqd()));
    for (std::size_t k = 0; k < y.num().size(); ++k) {
      const Poly& c = y.num()[k];
      if (c.is_zero()) continue;
      const auto& pk = powers_[k].num();
      for (std::size_t i = 0; i < acc.size(); ++i)
        if (!pk[i].is_zero()) acc[i] += c * pk[i];
    }
    return TorsionElem(tgt, std::move(acc), y.den());
  }
  TorsionElem acc = tgt.zero();
  for (std::size_t k = 0; k < y.num().size(); ++k)
    if (!y.num()[k].is_zero()) acc += powers_[k].scaled(y.num()[k]);
  return acc.scaled(KZetaFun(Poly::constant(tgt.fqd(), 1), y.den()));
}

// ---------------------------------------------------------------------------

namespace {

struct TorsionOps {
  unsigned q;
  Poly theta;
  TorsionElem qpow(const TorsionElem& y) const { return y.pow(q); }
  TorsionElem mul_theta(const TorsionElem& y) const { return y.scaled(theta); }
  TorsionElem scale(const TorsionElem& y, Elem c) const { return y.scaled(c); }
  TorsionElem add(const TorsionElem& a, const TorsionElem& b) const { return a + b; }
};

}  // namespace

TorsionElem carlitz_eval(const Poly& a, const TorsionElem& y)
{
  const TorsionField& F = y.field();
  return carlitz_eval(a, y, TorsionOps{F.q(), Poly::variable(F.fqd())});
}

TorsionElem galois_sigma(const Poly& a, const TorsionElem& y) { return y.field().sigma(a).apply(y); }

TorsionElem frobenius_const(const TorsionElem& y, unsigned k) { return y.frobenius_const(k); }

PolyMatrix multiplication_matrix(const TorsionField& field, const std::vector<Poly>& num)
{
  const std::size_t D = field.degree();
  PolyMatrix m(D, std::vector<Poly>(D, Poly(field.fqd())));
  std::vector<Poly> col = num;
  col.resize(D, Poly(field.fqd()));
  for (std::size_t k = 0; k < D; ++k) {
    for (std::size_t i = 0; i < D; ++i) m[i][k] = col[i];
    if (k + 1 == D) break;
    col.insert(col.begin(), Poly(field.fqd()));
    reduce_mod_phi(col, field.phi());
  }
  return m;
}

KZetaFun norm_to_kzeta(const TorsionElem& y)
{
  const TorsionField& F = y.field();
  const Poly det = determinant(multiplication_matrix(F, y.num()));
  return KZetaFun(det, pow(y.den(), F.degree()));
}

TorsionElem tower_embed(const TorsionElem& y, const TorsionField& target)
{
  const TorsionField& src = y.field();
  if (src.q() != target.q() || src.prime() != target.prime())
    throw std::invalid_argument("tower_embed: fields have different (q, p)");
  return target.embedding_from(src.level()).apply(y);
}

std::size_t min_poly_degree(const TorsionElem& y)
{
  const TorsionField& F = y.field();
  const std::size_t D = F.degree();
  const TorsionElem z(F, y.num(), Poly::constant(F.fqd(), 1));
  PolyMatrix m(D, std::vector<Poly>(D, Poly(F.fqd())));
  TorsionElem cur = F.one();
  for (std::size_t k = 0; k < D; ++k) {
    for (std::size_t i = 0; i < D; ++i) m[i][k] = cur.num()[i];
    if (k + 1 < D) cur = cur * z;
  }
  return rank(m);
}

}  // namespace carlitz
