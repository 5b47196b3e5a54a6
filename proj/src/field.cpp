#include <carlitz/field.hpp>
#include <carlitz/poly.hpp>

#include <mutex>
#include <map>
#include <tuple>

namespace carlitz {

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_prime(unsigned p)
{
  if (p < 2) return false;
  for (unsigned f = 2; f * f <= p; ++f)
    if (p % f == 0) return false;
  return true;
}

}  // namespace

std::pair<unsigned, unsigned> prime_power(unsigned q)
{
  if (q < 2) throw FieldError("q must be a prime power, got " + std::to_string(q));
  unsigned p = 2;
  while (q % p != 0) ++p;
  unsigned e = 0;
  unsigned r = q;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  if (r != 1) throw FieldError("q must be a prime power, got " + std::to_string(q));
  return {p, e};
}

Elem FiniteField::add_digits(Elem a, Elem b) const
{
  Elem out = 0;
  Elem place = 1;
  while (a != 0 || b != 0) {
    out += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return out;
}

Elem FiniteField::slow_mul(Elem a, Elem b) const
{
  if (!base_) return static_cast<Elem>((std::uint64_t{a} * b) % p_);
  const FiniteField* B = base_.get();
  Poly pa = poly_from_index(B, a, degree_);
  Poly pb = poly_from_index(B, b, degree_);
  std::vector<Elem> mod = modulus_;
  Poly m(B, mod);
  Poly r = mulmod(pa, pb, m);
  Elem out = 0;
  for (std::size_t i = r.size(); i-- > 0;) out = out * B->size() + r.coeff(i);
  return out;
}

Elem FiniteField::pow(Elem a, std::uint64_t e) const
{
  if (e == 0) return 1;
  if (a == 0) return 0;
  std::uint64_t l = (std::uint64_t{log_[a]} * (e % (size_ - 1))) % (size_ - 1);
  return exp_[l];
}

Elem FiniteField::from_int(long long v) const
{
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

std::vector<const FiniteField*> FiniteField::chain() const
{
  std::vector<const FiniteField*> out;
  for (const FiniteField* f = this; f != nullptr; f = f->base()) out.push_back(f);
  return out;
}

std::string FiniteField::format(Elem a) const
{
  if (!base_) return std::to_string(a);
  if (a == 0) return "0";
  const Elem bs = base_->size();
  std::vector<Elem> digits;
  for (unsigned i = 0; i < degree_; ++i) {
    digits.push_back(a % bs);
    a /= bs;
  }
  std::string out;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] == 0) continue;
    std::string c = base_->format(digits[i]);
    std::string term;
    if (i == 0) {
      term = c;
    } else {
      if (c != "1") {
        if (c.find('+') != std::string::npos) c = "(" + c + ")";
        term = c + "*";
      }
      term += name_;
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (!out.empty()) out += "+";
    out += term;
  }
  return out;
}

namespace {

// Fills log/exp tables from a slow multiplication.
template <class SlowMul>
void build_log_tables(Elem size, SlowMul slow_mul, std::vector<Elem>& log,
                      std::vector<Elem>& exp)
{
  const std::uint64_t order = size - 1;
  const auto factors = prime_factors(order);
  auto slow_pow = [&](Elem a, std::uint64_t e) {
    Elem r = 1;
    Elem b = a;
    while (e) {
      if (e & 1) r = slow_mul(r, b);
      b = slow_mul(b, b);
      e >>= 1;
    }
    return r;
  };
  Elem gen = 0;
  for (Elem cand = 1; cand < size; ++cand) {
    bool ok = true;
    for (auto f : factors) {
      if (slow_pow(cand, order / f) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gen = cand;
      break;
    }
  }
  if (gen == 0) throw FieldError("no primitive element found");
  log.assign(size, 0);
  exp.assign(2 * order + 1, 0);
  Elem x = 1;
  for (std::uint64_t i = 0; i < order; ++i) {
    exp[i] = x;
    log[x] = static_cast<Elem>(i);
    x = slow_mul(x, gen);
  }
  for (std::uint64_t i = order; i < exp.size(); ++i) exp[i] = exp[i - order];
}

void build_additive(unsigned p, Elem size, std::vector<Elem>& neg,
                    std::vector<Elem>& table)
{
  if (p == 2) return;
  neg.assign(size, 0);
  for (Elem a = 0; a < size; ++a) {
    Elem r = 0;
    Elem place = 1;
    Elem x = a;
    while (x) {
      r += ((p - x % p) % p) * place;
      x /= p;
      place *= p;
    }
    neg[a] = r;
  }
  if (size <= 1024) {
    table.assign(std::size_t{size} * size, 0);
    for (Elem a = 0; a < size; ++a) {
      for (Elem b = 0; b < size; ++b) {
        Elem out = 0;
        Elem place = 1;
        Elem x = a;
        Elem y = b;
        while (x || y) {
          out += ((x % p + y % p) % p) * place;
          x /= p;
          y /= p;
          place *= p;
        }
        table[std::size_t{a} * size + b] = out;
      }
    }
  }
}

}  // namespace

FieldPtr FiniteField::prime(unsigned p)
{
  if (!is_prime(p)) throw FieldError("characteristic must be prime, got " + std::to_string(p));
  if (p > kMaxSize) throw FieldError("prime field too large");
  auto f = std::shared_ptr<FiniteField>(new FiniteField());
  f->p_ = p;
  f->size_ = p;
  f->prime_degree_ = 1;
  f->degree_ = 1;
  build_additive(p, p, f->neg_, f->add_table_);
  const FiniteField* raw = f.get();
  build_log_tables(p, [raw](Elem a, Elem b) { return raw->slow_mul(a, b); }, f->log_, f->exp_);
  return f;
}

FieldPtr FiniteField::extend(const FieldPtr& base, unsigned degree, std::string generator_name)
{
  if (degree == 0) throw FieldError("extension degree must be positive");
  if (degree == 1) return base;
  std::uint64_t size = 1;
  for (unsigned i = 0; i < degree; ++i) {
    size *= base->size();
    if (size > kMaxSize) throw FieldError("field F_" + std::to_string(base->characteristic()) +
                                          "^" + std::to_string(base->prime_degree() * degree) +
                                          " exceeds the supported size");
  }
  const FiniteField* B = base.get();
  std::vector<Elem> modulus;
  std::uint64_t count = size;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly f = poly_from_index(B, idx, degree) + Poly::monomial(B, 1, degree);
    if (f.degree() == static_cast<int>(degree) && is_irreducible(f)) {
      modulus = f.coeffs();
      break;
    }
  }
  if (modulus.empty()) throw FieldError("no irreducible polynomial found");

  auto f = std::shared_ptr<FiniteField>(new FiniteField());
  f->p_ = base->characteristic();
  f->prime_degree_ = base->prime_degree() * degree;
  f->degree_ = degree;
  f->size_ = static_cast<Elem>(size);
  f->base_ = base;
  f->modulus_ = std::move(modulus);
  f->name_ = std::move(generator_name);
  build_additive(f->p_, f->size_, f->neg_, f->add_table_);
  const FiniteField* raw = f.get();
  build_log_tables(f->size_, [raw](Elem a, Elem b) { return raw->slow_mul(a, b); }, f->log_,
                   f->exp_);
  return f;
}

FieldPtr base_field(unsigned q)
{
  static std::mutex mu;
  static std::map<unsigned, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;
  auto [p, e] = prime_power(q);
  FieldPtr fp = FiniteField::prime(p);
  FieldPtr fq = FiniteField::extend(fp, e, "g");
  cache[q] = fq;
  return fq;
}

TowerPtr make_tower(unsigned q, unsigned d)
{
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, TowerPtr> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({q, d});
    if (it != cache.end()) return it->second;
  }
  auto t = std::make_shared<FieldTower>();
  auto [p, e] = prime_power(q);
  t->p = p;
  t->q = q;
  t->d = d;
  t->fq = base_field(q);
  t->fp = t->fq;
  while (t->fp->base()) t->fp = t->fp->base_ptr();
  t->fqd = FiniteField::extend(t->fq, d, "z");
  t->fq2d = FiniteField::extend(t->fqd, 2, "w");
  std::lock_guard<std::mutex> lock(mu);
  cache[{q, d}] = t;
  return t;
}

}  // namespace carlitz
