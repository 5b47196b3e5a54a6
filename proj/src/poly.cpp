#include <carlitz/poly.hpp>

#include <cctype>
#include <stdexcept>

namespace carlitz {

Poly::Poly(const FiniteField* field, std::vector<Elem> coeffs) : field_(field), c_(std::move(coeffs))
{
  trim();
}

void Poly::trim()
{
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const FiniteField* field, Elem c)
{
  return Poly(field, std::vector<Elem>{c});
}

Poly Poly::monomial(const FiniteField* field, Elem c, std::size_t k)
{
  if (c == 0) return Poly(field);
  std::vector<Elem> v(k + 1, 0);
  v[k] = c;
  return Poly(field, std::move(v));
}

const FiniteField* Poly::common_field(const Poly& o) const
{
  if (!field_) return o.field_;
  if (!o.field_) return field_;
  // Inclusions are the identity on indices; use the larger field.
  return field_->size() >= o.field_->size() ? field_ : o.field_;
}

Poly Poly::rebind(const FiniteField* field) const
{
  Poly r = *this;
  r.field_ = field;
  return r;
}

Poly Poly::operator-() const
{
  Poly r = *this;
  if (field_ && field_->characteristic() != 2)
    for (auto& x : r.c_) x = field_->neg(x);
  return r;
}

Poly& Poly::operator+=(const Poly& o)
{
  field_ = common_field(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_->add(c_[i], o.c_[i]);
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
  field_ = common_field(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_->sub(c_[i], o.c_[i]);
  trim();
  return *this;
}

Poly Poly::operator*(const Poly& o) const
{
  const FiniteField* F = common_field(o);
  if (c_.empty() || o.c_.empty()) return Poly(F);
  const std::size_t n = c_.size();
  const std::size_t m = o.c_.size();
  std::vector<Elem> r(n + m - 1, 0);
  // Logs of the second operand, with a marker for zero coefficients.
  constexpr Elem kNone = ~Elem{0};
  std::vector<Elem> lb(m);
  for (std::size_t j = 0; j < m; ++j) lb[j] = o.c_[j] ? F->log(o.c_[j]) : kNone;
  const bool char2 = F->characteristic() == 2;
  for (std::size_t i = 0; i < n; ++i) {
    if (c_[i] == 0) continue;
    const Elem la = F->log(c_[i]);
    Elem* out = r.data() + i;
    if (char2) {
      for (std::size_t j = 0; j < m; ++j)
        if (lb[j] != kNone) out[j] ^= F->exp_at(la + lb[j]);
    } else {
      for (std::size_t j = 0; j < m; ++j)
        if (lb[j] != kNone) out[j] = F->add(out[j], F->exp_at(la + lb[j]));
    }
  }
  return Poly(F, std::move(r));
}

Poly Poly::scaled(Elem c) const
{
  if (c == 0) return Poly(field_);
  if (c == 1) return *this;
  Poly r = *this;
  for (auto& x : r.c_) x = field_->mul(x, c);
  return r;
}

Poly Poly::shifted(std::size_t k) const
{
  if (c_.empty() || k == 0) return *this;
  Poly r(field_);
  r.c_.assign(k, 0);
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Elem Poly::eval(Elem x) const
{
  Elem acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), c_[i]);
  return acc;
}

Poly Poly::monic() const
{
  if (c_.empty()) return *this;
  return scaled(field_->inv(lead()));
}

Poly Poly::map_coeffs_pow(std::uint64_t e) const
{
  Poly r = *this;
  for (auto& x : r.c_) x = field_->pow(x, e);
  return r;
}

Poly Poly::compose_power(std::size_t k) const
{
  if (c_.empty() || k == 1) return *this;
  if (k == 0) {
    Elem s = 0;
    for (auto x : c_) s = field_->add(s, x);
    return constant(field_, s);
  }
  std::vector<Elem> v((c_.size() - 1) * k + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
  return Poly(field_, std::move(v));
}

std::string Poly::format(std::string_view var) const
{
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    std::string c = field_->format(c_[i]);
    std::string term;
    if (i == 0) {
      term = c;
    } else {
      if (c != "1") {
        if (c.find('+') != std::string::npos) c = "(" + c + ")";
        term = c + "*";
      }
      term += std::string(var);
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (!out.empty()) out += "+";
    out += term;
  }
  return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b)
{
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const FiniteField* F = a.common_field(b);
  if (a.degree() < b.degree() || a.is_zero()) return {Poly(F), a.rebind(F)};
  std::vector<Elem> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const Elem inv_lead = F->inv(b.lead());
  std::vector<Elem> qc(r.size() - db, 0);
  for (std::size_t k = r.size(); k-- > db;) {
    const Elem c = r[k];
    if (c == 0) continue;
    const Elem f = F->mul(c, inv_lead);
    qc[k - db] = f;
    for (std::size_t i = 0; i <= db; ++i) r[k - db + i] = F->sub(r[k - db + i], F->mul(f, bc[i]));
  }
  r.resize(db);
  return {Poly(F, std::move(qc)), Poly(F, std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }

Poly exact_div(const Poly& a, const Poly& b)
{
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

Poly gcd(Poly a, Poly b)
{
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly pow(const Poly& a, std::uint64_t e)
{
  Poly r = Poly::constant(a.field(), 1);
  Poly b = a;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

Poly powmod(const Poly& a, std::uint64_t e, const Poly& m)
{
  Poly r = Poly::constant(m.field(), 1) % m;
  Poly b = a % m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    e >>= 1;
    if (e) b = mulmod(b, b, m);
  }
  return r;
}

unsigned binomial_mod_p(std::uint64_t n, std::uint64_t k, unsigned p)
{
  if (k > n) return 0;
  unsigned result = 1;
  while (n || k) {
    const unsigned ni = static_cast<unsigned>(n % p);
    const unsigned ki = static_cast<unsigned>(k % p);
    if (ki > ni) return 0;
    // small binomial by multiplicative formula mod p
    unsigned num = 1;
    unsigned den = 1;
    for (unsigned i = 0; i < ki; ++i) {
      num = num * ((ni - i) % p) % p;
      den = den * ((i + 1) % p) % p;
    }
    // den is invertible mod p since ki < p
    unsigned inv = 1;
    for (unsigned e = p - 2, b = den; e; e >>= 1, b = b * b % p)
      if (e & 1) inv = inv * b % p;
    result = result * (num * inv % p) % p;
    n /= p;
    k /= p;
  }
  return result;
}

Poly hyperderivative(const Poly& a, std::uint64_t j)
{
  if (j == 0) return a;
  const FiniteField* F = a.field();
  if (a.is_zero() || a.size() <= j) return Poly(F);
  const unsigned p = F->characteristic();
  std::vector<Elem> out(a.size() - j, 0);
  for (std::size_t k = j; k < a.size(); ++k) {
    const unsigned b = binomial_mod_p(k, j, p);
    if (b) out[k - j] = F->mul(F->from_int(b), a.coeff(k));
  }
  return Poly(F, std::move(out));
}

namespace {

// (quotient, remainder) of division by (θ - z).
std::pair<std::vector<Elem>, Elem> synthetic_div(const FiniteField* F,
                                                  const std::vector<Elem>& c, Elem z)
{
  if (c.empty()) return {{}, 0};
  std::vector<Elem> quo(c.size() - 1, 0);
  Elem acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = F->add(F->mul(acc, z), c[i]);
    if (i > 0) quo[i - 1] = acc;
  }
  return {quo, acc};
}

}  // namespace

std::vector<Elem> hyper_expand(const Poly& a, const FiniteField* field, Elem z, std::size_t n)
{
  std::vector<Elem> out(n + 1, 0);
  std::vector<Elem> cur = a.coeffs();
  for (std::size_t j = 0; j <= n && !cur.empty(); ++j) {
    auto [quo, rem] = synthetic_div(field, cur, z);
    out[j] = rem;
    cur = std::move(quo);
    while (!cur.empty() && cur.back() == 0) cur.pop_back();
  }
  return out;
}

std::size_t order_at(const Poly& a, Elem z)
{
  if (a.is_zero()) throw std::domain_error("order of vanishing of the zero polynomial");
  std::size_t k = 0;
  std::vector<Elem> cur = a.coeffs();
  for (;;) {
    auto [quo, rem] = synthetic_div(a.field(), cur, z);
    if (rem != 0) return k;
    ++k;
    cur = std::move(quo);
  }
}

bool is_irreducible(const Poly& f)
{
  if (f.is_zero() || f.degree() < 1) return false;
  const int m = f.degree();
  if (m == 1) return true;
  const FiniteField* F = f.field();
  const std::uint64_t Q = F->size();
  const Poly fm = f.monic();
  const Poly x = Poly::variable(F);
  // x^{Q^k} mod f for k = 0..m
  std::vector<Poly> frob{x % fm};
  for (int k = 1; k <= m; ++k) frob.push_back(powmod(frob.back(), Q, fm));
  if (frob[m] != frob[0]) return false;
  std::vector<int> primes;
  int r = m;
  for (int p = 2; p <= r; ++p) {
    if (r % p == 0) {
      primes.push_back(p);
      while (r % p == 0) r /= p;
    }
  }
  for (int p : primes) {
    Poly g = gcd(frob[m / p] - x, fm);
    if (!g.is_one()) return false;
  }
  return true;
}

std::vector<Elem> roots(const Poly& f)
{
  std::vector<Elem> out;
  if (f.is_zero()) throw std::domain_error("roots of the zero polynomial");
  for (Elem z = 0; z < f.field()->size(); ++z)
    if (f.eval(z) == 0) out.push_back(z);
  return out;
}

Poly poly_from_index(const FiniteField* field, std::uint64_t index, std::size_t len)
{
  std::vector<Elem> v(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    v[i] = static_cast<Elem>(index % field->size());
    index /= field->size();
  }
  return Poly(field, std::move(v));
}

namespace {

class ExprParser {
 public:
  ExprParser(const FiniteField* field, std::string_view text, std::string_view var)
      : F_(field), s_(text), var_(var), chain_(field->chain())
  {
  }

  Poly parse()
  {
    Poly r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const
  {
    throw std::invalid_argument("cannot parse '" + std::string(s_) + "': " + what + " at offset " +
                                std::to_string(pos_));
  }
  void skip()
  {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c)
  {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr()
  {
    Poly acc(F_);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Poly t = term();
    acc = negate ? -t : t;
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }

  Poly term()
  {
    Poly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Poly factor()
  {
    Poly base = atom();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = pow(base, std::stoull(std::string(s_.substr(start, pos_ - start))));
    }
    return base;
  }

  Poly atom()
  {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      long long v = std::stoll(std::string(s_.substr(start, pos_ - start)));
      return Poly::constant(F_, F_->from_int(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      if (!var_.empty() && name == var_) return Poly::variable(F_);
      for (const FiniteField* f : chain_)
        if (f->base() && name == f->generator_name()) return Poly::constant(F_, f->generator());
      fail("unknown symbol '" + std::string(name) + "'");
    }
    fail("unexpected character");
  }

  const FiniteField* F_;
  std::string_view s_;
  std::string_view var_;
  std::vector<const FiniteField*> chain_;
  std::size_t pos_ = 0;
};

std::vector<std::string_view> split_top_level(std::string_view text)
{
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    else if (text[i] == ')') --depth;
    else if (text[i] == ',' && depth == 0) {
      out.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(text.substr(start));
  return out;
}

}  // namespace

Poly parse_poly(const FiniteField* field, std::string_view text, std::string_view var)
{
  auto parts = split_top_level(text);
  if (parts.size() == 1) return ExprParser(field, text, var).parse();
  std::vector<Elem> coeffs;
  for (auto part : parts) coeffs.push_back(parse_element(*field, part));
  return Poly(field, std::move(coeffs));
}

Elem parse_element(const FiniteField& field, std::string_view text)
{
  Poly p = ExprParser(&field, text, "").parse();
  if (!p.is_constant()) throw std::invalid_argument("not a field element: " + std::string(text));
  return p.coeff(0);
}

}  // namespace carlitz
