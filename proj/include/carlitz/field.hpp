#pragma once

// Finite fields F_{p^m} built as explicit towers of quotient rings.
//
// An element of a field of size N is stored as an index in [0, N).  For a
// field E = B[y]/(f(y)) the index of c_0 + c_1 y + ... + c_{k-1} y^{k-1} is
// sum c_i |B|^i, where the c_i are indices in B.  Consequently the inclusion
// B -> E is the identity on indices, and so is every inclusion further down
// the tower.  Flattened, an index is the base-p digit string of the
// coordinates over F_p, so addition is digit-wise mod p (xor for p = 2).

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace carlitz {

using Elem = std::uint32_t;

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FiniteField {
 public:
  static constexpr Elem kMaxSize = 1u << 16;

  static FieldPtr prime(unsigned p);

  // Extension of `base` by the lexicographically least monic irreducible
  // polynomial of the given degree (candidates ordered by sum c_i |B|^i of
  // their lower coefficients).  Degree 1 returns `base`.
  static FieldPtr extend(const FieldPtr& base, unsigned degree,
                         std::string generator_name);

  unsigned characteristic() const { return p_; }
  Elem size() const { return size_; }
  unsigned prime_degree() const { return prime_degree_; }
  unsigned degree_over_base() const { return degree_; }
  const FiniteField* base() const { return base_.get(); }
  const FieldPtr& base_ptr() const { return base_; }
  const std::vector<Elem>& modulus() const { return modulus_; }
  const std::string& generator_name() const { return name_; }
  Elem generator() const { return base_ ? base_->size() : 0; }
  Elem primitive_element() const { return exp_[1]; }

  static constexpr Elem zero() { return 0; }
  static constexpr Elem one() { return 1; }

  Elem add(Elem a, Elem b) const
  {
    if (p_ == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[a * size_ + b];
    return add_digits(a, b);
  }
  Elem neg(Elem a) const { return p_ == 2 ? a : neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const
  {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elem inv(Elem a) const
  {
    if (a == 0) throw FieldError("inverse of zero in finite field");
    return log_[a] == 0 ? 1 : exp_[size_ - 1 - log_[a]];
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  // Discrete log with respect to primitive_element(); a must be nonzero.
  Elem log(Elem a) const { return log_[a]; }
  // primitive_element()^i for 0 <= i < 2 (size - 1).
  Elem exp_at(std::size_t i) const { return exp_[i]; }

  // Image of an integer in the prime field.
  Elem from_int(long long v) const;

  // Generator names of this field and all fields below it, innermost last
  // (index 0 is this field's generator).
  std::vector<const FiniteField*> chain() const;

  // Human-readable power-basis form, e.g. "g+1" or "(g+1)*z+g".
  std::string format(Elem a) const;

 private:
  FiniteField() = default;
  Elem add_digits(Elem a, Elem b) const;
  Elem slow_mul(Elem a, Elem b) const;

  unsigned p_ = 0;
  unsigned prime_degree_ = 1;
  unsigned degree_ = 1;
  Elem size_ = 0;
  FieldPtr base_;
  std::vector<Elem> modulus_;  // monic, ascending, entries in base_
  std::string name_;
  std::vector<Elem> log_;
  std::vector<Elem> exp_;  // length 2 (size - 1), so exp_[i + j] is valid
  std::vector<Elem> neg_;
  std::vector<Elem> add_table_;
};

// The constant fields used by the library: F_p ⊂ F_q ⊂ F_{q^d} ⊂ F_{q^{2d}}.
// The generator of F_q over F_p is named "g", of F_{q^d} over F_q "z" and of
// F_{q^{2d}} over F_{q^d} "w".  Trivial steps reuse the field below.
struct FieldTower {
  unsigned p = 0;
  unsigned q = 0;
  unsigned d = 0;
  FieldPtr fp;
  FieldPtr fq;
  FieldPtr fqd;
  FieldPtr fq2d;
};

using TowerPtr = std::shared_ptr<const FieldTower>;

TowerPtr make_tower(unsigned q, unsigned d);

// Factor q = p^e; throws FieldError when q is not a prime power.
std::pair<unsigned, unsigned> prime_power(unsigned q);

// Field for F_q alone (prime field or its degree-e extension named "g").
FieldPtr base_field(unsigned q);

// Parses a field element written with integers, the generator names of the
// tower, + - * ^ and parentheses.
Elem parse_element(const FiniteField& field, std::string_view text);

}  // namespace carlitz
