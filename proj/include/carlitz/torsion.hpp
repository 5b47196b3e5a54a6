#pragma once

// K_n(ζ) = K(ζ)[X]/(Φ) with x_n the class of X.  Fields are interned: make()
// returns the same object for equal (q, 𝔭, n) and it lives for the whole
// process, so elements keep a plain pointer to their field.

#include <carlitz/carlitz.hpp>
#include <carlitz/linalg.hpp>
#include <carlitz/ratfun.hpp>

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace carlitz {

class TorsionElem;
class Substitution;

class TorsionField {
 public:
  static const TorsionField& make(unsigned q, const Poly& p, unsigned n);
  // 𝔭 given as text over F_q.
  static const TorsionField& make(unsigned q, const std::string& p, unsigned n);

  unsigned q() const { return q_; }
  unsigned d() const { return d_; }
  unsigned level() const { return n_; }
  std::size_t degree() const { return D_; }
  std::uint64_t norm_p() const { return Q_; }  // |𝔭| = q^d
  const TowerPtr& tower() const { return tower_; }
  const FiniteField* fq() const { return tower_->fq.get(); }
  const FiniteField* fqd() const { return tower_->fqd.get(); }
  const Poly& prime() const { return p_; }  // over F_q
  const CyclotomicData& cyclotomic() const { return *cyclo_; }
  const std::vector<Poly>& phi() const { return phi_; }  // over F_{q^d}

  // ζ_1 is the least-index root of 𝔭 in F_{q^d}; ζ_k = ζ_1^{q^{k-1}}.
  const std::vector<Elem>& zetas() const { return zetas_; }
  Elem zeta(unsigned k) const;  // 1-based, taken cyclically

  // The field at a lower level with the same (q, 𝔭).
  const TorsionField& at_level(unsigned m) const;

  TorsionElem zero() const;
  TorsionElem one() const;
  TorsionElem x() const;
  TorsionElem constant(Elem c) const;
  TorsionElem scalar(const Poly& a) const;
  TorsionElem scalar(const KZetaFun& f) const;
  TorsionElem theta() const;

  // σ_a for a unit a, memoized per residue mod 𝔭^{n+1}.
  const Substitution& sigma(const Poly& a) const;
  // Embedding of the level-m field sending x_m to 𝔠_{𝔭^{n-m}}(x_n).
  const Substitution& embedding_from(unsigned m) const;

  std::string describe() const;

 private:
  TorsionField() = default;

  unsigned q_ = 0;
  unsigned d_ = 0;
  unsigned n_ = 0;
  std::size_t D_ = 0;
  std::uint64_t Q_ = 0;
  TowerPtr tower_;
  Poly p_;
  CyclotomicPtr cyclo_;
  std::vector<Poly> phi_;
  std::vector<Elem> zetas_;

  mutable std::mutex mu_;
  mutable std::map<std::vector<Elem>, std::unique_ptr<Substitution>> sigma_cache_;
  mutable std::map<unsigned, std::unique_ptr<Substitution>> embed_cache_;
};

// Coordinates in the power basis 1, x_n, ..., x_n^{D-1}: num[k] / den with a
// monic den coprime to the content of num.
class TorsionElem {
 public:
  TorsionElem() = default;
  TorsionElem(const TorsionField& field, std::vector<Poly> num, Poly den);
  // Reduces a polynomial in X of any degree modulo Φ.
  static TorsionElem from_xpoly(const TorsionField& field, std::vector<Poly> num, Poly den);

  const TorsionField& field() const { return *field_; }
  const TorsionField* field_ptr() const { return field_; }
  const std::vector<Poly>& num() const { return num_; }
  const Poly& den() const { return den_; }
  std::vector<KZetaFun> coords() const;

  bool is_zero() const;
  bool is_integral() const { return den_.is_one(); }
  bool is_scalar() const;

  TorsionElem operator-() const;
  TorsionElem operator+(const TorsionElem& o) const;
  TorsionElem operator-(const TorsionElem& o) const;
  TorsionElem operator*(const TorsionElem& o) const;
  TorsionElem operator/(const TorsionElem& o) const { return *this * o.inverse(); }
  TorsionElem& operator+=(const TorsionElem& o) { return *this = *this + o; }
  TorsionElem& operator*=(const TorsionElem& o) { return *this = *this * o; }
  bool operator==(const TorsionElem& o) const;
  bool operator!=(const TorsionElem& o) const { return !(*this == o); }

  TorsionElem scaled(Elem c) const;
  TorsionElem scaled(const Poly& a) const;
  TorsionElem scaled(const KZetaFun& f) const;
  TorsionElem mul_x() const;
  TorsionElem pow(std::uint64_t e) const;
  // Constant-field Frobenius F^k: c -> c^{q^k} on F_{q^d}, fixing θ and x_n.
  TorsionElem frobenius_const(unsigned k = 1) const;
  // Throws std::domain_error for zero (or a zero divisor if Φ were reducible).
  TorsionElem inverse() const;

  std::string format() const;

 private:
  void normalize();

  const TorsionField* field_ = nullptr;
  std::vector<Poly> num_;
  Poly den_;
};

// A K(ζ)-algebra map from a source field determined by the image of its
// generator; stores the powers of the image.
class Substitution {
 public:
  Substitution(const TorsionField& source, const TorsionElem& image);
  TorsionElem apply(const TorsionElem& y) const;
  const TorsionElem& image() const { return image_; }

 private:
  const TorsionField* source_;
  TorsionElem image_;
  std::vector<TorsionElem> powers_;
  bool integral_ = true;
};

// 𝔠_a(y) for a in A.
TorsionElem carlitz_eval(const Poly& a, const TorsionElem& y);

TorsionElem galois_sigma(const Poly& a, const TorsionElem& y);
TorsionElem frobenius_const(const TorsionElem& y, unsigned k = 1);

// Multiplication-by-num matrix: column k holds the coordinates of num * x^k.
PolyMatrix multiplication_matrix(const TorsionField& field, const std::vector<Poly>& num);

// N_{K_n(ζ)/K(ζ)}(y) as the determinant of multiplication by y.
KZetaFun norm_to_kzeta(const TorsionElem& y);

TorsionElem tower_embed(const TorsionElem& y, const TorsionField& target);

// Degree of the minimal polynomial of y over K(ζ).
std::size_t min_poly_degree(const TorsionElem& y);

}  // namespace carlitz
