#pragma once

// Elements of K(ζ) = F_{q^d}(θ): reduced fractions with monic denominator.

#include <carlitz/poly.hpp>

#include <string>

namespace carlitz {

class KZetaFun {
 public:
  KZetaFun() = default;
  explicit KZetaFun(Poly num);
  KZetaFun(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  KZetaFun operator-() const { return KZetaFun(-num_, den_, Normalized{}); }
  KZetaFun operator+(const KZetaFun& o) const;
  KZetaFun operator-(const KZetaFun& o) const;
  KZetaFun operator*(const KZetaFun& o) const;
  KZetaFun operator/(const KZetaFun& o) const;
  bool operator==(const KZetaFun& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const KZetaFun& o) const { return !(*this == o); }

  // Frobenius on the constants: c ↦ c^q on every coefficient.
  KZetaFun map_constants_pow(std::uint64_t q) const;

  std::string format() const;

 private:
  struct Normalized {};
  KZetaFun(Poly num, Poly den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Poly num_;
  Poly den_;
};

}  // namespace carlitz
