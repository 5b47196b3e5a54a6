#include <carlitz/ratfun.hpp>

#include <stdexcept>

namespace carlitz {

KZetaFun::KZetaFun(Poly num) : num_(std::move(num))
{
  den_ = Poly::constant(num_.field(), 1);
}

KZetaFun::KZetaFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den))
{
  normalize();
}

void KZetaFun::normalize()
{
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  const FiniteField* F = num_.common_field(den_);
  if (num_.is_zero()) {
    num_ = Poly(F);
    den_ = Poly::constant(F, 1);
    return;
  }
  if (!den_.is_one()) {
    Poly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
    const Elem lc = den_.lead();
    if (lc != 1) {
      const Elem inv = F->inv(lc);
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }
}

KZetaFun KZetaFun::operator+(const KZetaFun& o) const
{
  if (den_ == o.den_) return KZetaFun(num_ + o.num_, den_);
  return KZetaFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

KZetaFun KZetaFun::operator-(const KZetaFun& o) const { return *this + (-o); }

KZetaFun KZetaFun::operator*(const KZetaFun& o) const
{
  if (den_.is_one() && o.den_.is_one()) return KZetaFun(num_ * o.num_, den_, Normalized{});
  return KZetaFun(num_ * o.num_, den_ * o.den_);
}

KZetaFun KZetaFun::operator/(const KZetaFun& o) const
{
  if (o.is_zero()) throw std::domain_error("division by zero in K(zeta)");
  return KZetaFun(num_ * o.den_, den_ * o.num_);
}

KZetaFun KZetaFun::map_constants_pow(std::uint64_t q) const
{
  return KZetaFun(num_.map_coeffs_pow(q), den_.map_coeffs_pow(q));
}

std::string KZetaFun::format() const
{
  if (den_.is_one()) return num_.format();
  return "(" + num_.format() + ")/(" + den_.format() + ")";
}

}  // namespace carlitz
