#pragma once

// The valuations v_i at (θ - ζ_i) on K(ζ) and their Q-valued extensions to
// K_n(ζ), computed through the norm since (θ - ζ_i) is totally ramified.

#include <carlitz/check.hpp>
#include <carlitz/factor.hpp>
#include <carlitz/omega.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace carlitz {

class RationalVal {
 public:
  RationalVal() = default;  // 0
  RationalVal(std::int64_t num, std::int64_t den = 1);
  static RationalVal infinity();

  bool is_infinite() const { return inf_; }
  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  RationalVal operator+(const RationalVal& o) const;
  RationalVal operator-(const RationalVal& o) const;
  RationalVal operator*(const RationalVal& o) const;
  RationalVal operator/(const RationalVal& o) const;
  bool operator==(const RationalVal& o) const;
  bool operator!=(const RationalVal& o) const { return !(*this == o); }
  bool operator<(const RationalVal& o) const;
  bool operator<=(const RationalVal& o) const { return !(o < *this); }

  std::string format() const;  // "1/3", "2", "inf"

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  bool inf_ = false;
};

// v_i(f) = ord_{θ=ζ_i} num - ord_{θ=ζ_i} den; infinity for f = 0.
RationalVal val_kzeta(const KZetaFun& f, Elem zeta);
RationalVal val_kzeta(const KZetaFun& f, const TorsionField& field, unsigned i);

// v_i(y) = v_i(N(y)) / D.
RationalVal val_kn(const TorsionElem& y, unsigned i);

struct NewtonSlope {
  RationalVal slope;  // valuation of the roots on this segment
  std::int64_t multiplicity = 0;
  bool operator==(const NewtonSlope& o) const { return slope == o.slope && multiplicity == o.multiplicity; }
};

// Slopes of the lower convex hull of (i, vals[i]), reported as root
// valuations (negated hull slopes) in increasing order.  Infinite entries are
// zero coefficients; throws std::invalid_argument if all are infinite.
std::vector<NewtonSlope> newton_polygon(const std::vector<RationalVal>& vals);
// Same for sum_i coeffs[i] X^i with coefficients in F_{q^d}[θ] and v = ord at θ = zeta.
std::vector<NewtonSlope> newton_polygon(const std::vector<Poly>& coeffs, Elem zeta);

// Expected v_i(ω^{(order)}(ζ_i^{q^j})) = q^j / (|𝔭|^order (|𝔭| - 1)).
RationalVal expected_omega_valuation(const TorsionField& field, unsigned order, unsigned j);

struct ValuationEntry {
  unsigned n = 0;  // derivative order, at most the level of the field
  unsigned i = 0;
  unsigned j = 0;
  RationalVal value;
  RationalVal expected;
};

// v_i(ω^{(m)}(ζ_i^{q^j})) over all m <= n, i and j.
std::vector<ValuationEntry> valuation_table(const TorsionField& field);
CheckResult check_valuations(const TorsionField& field);

// The polynomial with root ω^{(n)}(ζ') for ζ' = ζ_i^{q^j}: X^{|𝔭|-1} - β(ζ')
// at n = 0 and X^{|𝔭|} - β(ζ') X - ξ_n(ζ') above, with
// β(t) = prod_{h<d} (t - θ^{q^h}) and ξ_n = sum_{l=1}^{n} β^{(l)} ω^{(n-l)}.
struct MinPolyReport {
  unsigned i = 0;
  unsigned j = 0;
  bool root_identity = false;
  std::vector<NewtonSlope> polygon;
  RationalVal expected;
  RationalVal val_kn;
  CheckResult result;
};

MinPolyReport min_poly_check(const TorsionField& field, unsigned i, unsigned j);

// β(ζ')^{(l)} for l = 0..n as polynomials in θ over F_{q^d}.
std::vector<Poly> beta_hyper(const TorsionField& field, Elem zeta_prime, unsigned n);

struct NormFactorReport {
  unsigned j = 0;
  unsigned i = 0;
  KZetaFun norm;
  Factorization factors;  // of the numerator over F_{q^d}
  std::vector<Factor> above_p;  // the primes θ - ζ_k
  std::vector<Factor> other;    // everything else
};

NormFactorReport norm_factor_experiment(const TorsionField& field, unsigned j, unsigned i,
                                        std::uint64_t seed);

}  // namespace carlitz
