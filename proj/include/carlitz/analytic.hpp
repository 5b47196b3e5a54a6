#pragma once

// Numerical layer at the infinite place.  Series live in F_{q^{2d}}((v)) with
// θ = -v^{-(q-1)} and λ_θ = v^{-1}, so λ_θ^{q-1} = -θ.  The v-adic valuation
// of θ is -(q-1); divide by q-1 for the normalized ∞-valuation.
//
// All routines take an absolute working precision `cap` (an exponent of v);
// the precision of every returned value is tracked, never assumed.

#include <carlitz/laurent.hpp>
#include <carlitz/omega.hpp>
#include <carlitz/special_l.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace carlitz {

class Analytic {
 public:
  Analytic(const FieldTower& tower, std::int64_t cap);
  explicit Analytic(const TorsionField& field, std::int64_t cap) : Analytic(*field.tower(), cap) {}

  unsigned q() const { return q_; }
  const FiniteField* field() const { return F_; }
  std::int64_t cap() const { return cap_; }

  Laurent theta() const { return theta_; }
  Laurent lambda() const;  // v^{-1}
  Laurent constant(Elem c) const { return Laurent::constant(F_, c); }
  Laurent from_theta_poly(const Poly& a) const { return Laurent::from_theta_poly(F_, q_, a); }
  Laurent from_kzeta(const KZetaFun& f) const;

  // λ_θ θ prod_{j>=1} (1 - θ^{1-q^j})^{-1}; memoized.
  const Laurent& pi_tilde() const;

  // D_j = prod_{i<j} (θ^{q^j} - θ^{q^i}).
  Laurent carlitz_D(unsigned j) const;
  // sum_{j=0}^{J} z^{q^j} / D_j.
  Laurent exp_c_truncated(const Laurent& z, unsigned J) const;
  // Smallest J such that every term j > J has valuation q^j (v(z) + (q-1) j) >= cap.
  static unsigned exp_truncation_level(unsigned q, std::int64_t vz, std::int64_t cap);
  Laurent exp_c(const Laurent& z) const { return exp_c_truncated(z, exp_truncation_level(q_, z.valuation(), cap_)); }
  // 𝔠_a(y) = sum_i (coefficient of τ^i)(θ) y^{q^i}.
  Laurent carlitz_eval(const Poly& a, const Laurent& y) const;

  // ω^{(j)}(t) for j = 0..n at the constant t by the sum
  //   sum_m π̃^{q^m} / (D_m (θ^{q^m} - t)^{j+1}).
  std::vector<Laurent> omega_sum(unsigned n, Elem t) const;
  // Same values by hyperdifferentiating λ_θ prod_j (1 - t/θ^{q^j})^{-1} about t.
  std::vector<Laurent> omega_product(unsigned n, Elem t) const;
  // Number of product factors and sum terms used for the current cap.
  unsigned product_factors() const;
  unsigned sum_terms(unsigned n) const;

  // exp_C(π̃ / 𝔭^{n+1}).
  Laurent torsion_point(const Poly& p, unsigned n) const;
  // Image of y under x_n ↦ xhat, with the coordinates read through θ.
  Laurent embed(const TorsionElem& y, const Laurent& xhat) const;

  // sum over monic a with deg a <= N of a^{(j)}(t) / a, for j = 0..n.
  std::vector<Laurent> l_series(Elem t, unsigned n, unsigned N) const;

 private:
  unsigned q_;
  const FiniteField* F_;
  const FiniteField* fq_;
  std::int64_t cap_;
  Laurent theta_;
  Laurent theta_inv_;
  mutable Laurent pi_;
  mutable bool have_pi_ = false;
};

// One comparison.  With `relative`, the score is v(diff) - min(v(a), v(b)),
// otherwise v(diff); it passes when the score reaches `floor`.  v(diff) is
// the first known nonzero coefficient, or the precision when every known
// coefficient vanishes (`zero_to_precision`).
struct Residual {
  std::string name;
  std::int64_t diff_val = 0;
  std::int64_t ref_val = 0;
  std::int64_t floor = 0;
  bool relative = true;
  bool zero_to_precision = false;
  bool exact = false;  // both sides exactly zero
  std::int64_t score() const { return relative ? diff_val - ref_val : diff_val; }
  bool pass() const { return exact || score() >= floor; }
};

Residual compare(std::string name, const Laurent& a, const Laurent& b, std::int64_t floor, bool relative);

struct OracleReport {
  std::string name;
  std::int64_t floor = 0;
  std::int64_t cap = 0;           // working precision that settled the result
  unsigned escalations = 0;       // doublings of the working precision
  std::vector<Residual> residuals;
  std::vector<std::string> notes;  // truncation formulas, matched root
  bool pass = false;
  std::int64_t min_score() const;
};

// Φ(x̂_n) ≈ 0, c_{(j),i} ↦ exp_C(π̃ q_{(j),i}/𝔭^{j+1}), ω^{(j)}(ζ_k) ↦ sum formula.
OracleReport embed_compare(const TorsionField& field, std::int64_t digits);
// Sum formula against the product formula for ω^{(j)}(ζ_k), j <= n, and at t = 0.
OracleReport route_agreement(const TorsionField& field, std::int64_t digits);
// (-1/π̃)(ζ_k - θ) L_N(χ_ζ, 1) ω(ζ_k) - 1 has valuation >= (q-1)(N+1).
OracleReport pellarin_check(const TorsionField& field, unsigned k, unsigned N);
// (𝔭^{n+1}/π̃) L^{(j)}_N against the embedded exact L-matrix diagonals.
OracleReport l_cross_check(const TorsionField& field, const LMatrix& L, unsigned N);

struct LSeries {
  std::vector<Laurent> values;  // j = 0..n
  std::int64_t tail_floor = 0;  // (q-1)(N+1): every omitted term has at least this valuation
};
LSeries l_truncated_series(const TorsionField& field, unsigned k, unsigned N, std::int64_t cap);

}  // namespace carlitz
