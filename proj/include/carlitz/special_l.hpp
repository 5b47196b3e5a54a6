#pragma once

// The matrix L-value as the exact finite sum
//   L = - sum_{a != 0 mod 𝔭^{n+1}} ρ_ζ^{[n+1]}(a) / 𝔠_a(x_n)
// with entries in K_n(ζ).

#include <carlitz/check.hpp>
#include <carlitz/omega.hpp>

#include <cstdint>
#include <vector>

namespace carlitz {

struct LMatrix {
  unsigned q = 0;
  Poly prime;
  unsigned n = 0;
  unsigned zeta_index = 1;
  std::vector<std::vector<TorsionElem>> entries;  // (n+1) x (n+1)

  std::size_t size() const { return entries.size(); }
  // L^{(k)}: the entry on the k-th superdiagonal.
  const TorsionElem& diagonal(unsigned k) const { return entries.at(0).at(k); }
  bool is_toeplitz() const;
};

LMatrix l_matrix(const TorsionField& field, unsigned zeta_index = 1);

// σ_a(L) = ρ_ζ(a)^{-1} L for every unit a mod 𝔭^{n+1}.
CheckResult l_equivariance_check(const TorsionField& field, const LMatrix& L);

struct LIntegrality {
  std::vector<bool> integral;  // per superdiagonal k
  bool top_times_p_integral = false;
  CheckResult result;
};

// Entries off the top-right corner are integral and 𝔭 times the corner is.
LIntegrality l_integrality_check(const TorsionField& field, const LMatrix& L);

// a^{(j)}(ζ) = 0 for j <= n on random multiples a of 𝔭^{n+1}.
CheckResult check_hyper_vanishing(const TorsionField& field, unsigned samples, std::uint64_t seed);

}  // namespace carlitz
