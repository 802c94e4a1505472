#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "qent/types.hpp"

namespace qent {

// Closed-form quantities for subsystems of Haar-random pure states.

// Mean von Neumann entropy of the M-dimensional reduction of a Haar-random
// pure state on an M*K-dimensional space (M <= K):
//   sum_{j=K+1}^{MK} 1/j - (M-1)/(2K),
// summed exactly (no asymptotic form). O(MK) time, capped at MK <= 2^26.
double mean_entropy(std::int64_t m_dim, std::int64_t k_dim);
double mean_entropy_qudits(int d, int n_qudits, int m);  // swaps so M <= K

// Mean purity (M+K)/(MK+1); symmetric in M, K.
double mean_purity(std::int64_t m_dim, std::int64_t k_dim);
double mean_purity_qudits(int d, int n_qudits, int m);

// All closed-form bounds for a given (d, m). Entanglement-side fields
// require m >= 2; s_critical requires d^m >= 3.
struct BoundsReport {
  int d = 2;
  int m = 1;
  double r_ppt = 0.0;       // 1/(d^m - 1): purity at the maximal-ball boundary
  double n_ppt_real = 0.0;  // 3m + log_d(1 - d^-m - d^-2m)
  int n_ppt = 0;            // smallest integer strictly above n_ppt_real
  std::optional<double> eps_ent;     // 1/(d^(m-1)+1)
  std::optional<double> r_ent;       // (d^m + d^2 + 2d)/(d^m + d)^2
  std::optional<double> n_ent_real;  // 3m - 2 + log_d[1 + (2d+1)d^-m + (d+2)d^(1-2m)]
  std::optional<int> n_ent;          // floor of n_ent_real
  int transition_low = 0;            // 3m - 2
  int transition_high = 0;           // 3m
  std::optional<double> s_critical;  // critical entropy at n = d^m
};

BoundsReport bounds_report(int d, int m);

// (1-eps)/d^m * I + eps |Psi><Psi| with |Psi> = d^{-1/2} sum_i |i...i>.
DensityMatrix werner_state(int d, int m, double eps);

// S_c = ln n - (2/n) ln 2 + ((n-2)/n) ln[(n-1)/(n-2)], n >= 3. Any state with
// entropy above S_c lies inside the maximal ball.
double critical_entropy(std::int64_t n);

// Spectra of the extreme states on the ball boundary: rho_a (minimal entropy,
// {1/(n-1) x(n-1), 0}) and rho_b (maximal entropy, opposite through I/n).
// Both have inverse participation ratio n-1; (rho_a + rho_b)/2 = I/n when the
// zero of rho_a is aligned with the 2/n of rho_b.
std::pair<Spectrum, Spectrum> ball_boundary_spectra(std::int64_t n);

}  // namespace qent
