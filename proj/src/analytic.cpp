#include "qent/analytic.hpp"

#include <algorithm>
#include <cmath>

namespace qent {

double mean_entropy(std::int64_t m_dim, std::int64_t k_dim) {
  if (m_dim < 1 || k_dim < 1) throw domain_error("mean_entropy: dimensions must be >= 1");
  if (m_dim > k_dim) throw domain_error("mean_entropy: M <= K required (swap the subsystems)");
  const std::int64_t mk = m_dim * k_dim;
  if (mk > (std::int64_t{1} << 26))
    throw resource_error("mean_entropy: M*K beyond the direct-summation cap");
  // harmonic tail, summed small-to-large
  KahanSum s;
  for (std::int64_t j = mk; j > k_dim; --j) s.add(1.0 / static_cast<double>(j));
  s.add(-static_cast<double>(m_dim - 1) / (2.0 * static_cast<double>(k_dim)));
  return s.value();
}

double mean_entropy_qudits(int d, int n_qudits, int m) {
  if (m < 1 || m >= n_qudits) throw domain_error("mean_entropy_qudits: 1 <= m < N required");
  std::int64_t m_dim = ipow(d, m);
  std::int64_t k_dim = ipow(d, n_qudits - m);
  if (m_dim > k_dim) std::swap(m_dim, k_dim);  // subsystem entropies are equal
  return mean_entropy(m_dim, k_dim);
}

double mean_purity(std::int64_t m_dim, std::int64_t k_dim) {
  if (m_dim < 1 || k_dim < 1) throw domain_error("mean_purity: dimensions must be >= 1");
  return static_cast<double>(m_dim + k_dim) / (static_cast<double>(m_dim) * k_dim + 1.0);
}

double mean_purity_qudits(int d, int n_qudits, int m) {
  if (m < 1 || m >= n_qudits) throw domain_error("mean_purity_qudits: 1 <= m < N required");
  return mean_purity(ipow(d, m), ipow(d, n_qudits - m));
}

BoundsReport bounds_report(int d, int m) {
  if (d < 2 || m < 1) throw domain_error("bounds_report: d >= 2 and m >= 1 required");
  BoundsReport rep;
  rep.d = d;
  rep.m = m;
  const double n = static_cast<double>(ipow(d, m));
  const double log_d = std::log(static_cast<double>(d));
  const double p = 1.0 / n;  // d^-m

  rep.r_ppt = 1.0 / (n - 1.0);
  rep.n_ppt_real = 3.0 * m + std::log1p(-(p + p * p)) / log_d;
  rep.n_ppt = static_cast<int>(std::floor(rep.n_ppt_real)) + 1;
  rep.transition_low = 3 * m - 2;
  rep.transition_high = 3 * m;

  if (m >= 2) {
    rep.eps_ent = 1.0 / (static_cast<double>(ipow(d, m - 1)) + 1.0);
    const double dm_plus_d = n + d;
    rep.r_ent = (n + static_cast<double>(d) * d + 2.0 * d) / (dm_plus_d * dm_plus_d);
    rep.n_ent_real =
        3.0 * m - 2.0 + std::log1p((2.0 * d + 1.0) * p + (d + 2.0) * d * p * p) / log_d;
    rep.n_ent = static_cast<int>(std::floor(*rep.n_ent_real));
  }
  if (ipow(d, m) >= 3) rep.s_critical = critical_entropy(ipow(d, m));
  return rep;
}

DensityMatrix werner_state(int d, int m, double eps) {
  if (d < 2 || m < 2) throw domain_error("werner_state: d >= 2 and m >= 2 required");
  if (eps < 0.0 || eps > 1.0) throw domain_error("werner_state: eps in [0,1] required");
  DensityMatrix rho(d, m);
  const double background = (1.0 - eps) / static_cast<double>(rho.n);
  for (std::int64_t i = 0; i < rho.n; ++i) rho.at(i, i) = background;
  // |i...i> sits at index i * (d^m - 1)/(d - 1)
  const std::int64_t rep_stride = (rho.n - 1) / (d - 1);
  const double peak = eps / static_cast<double>(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) rho.at(i * rep_stride, j * rep_stride) += peak;
  return rho;
}

double critical_entropy(std::int64_t n) {
  if (n < 3) throw domain_error("critical_entropy: n >= 3 required");
  const double nd = static_cast<double>(n);
  return std::log(nd) - 2.0 / nd * std::log(2.0) +
         (nd - 2.0) / nd * std::log((nd - 1.0) / (nd - 2.0));
}

std::pair<Spectrum, Spectrum> ball_boundary_spectra(std::int64_t n) {
  if (n < 3) throw domain_error("ball_boundary_spectra: n >= 3 required");
  Spectrum rho_a, rho_b;
  rho_a.values.assign(n, 1.0 / static_cast<double>(n - 1));
  rho_a.values.back() = 0.0;
  rho_b.values.assign(n, static_cast<double>(n - 2) /
                             (static_cast<double>(n) * static_cast<double>(n - 1)));
  rho_b.values.front() = 2.0 / static_cast<double>(n);
  return {rho_a, rho_b};
}

}  // namespace qent
