#include "qent/sampling.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qent/quditmath.hpp"

namespace qent {

PureState sample_haar_pure(int d, int n_qudits, GaussianStream& g, std::uint64_t max_amplitudes) {
  if (d < 2 || n_qudits < 1) throw domain_error("sample_haar_pure: d >= 2 and N >= 1 required");
  const std::int64_t dim = ipow(d, n_qudits);
  if (static_cast<std::uint64_t>(dim) > max_amplitudes)
    throw resource_error("sample_haar_pure: d^N exceeds the amplitude cap");

  PureState state;
  state.d = d;
  state.n_qudits = n_qudits;
  state.amplitudes.resize(dim);
  KahanSum norm_sq;
  for (cx& a : state.amplitudes) {
    a = g.next_complex();
    norm_sq.add(std::norm(a));
  }
  const double norm = std::sqrt(norm_sq.value());
  if (!(norm > 0.0)) throw invariant_error("sample_haar_pure: degenerate zero draw");
  const double inv = 1.0 / norm;
  for (cx& a : state.amplitudes) a *= inv;
  return state;
}

PureState sample_haar_pure(int d, int n_qudits, const SeedSpec& seed,
                           std::uint64_t max_amplitudes) {
  GaussianStream g(seed);
  return sample_haar_pure(d, n_qudits, g, max_amplitudes);
}

std::vector<int> sample_keep_subset(int n_qudits, int m, KeepPolicy policy, GaussianStream& g) {
  if (m < 1 || m >= n_qudits) throw domain_error("sample_keep_subset: 1 <= m < N required");
  std::vector<int> keep(m);
  if (policy == KeepPolicy::first_m) {
    std::iota(keep.begin(), keep.end(), 0);
    return keep;
  }
  std::vector<int> pool(n_qudits);
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < m; ++i) {
    const auto j = i + static_cast<int>(g.raw().next_below(n_qudits - i));
    std::swap(pool[i], pool[j]);
  }
  std::copy(pool.begin(), pool.begin() + m, keep.begin());
  std::sort(keep.begin(), keep.end());
  return keep;
}

DensityMatrix induced_mixed(int d, int n_qudits, int m, KeepPolicy policy, const SeedSpec& seed,
                            std::uint64_t max_amplitudes) {
  if (m < 1 || m >= n_qudits) throw domain_error("induced_mixed: 1 <= m < N required");
  GaussianStream g(seed);
  // amplitudes first, then the subset, so that both keep policies see the
  // same pure state for a given seed
  PureState psi = sample_haar_pure(d, n_qudits, g, max_amplitudes);
  const std::vector<int> keep = sample_keep_subset(n_qudits, m, policy, g);
  return partial_trace(psi, keep);
}

std::vector<double> ball_spectrum(int n, double radial_fraction, GaussianStream& g) {
  if (n < 2) throw domain_error("ball_spectrum: n >= 2 required");
  if (radial_fraction < 0.0 || radial_fraction > 1.0)
    throw domain_error("ball_spectrum: radial_fraction in [0,1] required");
  std::vector<double> u(n);
  double mean = 0.0;
  for (double& x : u) {
    x = g.next();
    mean += x;
  }
  mean /= n;
  double norm_sq = 0.0;
  for (double& x : u) {
    x -= mean;
    norm_sq += x * x;
  }
  if (!(norm_sq > 0.0)) throw invariant_error("ball_spectrum: degenerate direction draw");
  // boundary radius in eigenvalue space: sum (lambda - 1/n)^2 = 1/(n(n-1))
  const double scale =
      radial_fraction * std::sqrt(1.0 / (static_cast<double>(n) * (n - 1))) / std::sqrt(norm_sq);
  std::vector<double> lambda(n);
  for (int i = 0; i < n; ++i) lambda[i] = 1.0 / n + scale * u[i];
  return lambda;
}

DensityMatrix random_density_with_spectrum(int d, int m, const std::vector<double>& spectrum,
                                           GaussianStream& g) {
  const std::int64_t n = ipow(d, m);
  if (static_cast<std::int64_t>(spectrum.size()) != n)
    throw domain_error("random_density_with_spectrum: spectrum length != d^m");

  Eigen::MatrixXcd ginibre(n, n);
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < n; ++j) ginibre(i, j) = g.next_complex();
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(ginibre);
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
  // fix the phases so Q is Haar-distributed, not merely unitary
  for (std::int64_t j = 0; j < n; ++j) {
    const cx r = qr.matrixQR()(j, j);
    const double mag = std::abs(r);
    if (mag > 0.0) q.col(j) *= r / mag;
  }

  Eigen::VectorXd lambda(n);
  for (std::int64_t i = 0; i < n; ++i) lambda(i) = spectrum[i];
  Eigen::MatrixXcd rho = q * lambda.asDiagonal() * q.adjoint();
  // symmetrize away the last-ulp skew from the triple product
  DensityMatrix out(d, m);
  for (std::int64_t i = 0; i < n; ++i) {
    out.at(i, i) = cx(rho(i, i).real(), 0.0);
    for (std::int64_t j = i + 1; j < n; ++j) {
      const cx v = 0.5 * (rho(i, j) + std::conj(rho(j, i)));
      out.at(i, j) = v;
      out.at(j, i) = std::conj(v);
    }
  }
  return out;
}

}  // namespace qent
