#include "qent/measures.hpp"

#include <cmath>

#include "qent/quditmath.hpp"

namespace qent {

double purity(const DensityMatrix& rho) {
  KahanSum s;
  for (const cx& c : rho.a) s.add(std::norm(c));
  return s.value();
}

double ipr(const DensityMatrix& rho) { return 1.0 / purity(rho); }

double entropy_of(const Spectrum& spectrum, double tol) {
  KahanSum s;
  for (double x : spectrum.values) {
    if (x < -tol)
      throw invariant_error("entropy: eigenvalue below -psd_tol, state not positive");
    if (x > 0.0) s.add(-x * std::log(x));
  }
  return s.value();
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return entropy_of(hermitian_spectrum(rho), psd_tol(rho.n));
}

double hs_distance_to_center(const DensityMatrix& rho) {
  const double inv_n = 1.0 / static_cast<double>(rho.n);
  KahanSum s;
  for (std::int64_t i = 0; i < rho.n; ++i) {
    for (std::int64_t j = 0; j < rho.n; ++j) {
      const cx v = (i == j) ? rho.at(i, j) - inv_n : rho.at(i, j);
      s.add(std::norm(v));
    }
  }
  return std::sqrt(s.value());
}

double mehta_alpha(const HermMatrix& a) {
  const double tr_sq = a.frobenius_sq();  // tr A^2 for Hermitian A
  if (tr_sq < 1e-30) throw domain_error("mehta_alpha: matrix is numerically zero");
  return a.trace_real() / std::sqrt(tr_sq);
}

bool in_maximal_ball(const DensityMatrix& rho) {
  const double boundary = static_cast<double>(rho.n - 1);
  return ipr(rho) >= boundary * (1.0 - 1e-12);
}

MeasureRecord measure(const DensityMatrix& rho) {
  MeasureRecord rec;
  rec.purity = purity(rho);
  rec.ipr = 1.0 / rec.purity;
  rec.entropy = von_neumann_entropy(rho);
  rec.hs_distance = hs_distance_to_center(rho);
  rec.in_maximal_ball = in_maximal_ball(rho);
  return rec;
}

}  // namespace qent
