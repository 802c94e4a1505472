#include "qent/ppt.hpp"

#include <cmath>

#include "qent/analytic.hpp"
#include "qent/quditmath.hpp"

namespace qent {

ClassificationRecord classify(const DensityMatrix& rho, ScanMode mode, double eps) {
  if (rho.m < 2) throw domain_error("classify: m >= 2 required (single qudits are trivially PPT)");
  if (eps < 0.0) eps = psd_tol(rho.n);

  ClassificationRecord rec;
  rec.measures = measure(rho);
  bool first = true;
  for (const PartitionSpec& part : enumerate_bipartitions(rho.m)) {
    const Spectrum spec = hermitian_spectrum(partial_transpose(rho, part));
    const double min_eig = spec.min();
    if (first || min_eig < rec.min_eigenvalue) {
      rec.min_eigenvalue = min_eig;
      if (min_eig < -eps) rec.witness = part;
      first = false;
    }
    if (mode == ScanMode::verdict_only && rec.min_eigenvalue < -eps) break;
  }
  rec.verdict = (rec.min_eigenvalue < -eps) ? Verdict::npt : Verdict::ppt;
  if (rec.verdict == Verdict::ppt) rec.witness.reset();
  return rec;
}

double werner_threshold_scan(int d, int m, double tolerance) {
  if (tolerance <= 0.0) throw domain_error("werner_threshold_scan: tolerance must be positive");
  // The statistical psd_tol would bias the crossing by ~psd_tol/(1/n + 1/d),
  // which is above 1e-9 already at d=3, m=2. Werner matrices are exactly
  // constructed, so a solver-noise cutoff is the right scale here.
  const double eps = 1e-13 * static_cast<double>(ipow(d, m));
  const auto is_npt = [&](double eps_mix) {
    return classify(werner_state(d, m, eps_mix), ScanMode::verdict_only, eps).verdict ==
           Verdict::npt;
  };
  if (is_npt(0.0) || !is_npt(1.0))
    throw invariant_error("werner_threshold_scan: no PPT->NPT flip in [0,1] (classifier bug)");
  double lo = 0.0, hi = 1.0;
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    (is_npt(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace qent
