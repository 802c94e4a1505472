#pragma once

#include <optional>

#include "qent/measures.hpp"
#include "qent/types.hpp"

namespace qent {

enum class Verdict { ppt, npt };

// full_scan is the default: every canonical bipartition is tested and the
// global minimum eigenvalue retained. verdict_only stops at the first
// negative witness (min_eigenvalue then refers to that witness only).
enum class ScanMode { full_scan, verdict_only };

struct ClassificationRecord {
  Verdict verdict = Verdict::ppt;
  std::optional<PartitionSpec> witness;  // present iff NPT
  double min_eigenvalue = 0.0;           // most negative over tested transposes
  MeasureRecord measures;
};

// PPT iff min eigenvalue over all canonical partial transposes >= -eps,
// where eps defaults to psd_tol(d^m). Requires m >= 2; single qudits are
// PPT by convention at the harness level.
ClassificationRecord classify(const DensityMatrix& rho, ScanMode mode = ScanMode::full_scan,
                              double eps = -1.0);

// Bisection on epsilon in [0,1] for the PPT -> NPT flip of the generalized
// Werner family; the family has no bound entanglement, so the flip sits at
// the entanglement threshold 1/(d^(m-1)+1). Returns the crossing to within
// `tolerance`. The verdicts inside the scan use a solver-noise cutoff rather
// than the statistical psd_tol (see decisions in werner_threshold_scan).
double werner_threshold_scan(int d, int m, double tolerance);

}  // namespace qent
