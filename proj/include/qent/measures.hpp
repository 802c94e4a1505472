#pragma once

#include "qent/types.hpp"

namespace qent {

// Scalar functionals evaluated once per sample.
struct MeasureRecord {
  double purity = 0.0;       // r = tr(rho^2), raw (unclamped)
  double ipr = 0.0;          // R = 1/r
  double entropy = 0.0;      // von Neumann, natural log
  double hs_distance = 0.0;  // Hilbert-Schmidt distance to I/n
  bool in_maximal_ball = false;
};

// tr(rho^2) as the squared Frobenius norm; exact for Hermitian input and
// O(n^2) instead of a matrix product.
double purity(const DensityMatrix& rho);
double ipr(const DensityMatrix& rho);

// -sum x ln x over the spectrum, 0 ln 0 = 0. Eigenvalues in [-tol, 0) are
// numerical noise and treated as 0; anything below -tol trips an
// invariant_error (data corruption, not noise).
double entropy_of(const Spectrum& spectrum, double tol);
double von_neumann_entropy(const DensityMatrix& rho);

// Frobenius norm of rho - I/n, computed from the entries.
double hs_distance_to_center(const DensityMatrix& rho);

// alpha = tr A / sqrt(tr A^2). alpha >= sqrt(n-1) certifies A >= 0.
// For a density matrix alpha^2 is the inverse participation ratio.
double mehta_alpha(const HermMatrix& a);

// True iff R >= d^m - 1 (boundary inside; a one-ulp relative guard keeps
// exactly-on-boundary spectra from falling out through rounding).
bool in_maximal_ball(const DensityMatrix& rho);

MeasureRecord measure(const DensityMatrix& rho);

}  // namespace qent
