#pragma once

#include <string>
#include <vector>

#include "qent/common.hpp"

namespace qent {

// Pure state of n_qudits d-level systems. Basis index i encodes the qudit
// digits in base d with qudit 0 as the most significant digit.
struct PureState {
  int d = 2;
  int n_qudits = 1;
  std::vector<cx> amplitudes;  // length d^n_qudits, unit norm

  std::int64_t dim() const { return static_cast<std::int64_t>(amplitudes.size()); }
  double norm_sq() const;
  void check_invariants() const;  // norm within k_norm_tol
};

// Dense Hermitian matrix, row-major. Used for partial transposes, which are
// Hermitian but in general not positive.
struct HermMatrix {
  std::int64_t n = 0;
  std::vector<cx> a;  // n*n, row-major

  explicit HermMatrix(std::int64_t size = 0) : n(size), a(size * size) {}
  cx& at(std::int64_t i, std::int64_t j) { return a[i * n + j]; }
  const cx& at(std::int64_t i, std::int64_t j) const { return a[i * n + j]; }
  double max_hermiticity_defect() const;
  double trace_real() const;
  double frobenius_sq() const;  // = tr(A^2) for Hermitian A
};

// Mixed state of m d-level qudits: Hermitian, unit trace, positive
// semidefinite within psd_tol(n). Same index convention as PureState.
struct DensityMatrix {
  int d = 2;
  int m = 1;
  std::int64_t n = 2;  // d^m
  std::vector<cx> a;   // n*n, row-major

  DensityMatrix() = default;
  DensityMatrix(int d_, int m_);
  cx& at(std::int64_t i, std::int64_t j) { return a[i * n + j]; }
  const cx& at(std::int64_t i, std::int64_t j) const { return a[i * n + j]; }
  HermMatrix as_herm() const;
  // Hermiticity and trace checks (cheap); positivity is enforced wherever a
  // spectrum is computed.
  void check_invariants() const;
};

// Real eigenvalues sorted descending.
struct Spectrum {
  std::vector<double> values;

  double sum() const;
  double sum_sq() const;
  double min() const { return values.empty() ? 0.0 : values.back(); }
  double max() const { return values.empty() ? 0.0 : values.front(); }
  double ipr() const { return 1.0 / sum_sq(); }
};

// A bipartition of m qudits, named by the transposed/kept side.
// Canonical form: |subset| <= m/2 and, at exactly m/2, position 0 is a
// member, so that complement-equivalent splits appear once.
struct PartitionSpec {
  std::vector<int> subset;  // sorted qudit positions
  int m = 0;

  bool is_canonical() const;
  std::vector<int> complement() const;
  std::string to_string() const;  // e.g. "{0,2}"
  bool operator==(const PartitionSpec&) const = default;
};

// Validates subset: sorted, unique, nonempty, proper subset of {0..m-1}.
PartitionSpec make_partition(std::vector<int> subset, int m);

}  // namespace qent
