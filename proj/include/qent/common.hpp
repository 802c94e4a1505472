#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qent {

using cx = std::complex<double>;

// Error taxonomy, mapped onto CLI exit codes: domain/insufficient -> 1,
// resource -> 2, invariant -> 3.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct domain_error : error {
  using error::error;
};
struct resource_error : error {
  using error::error;
};
struct invariant_error : error {
  using error::error;
};
struct insufficient_data_error : error {
  using error::error;
};

// Numerical tolerances.
constexpr double k_norm_tol = 1e-12;        // pure-state normalization
constexpr double k_herm_type_tol = 1e-12;   // density-matrix hermiticity
constexpr double k_herm_input_tol = 1e-10;  // eigensolver input gate
constexpr double k_trace_tol = 1e-10;       // unit-trace check

// Positivity tolerance scales with matrix size to absorb eigensolver noise.
inline double psd_tol(std::int64_t n) { return 1e-10 * static_cast<double>(n); }

// d^e with overflow protection; dimensions in scope stay far below 2^62.
inline std::int64_t ipow(int base, int exp) {
  if (base < 1 || exp < 0) throw domain_error("ipow: base must be >= 1, exp >= 0");
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > (std::int64_t{1} << 62) / base) throw resource_error("ipow: dimension overflow");
    r *= base;
  }
  return r;
}

// Compensated accumulation; keeps long reductions accurate to a few ulps
// independent of term count.
struct KahanSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    double y = x - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};

}  // namespace qent
