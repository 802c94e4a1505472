#include "qent/types.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qent {

double PureState::norm_sq() const {
  KahanSum s;
  for (const cx& c : amplitudes) s.add(std::norm(c));
  return s.value();
}

void PureState::check_invariants() const {
  if (d < 2 || n_qudits < 1) throw domain_error("PureState: d >= 2 and N >= 1 required");
  if (dim() != ipow(d, n_qudits)) throw domain_error("PureState: amplitude count != d^N");
  if (std::abs(norm_sq() - 1.0) > k_norm_tol)
    throw invariant_error("PureState: squared norm deviates from 1 beyond 1e-12");
}

double HermMatrix::max_hermiticity_defect() const {
  double worst = 0.0;
  for (std::int64_t i = 0; i < n; ++i) {
    worst = std::max(worst, std::abs(at(i, i).imag()));
    for (std::int64_t j = i + 1; j < n; ++j)
      worst = std::max(worst, std::abs(at(i, j) - std::conj(at(j, i))));
  }
  return worst;
}

double HermMatrix::trace_real() const {
  KahanSum s;
  for (std::int64_t i = 0; i < n; ++i) s.add(at(i, i).real());
  return s.value();
}

double HermMatrix::frobenius_sq() const {
  KahanSum s;
  for (const cx& c : a) s.add(std::norm(c));
  return s.value();
}

DensityMatrix::DensityMatrix(int d_, int m_) : d(d_), m(m_), n(ipow(d_, m_)), a(n * n) {
  if (d_ < 2 || m_ < 1) throw domain_error("DensityMatrix: d >= 2 and m >= 1 required");
}

HermMatrix DensityMatrix::as_herm() const {
  HermMatrix h(n);
  h.a = a;
  return h;
}

void DensityMatrix::check_invariants() const {
  if (d < 2 || m < 1 || n != ipow(d, m) || static_cast<std::int64_t>(a.size()) != n * n)
    throw domain_error("DensityMatrix: inconsistent dimensions");
  double defect = 0.0;
  KahanSum tr;
  for (std::int64_t i = 0; i < n; ++i) {
    tr.add(at(i, i).real());
    defect = std::max(defect, std::abs(at(i, i).imag()));
    for (std::int64_t j = i + 1; j < n; ++j)
      defect = std::max(defect, std::abs(at(i, j) - std::conj(at(j, i))));
  }
  if (defect > k_herm_type_tol)
    throw invariant_error("DensityMatrix: hermiticity defect beyond 1e-12");
  if (std::abs(tr.value() - 1.0) > k_trace_tol)
    throw invariant_error("DensityMatrix: trace deviates from 1 beyond 1e-10");
}

double Spectrum::sum() const {
  KahanSum s;
  for (double v : values) s.add(v);
  return s.value();
}

double Spectrum::sum_sq() const {
  KahanSum s;
  for (double v : values) s.add(v * v);
  return s.value();
}

bool PartitionSpec::is_canonical() const {
  const int size = static_cast<int>(subset.size());
  if (2 * size > m) return false;
  if (2 * size == m && (subset.empty() || subset.front() != 0)) return false;
  return true;
}

std::vector<int> PartitionSpec::complement() const {
  std::vector<int> out;
  out.reserve(m - subset.size());
  std::size_t k = 0;
  for (int q = 0; q < m; ++q) {
    if (k < subset.size() && subset[k] == q)
      ++k;
    else
      out.push_back(q);
  }
  return out;
}

std::string PartitionSpec::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) os << ',';
    os << subset[i];
  }
  os << '}';
  return os.str();
}

PartitionSpec make_partition(std::vector<int> subset, int m) {
  std::sort(subset.begin(), subset.end());
  if (m < 2) throw domain_error("PartitionSpec: m >= 2 required");
  if (subset.empty()) throw domain_error("PartitionSpec: subset must be nonempty");
  if (static_cast<int>(subset.size()) >= m)
    throw domain_error("PartitionSpec: subset must be a proper subset");
  if (subset.front() < 0 || subset.back() >= m)
    throw domain_error("PartitionSpec: position out of range");
  if (std::adjacent_find(subset.begin(), subset.end()) != subset.end())
    throw domain_error("PartitionSpec: duplicate position");
  return PartitionSpec{std::move(subset), m};
}

}  // namespace qent
