#include "qent/quditmath.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <numeric>

namespace qent {

namespace {

// stride of qudit q in an n_qudits register: d^(n_qudits-1-q)
std::vector<std::int64_t> qudit_strides(int d, int n_qudits) {
  std::vector<std::int64_t> s(n_qudits);
  std::int64_t v = 1;
  for (int q = n_qudits - 1; q >= 0; --q) {
    s[q] = v;
    v *= d;
  }
  return s;
}

// offsets[k] = full-register offset of the k-th assignment of digits to
// `positions`, with positions[0] as the most significant of the sub-register
std::vector<std::int64_t> sub_register_offsets(int d, const std::vector<std::int64_t>& strides,
                                               const std::vector<int>& positions) {
  const int w = static_cast<int>(positions.size());
  std::int64_t count = 1;
  for (int i = 0; i < w; ++i) count *= d;
  std::vector<std::int64_t> offsets(count);
  std::vector<int> digits(w, 0);
  std::int64_t off = 0;
  for (std::int64_t k = 0;; ++k) {
    offsets[k] = off;
    int j = w - 1;
    for (; j >= 0; --j) {
      if (++digits[j] < d) {
        off += strides[positions[j]];
        break;
      }
      digits[j] = 0;
      off -= static_cast<std::int64_t>(d - 1) * strides[positions[j]];
    }
    if (j < 0) break;
  }
  return offsets;
}

void validate_positions(const std::vector<int>& positions, int total, const char* what) {
  if (positions.empty()) throw domain_error(std::string(what) + ": empty position set");
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (positions[i] < 0 || positions[i] >= total)
      throw domain_error(std::string(what) + ": position out of range");
    if (i > 0 && positions[i] <= positions[i - 1])
      throw domain_error(std::string(what) + ": positions must be sorted and unique");
  }
}

}  // namespace

DensityMatrix partial_trace(const PureState& state, const std::vector<int>& keep) {
  validate_positions(keep, state.n_qudits, "partial_trace");
  const int m = static_cast<int>(keep.size());
  if (m == state.n_qudits)
    throw domain_error("partial_trace: keep equals the full register; nothing to trace");

  std::vector<int> traced;
  traced.reserve(state.n_qudits - m);
  {
    std::size_t k = 0;
    for (int q = 0; q < state.n_qudits; ++q) {
      if (k < keep.size() && keep[k] == q)
        ++k;
      else
        traced.push_back(q);
    }
  }

  const auto strides = qudit_strides(state.d, state.n_qudits);
  const auto kofs = sub_register_offsets(state.d, strides, keep);
  const auto eofs = sub_register_offsets(state.d, strides, traced);
  const std::int64_t nm = static_cast<std::int64_t>(kofs.size());

  DensityMatrix rho(state.d, m);
  std::vector<cx> slice(nm);
  const cx* psi = state.amplitudes.data();
  cx* out = rho.a.data();

  // rho(i,j) = sum_e psi(i,e) conj(psi(j,e)); upper triangle accumulated,
  // lower mirrored, so the result is Hermitian by construction.
  for (std::int64_t eoff : eofs) {
    for (std::int64_t i = 0; i < nm; ++i) slice[i] = psi[eoff + kofs[i]];
    for (std::int64_t i = 0; i < nm; ++i) {
      const double ar = slice[i].real(), ai = slice[i].imag();
      cx* row = out + i * nm;
      for (std::int64_t j = i; j < nm; ++j) {
        const double br = slice[j].real(), bi = slice[j].imag();
        row[j] += cx(ar * br + ai * bi, ai * br - ar * bi);
      }
    }
  }
  for (std::int64_t i = 0; i < nm; ++i)
    for (std::int64_t j = i + 1; j < nm; ++j) out[j * nm + i] = std::conj(out[i * nm + j]);
  return rho;
}

HermMatrix partial_transpose(const HermMatrix& matrix, int d, int m, const PartitionSpec& part) {
  if (part.m != m) throw domain_error("partial_transpose: partition size mismatch");
  validate_positions(part.subset, m, "partial_transpose");
  if (static_cast<int>(part.subset.size()) >= m)
    throw domain_error("partial_transpose: subset must be a proper subset");
  const std::int64_t n = matrix.n;
  if (n != ipow(d, m)) throw domain_error("partial_transpose: matrix size != d^m");

  const auto strides = qudit_strides(d, m);

  // part_off[k] + rest_off[k] == k; transposing swaps the part components of
  // the row and column indices.
  std::vector<std::int64_t> part_off(n);
  for (std::int64_t k = 0; k < n; ++k) {
    std::int64_t p = 0;
    for (int q : part.subset) p += ((k / strides[q]) % d) * strides[q];
    part_off[k] = p;
  }

  HermMatrix out(n);
  for (std::int64_t i = 0; i < n; ++i) {
    const std::int64_t ri = i - part_off[i];
    for (std::int64_t j = 0; j < n; ++j) {
      const std::int64_t src_row = ri + part_off[j];
      const std::int64_t src_col = (j - part_off[j]) + part_off[i];
      out.a[i * n + j] = matrix.a[src_row * n + src_col];
    }
  }
  return out;
}

HermMatrix partial_transpose(const DensityMatrix& rho, const PartitionSpec& part) {
  return partial_transpose(rho.as_herm(), rho.d, rho.m, part);
}

Spectrum hermitian_spectrum(const HermMatrix& matrix) {
  const std::int64_t n = matrix.n;
  if (n < 1) throw domain_error("hermitian_spectrum: empty matrix");
  if (matrix.max_hermiticity_defect() > k_herm_input_tol)
    throw domain_error("hermitian_spectrum: input not Hermitian within 1e-10");
  Spectrum spec;
  if (n == 1) {
    spec.values = {matrix.a[0].real()};
    return spec;
  }
  Eigen::MatrixXcd a(n, n);
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < n; ++j) a(i, j) = matrix.at(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw invariant_error("hermitian_spectrum: eigensolver did not converge");
  const auto& ev = solver.eigenvalues();
  spec.values.resize(n);
  for (std::int64_t i = 0; i < n; ++i) spec.values[i] = ev(n - 1 - i);
  return spec;
}

Spectrum hermitian_spectrum(const DensityMatrix& rho) { return hermitian_spectrum(rho.as_herm()); }

std::vector<PartitionSpec> enumerate_bipartitions(int m) {
  if (m < 2) throw domain_error("enumerate_bipartitions: m >= 2 required");
  std::vector<PartitionSpec> out;
  for (int size = 1; 2 * size <= m; ++size) {
    const bool half = (2 * size == m);
    std::vector<int> comb(size);
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
      if (!half || comb[0] == 0) out.push_back(PartitionSpec{comb, m});
      int i = size - 1;
      while (i >= 0 && comb[i] == m - size + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  return out;
}

DensityMatrix permute_qudits(const DensityMatrix& rho, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != rho.m)
    throw domain_error("permute_qudits: permutation length mismatch");
  std::vector<bool> seen(rho.m, false);
  for (int p : perm) {
    if (p < 0 || p >= rho.m || seen[p]) throw domain_error("permute_qudits: not a permutation");
    seen[p] = true;
  }
  const std::int64_t n = rho.n;
  const auto strides = qudit_strides(rho.d, rho.m);
  // source index whose digit at perm[q] equals digit q of the output index
  std::vector<std::int64_t> map(n);
  for (std::int64_t k = 0; k < n; ++k) {
    std::int64_t src = 0;
    for (int q = 0; q < rho.m; ++q) src += ((k / strides[q]) % rho.d) * strides[perm[q]];
    map[k] = src;
  }
  DensityMatrix out(rho.d, rho.m);
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < n; ++j) out.a[i * n + j] = rho.a[map[i] * n + map[j]];
  return out;
}

}  // namespace qent
