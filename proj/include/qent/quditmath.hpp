#pragma once

#include <vector>

#include "qent/types.hpp"

namespace qent {

// Reduced density matrix of the qudits in `keep` (sorted positions), traced
// over the rest. Contracts the pure-state amplitudes directly, cost
// O(d^N * d^m); the d^N x d^N projector is never formed.
// Output qudit order follows ascending position in `keep`.
DensityMatrix partial_trace(const PureState& state, const std::vector<int>& keep);

// rho^{T_S}: exchanges the row/column sub-indices of the qudits in
// part.subset. Pure element permutation; Hermitian, trace preserved exactly.
// Accepts any valid subset, canonical or not (complements give the same
// spectrum). The HermMatrix overload exists because a partial transpose is
// not a density matrix, yet transposing is an involution.
HermMatrix partial_transpose(const DensityMatrix& rho, const PartitionSpec& part);
HermMatrix partial_transpose(const HermMatrix& matrix, int d, int m, const PartitionSpec& part);

// All real eigenvalues, sorted descending. Rejects inputs whose hermiticity
// defect exceeds k_herm_input_tol.
Spectrum hermitian_spectrum(const HermMatrix& matrix);
Spectrum hermitian_spectrum(const DensityMatrix& rho);

// Canonical bipartitions of m qudits: subset sizes 1..floor(m/2), sizes
// ascending, lexicographic within a size, complement duplicates removed
// (at size exactly m/2 only subsets containing position 0).
std::vector<PartitionSpec> enumerate_bipartitions(int m);

// Relabels tensor factors: output qudit q carries input qudit perm[q].
DensityMatrix permute_qudits(const DensityMatrix& rho, const std::vector<int>& perm);

}  // namespace qent
