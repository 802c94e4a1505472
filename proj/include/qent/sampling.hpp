#pragma once

#include <cstdint>
#include <vector>

#include "qent/rng.hpp"
#include "qent/types.hpp"

namespace qent {

enum class KeepPolicy { first_m, random_subset };

// Default cap keeps a single pure state under ~16 MB of amplitudes.
inline constexpr std::uint64_t k_default_max_amplitudes = std::uint64_t{1} << 20;

// Haar-random (Fubini-Study) pure state: d^N independent standard complex
// Gaussian amplitudes, normalized. Deterministic given the seed.
PureState sample_haar_pure(int d, int n_qudits, const SeedSpec& seed,
                           std::uint64_t max_amplitudes = k_default_max_amplitudes);
PureState sample_haar_pure(int d, int n_qudits, GaussianStream& g,
                           std::uint64_t max_amplitudes = k_default_max_amplitudes);

// m kept positions out of n_qudits, sorted. first_m is the cheapest index
// arithmetic; random_subset exercises unitary invariance.
std::vector<int> sample_keep_subset(int n_qudits, int m, KeepPolicy policy, GaussianStream& g);

// One draw from the induced measure on m-qudit mixed states: Haar pure state
// of N qudits partial-traced down to m.
DensityMatrix induced_mixed(int d, int n_qudits, int m, KeepPolicy policy, const SeedSpec& seed,
                            std::uint64_t max_amplitudes = k_default_max_amplitudes);

// Random spectrum on (radial_fraction = 1) or inside (< 1) the maximal ball
// inscribed in the set of n-dimensional mixed states: eigenvalues 1/n + s*u
// with u a random unit direction in the trace-free hyperplane and s scaled so
// the boundary sits at inverse participation ratio n-1.
std::vector<double> ball_spectrum(int n, double radial_fraction, GaussianStream& g);

// rho = U diag(spectrum) U^dagger with U Haar-random (QR of a Ginibre matrix
// with the standard phase fix). spectrum must be a probability vector of
// length d^m.
DensityMatrix random_density_with_spectrum(int d, int m, const std::vector<double>& spectrum,
                                           GaussianStream& g);

}  // namespace qent
