#pragma once

#include <cstdint>
#include <vector>

#include "qent/sampling.hpp"
#include "qent/types.hpp"

namespace qent {

struct ExperimentConfig {
  int d = 2;
  int m = 2;
  std::vector<int> n_values;  // each > m, ascending for transition scans
  int samples_per_point = 10000;
  std::uint64_t master_seed = 0;
  int workers = 0;  // 0 = all hardware threads
  int histogram_bins = 100;
  KeepPolicy keep_policy = KeepPolicy::first_m;
  std::uint64_t max_amplitudes = k_default_max_amplitudes;
};

// Everything retained per sample; pure function of (config, N, sample_index).
struct SampleRecord {
  double purity = 0.0;
  double entropy = 0.0;
  double hs_distance = 0.0;
  double min_eigenvalue = 0.0;
  bool ppt = true;
  bool in_ball = false;
};

struct Histogram {
  double lo = 0.0;
  double hi = 1.0;
  std::vector<std::int64_t> counts;
};

struct PointStats {
  int n_qudits = 0;
  int samples = 0;
  double mean_purity = 0.0, se_purity = 0.0;
  double mean_entropy = 0.0, se_entropy = 0.0;
  std::int64_t ppt_count = 0;
  double p_ppt = 0.0, p_ppt_low = 0.0, p_ppt_high = 0.0;  // Wilson 95%
  double p_npt = 0.0, p_npt_low = 0.0, p_npt_high = 0.0;
  std::int64_t ball_count = 0;  // samples inside the maximal ball
  Histogram purity_hist;        // support [1/d^m, 1]
};

using SummaryStats = std::vector<PointStats>;

struct WilsonInterval {
  double low = 0.0;
  double high = 0.0;
};
WilsonInterval wilson95(std::int64_t successes, std::int64_t trials);

// One sample end to end: induced mixed state, measures, classification,
// per-sample invariant checks (hermiticity, trace, positivity via the
// entropy spectrum, the purity/HS-distance identity, ball-implies-PPT).
// Throws invariant_error naming the violated invariant.
SampleRecord evaluate_sample(const ExperimentConfig& config, int n_qudits,
                             std::uint64_t sample_index);

// Runs every N in n_values. Sample i of point p uses
// sample_index = p * samples_per_point + i, so results are bit-identical for
// any worker count; the parallel kernel only fills the per-sample record
// array, accumulation is always in index order.
SummaryStats run_experiment(const ExperimentConfig& config);         // OpenMP kernel
SummaryStats run_experiment_serial(const ExperimentConfig& config);  // reference

// The largest N with p_ppt < 1%, the interpolated 50% crossing, and the
// smallest N with p_ppt > 99%. Requires ascending N bracketing both ends.
struct TransitionWindow {
  int n_low = 0;
  double n_mid = 0.0;
  int n_high = 0;
};
TransitionWindow transition_window(const SummaryStats& stats, double low_threshold = 0.01,
                                   double high_threshold = 0.99);

// Least-squares fit of ln p_npt against N over points with at least min_hits
// NPT hits (>= 3 such points required).
struct FalloffFit {
  double slope = 0.0;
  double intercept = 0.0;
  double goodness = 0.0;  // coefficient of determination
  int points_used = 0;
};
FalloffFit npt_falloff_fit(const SummaryStats& stats, std::int64_t min_hits = 100);

}  // namespace qent
