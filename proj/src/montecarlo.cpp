#include "qent/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qent/measures.hpp"
#include "qent/ppt.hpp"
#include "qent/quditmath.hpp"

namespace qent {

namespace {

void validate_config(const ExperimentConfig& cfg) {
  if (cfg.d < 2 || cfg.m < 1) throw domain_error("experiment: d >= 2 and m >= 1 required");
  if (cfg.n_values.empty()) throw domain_error("experiment: no N values given");
  if (cfg.samples_per_point < 1) throw domain_error("experiment: samples_per_point >= 1 required");
  if (cfg.histogram_bins < 1) throw domain_error("experiment: histogram_bins >= 1 required");
  for (int n : cfg.n_values) {
    if (n <= cfg.m) throw domain_error("experiment: every N must exceed m");
    // fail fast, before any sampling
    if (static_cast<std::uint64_t>(ipow(cfg.d, n)) > cfg.max_amplitudes)
      throw resource_error("experiment: d^N exceeds the amplitude cap for N=" + std::to_string(n));
  }
}

PointStats accumulate_point(const ExperimentConfig& cfg, int n_qudits,
                            const std::vector<SampleRecord>& recs) {
  PointStats st;
  st.n_qudits = n_qudits;
  st.samples = static_cast<int>(recs.size());

  const double lo = 1.0 / static_cast<double>(ipow(cfg.d, cfg.m));
  st.purity_hist.lo = lo;
  st.purity_hist.hi = 1.0;
  st.purity_hist.counts.assign(cfg.histogram_bins, 0);
  const double width = (1.0 - lo) / cfg.histogram_bins;

  KahanSum sum_r, sum_s;
  for (const SampleRecord& rec : recs) {
    sum_r.add(rec.purity);
    sum_s.add(rec.entropy);
    st.ppt_count += rec.ppt ? 1 : 0;
    st.ball_count += rec.in_ball ? 1 : 0;
    auto bin = static_cast<std::int64_t>((rec.purity - lo) / width);
    bin = std::clamp<std::int64_t>(bin, 0, cfg.histogram_bins - 1);
    ++st.purity_hist.counts[bin];
  }
  const double inv_n = 1.0 / st.samples;
  st.mean_purity = sum_r.value() * inv_n;
  st.mean_entropy = sum_s.value() * inv_n;

  KahanSum var_r, var_s;
  for (const SampleRecord& rec : recs) {
    var_r.add((rec.purity - st.mean_purity) * (rec.purity - st.mean_purity));
    var_s.add((rec.entropy - st.mean_entropy) * (rec.entropy - st.mean_entropy));
  }
  if (st.samples > 1) {
    st.se_purity = std::sqrt(var_r.value() / (st.samples - 1.0) / st.samples);
    st.se_entropy = std::sqrt(var_s.value() / (st.samples - 1.0) / st.samples);
  }

  st.p_ppt = static_cast<double>(st.ppt_count) * inv_n;
  st.p_npt = static_cast<double>(st.samples - st.ppt_count) * inv_n;
  const WilsonInterval wp = wilson95(st.ppt_count, st.samples);
  const WilsonInterval wn = wilson95(st.samples - st.ppt_count, st.samples);
  st.p_ppt_low = wp.low;
  st.p_ppt_high = wp.high;
  st.p_npt_low = wn.low;
  st.p_npt_high = wn.high;
  return st;
}

}  // namespace

WilsonInterval wilson95(std::int64_t successes, std::int64_t trials) {
  if (trials <= 0 || successes < 0 || successes > trials)
    throw domain_error("wilson95: need 0 <= successes <= trials");
  constexpr double z = 1.959963984540054;  // 97.5th normal percentile
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2n = z * z / n;
  const double center = (p + z2n / 2.0) / (1.0 + z2n);
  const double half = z / (1.0 + z2n) * std::sqrt(p * (1.0 - p) / n + z2n / (4.0 * n));
  WilsonInterval w{std::max(0.0, center - half), std::min(1.0, center + half)};
  // at the extremes the exact lower/upper bound is the extreme itself
  if (successes == 0) w.low = 0.0;
  if (successes == trials) w.high = 1.0;
  return w;
}

SampleRecord evaluate_sample(const ExperimentConfig& cfg, int n_qudits,
                             std::uint64_t sample_index) {
  const DensityMatrix rho = induced_mixed(cfg.d, n_qudits, cfg.m, cfg.keep_policy,
                                          SeedSpec{cfg.master_seed, sample_index},
                                          cfg.max_amplitudes);
  rho.check_invariants();

  SampleRecord rec;
  if (cfg.m >= 2) {
    const ClassificationRecord cls = classify(rho);
    rec.purity = cls.measures.purity;
    rec.entropy = cls.measures.entropy;
    rec.hs_distance = cls.measures.hs_distance;
    rec.in_ball = cls.measures.in_maximal_ball;
    rec.min_eigenvalue = cls.min_eigenvalue;
    rec.ppt = cls.verdict == Verdict::ppt;
  } else {
    // single qudit: PPT by convention, min eigenvalue is the state's own
    const MeasureRecord meas = measure(rho);
    rec.purity = meas.purity;
    rec.entropy = meas.entropy;
    rec.hs_distance = meas.hs_distance;
    rec.in_ball = meas.in_maximal_ball;
    rec.min_eigenvalue = hermitian_spectrum(rho).min();
    rec.ppt = true;
  }

  const double identity_gap =
      rec.hs_distance * rec.hs_distance + 1.0 / static_cast<double>(rho.n) - rec.purity;
  if (std::abs(identity_gap) > 1e-10)
    throw invariant_error("sample: purity/HS-distance identity violated");
  if (rec.in_ball && !rec.ppt)
    throw invariant_error("sample: ball_implies_ppt violated (state inside maximal ball is NPT)");
  return rec;
}

SummaryStats run_experiment_serial(const ExperimentConfig& cfg) {
  validate_config(cfg);
  SummaryStats out;
  out.reserve(cfg.n_values.size());
  for (std::size_t p = 0; p < cfg.n_values.size(); ++p) {
    const int n_qudits = cfg.n_values[p];
    std::vector<SampleRecord> recs(cfg.samples_per_point);
    const std::uint64_t base = static_cast<std::uint64_t>(p) * cfg.samples_per_point;
    for (int i = 0; i < cfg.samples_per_point; ++i)
      recs[i] = evaluate_sample(cfg, n_qudits, base + i);
    out.push_back(accumulate_point(cfg, n_qudits, recs));
  }
  return out;
}

SummaryStats run_experiment(const ExperimentConfig& cfg) {
  validate_config(cfg);
#ifndef _OPENMP
  return run_experiment_serial(cfg);
#else
  const int threads = cfg.workers > 0 ? cfg.workers : omp_get_max_threads();
  SummaryStats out;
  out.reserve(cfg.n_values.size());
  for (std::size_t p = 0; p < cfg.n_values.size(); ++p) {
    const int n_qudits = cfg.n_values[p];
    std::vector<SampleRecord> recs(cfg.samples_per_point);
    const std::uint64_t base = static_cast<std::uint64_t>(p) * cfg.samples_per_point;

    // The kernel only fills independent slots; any failure is rethrown after
    // the join. Accumulation below is serial and in index order, so the
    // result is bit-identical for every worker count.
    bool failed = false;
    std::string failure;
    std::mutex failure_mutex;
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
    for (int i = 0; i < cfg.samples_per_point; ++i) {
      bool skip;
#pragma omp atomic read
      skip = failed;
      if (skip) continue;
      try {
        recs[i] = evaluate_sample(cfg, n_qudits, base + i);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failed) failure = e.what();
#pragma omp atomic write
        failed = true;
      }
    }
    if (failed) throw invariant_error(failure);
    out.push_back(accumulate_point(cfg, n_qudits, recs));
  }
  return out;
#endif
}

TransitionWindow transition_window(const SummaryStats& stats, double low_threshold,
                                   double high_threshold) {
  if (stats.size() < 2) throw insufficient_data_error("transition_window: need at least 2 points");
  for (std::size_t i = 1; i < stats.size(); ++i)
    if (stats[i].n_qudits <= stats[i - 1].n_qudits)
      throw domain_error("transition_window: N values must be ascending");

  TransitionWindow win;
  bool have_low = false, have_high = false;
  for (const PointStats& st : stats) {
    if (st.p_ppt < low_threshold) {
      win.n_low = st.n_qudits;
      have_low = true;
    }
    if (!have_high && st.p_ppt > high_threshold) {
      win.n_high = st.n_qudits;
      have_high = true;
    }
  }
  if (!have_low || !have_high || win.n_low >= win.n_high)
    throw insufficient_data_error("transition_window: scan does not bracket the transition");

  bool have_mid = false;
  for (std::size_t i = 1; i < stats.size(); ++i) {
    const double p0 = stats[i - 1].p_ppt, p1 = stats[i].p_ppt;
    if (p0 <= 0.5 && p1 > 0.5) {
      win.n_mid =
          stats[i - 1].n_qudits + (0.5 - p0) / (p1 - p0) * (stats[i].n_qudits - stats[i - 1].n_qudits);
      have_mid = true;
      break;
    }
  }
  if (!have_mid)
    throw insufficient_data_error("transition_window: no 50% crossing inside the scan");
  return win;
}

FalloffFit npt_falloff_fit(const SummaryStats& stats, std::int64_t min_hits) {
  std::vector<double> xs, ys;
  for (const PointStats& st : stats) {
    const std::int64_t hits = st.samples - st.ppt_count;
    if (hits >= min_hits) {
      xs.push_back(st.n_qudits);
      ys.push_back(std::log(static_cast<double>(hits) / st.samples));
    }
  }
  if (xs.size() < 3)
    throw insufficient_data_error("npt_falloff_fit: fewer than 3 points with enough NPT hits");

  const auto k = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= k;
  my /= k;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  FalloffFit fit;
  fit.points_used = static_cast<int>(xs.size());
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
    ss_res += r * r;
  }
  fit.goodness = syy > 1e-30 ? 1.0 - ss_res / syy : 1.0;
  return fit;
}

}  // namespace qent
