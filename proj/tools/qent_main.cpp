// qent: bound calculators, single-shot sampling, and Monte Carlo experiments
// on subsystems of Haar-random qudit states. Emits CSV (default) or JSON.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "qent/analytic.hpp"
#include "qent/io.hpp"
#include "qent/measures.hpp"
#include "qent/montecarlo.hpp"
#include "qent/ppt.hpp"
#include "qent/quditmath.hpp"
#include "qent/sampling.hpp"

namespace {

using namespace qent;

struct NRange {
  int lo = 0;
  int hi = 0;  // inclusive
  std::string spec;
};

NRange parse_n_range(const std::string& text) {
  NRange r;
  r.spec = text;
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(text);
    } else {
      r.lo = std::stoi(text.substr(0, dots));
      r.hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("--n", "expected an integer or a range like 3..10");
  }
  if (r.lo > r.hi) throw CLI::ValidationError("--n", "range low end exceeds high end");
  return r;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& given) {
  if (given) return *given;
  std::random_device rd;
  const std::uint64_t seed =
      (static_cast<std::uint64_t>(rd()) << 32) ^ static_cast<std::uint64_t>(rd());
  std::cerr << "resolved master_seed=" << seed << "\n";
  return seed;
}

std::uint64_t resolve_amplitude_cap() {
  if (const char* env = std::getenv("QENT_MAX_AMPLITUDES")) {
    const long long v = std::atoll(env);
    if (v < 2) throw resource_error("QENT_MAX_AMPLITUDES must be at least 2");
    return static_cast<std::uint64_t>(v);
  }
  return k_default_max_amplitudes;
}

void emit(const OutputRecord& rec, const std::string& format, const std::string& out_path) {
  const std::string text = format == "json" ? render_json(rec) : render_csv(rec);
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw resource_error("cannot open output file: " + out_path);
    os << text;
  }
}

const char* keep_name(KeepPolicy policy) {
  return policy == KeepPolicy::first_m ? "first_m" : "random_subset";
}

struct CommonFlags {
  int d = 2;
  int m = 2;
  std::string n_spec;
  int samples = 10000;
  std::optional<std::uint64_t> seed;
  int workers = 0;
  int bins = 100;
  std::string keep = "first_m";
  std::string format = "csv";
  std::string out_path;
};

ExperimentConfig build_config(const CommonFlags& flags, const NRange& range) {
  ExperimentConfig cfg;
  cfg.d = flags.d;
  cfg.m = flags.m;
  for (int n = range.lo; n <= range.hi; ++n) cfg.n_values.push_back(n);
  cfg.samples_per_point = flags.samples;
  cfg.master_seed = resolve_seed(flags.seed);
  cfg.workers = flags.workers;
  cfg.histogram_bins = flags.bins;
  cfg.keep_policy =
      flags.keep == "random_subset" ? KeepPolicy::random_subset : KeepPolicy::first_m;
  cfg.max_amplitudes = resolve_amplitude_cap();
  return cfg;
}

// Workers are deliberately absent from the echo: results are bit-identical
// for every worker count, and the file must be too.
void echo_experiment(OutputRecord& rec, const ExperimentConfig& cfg, const NRange& range,
                     bool with_bins) {
  rec.config.emplace_back("d", fmt_int(cfg.d));
  rec.config.emplace_back("m", fmt_int(cfg.m));
  rec.config.emplace_back("n", range.spec);
  rec.config.emplace_back("samples", fmt_int(cfg.samples_per_point));
  rec.config.emplace_back("seed", std::to_string(cfg.master_seed));
  rec.config.emplace_back("keep", keep_name(cfg.keep_policy));
  if (with_bins) rec.config.emplace_back("bins", fmt_int(cfg.histogram_bins));
  rec.config.emplace_back("max_amplitudes", std::to_string(cfg.max_amplitudes));
}

int cmd_bounds(int d, int m, const std::string& format, const std::string& out_path) {
  const BoundsReport rep = bounds_report(d, m);
  OutputRecord rec;
  rec.command = "bounds";
  rec.config.emplace_back("d", fmt_int(d));
  rec.config.emplace_back("m", fmt_int(m));
  rec.columns = {"r_ppt",          "n_ppt",           "eps_ent",    "r_ent", "n_ent",
                 "transition_low", "transition_high", "s_critical", "note"};
  std::string note;
  if (!rep.eps_ent) note = "eps_ent/r_ent/n_ent require m >= 2";
  if (!rep.s_critical) {
    if (!note.empty()) note += "; ";
    note += "s_critical requires d^m >= 3";
  }
  rec.rows.push_back({fmt_double(rep.r_ppt), fmt_int(rep.n_ppt),
                      rep.eps_ent ? fmt_double(*rep.eps_ent) : "",
                      rep.r_ent ? fmt_double(*rep.r_ent) : "",
                      rep.n_ent ? fmt_int(*rep.n_ent) : "", fmt_int(rep.transition_low),
                      fmt_int(rep.transition_high),
                      rep.s_critical ? fmt_double(*rep.s_critical) : "", note});
  emit(rec, format, out_path);
  return 0;
}

int cmd_sample(const CommonFlags& flags) {
  const NRange range = parse_n_range(flags.n_spec);
  if (range.lo != range.hi) throw CLI::ValidationError("--n", "sample takes a single N");
  const std::uint64_t seed = resolve_seed(flags.seed);
  const std::uint64_t cap = resolve_amplitude_cap();
  const KeepPolicy policy =
      flags.keep == "random_subset" ? KeepPolicy::random_subset : KeepPolicy::first_m;

  const DensityMatrix rho =
      induced_mixed(flags.d, range.lo, flags.m, policy, SeedSpec{seed, 0}, cap);
  rho.check_invariants();

  OutputRecord rec;
  rec.command = "sample";
  rec.config.emplace_back("d", fmt_int(flags.d));
  rec.config.emplace_back("m", fmt_int(flags.m));
  rec.config.emplace_back("n", range.spec);
  rec.config.emplace_back("seed", std::to_string(seed));
  rec.config.emplace_back("keep", keep_name(policy));
  rec.config.emplace_back("max_amplitudes", std::to_string(cap));
  rec.columns = {"purity",          "ipr",     "entropy", "hs_distance",
                 "in_maximal_ball", "verdict", "witness", "min_eigenvalue"};
  if (flags.m >= 2) {
    const ClassificationRecord cls = classify(rho);
    rec.rows.push_back({fmt_double(cls.measures.purity), fmt_double(cls.measures.ipr),
                        fmt_double(cls.measures.entropy), fmt_double(cls.measures.hs_distance),
                        cls.measures.in_maximal_ball ? "true" : "false",
                        cls.verdict == Verdict::ppt ? "PPT" : "NPT",
                        cls.witness ? cls.witness->to_string() : "",
                        fmt_double(cls.min_eigenvalue)});
  } else {
    const MeasureRecord meas = measure(rho);
    rec.rows.push_back({fmt_double(meas.purity), fmt_double(meas.ipr), fmt_double(meas.entropy),
                        fmt_double(meas.hs_distance), meas.in_maximal_ball ? "true" : "false",
                        "PPT", "", fmt_double(hermitian_spectrum(rho).min())});
  }
  emit(rec, flags.format, flags.out_path);
  return 0;
}

int cmd_purity_hist(const CommonFlags& flags) {
  const NRange range = parse_n_range(flags.n_spec);
  if (range.lo != range.hi) throw CLI::ValidationError("--n", "purity-hist takes a single N");
  const ExperimentConfig cfg = build_config(flags, range);
  const SummaryStats stats = run_experiment(cfg);
  const PointStats& st = stats.front();

  OutputRecord rec;
  rec.command = "purity-hist";
  echo_experiment(rec, cfg, range, true);
  rec.columns = {"bin_low", "bin_high", "count"};
  const double width = (st.purity_hist.hi - st.purity_hist.lo) / cfg.histogram_bins;
  for (int b = 0; b < cfg.histogram_bins; ++b) {
    rec.rows.push_back({fmt_double(st.purity_hist.lo + b * width),
                        fmt_double(st.purity_hist.lo + (b + 1) * width),
                        fmt_int(st.purity_hist.counts[b])});
  }
  emit(rec, flags.format, flags.out_path);
  return 0;
}

int cmd_transition(const CommonFlags& flags) {
  const NRange range = parse_n_range(flags.n_spec);
  const ExperimentConfig cfg = build_config(flags, range);
  const SummaryStats stats = run_experiment(cfg);

  OutputRecord rec;
  rec.command = "transition";
  echo_experiment(rec, cfg, range, false);
  rec.columns = {"N", "p_ppt", "ci_low", "ci_high", "samples"};
  for (const PointStats& st : stats)
    rec.rows.push_back({fmt_int(st.n_qudits), fmt_double(st.p_ppt), fmt_double(st.p_ppt_low),
                        fmt_double(st.p_ppt_high), fmt_int(st.samples)});
  emit(rec, flags.format, flags.out_path);
  return 0;
}

int cmd_npt_prob(const CommonFlags& flags) {
  const NRange range = parse_n_range(flags.n_spec);
  const ExperimentConfig cfg = build_config(flags, range);
  const SummaryStats stats = run_experiment(cfg);

  OutputRecord rec;
  rec.command = "npt-prob";
  echo_experiment(rec, cfg, range, false);
  rec.columns = {"N", "p_npt", "ci_low", "ci_high", "samples"};
  for (const PointStats& st : stats)
    rec.rows.push_back({fmt_int(st.n_qudits), fmt_double(st.p_npt), fmt_double(st.p_npt_low),
                        fmt_double(st.p_npt_high), fmt_int(st.samples)});
  emit(rec, flags.format, flags.out_path);
  return 0;
}

void add_common_flags(CLI::App* cmd, CommonFlags& flags, bool with_samples, bool with_bins) {
  cmd->add_option("--d", flags.d, "qudit dimension")->required()->check(CLI::Range(2, 64));
  cmd->add_option("--m", flags.m, "subsystem qudit count")->required()->check(CLI::Range(1, 20));
  cmd->add_option("--n", flags.n_spec, "pure-state qudit count, single or range like 3..10")
      ->required();
  if (with_samples) cmd->add_option("--samples", flags.samples, "samples per point");
  cmd->add_option("--seed", flags.seed, "master seed (entropy-based when omitted)");
  if (with_samples) cmd->add_option("--workers", flags.workers, "worker threads, 0 = all");
  if (with_bins) cmd->add_option("--bins", flags.bins, "histogram bin count");
  cmd->add_option("--keep", flags.keep, "kept-subset policy")
      ->check(CLI::IsMember({"first_m", "random_subset"}));
  cmd->add_option("--format", flags.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", flags.out_path, "output path (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement statistics of random qudit-state subsystems"};
  app.require_subcommand(1);

  int bounds_d = 2, bounds_m = 2;
  std::string bounds_format = "csv", bounds_out;
  CLI::App* bounds = app.add_subcommand("bounds", "closed-form bound calculators");
  bounds->add_option("--d", bounds_d, "qudit dimension")->required()->check(CLI::Range(2, 64));
  bounds->add_option("--m", bounds_m, "subsystem qudit count")
      ->required()
      ->check(CLI::Range(1, 20));
  bounds->add_option("--format", bounds_format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  bounds->add_option("--out", bounds_out, "output path (default stdout)");

  CommonFlags sample_flags, hist_flags, trans_flags, npt_flags;
  CLI::App* sample = app.add_subcommand("sample", "one induced-measure draw, fully analyzed");
  add_common_flags(sample, sample_flags, false, false);
  CLI::App* hist = app.add_subcommand("purity-hist", "purity histogram at a single N");
  add_common_flags(hist, hist_flags, true, true);
  CLI::App* trans = app.add_subcommand("transition", "PPT fraction over an N scan");
  add_common_flags(trans, trans_flags, true, false);
  CLI::App* npt = app.add_subcommand("npt-prob", "NPT probability over an N scan");
  add_common_flags(npt, npt_flags, true, false);

  try {
    app.parse(argc, argv);
    if (bounds->parsed()) return cmd_bounds(bounds_d, bounds_m, bounds_format, bounds_out);
    if (sample->parsed()) return cmd_sample(sample_flags);
    if (hist->parsed()) return cmd_purity_hist(hist_flags);
    if (trans->parsed()) return cmd_transition(trans_flags);
    if (npt->parsed()) return cmd_npt_prob(npt_flags);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // usage errors are exit code 1, --help is 0
  } catch (const qent::invariant_error& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const qent::resource_error& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
