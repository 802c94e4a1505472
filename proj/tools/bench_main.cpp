// Times the OpenMP experiment kernel against the serial reference on the same
// configuration and verifies the two agree bit for bit.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qent/montecarlo.hpp"

using namespace qent;

namespace {

template <typename F>
double time_once(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

bool identical(const SummaryStats& a, const SummaryStats& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].mean_purity != b[i].mean_purity || a[i].mean_entropy != b[i].mean_entropy ||
        a[i].ppt_count != b[i].ppt_count || a[i].purity_hist.counts != b[i].purity_hist.counts)
      return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  ExperimentConfig cfg;
  cfg.d = 2;
  cfg.m = 3;
  cfg.n_values = {8};
  cfg.samples_per_point = argc > 1 ? std::atoi(argv[1]) : 4000;
  cfg.master_seed = 7;

  std::cout << "benchmark: d=" << cfg.d << " m=" << cfg.m << " N=" << cfg.n_values[0]
            << " samples=" << cfg.samples_per_point << "\n";

  SummaryStats serial;
  const double t_serial = time_once([&] { serial = run_experiment_serial(cfg); });
  std::cout << "serial reference: " << t_serial << " s\n";

  int max_threads = 1;
#ifdef _OPENMP
  max_threads = omp_get_max_threads();
#endif
  for (int workers : {1, 2, 4, 8}) {
    if (workers > max_threads && workers != 1) continue;
    cfg.workers = workers;
    SummaryStats parallel;
    const double t = time_once([&] { parallel = run_experiment(cfg); });
    std::cout << "omp workers=" << workers << ": " << t << " s  speedup=" << t_serial / t
              << (identical(serial, parallel) ? "  (bit-identical to reference)" : "  MISMATCH")
              << "\n";
    if (!identical(serial, parallel)) return 1;
  }
  return 0;
}
