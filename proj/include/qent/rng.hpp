#pragma once

#include <array>
#include <cstdint>

#include "qent/common.hpp"

namespace qent {

// Identifies one sample's generator stream. The stream is a pure function of
// (master_seed, sample_index), which is what makes parallel runs reproducible
// independent of scheduling.
struct SeedSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t sample_index = 0;
};

// Philox 4x64 with 10 rounds, keyed by (master_seed, sample_index); the
// 256-bit counter indexes output blocks within the stream. Round function and
// constants follow the reference implementation (verified against
// numpy.random.Philox block-for-block).
class Philox4x64 {
 public:
  Philox4x64(std::uint64_t key0, std::uint64_t key1) : key_{key0, key1} {}
  explicit Philox4x64(const SeedSpec& seed) : Philox4x64(seed.master_seed, seed.sample_index) {}

  std::uint64_t next() {
    if (pos_ == 4) refill();
    return buf_[pos_++];
  }

  // Uniform on [0,1) with 53 random bits.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound), unbiased via rejection.
  std::uint64_t next_below(std::uint64_t bound);

 private:
  void refill();

  std::array<std::uint64_t, 2> key_;
  std::array<std::uint64_t, 4> ctr_{0, 0, 0, 0};
  std::array<std::uint64_t, 4> buf_{};
  int pos_ = 4;
};

// Standard normal deviates by the Marsaglia polar transform.
class GaussianStream {
 public:
  explicit GaussianStream(const SeedSpec& seed) : rng_(seed) {}

  double next();
  cx next_complex() {
    double re = next();
    double im = next();
    return {re, im};
  }
  Philox4x64& raw() { return rng_; }

 private:
  Philox4x64 rng_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace qent
