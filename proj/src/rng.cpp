#include "qent/rng.hpp"

#include <cmath>

namespace qent {

namespace {

constexpr std::uint64_t k_philox_m0 = 0xD2E7470EE14C6C93ull;
constexpr std::uint64_t k_philox_m1 = 0xCA5A826395121157ull;
constexpr std::uint64_t k_philox_w0 = 0x9E3779B97F4A7C15ull;
constexpr std::uint64_t k_philox_w1 = 0xBB67AE8584CAA73Bull;

inline void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi, std::uint64_t& lo) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  hi = static_cast<std::uint64_t>(p >> 64);
  lo = static_cast<std::uint64_t>(p);
}

}  // namespace

void Philox4x64::refill() {
  std::uint64_t c0 = ctr_[0], c1 = ctr_[1], c2 = ctr_[2], c3 = ctr_[3];
  std::uint64_t k0 = key_[0], k1 = key_[1];
  for (int round = 0; round < 10; ++round) {
    std::uint64_t hi0, lo0, hi1, lo1;
    mulhilo(k_philox_m0, c0, hi0, lo0);
    mulhilo(k_philox_m1, c2, hi1, lo1);
    c0 = hi1 ^ c1 ^ k0;
    c1 = lo1;
    c2 = hi0 ^ c3 ^ k1;
    c3 = lo0;
    k0 += k_philox_w0;
    k1 += k_philox_w1;
  }
  buf_ = {c0, c1, c2, c3};
  pos_ = 0;
  // 256-bit counter increment
  if (++ctr_[0] == 0 && ++ctr_[1] == 0 && ++ctr_[2] == 0) ++ctr_[3];
}

std::uint64_t Philox4x64::next_below(std::uint64_t bound) {
  if (bound == 0) throw domain_error("next_below: bound must be positive");
  const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

double GaussianStream::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * rng_.next_double() - 1.0;
    v = 2.0 * rng_.next_double() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * f;
  has_spare_ = true;
  return u * f;
}

}  // namespace qent
