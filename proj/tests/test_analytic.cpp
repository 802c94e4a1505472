#include <doctest.h>

#include <cmath>

#include "qent/analytic.hpp"
#include "qent/measures.hpp"
#include "test_support.hpp"

using namespace qent;
using namespace qent::test;

TEST_CASE("mean entropy: exact small cases") {
  // frozen rationals: 1/3 and 107/210, evaluated in exact arithmetic
  CHECK(mean_entropy(2, 2) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(mean_entropy(2, 4) == doctest::Approx(107.0 / 210.0).epsilon(1e-14));
  CHECK(mean_entropy(1, 7) == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(mean_entropy(4, 2), domain_error);
  CHECK_THROWS_AS(mean_entropy(0, 2), domain_error);
}

TEST_CASE("mean entropy qudit wrapper swaps subsystems above N/2") {
  // complementary subsystems carry equal entropy
  CHECK(mean_entropy_qudits(2, 3, 1) == doctest::Approx(mean_entropy_qudits(2, 3, 2)).epsilon(1e-15));
  CHECK(mean_entropy_qudits(2, 3, 2) == doctest::Approx(107.0 / 210.0).epsilon(1e-14));
  // smaller subsystems sit close to maximal entropy, never above ln M
  for (int m = 1; m <= 4; ++m) {
    const double s = mean_entropy_qudits(2, 9, m);
    CHECK(s <= m * std::log(2.0));
    CHECK(s >= m * std::log(2.0) - std::pow(2.0, 2.0 * m - 9) / 2.0 - 1e-12);
  }
}

TEST_CASE("mean purity: exact values") {
  CHECK(mean_purity(2, 2) == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(mean_purity_qudits(2, 3, 2) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(mean_purity_qudits(2, 6, 2) == doctest::Approx(4.0 / 13.0).epsilon(1e-15));
  CHECK(mean_purity(3, 7) == doctest::Approx(mean_purity(7, 3)).epsilon(1e-15));
}

TEST_CASE("mean purity decreases in N toward 1/d^m") {
  for (int d : {2, 3}) {
    const int m = 2;
    double prev = 1.0;
    for (int n = 3; n <= 12; ++n) {
      if (ipow(d, n) > (1 << 20)) break;
      const double r = mean_purity_qudits(d, n, m);
      CHECK(r > 1.0 / ipow(d, m));
      CHECK(r < prev);
      prev = r;
    }
  }
}

TEST_CASE("bounds report reproduces the worked two-qubit case") {
  const BoundsReport rep = bounds_report(2, 2);
  CHECK(rep.n_ppt == 6);
  REQUIRE(rep.n_ent.has_value());
  CHECK(*rep.n_ent == 5);
  CHECK(rep.r_ppt == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  REQUIRE(rep.eps_ent.has_value());
  CHECK(*rep.eps_ent == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  // the two bound derivations coincide exactly for two qubits
  REQUIRE(rep.r_ent.has_value());
  CHECK(*rep.r_ent == doctest::Approx(rep.r_ppt).epsilon(1e-15));
  CHECK(rep.n_ppt_real == doctest::Approx(*rep.n_ent_real).epsilon(1e-12));
  CHECK(rep.transition_low == 4);
  CHECK(rep.transition_high == 6);
}

TEST_CASE("bounds report fields for m=1 and d^m=2 are omitted") {
  const BoundsReport rep = bounds_report(2, 1);
  CHECK_FALSE(rep.eps_ent.has_value());
  CHECK_FALSE(rep.r_ent.has_value());
  CHECK_FALSE(rep.n_ent.has_value());
  CHECK_FALSE(rep.s_critical.has_value());
  CHECK(rep.r_ppt == doctest::Approx(1.0).epsilon(1e-15));
  const BoundsReport rep31 = bounds_report(3, 1);
  CHECK(rep31.s_critical.has_value());  // n = 3 suffices
}

TEST_CASE("bound monotonicity and shrinking log corrections") {
  for (int d : {2, 3, 4}) {
    double prev_ppt = -1e300, prev_ent = -1e300;
    for (int m = 2; m <= 8; ++m) {
      const BoundsReport rep = bounds_report(d, m);
      CHECK(rep.n_ppt_real > prev_ppt);
      CHECK(rep.n_ppt_real < 3.0 * m);
      REQUIRE(rep.n_ent_real.has_value());
      CHECK(*rep.n_ent_real > prev_ent);
      CHECK(*rep.n_ent_real > 3.0 * m - 2.0);
      prev_ppt = rep.n_ppt_real;
      prev_ent = *rep.n_ent_real;
      // r_ent >= r_ppt with equality only at d = m = 2
      REQUIRE(rep.r_ent.has_value());
      if (d == 2 && m == 2)
        CHECK(*rep.r_ent == doctest::Approx(rep.r_ppt).epsilon(1e-15));
      else
        CHECK(*rep.r_ent > rep.r_ppt);
    }
    // log corrections shrink toward zero as m grows
    const BoundsReport shallow = bounds_report(d, 2);
    const BoundsReport deep = bounds_report(d, 8);
    CHECK(3.0 * 8 - deep.n_ppt_real < 0.03);
    CHECK(*deep.n_ent_real - (3.0 * 8 - 2.0) < 0.03);
    CHECK(3.0 * 8 - deep.n_ppt_real < (3.0 * 2 - shallow.n_ppt_real) / 10.0);
    CHECK(*deep.n_ent_real - (3.0 * 8 - 2.0) < (*shallow.n_ent_real - (3.0 * 2 - 2.0)) / 10.0);
  }
}

TEST_CASE("eps_ent closed form across dimensions") {
  CHECK(*bounds_report(2, 2).eps_ent == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(*bounds_report(3, 2).eps_ent == doctest::Approx(1.0 / 4.0).epsilon(1e-15));
  CHECK(*bounds_report(2, 3).eps_ent == doctest::Approx(1.0 / 5.0).epsilon(1e-15));
}

TEST_CASE("werner state: extremes, invariants, and the boundary purity") {
  const DensityMatrix mixed = werner_state(2, 2, 0.0);
  CHECK(purity(mixed) == doctest::Approx(0.25).epsilon(1e-14));
  const DensityMatrix pure = werner_state(2, 2, 1.0);
  CHECK(purity(pure) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(purity(werner_state(2, 2, 1.0 / 3.0)) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK_THROWS_AS(werner_state(2, 2, -0.01), domain_error);
  CHECK_THROWS_AS(werner_state(2, 2, 1.01), domain_error);
  CHECK_THROWS_AS(werner_state(2, 1, 0.5), domain_error);

  for (int d : {2, 3}) {
    for (int m : {2, 3}) {
      for (double eps : {0.0, 0.2, 0.5, 0.8, 1.0}) {
        const DensityMatrix rho = werner_state(d, m, eps);
        rho.check_invariants();
        const double n = static_cast<double>(rho.n);
        CHECK(purity(rho) == doctest::Approx((1.0 - eps * eps) / n + eps * eps).epsilon(1e-12));
        const Spectrum spec = hermitian_spectrum(rho);
        CHECK(spec.min() > -psd_tol(rho.n));
      }
    }
  }
}

TEST_CASE("critical entropy: closed-form anchors and asymptotics") {
  CHECK(critical_entropy(3) ==
        doctest::Approx(std::log(3.0) - std::log(2.0) / 3.0).epsilon(1e-15));
  // high-precision evaluation of the closed form at n = 4
  CHECK(critical_entropy(4) == doctest::Approx(1.2424533248940002).epsilon(1e-15));
  CHECK_THROWS_AS(critical_entropy(2), domain_error);
  const std::int64_t big = std::int64_t{1} << 20;
  CHECK(std::abs(critical_entropy(big) - std::log(double(big))) < 1e-4);
}

TEST_CASE("ball boundary spectra at n = 4 and their alignment") {
  const auto [rho_a, rho_b] = ball_boundary_spectra(4);
  CHECK(rho_a.values == std::vector<double>{1.0 / 3, 1.0 / 3, 1.0 / 3, 0.0});
  CHECK(rho_b.values == std::vector<double>{0.5, 1.0 / 6, 1.0 / 6, 1.0 / 6});
  CHECK(entropy_of(rho_a, 1e-12) == doctest::Approx(std::log(3.0)).epsilon(1e-12));
  CHECK(entropy_of(rho_b, 1e-12) == doctest::Approx(critical_entropy(4)).epsilon(1e-12));
  CHECK_THROWS_AS(ball_boundary_spectra(2), domain_error);
}

TEST_CASE("ball boundary spectra average to the maximally mixed state") {
  for (std::int64_t n : {3, 4, 8, 16, 27}) {
    const auto [rho_a, rho_b] = ball_boundary_spectra(n);
    // align the zero of rho_a (last, descending) with the 2/n of rho_b (first)
    for (std::int64_t i = 0; i < n; ++i) {
      const double mid = 0.5 * (rho_a.values[i] + rho_b.values[n - 1 - i]);
      CHECK(mid == doctest::Approx(1.0 / double(n)).epsilon(1e-14));
    }
    CHECK(rho_a.ipr() == doctest::Approx(double(n - 1)).epsilon(1e-14));
    CHECK(rho_b.ipr() == doctest::Approx(double(n - 1)).epsilon(1e-14));
  }
}

TEST_CASE("mean entropy crosses the critical entropy within one qudit of N = 3m") {
  for (int m = 4; m <= 8; ++m) {
    const double s_c = critical_entropy(ipow(2, m));
    int crossing = -1;
    for (int n = m + 1; n <= 3 * m + 2; ++n) {
      if (mean_entropy_qudits(2, n, m) >= s_c) {
        crossing = n;
        break;
      }
    }
    REQUIRE(crossing > 0);
    CHECK(std::abs(crossing - 3 * m) <= 1);
  }
}
