#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "quadbound/bounds.hpp"
#include "quadbound/rng.hpp"

using namespace quadbound;

TEST_CASE("lower_bound validity threshold") {
  // d*ln(2/sqrt(e)) crosses 3*ln(2) between d = 10 and d = 11.
  CHECK_FALSE(bounds::lower_bound(10, 1.0, 100).valid);
  CHECK(bounds::lower_bound(11, 1.0, 100).valid);

  const auto bv = bounds::lower_bound(11, 1.0, 15552);
  const double expected =
      std::pow(2.0, 11) *
      std::sqrt((11.0 * (std::log(2.0) - 0.5) - 3.0 * std::log(2.0)) /
                (324.0 * 3.0 * 16.0 * 15552.0));
  CHECK(bv.value == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("lower_bound scales as 1/sqrt(T)") {
  const double t0 = bounds::lower_bound(12, 1.5, 1000).value;
  const double t4 = bounds::lower_bound(12, 1.5, 4000).value;
  CHECK(t4 == doctest::Approx(t0 / 2.0));
}

TEST_CASE("gq_upper_bound plug-ins") {
  CHECK(bounds::gq_upper_bound(1, 1.0, 1.0, 4.0, 0.0).value ==
        doctest::Approx(2.0));
  CHECK(bounds::gq_upper_bound(10, 5.0, 1.0, 1024.0, 0.0).value ==
        doctest::Approx(64.0 * std::pow(5.0, 10)));

  // K = 0: doubling r multiplies by 2^d.
  const double base = bounds::gq_upper_bound(6, 1.0, 1.0, 64.0, 0.0).value;
  const double doubled = bounds::gq_upper_bound(6, 2.0, 1.0, 64.0, 0.0).value;
  CHECK(doubled == doctest::Approx(base * 64.0));

  CHECK_FALSE(bounds::gq_upper_bound(3, 1.0, 1.0, 8.0, 0.0).note.length());
  CHECK(bounds::gq_upper_bound(3, 1.0, 1.0, 9.0, 0.0).note.length());
}

TEST_CASE("gaussian law reproduces the figure-caption constants") {
  // 2^10 5^10 sqrt(2/pi) / sqrt(T)
  const double f1 =
      bounds::gq_gaussian_error(10, 5.0, 1.0, 1.0, 0.0).value;
  CHECK(std::abs(f1 - 7.9788456e9) / 7.9788456e9 <= 1e-6);

  // 0.3989422804 * sqrt(50)^d at T = 4*2^d
  for (int d = 1; d <= 16; ++d) {
    const double v = bounds::gq_gaussian_error(d, 5.0, 1.0,
                                               4.0 * std::pow(2.0, d), 0.0)
                         .value;
    const double expected = 0.3989422804 * std::pow(std::sqrt(50.0), d);
    CHECK(std::abs(v - expected) / expected <= 1e-6);
  }

  // 12.76615297 * r^10 at d = 10, T = 4*2^10
  for (double r : {0.25, 1.0, 8.0}) {
    const double v =
        bounds::gq_gaussian_error(10, r, 1.0, 4096.0, 0.0).value;
    const double expected = 12.76615297 * std::pow(r, 10);
    CHECK(std::abs(v - expected) / expected <= 1e-6);
  }
}

TEST_CASE("gaussian law vs upper bound noise term") {
  // ratio = sqrt(2/pi)/2 for all parameters (K = 0).
  rng::Stream stream(5);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 1 + static_cast<int>(stream.below(12));
    const double r = stream.uniform(0.5, 4.0);
    const double sigma = stream.uniform(0.5, 2.0);
    const double T = std::pow(2.0, d) * (1 + stream.below(16));
    const double law = bounds::gq_gaussian_error(d, r, sigma, T, 0.0).value;
    const double upper = bounds::gq_upper_bound(d, r, sigma, T, 0.0).value;
    CHECK(law / upper ==
          doctest::Approx(std::sqrt(2.0 / M_PI) / 2.0).epsilon(1e-12));
  }
}

TEST_CASE("gaussian law K>0 branch") {
  // The erf form stays finite, positive, and collapses to the K=0 law as
  // c -> 0.
  const double with_bias =
      bounds::gq_gaussian_error(4, 1.0, 1.0, 64.0, 1.0).value;
  const double no_bias = bounds::gq_gaussian_error(4, 1.0, 1.0, 64.0, 0.0).value;
  CHECK(with_bias > 0.0);
  const double tiny_c =
      bounds::gq_gaussian_error(4, 1.0, 1.0, 64.0, 1.0, 1e-12).value;
  CHECK(tiny_c == doctest::Approx(no_bias).epsilon(1e-9));
}

TEST_CASE("sr_upper_bound plug-ins and identities") {
  CHECK(bounds::sr_upper_bound(1, 1.0, 1.0, 3.0, 0.0).value ==
        doctest::Approx(std::sqrt(2.0)));

  // B = 2r reproduces the rearranged form
  // 3^(d/2) 2^(d/2+1) r^d sigma / sqrt(T) + 2^(d+1) r^(d+7) K / (7*45).
  rng::Stream stream(17);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 1 + static_cast<int>(stream.below(8));
    const double r = stream.uniform(0.5, 3.0);
    const double sigma = stream.uniform(0.5, 2.0);
    const double K = stream.uniform(0.0, 5.0);
    const double T = std::pow(3.0, d) * (1 + stream.below(8));
    const double lhs = bounds::sr_upper_bound(d, 2.0 * r, sigma, T, K).value;
    const double rhs =
        std::pow(3.0, 0.5 * d) * std::pow(2.0, 0.5 * d + 1.0) *
            std::pow(r, d) * sigma / std::sqrt(T) +
        std::pow(2.0, d + 1) * std::pow(r, d + 7) * K / (7.0 * 45.0);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }

  // K = 0 homogeneity in B.
  const double b1 = bounds::sr_upper_bound(5, 1.0, 1.0, 243.0, 0.0).value;
  const double b3 = bounds::sr_upper_bound(5, 3.0, 1.0, 243.0, 0.0).value;
  CHECK(b3 == doctest::Approx(b1 * std::pow(3.0, 5)));
}

TEST_CASE("matching first terms for equal m") {
  rng::Stream stream(23);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 1 + static_cast<int>(stream.below(8));
    const double r = stream.uniform(0.5, 3.0);
    const double sigma = stream.uniform(0.5, 2.0);
    const double m = 1.0 + stream.below(16);
    const double gq =
        bounds::gq_upper_bound(d, r, sigma, m * std::pow(2.0, d), 0.0).value;
    const double sr =
        bounds::sr_upper_bound(d, 2.0 * r, sigma, m * std::pow(3.0, d), 0.0)
            .value;
    CHECK(gq == doctest::Approx(sr).epsilon(1e-12));
  }
}

TEST_CASE("kl_bound") {
  CHECK(bounds::kl_bound(1.0, 0.25).value == doctest::Approx(1.0));
  CHECK_FALSE(bounds::kl_bound(1.0, 0.3).valid);

  // Exact Bernoulli KL 2*delta*ln((1/2+delta)/(1/2-delta)) <= 16 delta^2
  // on the stated delta grid.
  for (double delta = 0.01; delta <= 0.2501; delta += 0.01) {
    const double exact =
        2.0 * delta * std::log((0.5 + delta) / (0.5 - delta));
    CHECK(exact <= 16.0 * delta * delta);
  }
}

TEST_CASE("fano_lower") {
  CHECK(bounds::fano_lower(10, 1e9, 0.1).value == 0.0);

  const double at_zero = bounds::fano_lower(100, 0.0, 0.1).value;
  const double expected =
      1.0 - std::log(2.0) / (50.0 * (std::log(2.0) - 0.5));
  CHECK(at_zero == doctest::Approx(expected));
  CHECK(at_zero < 1.0);

  double prev = 1.0;
  for (double T : {0.0, 1.0, 10.0, 100.0, 1000.0}) {
    const double v = bounds::fano_lower(50, T, 0.05).value;
    CHECK(v <= prev);
    prev = v;
  }
}

TEST_CASE("packing_cardinality_bound") {
  CHECK(bounds::packing_cardinality_bound(2) ==
        doctest::Approx(2.0 / std::sqrt(std::exp(1.0))));
  double prev = 0.0;
  for (int d = 1; d <= 30; ++d) {
    const double v = bounds::packing_cardinality_bound(d);
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("bound evaluators are pure") {
  for (int rep = 0; rep < 3; ++rep) {
    CHECK(bounds::lower_bound(12, 1.5, 777).value ==
          bounds::lower_bound(12, 1.5, 777).value);
    CHECK(bounds::fano_lower(12, 777, 0.2).value ==
          bounds::fano_lower(12, 777, 0.2).value);
  }
}
