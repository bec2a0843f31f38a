#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "quadbound/oracle.hpp"
#include "quadbound/polynomial.hpp"

using namespace quadbound;

namespace {

Polynomial square_1d() {
  Polynomial p(1);
  p.add_term({2}, 1.0);
  return p;
}

OracleSpec bernoulli_spec(std::vector<int> alpha, double delta, double r,
                          std::uint64_t seed) {
  OracleSpec spec;
  spec.kind = OracleKind::CoordinateBernoulli;
  spec.sigma = 1.0;
  spec.seed = seed;
  spec.alpha = std::move(alpha);
  spec.delta = delta;
  spec.r = r;
  return spec;
}

}  // namespace

TEST_CASE("noise-free oracle returns f(x)") {
  Oracle oracle(OracleSpec{});
  const Polynomial p = square_1d();
  CHECK(oracle.query(p, std::vector{2.0}) == 4.0);
  CHECK(oracle.log().count() == 1);
}

TEST_CASE("gaussian oracle sample mean and variance") {
  OracleSpec spec;
  spec.kind = OracleKind::Gaussian;
  spec.sigma = 1.0;
  spec.seed = 123;
  Oracle oracle(spec);
  oracle.log().set_point_tracking(false);

  const Polynomial p = square_1d();
  const std::vector<double> x{2.0};
  const int n = 100000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double v = oracle.query(p, x);
    sum += v;
    sum_sq += v * v;
  }
  const double mean = sum / n;
  const double variance = sum_sq / n - mean * mean;
  CHECK(std::abs(mean - 4.0) <= 3.0 / std::sqrt(n));
  CHECK(variance == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("coordinate-bernoulli expectation matches g_alpha") {
  // d=1, alpha=+1, delta=1/4, r=1, x=0: E[phi] = 0.25.
  Oracle oracle(bernoulli_spec({1}, 0.25, 1.0, 7));
  oracle.log().set_point_tracking(false);
  const Polynomial p = square_1d();  // ignored by this oracle
  const std::vector<double> x{0.0};

  const int n = 100000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += oracle.query(p, x);
  // Two-outcome distribution: +-1/2 with p = 3/4; sd of one draw = ~0.43.
  CHECK(std::abs(sum / n - 0.25) <= 4.0 * 0.5 / std::sqrt(n));
}

TEST_CASE("coordinate-bernoulli support and variance bound") {
  const double r = 0.7;
  Oracle oracle(bernoulli_spec({1, -1, 1}, 0.1, r, 9));
  oracle.log().set_point_tracking(false);
  Polynomial p(3);
  p.add_term({0, 0, 0}, 1.0);
  const std::vector<double> x{r, r, r};

  const int n = 100000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double v = oracle.query(p, x);
    // Support: exactly +-(x_i + r)/2 for some coordinate i.
    CHECK(std::abs(v) == doctest::Approx((r + r) / 2.0));
    sum += v;
    sum_sq += v * v;
  }
  const double mean = sum / n;
  const double variance = sum_sq / n - mean * mean;
  const double bound = bernoulli_oracle_variance_bound(r, 3);
  CHECK(bound == doctest::Approx(r * r));
  CHECK(variance <= bound + 0.05);
}

TEST_CASE("bernoulli_oracle_mean closed form") {
  CHECK(bernoulli_oracle_mean(std::vector{1, 1}, 0.2, 1.0,
                              std::vector{-1.0, -1.0}) == doctest::Approx(0.0));
  CHECK(bernoulli_oracle_mean(std::vector{1, -1}, 0.1, 1.0,
                              std::vector{0.0, 0.0}) == doctest::Approx(0.0));
  CHECK(bernoulli_oracle_mean(std::vector{1}, 0.25, 1.0, std::vector{1.0}) ==
        doctest::Approx(0.5));
}

TEST_CASE("variance bound formula") {
  CHECK(bernoulli_oracle_variance_bound(1.0, 4) == doctest::Approx(1.0));
  CHECK(bernoulli_oracle_variance_bound(0.5, 1) == doctest::Approx(0.25));
  CHECK_THROWS_AS(bernoulli_oracle_variance_bound(0.0, 1),
                  std::invalid_argument);
}

TEST_CASE("identical spec yields identical query stream") {
  const auto spec = bernoulli_spec({1, -1}, 0.2, 0.5, 42);
  Oracle a(spec);
  Oracle b(spec);
  Polynomial p(2);
  p.add_term({0, 0}, 1.0);
  const std::vector<double> x{0.1, -0.2};
  for (int i = 0; i < 200; ++i) {
    CHECK(a.query(p, x) == b.query(p, x));
  }
}

TEST_CASE("budget enforcement") {
  Oracle oracle(OracleSpec{});
  oracle.enforce_budget(3);
  const Polynomial p = square_1d();
  const std::vector<double> x{1.0};
  for (int i = 0; i < 3; ++i) oracle.query(p, x);
  CHECK_THROWS_AS(oracle.query(p, x), BudgetExhausted);
  CHECK(oracle.log().count() == 3);
  CHECK(oracle.log().per_point().at({1.0}) == 3);
}

TEST_CASE("spec validation") {
  OracleSpec gaussian;
  gaussian.kind = OracleKind::Gaussian;
  gaussian.sigma = 0.0;
  CHECK_THROWS_AS(gaussian.validate(), std::invalid_argument);

  auto bad_delta = bernoulli_spec({1}, 0.3, 1.0, 0);
  CHECK_THROWS_AS(bad_delta.validate(), std::invalid_argument);

  auto bad_alpha = bernoulli_spec({2}, 0.1, 1.0, 0);
  CHECK_THROWS_AS(bad_alpha.validate(), std::invalid_argument);

  auto feasible = bernoulli_spec({1}, 0.1, 0.5, 0);
  CHECK(feasible.warnings().empty());
  auto infeasible = bernoulli_spec({1}, 0.1, 2.0, 0);
  infeasible.sigma = 1.0;
  CHECK(infeasible.warnings().size() == 1);
}

TEST_CASE("dimension mismatch") {
  Oracle oracle(OracleSpec{});
  const Polynomial p = square_1d();
  CHECK_THROWS_AS(oracle.query(p, std::vector{1.0, 2.0}),
                  std::invalid_argument);
}
