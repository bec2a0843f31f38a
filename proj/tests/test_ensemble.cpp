#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "quadbound/bounds.hpp"
#include "quadbound/ensemble.hpp"
#include "quadbound/estimators.hpp"
#include "quadbound/oracle.hpp"
#include "quadbound/rng.hpp"

using namespace quadbound;

TEST_CASE("packing set construction") {
  const PackingSet d4 = build_packing_set(4, 1);
  CHECK(d4.reached_target);
  CHECK(d4.members.size() >= 2);
  CHECK(d4.min_separation == 1);
  CHECK(verify_packing(d4));

  const PackingSet d16 = build_packing_set(16, 1);
  CHECK(d16.reached_target);
  CHECK(d16.members.size() >= 5);
  CHECK(d16.min_separation == 4);
  CHECK(verify_packing(d16));

  // Deterministic given seed.
  CHECK(build_packing_set(16, 1).members == d16.members);
}

TEST_CASE("g_alpha evaluation") {
  const EnsembleParams params{3, 0.2, 1.0};
  const std::vector<int> ones{1, 1, 1};

  CHECK(g_alpha_eval(params, ones, std::vector{-1.0, -1.0, -1.0}) ==
        doctest::Approx(0.0));
  CHECK(g_alpha_eval(params, ones, std::vector{0.0, 0.0, 0.0}) ==
        doctest::Approx(params.delta * params.r));

  // Cross-module identity with the oracle's analytic mean.
  rng::Stream stream(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> alpha(3);
    std::vector<double> x(3);
    for (int i = 0; i < 3; ++i) {
      alpha[i] = (stream.next() & 1) ? 1 : -1;
      x[i] = stream.uniform(-1.0, 1.0);
    }
    CHECK(g_alpha_eval(params, alpha, x) ==
          doctest::Approx(
              bernoulli_oracle_mean(alpha, params.delta, params.r, x)));
  }
}

TEST_CASE("g_alpha integral closed form") {
  const EnsembleParams balanced{2, 0.1, 1.0};
  CHECK(g_alpha_integral(balanced, std::vector{1, -1}) == doctest::Approx(0.0));

  const EnsembleParams d1{1, 0.25, 1.0};
  CHECK(g_alpha_integral(d1, std::vector{1}) == doctest::Approx(0.5));

  const EnsembleParams d3{3, 0.2, 0.8};
  CHECK(g_alpha_integral(d3, std::vector{1, 1, 1}) ==
        doctest::Approx(0.2 * std::pow(2.0, 3) * std::pow(0.8, 4)));
}

TEST_CASE("g_alpha polynomial expansion matches closed forms") {
  rng::Stream stream(29);
  for (int trial = 0; trial < 15; ++trial) {
    const int d = 1 + static_cast<int>(stream.below(5));
    const EnsembleParams params{d, stream.uniform(0.01, 0.25),
                                stream.uniform(0.3, 1.5)};
    std::vector<int> alpha(d);
    for (int i = 0; i < d; ++i) alpha[i] = (stream.next() & 1) ? 1 : -1;
    const Polynomial expansion = g_alpha_polynomial(params, alpha);

    std::vector<double> x(d);
    for (int i = 0; i < d; ++i) {
      x[i] = stream.uniform(-params.r, params.r);
    }
    const double direct = g_alpha_eval(params, alpha, x);
    CHECK(std::abs(expansion.evaluate(x) - direct) <=
          1e-12 * std::max(1.0, std::abs(direct)));

    const double integral = g_alpha_integral(params, alpha);
    const double via_poly =
        expansion.exact_integral(Region::cube(d, params.r));
    CHECK(std::abs(via_poly - integral) <=
          1e-12 * std::max(1.0, std::abs(integral)));
  }
}

TEST_CASE("discrepancy bound") {
  CHECK(discrepancy_bound({1, 0.25, 1.0}) == doctest::Approx(0.25));
  CHECK(discrepancy_bound({3, 0.1, 1.0}) == doctest::Approx(0.1 * 4.0));
  // Linear in delta.
  CHECK(discrepancy_bound({5, 0.2, 0.7}) ==
        doctest::Approx(2.0 * discrepancy_bound({5, 0.1, 0.7})));
}

TEST_CASE("per-query KL times T stays under the bound") {
  const PackingSet set = build_packing_set(16, 7);
  for (double delta : {0.01, 0.05, 0.1, 0.2, 0.25}) {
    for (std::size_t i = 0; i < set.members.size(); ++i) {
      for (std::size_t j = i + 1; j < set.members.size(); ++j) {
        const double per_query =
            bernoulli_pair_kl(set.members[i], set.members[j], delta);
        for (double T : {10.0, 100.0, 1000.0}) {
          CHECK(T * per_query <= bounds::kl_bound(T, delta).value);
        }
      }
    }
  }
}

TEST_CASE("recover_alpha decision rule") {
  const EnsembleParams params{12, 0.1, 0.5};
  const PackingSet set = build_packing_set(12, 5);
  REQUIRE(set.members.size() >= 2);
  const double psi_third = discrepancy_bound(params) / 3.0;

  // Exact integral: recovers a member whose integral is within psi/3. At
  // d = 12 adjacent coordinate sums are exactly psi/3 apart, so a boundary
  // tie can pick a neighbouring sum; the recovered sum differs by <= 2.
  const auto& truth = set.members[0];
  const double I = g_alpha_integral(params, truth);
  const auto hit = recover_alpha(set, params, I, 0);
  CHECK_FALSE(hit.fallback);
  CHECK(std::abs(g_alpha_integral(params, hit.alpha) - I) <=
        psi_third * (1.0 + 1e-12));
  int truth_sum = 0, hit_sum = 0;
  for (int a : truth) truth_sum += a;
  for (int a : hit.alpha) hit_sum += a;
  CHECK(std::abs(hit_sum - truth_sum) <= 2);

  // Far from every member integral: seeded uniform fallback.
  double far = 0.0;
  for (const auto& member : set.members) {
    far = std::max(far, std::abs(g_alpha_integral(params, member)));
  }
  const auto miss = recover_alpha(set, params, far + 100.0 * psi_third, 3);
  CHECK(miss.fallback);
  CHECK(recover_alpha(set, params, far + 100.0 * psi_third, 3).alpha ==
        miss.alpha);

  // Perturbing one member integral by psi/6 keeps it the unique qualifier
  // whenever no other member integral is within psi/2.
  for (const auto& member : set.members) {
    const double probe = g_alpha_integral(params, member) + psi_third / 2.0;
    int close = 0;
    for (const auto& other : set.members) {
      close += std::abs(probe - g_alpha_integral(params, other)) <= psi_third;
    }
    if (close == 1) {
      const auto unique = recover_alpha(set, params, probe, 0);
      CHECK(unique.qualifying == 1);
      CHECK(unique.alpha == member);
    }
  }
}

TEST_CASE("recovery experiment sanity") {
  const auto summary = recovery_experiment(8, 0.1, 0.5, 1.0, 4 * 256, 100, 11);
  CHECK(summary.trials == 100);
  CHECK(summary.strict_failure_rate >= 0.0);
  CHECK(summary.strict_failure_rate <= 1.0);
  CHECK(summary.sum_failure_rate <= summary.strict_failure_rate);
  CHECK(summary.fano_bound ==
        bounds::fano_lower(8, 4.0 * 256.0, 0.1).value);
  CHECK(summary.psi_third ==
        doctest::Approx(discrepancy_bound({8, 0.1, 0.5}) / 3.0));

  // Identical seed reproduces the run.
  const auto again = recovery_experiment(8, 0.1, 0.5, 1.0, 4 * 256, 100, 11);
  CHECK(again.strict_failures == summary.strict_failures);
  CHECK(again.mean_abs_error == summary.mean_abs_error);
}

TEST_CASE("recovery experiment rejects infeasible parameters") {
  CHECK_THROWS_AS(recovery_experiment(8, 0.1, 2.0, 1.0, 1024, 10, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(recovery_experiment(8, 0.3, 0.5, 1.0, 1024, 10, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(recovery_experiment(8, 0.1, 0.5, 1.0, 1000, 10, 0),
                  IndivisibleBudget);
}
