#ifndef QUADBOUND_ENSEMBLE_HPP
#define QUADBOUND_ENSEMBLE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "quadbound/polynomial.hpp"

namespace quadbound {

/// Sign vectors in {-1,+1}^d with pairwise Hamming distance >= ceil(d/4).
struct PackingSet {
  int d = 0;
  int min_separation = 0;
  std::vector<std::vector<int>> members;
  bool reached_target = false;  // cardinality >= ceil((2/sqrt(e))^(d/2))
};

/// Randomized greedy construction: sample uniform sign vectors, keep those
/// far enough from everything kept so far, until the target cardinality is
/// reached or max_attempts are exhausted. Deterministic given seed.
PackingSet build_packing_set(int d, std::uint64_t seed,
                             std::uint64_t max_attempts = 1000000);

/// Exhaustive pairwise Hamming verification.
bool verify_packing(const PackingSet& set);

int hamming_distance(std::span<const int> a, std::span<const int> b);

/// Parameters of the linear ensemble g_alpha(x) = (delta/d) sum_i
/// alpha_i (x_i + r) over the cube [-r,r]^d.
struct EnsembleParams {
  int d = 0;
  double delta = 0.0;  // (0, 1/4]
  double r = 0.0;
};

double g_alpha_eval(const EnsembleParams& params, std::span<const int> alpha,
                    std::span<const double> x);

/// Closed-form integral over [-r,r]^d: (delta/d) 2^d r^(d+1) sum_i alpha_i.
double g_alpha_integral(const EnsembleParams& params,
                        std::span<const int> alpha);

/// The degree-1 sparse polynomial expansion of g_alpha.
Polynomial g_alpha_polynomial(const EnsembleParams& params,
                              std::span<const int> alpha);

/// The operative discrepancy psi: delta * 2^(d-1) * r^(d+1).
double discrepancy_bound(const EnsembleParams& params);

/// Exact per-query KL divergence between two coordinate-Bernoulli channels:
/// (1/d) sum_j KL(Bern(1/2 + a_j delta) || Bern(1/2 + b_j delta)).
double bernoulli_pair_kl(std::span<const int> a, std::span<const int> b,
                         double delta);

struct RecoveryDecision {
  std::vector<int> alpha;
  bool fallback = false;  // no member within psi/3; uniform random draw
  int qualifying = 0;     // members within psi/3 (>1 means a tie)
};

/// Returns the member whose integral is within psi/3 of I; ties resolve to
/// the lexicographically smallest qualifier; with no qualifier, a seeded
/// uniform draw from the set.
RecoveryDecision recover_alpha(const PackingSet& set,
                               const EnsembleParams& params, double integral,
                               std::uint64_t seed);

struct RecoverySummary {
  int trials = 0;
  int strict_failures = 0;  // recovered alpha != true alpha
  int sum_failures = 0;     // recovered coordinate sum != true coordinate sum
  double strict_failure_rate = 0.0;
  double sum_failure_rate = 0.0;
  double fano_bound = 0.0;
  double mean_abs_error = 0.0;  // |I - true integral| averaged over trials
  double psi_third = 0.0;
  int ties = 0;
  int fallbacks = 0;
  std::size_t packing_cardinality = 0;
};

/// End-to-end alpha-recovery simulation: per trial, draw a true alpha from
/// the packing set, run the Gaussian Quadrature estimator against the
/// coordinate-Bernoulli oracle with budget T, and attempt recovery from the
/// integral estimate. T must be a multiple of 2^d.
RecoverySummary recovery_experiment(int d, double delta, double r,
                                    double sigma, std::uint64_t total_queries,
                                    int trials, std::uint64_t seed);

}  // namespace quadbound

#endif
