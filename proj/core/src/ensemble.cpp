#include "quadbound/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "quadbound/bounds.hpp"
#include "quadbound/estimators.hpp"
#include "quadbound/oracle.hpp"
#include "quadbound/rng.hpp"

namespace quadbound {

namespace {

void check_params(const EnsembleParams& params) {
  if (params.d < 1) throw std::invalid_argument("ensemble: d must be >= 1");
  if (!(params.delta > 0.0) || params.delta > 0.25) {
    throw std::invalid_argument("ensemble: delta must be in (0, 1/4]");
  }
  if (!(params.r > 0.0)) throw std::invalid_argument("ensemble: r must be > 0");
}

}  // namespace

int hamming_distance(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("ensemble: vector length mismatch");
  }
  int distance = 0;
  for (std::size_t i = 0; i < a.size(); ++i) distance += (a[i] != b[i]);
  return distance;
}

PackingSet build_packing_set(int d, std::uint64_t seed,
                             std::uint64_t max_attempts) {
  if (d < 1) throw std::invalid_argument("ensemble: d must be >= 1");
  const int separation = (d + 3) / 4;  // ceil(d/4)
  const auto target = static_cast<std::size_t>(
      std::ceil(bounds::packing_cardinality_bound(d)));

  PackingSet set;
  set.d = d;
  set.min_separation = separation;

  rng::Stream stream(rng::derive_seed(seed, 0x7061636b));
  for (std::uint64_t attempt = 0;
       attempt < max_attempts && set.members.size() < target; ++attempt) {
    std::vector<int> candidate(d);
    for (int i = 0; i < d; ++i) {
      candidate[i] = (stream.next() & 1) ? 1 : -1;
    }
    const bool separated =
        std::all_of(set.members.begin(), set.members.end(),
                    [&](const std::vector<int>& member) {
                      return hamming_distance(member, candidate) >= separation;
                    });
    if (separated) set.members.push_back(std::move(candidate));
  }
  set.reached_target = set.members.size() >= target;
  return set;
}

bool verify_packing(const PackingSet& set) {
  for (std::size_t i = 0; i < set.members.size(); ++i) {
    for (std::size_t j = i + 1; j < set.members.size(); ++j) {
      if (hamming_distance(set.members[i], set.members[j]) <
          set.min_separation) {
        return false;
      }
    }
  }
  return true;
}

double g_alpha_eval(const EnsembleParams& params, std::span<const int> alpha,
                    std::span<const double> x) {
  check_params(params);
  if (static_cast<int>(alpha.size()) != params.d ||
      static_cast<int>(x.size()) != params.d) {
    throw std::invalid_argument("ensemble: dimension mismatch");
  }
  double sum = 0.0;
  for (int i = 0; i < params.d; ++i) sum += alpha[i] * (x[i] + params.r);
  return params.delta / params.d * sum;
}

double g_alpha_integral(const EnsembleParams& params,
                        std::span<const int> alpha) {
  check_params(params);
  if (static_cast<int>(alpha.size()) != params.d) {
    throw std::invalid_argument("ensemble: dimension mismatch");
  }
  // Fubini: each coordinate contributes (2r)^(d-1) * int_{-r}^{r} (z+r) dz
  // = 2^d r^(d+1).
  double alpha_sum = 0.0;
  for (int a : alpha) alpha_sum += a;
  return params.delta / params.d * std::pow(2.0, params.d) *
         std::pow(params.r, params.d + 1) * alpha_sum;
}

Polynomial g_alpha_polynomial(const EnsembleParams& params,
                              std::span<const int> alpha) {
  check_params(params);
  Polynomial p(params.d);
  const double scale = params.delta / params.d;
  double constant = 0.0;
  for (int i = 0; i < params.d; ++i) {
    Exponents exp(params.d, 0);
    exp[i] = 1;
    p.add_term(exp, scale * alpha[i]);
    constant += scale * alpha[i] * params.r;
  }
  p.add_term(Exponents(params.d, 0), constant);
  return p;
}

double discrepancy_bound(const EnsembleParams& params) {
  check_params(params);
  return params.delta * std::pow(2.0, params.d - 1) *
         std::pow(params.r, params.d + 1);
}

double bernoulli_pair_kl(std::span<const int> a, std::span<const int> b,
                         double delta) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("ensemble: vector length mismatch");
  }
  // Per coordinate: 0 when signs agree, else
  // KL(Bern(1/2+delta) || Bern(1/2-delta)) = 2*delta*ln((1/2+delta)/(1/2-delta)).
  const double p = 0.5 + delta;
  const double q = 0.5 - delta;
  const double flip_kl = p * std::log(p / q) + q * std::log(q / p);
  const int mismatches = hamming_distance(a, b);
  return mismatches * flip_kl / static_cast<double>(a.size());
}

RecoveryDecision recover_alpha(const PackingSet& set,
                               const EnsembleParams& params, double integral,
                               std::uint64_t seed) {
  if (set.members.empty()) {
    throw std::invalid_argument("ensemble: empty packing set");
  }
  const double threshold = discrepancy_bound(params) / 3.0;

  RecoveryDecision decision;
  const std::vector<int>* best = nullptr;
  for (const auto& member : set.members) {
    if (std::abs(integral - g_alpha_integral(params, member)) <= threshold) {
      ++decision.qualifying;
      if (best == nullptr || member < *best) best = &member;
    }
  }
  if (best != nullptr) {
    decision.alpha = *best;
    return decision;
  }
  rng::Stream stream(rng::derive_seed(seed, 0x72656376));
  decision.alpha = set.members[stream.below(set.members.size())];
  decision.fallback = true;
  return decision;
}

RecoverySummary recovery_experiment(int d, double delta, double r,
                                    double sigma, std::uint64_t total_queries,
                                    int trials, std::uint64_t seed) {
  const EnsembleParams params{d, delta, r};
  check_params(params);
  if (trials < 1) throw std::invalid_argument("ensemble: trials must be >= 1");
  if (r > sigma) {
    throw std::invalid_argument(
        "ensemble: requires r <= sigma for the variance bound");
  }
  const NodeSet nodes = gq_nodes(d, r);
  const Budget budget = budget_split(total_queries, nodes.nodes.size());
  const PackingSet set = build_packing_set(d, rng::derive_seed(seed, 1));

  RecoverySummary summary;
  summary.trials = trials;
  summary.psi_third = discrepancy_bound(params) / 3.0;
  summary.fano_bound =
      bounds::fano_lower(d, static_cast<double>(total_queries), delta).value;
  summary.packing_cardinality = set.members.size();

  double total_abs_error = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    const std::uint64_t trial_seed = rng::derive_seed(seed, 100 + trial);
    rng::Stream pick(rng::derive_seed(trial_seed, 0));
    const auto& truth = set.members[pick.below(set.members.size())];

    OracleSpec spec;
    spec.kind = OracleKind::CoordinateBernoulli;
    spec.sigma = sigma;
    spec.seed = rng::derive_seed(trial_seed, 1);
    spec.alpha = truth;
    spec.delta = delta;
    spec.r = r;
    Oracle oracle(spec);
    oracle.log().set_point_tracking(false);
    oracle.enforce_budget(total_queries);

    const Polynomial g = g_alpha_polynomial(params, truth);
    const double exact = g_alpha_integral(params, truth);
    const EstimateReport report =
        estimate(nodes, oracle, g, budget.repeats, exact);
    total_abs_error += *report.abs_error;

    const RecoveryDecision decision = recover_alpha(
        set, params, report.estimate, rng::derive_seed(trial_seed, 2));
    if (decision.qualifying > 1) ++summary.ties;
    if (decision.fallback) ++summary.fallbacks;
    if (decision.alpha != truth) ++summary.strict_failures;

    int truth_sum = 0, recovered_sum = 0;
    for (int a : truth) truth_sum += a;
    for (int a : decision.alpha) recovered_sum += a;
    if (recovered_sum != truth_sum) ++summary.sum_failures;
  }

  summary.mean_abs_error = total_abs_error / trials;
  summary.strict_failure_rate =
      static_cast<double>(summary.strict_failures) / trials;
  summary.sum_failure_rate =
      static_cast<double>(summary.sum_failures) / trials;
  return summary;
}

}  // namespace quadbound
