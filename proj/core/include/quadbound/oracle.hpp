#ifndef QUADBOUND_ORACLE_HPP
#define QUADBOUND_ORACLE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "quadbound/polynomial.hpp"
#include "quadbound/rng.hpp"

namespace quadbound {

enum class OracleKind { NoiseFree, Gaussian, CoordinateBernoulli };

std::string to_string(OracleKind kind);
OracleKind oracle_kind_from_string(const std::string& name);

struct BudgetExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Configuration of a zero-order stochastic oracle. sigma is a standard
/// deviation (variance bound sigma^2). The CoordinateBernoulli fields
/// implement the adversarial channel: one uniformly random coordinate i,
/// b ~ Bernoulli(1/2 + alpha_i*delta), response +-h_i(x_i)/2 with
/// h_i(z) = z + r.
struct OracleSpec {
  OracleKind kind = OracleKind::NoiseFree;
  double sigma = 0.0;
  std::uint64_t seed = 0;

  std::vector<int> alpha;  // entries in {-1,+1}
  double delta = 0.0;      // (0, 1/4]
  double r = 0.0;          // radius defining h_i

  void validate() const;  // throws std::invalid_argument
  /// Non-fatal conditions, e.g. r > sigma violating the variance feasibility
  /// form while 2r <= 2*sigma still holds.
  std::vector<std::string> warnings() const;
};

/// Query counts per distinct point plus the running total.
class QueryLog {
 public:
  std::uint64_t count() const { return count_; }
  const std::map<std::vector<double>, std::uint64_t>& per_point() const {
    return per_point_;
  }
  void record(std::span<const double> x);
  void set_point_tracking(bool on) { track_points_ = on; }

 private:
  std::uint64_t count_ = 0;
  bool track_points_ = true;
  std::map<std::vector<double>, std::uint64_t> per_point_;
};

/// A single-consumer oracle instance. One seeded stream per instance;
/// concurrent runs use distinct instances with derived seeds.
class Oracle {
 public:
  explicit Oracle(OracleSpec spec);

  double query(const Polynomial& f, std::span<const double> x);

  const OracleSpec& spec() const { return spec_; }
  QueryLog& log() { return log_; }
  const QueryLog& log() const { return log_; }

  /// When set, query() throws BudgetExhausted once the total would exceed T.
  void enforce_budget(std::uint64_t total_queries) { budget_ = total_queries; }

 private:
  OracleSpec spec_;
  rng::Stream stream_;
  QueryLog log_;
  std::optional<std::uint64_t> budget_;
};

/// Analytic mean of the CoordinateBernoulli oracle:
/// g_alpha(x) = (delta/d) * sum_i alpha_i * (x_i + r).
double bernoulli_oracle_mean(std::span<const int> alpha, double delta,
                             double r, std::span<const double> x);

/// Worst-case variance of the CoordinateBernoulli oracle over [-r,r]^d:
/// (1/4) * sup_z (z + r)^2 = r^2. Callers pairing it with a declared sigma
/// must check r^2 <= sigma^2.
double bernoulli_oracle_variance_bound(double r, int d);

}  // namespace quadbound

#endif
