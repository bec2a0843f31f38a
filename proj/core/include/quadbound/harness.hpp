#ifndef QUADBOUND_HARNESS_HPP
#define QUADBOUND_HARNESS_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace quadbound::harness {

enum class Scale { Paper, Desk };

Scale scale_from_string(const std::string& name);

/// Preset sweeps. Figure 1: error vs T at fixed d, r. Figure 2: error vs d
/// at m = 4. Figure 3: error vs r (powers of two) at m = 4; log-scale plot
/// variants are emitted alongside.
struct ExperimentConfig {
  int figure = 1;  // 1, 2 or 3
  Scale scale = Scale::Desk;
  int polynomials_per_point = 100;
  double sigma = 1.0;
  std::uint64_t seed = 0;
  std::filesystem::path output_dir;
  bool emit_plot = false;
};

struct SweepRow {
  double sweep = 0.0;  // T, d or r
  double mean_abs_error = 0.0;
  double std_error = 0.0;  // standard error of the mean
  double theory = 0.0;     // Gaussian-oracle law at the row's parameters
  int n = 0;               // replicate count
};

/// Runs the configured sweep, writes figure<k>.csv (and figure<k>.svg when
/// emit_plot) under output_dir, and returns the rows.
std::vector<SweepRow> run_experiment(const ExperimentConfig& config);

struct GqSrComparison {
  int d = 0;
  double r = 0.0;
  std::uint64_t m = 0;
  std::uint64_t gq_queries = 0;  // m * 2^d
  std::uint64_t sr_queries = 0;  // m * 3^d
  double query_ratio = 0.0;      // (3/2)^d
  double gq_mean_abs_error = 0.0;
  double sr_mean_abs_error = 0.0;
  double gq_noise_term = 0.0;
  double sr_noise_term = 0.0;
  double gq_bias_term = 0.0;
  double sr_bias_term = 0.0;
  double bias_term_ratio = 0.0;  // sr/gq = 6r^2/7 when K > 0
};

/// Runs both methods on shared random polynomials over [-r,r]^d (B = 2r for
/// Simpson's Rule) and evaluates both theoretical bounds.
GqSrComparison compare_gq_sr(int d, double r, double sigma, std::uint64_t m,
                             double K, std::uint64_t seed,
                             int polynomials = 20);

/// CSV with header "sweep,mean_abs_error,std_error,theory,n"; byte output is
/// deterministic given identical rows.
void emit_csv(const std::vector<SweepRow>& rows,
              const std::filesystem::path& path);
std::vector<SweepRow> parse_csv(const std::filesystem::path& path);
std::string csv_string(const std::vector<SweepRow>& rows);

/// Self-contained SVG with experimental and theory curves, linear and
/// log-scale panels.
void emit_plot(const std::vector<SweepRow>& rows,
               const std::filesystem::path& path,
               const std::string& sweep_label);

/// Worker count: QUADBOUND_WORKERS env override, else hardware concurrency.
int worker_count();

}  // namespace quadbound::harness

#endif
