#include "quadbound/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "quadbound/bounds.hpp"
#include "quadbound/ensemble.hpp"
#include "quadbound/estimators.hpp"
#include "quadbound/oracle.hpp"
#include "quadbound/rng.hpp"

namespace quadbound::harness {

namespace {

// Runs fn(i) for i in [0, n) across worker_count() threads. Each index is
// independent; callers store into preallocated slots so the reduction order
// does not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const int workers = std::min<int>(worker_count(), static_cast<int>(n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

struct SweepPoint {
  double sweep = 0.0;
  int d = 0;
  double r = 0.0;
  std::uint64_t m = 0;
};

// Mean |estimate - exact| over n random cubics against a Gaussian oracle.
SweepRow measure_point(const SweepPoint& point, double sigma, int replicates,
                       std::uint64_t point_seed) {
  const NodeSet nodes = gq_nodes(point.d, point.r);
  const std::uint64_t total = point.m * nodes.nodes.size();

  std::vector<double> errors(replicates, 0.0);
  parallel_for(replicates, [&](std::size_t rep) {
    const std::uint64_t rep_seed = rng::derive_seed(point_seed, rep);
    const Polynomial poly =
        Polynomial::random_cubic(point.d, rng::derive_seed(rep_seed, 0));
    OracleSpec spec;
    spec.kind = OracleKind::Gaussian;
    spec.sigma = sigma;
    spec.seed = rng::derive_seed(rep_seed, 1);
    Oracle oracle(spec);
    oracle.log().set_point_tracking(false);
    oracle.enforce_budget(total);
    const double exact = poly.exact_integral(nodes.region);
    errors[rep] = *estimate(nodes, oracle, poly, point.m, exact).abs_error;
  });

  double mean = 0.0;
  for (double e : errors) mean += e;
  mean /= replicates;
  double variance = 0.0;
  for (double e : errors) variance += (e - mean) * (e - mean);
  variance = replicates > 1 ? variance / (replicates - 1) : 0.0;

  SweepRow row;
  row.sweep = point.sweep;
  row.mean_abs_error = mean;
  row.std_error = std::sqrt(variance / replicates);
  row.theory = bounds::gq_gaussian_error(point.d, point.r, sigma,
                                         static_cast<double>(total), 0.0)
                   .value;
  row.n = replicates;
  return row;
}

std::vector<SweepPoint> sweep_points(const ExperimentConfig& config) {
  const bool paper = config.scale == Scale::Paper;
  std::vector<SweepPoint> points;
  switch (config.figure) {
    case 1: {
      const int d = paper ? 10 : 6;
      const double r = paper ? 5.0 : 1.5;
      for (std::uint64_t m = 1; m <= 64; ++m) {
        const double total = static_cast<double>(m) * std::pow(2.0, d);
        points.push_back({total, d, r, m});
      }
      break;
    }
    case 2: {
      const int d_max = paper ? 16 : 12;
      for (int d = 1; d <= d_max; ++d) {
        points.push_back({static_cast<double>(d), d, 5.0, 4});
      }
      break;
    }
    case 3: {
      const int d = paper ? 10 : 6;
      const int k_max = paper ? 10 : 4;
      for (int k = -5; k <= k_max; ++k) {
        const double r = std::pow(2.0, k);
        points.push_back({r, d, r, 4});
      }
      break;
    }
    default:
      throw std::invalid_argument("harness: figure must be 1, 2 or 3");
  }
  return points;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

Scale scale_from_string(const std::string& name) {
  if (name == "paper") return Scale::Paper;
  if (name == "desk") return Scale::Desk;
  throw std::invalid_argument("harness: unknown scale: " + name);
}

int worker_count() {
  if (const char* env = std::getenv("QUADBOUND_WORKERS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

std::vector<SweepRow> run_experiment(const ExperimentConfig& config) {
  const auto points = sweep_points(config);
  std::vector<SweepRow> rows(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    rows[i] = measure_point(points[i], config.sigma,
                            config.polynomials_per_point,
                            rng::derive_seed(config.seed, i));
  }
  if (!config.output_dir.empty()) {
    std::filesystem::create_directories(config.output_dir);
    const std::string stem = "figure" + std::to_string(config.figure);
    emit_csv(rows, config.output_dir / (stem + ".csv"));
    if (config.emit_plot) {
      static const char* labels[] = {"T", "d", "r"};
      emit_plot(rows, config.output_dir / (stem + ".svg"),
                labels[config.figure - 1]);
    }
  }
  return rows;
}

GqSrComparison compare_gq_sr(int d, double r, double sigma, std::uint64_t m,
                             double K, std::uint64_t seed, int polynomials) {
  GqSrComparison report;
  report.d = d;
  report.r = r;
  report.m = m;

  const NodeSet gq = gq_nodes(d, r);
  const NodeSet sr = sr_nodes(Region::cube(d, r));
  report.gq_queries = m * gq.nodes.size();
  report.sr_queries = m * sr.nodes.size();
  report.query_ratio = std::pow(1.5, d);

  std::vector<double> gq_errors(polynomials, 0.0);
  std::vector<double> sr_errors(polynomials, 0.0);
  parallel_for(polynomials, [&](std::size_t rep) {
    const std::uint64_t rep_seed = rng::derive_seed(seed, rep);
    const Polynomial poly =
        Polynomial::random_cubic(d, rng::derive_seed(rep_seed, 0));
    const double exact = poly.exact_integral(gq.region);

    OracleSpec spec;
    spec.kind = OracleKind::Gaussian;
    spec.sigma = sigma;
    spec.seed = rng::derive_seed(rep_seed, 1);
    Oracle gq_oracle(spec);
    gq_oracle.log().set_point_tracking(false);
    gq_errors[rep] = *estimate(gq, gq_oracle, poly, m, exact).abs_error;

    spec.seed = rng::derive_seed(rep_seed, 2);
    Oracle sr_oracle(spec);
    sr_oracle.log().set_point_tracking(false);
    sr_errors[rep] = *estimate(sr, sr_oracle, poly, m, exact).abs_error;
  });
  for (int i = 0; i < polynomials; ++i) {
    report.gq_mean_abs_error += gq_errors[i];
    report.sr_mean_abs_error += sr_errors[i];
  }
  report.gq_mean_abs_error /= polynomials;
  report.sr_mean_abs_error /= polynomials;

  const double B = 2.0 * r;
  report.gq_noise_term =
      bounds::gq_upper_bound(d, r, sigma,
                             static_cast<double>(report.gq_queries), 0.0)
          .value;
  report.sr_noise_term =
      bounds::sr_upper_bound(d, B, sigma,
                             static_cast<double>(report.sr_queries), 0.0)
          .value;
  if (K > 0.0) {
    report.gq_bias_term =
        bounds::gq_upper_bound(d, r, sigma,
                               static_cast<double>(report.gq_queries), K)
            .value -
        report.gq_noise_term;
    report.sr_bias_term =
        bounds::sr_upper_bound(d, B, sigma,
                               static_cast<double>(report.sr_queries), K)
            .value -
        report.sr_noise_term;
    report.bias_term_ratio = report.sr_bias_term / report.gq_bias_term;
  }
  return report;
}

std::string csv_string(const std::vector<SweepRow>& rows) {
  std::string out = "sweep,mean_abs_error,std_error,theory,n\n";
  for (const auto& row : rows) {
    out += format_double(row.sweep) + ',' +
           format_double(row.mean_abs_error) + ',' +
           format_double(row.std_error) + ',' + format_double(row.theory) +
           ',' + std::to_string(row.n) + '\n';
  }
  return out;
}

void emit_csv(const std::vector<SweepRow>& rows,
              const std::filesystem::path& path) {
  if (rows.empty()) throw std::invalid_argument("harness: no rows to emit");
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("harness: cannot write " + path.string());
  }
  out << csv_string(rows);
}

std::vector<SweepRow> parse_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("harness: cannot read " + path.string());
  }
  std::string line;
  std::getline(in, line);  // header
  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    SweepRow row;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%d", &row.sweep,
                    &row.mean_abs_error, &row.std_error, &row.theory,
                    &row.n) != 5) {
      throw std::runtime_error("harness: malformed CSV row: " + line);
    }
    rows.push_back(row);
  }
  return rows;
}

void emit_plot(const std::vector<SweepRow>& rows,
               const std::filesystem::path& path,
               const std::string& sweep_label) {
  if (rows.empty()) throw std::invalid_argument("harness: no rows to plot");

  constexpr double width = 640, height = 420, margin = 60;
  auto panel = [&](std::ostringstream& svg, double y0, bool log_scale,
                   const std::string& title) {
    double xmin = rows.front().sweep, xmax = rows.front().sweep;
    double ymin = rows.front().mean_abs_error, ymax = ymin;
    auto transform = [&](double v) {
      return log_scale ? std::log10(std::max(v, 1e-300)) : v;
    };
    for (const auto& row : rows) {
      xmin = std::min(xmin, transform(row.sweep));
      xmax = std::max(xmax, transform(row.sweep));
      for (double y : {row.mean_abs_error, row.theory}) {
        ymin = std::min(ymin, transform(y));
        ymax = std::max(ymax, transform(y));
      }
    }
    if (!log_scale) {
      xmin = rows.front().sweep;
      xmax = rows.back().sweep;
    }
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;
    auto px = [&](double x) {
      return margin + (transform(x) - xmin) / (xmax - xmin) *
                          (width - 2 * margin);
    };
    auto py = [&](double y) {
      return y0 + height - margin -
             (transform(y) - ymin) / (ymax - ymin) * (height - 2 * margin);
    };
    auto polyline = [&](const char* color, bool theory) {
      svg << "<polyline fill=\"none\" stroke=\"" << color
          << "\" stroke-width=\"1.5\" points=\"";
      for (const auto& row : rows) {
        svg << px(row.sweep) << ','
            << py(theory ? row.theory : row.mean_abs_error) << ' ';
      }
      svg << "\"/>\n";
    };
    svg << "<rect x=\"" << margin << "\" y=\"" << y0 + margin << "\" width=\""
        << width - 2 * margin << "\" height=\"" << height - 2 * margin
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    polyline("blue", false);
    polyline("red", true);
    svg << "<text x=\"" << width / 2 << "\" y=\"" << y0 + margin - 16
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\">" << title
        << "</text>\n";
    svg << "<text x=\"" << width / 2 << "\" y=\"" << y0 + height - 16
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\">"
        << sweep_label << "</text>\n";
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << 2 * height << "\">\n";
  panel(svg, 0, false, "mean |error| (blue) vs theory (red)");
  panel(svg, height, true, "log10 scale");
  svg << "</svg>\n";

  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("harness: cannot write " + path.string());
  }
  out << svg.str();
}

}  // namespace quadbound::harness
