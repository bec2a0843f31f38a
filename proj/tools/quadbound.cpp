// Command-line front end: integrate, bounds, recovery, experiment, compare.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "quadbound/bounds.hpp"
#include "quadbound/ensemble.hpp"
#include "quadbound/estimators.hpp"
#include "quadbound/harness.hpp"
#include "quadbound/oracle.hpp"
#include "quadbound/polynomial.hpp"
#include "quadbound/region.hpp"

namespace {

using nlohmann::json;
using namespace quadbound;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct IntegrateOptions {
  std::string method = "gq";
  std::string region_spec;
  std::string poly_path;
  std::string oracle_kind = "none";
  double sigma = 1.0;
  std::uint64_t m = 1;
  std::uint64_t seed = 0;
  bool csv = false;
};

int run_integrate(const IntegrateOptions& opt) {
  std::ifstream in(opt.poly_path);
  if (!in) throw std::runtime_error("cannot read polynomial file: " + opt.poly_path);
  const Polynomial poly = Polynomial::parse(in);
  const Region region = Region::parse(opt.region_spec);
  if (region.dim() != poly.dim()) {
    throw std::invalid_argument("region/polynomial dimension mismatch");
  }

  const Method method = method_from_string(opt.method);
  NodeSet nodes = [&] {
    if (method == Method::SimpsonRule) return sr_nodes(region);
    double r = 0.0;
    if (!region.cube_radius(r)) {
      throw std::invalid_argument("gq requires a cube region [-r,r]^d");
    }
    return gq_nodes(region.dim(), r);
  }();

  OracleSpec spec;
  spec.kind = oracle_kind_from_string(opt.oracle_kind);
  spec.sigma = spec.kind == OracleKind::NoiseFree ? 0.0 : opt.sigma;
  spec.seed = opt.seed;
  Oracle oracle(spec);

  const double exact = poly.exact_integral(region);
  EstimateReport report = estimate(nodes, oracle, poly, opt.m, exact);

  const double K = poly.fourth_derivative_bound(region);
  const double T = static_cast<double>(report.budget.total);
  const int d = region.dim();
  if (method == Method::GaussQuadrature) {
    const double r = region.upper(0);
    report.bound_values["gq_upper_bound"] =
        bounds::gq_upper_bound(d, r, opt.sigma, T, K).value;
    if (spec.kind == OracleKind::Gaussian) {
      report.bound_values["gq_gaussian_error"] =
          bounds::gq_gaussian_error(d, r, opt.sigma, T, K).value;
    }
  } else {
    report.bound_values["sr_upper_bound"] =
        bounds::sr_upper_bound(d, region.max_width(), opt.sigma, T, K).value;
  }

  if (opt.csv) {
    std::cout << "method,estimate,exact,abs_error,T,m,node_count\n"
              << opt.method << ',' << fmt(report.estimate) << ','
              << fmt(exact) << ',' << fmt(*report.abs_error) << ','
              << report.budget.total << ',' << report.budget.repeats << ','
              << report.budget.node_count << '\n';
  } else {
    json out{{"method", opt.method},
             {"estimate", report.estimate},
             {"exact", exact},
             {"abs_error", *report.abs_error},
             {"budget",
              {{"T", report.budget.total},
               {"m", report.budget.repeats},
               {"node_count", report.budget.node_count}}},
             {"bounds", report.bound_values}};
    std::cout << out.dump(2) << '\n';
  }
  return 0;
}

struct BoundsOptions {
  std::string which = "lower";
  int d = 1;
  double r = 1.0;
  double B = 2.0;
  double sigma = 1.0;
  double T = 1.0;
  double K = 0.0;
  double delta = 0.25;
  std::optional<double> c;
  std::string sweep;  // e.g. "T=1024:65536:1024"
};

bounds::BoundValue evaluate_bound(const BoundsOptions& opt) {
  if (opt.which == "lower") return bounds::lower_bound(opt.d, opt.r, opt.T);
  if (opt.which == "gq-upper") {
    return bounds::gq_upper_bound(opt.d, opt.r, opt.sigma, opt.T, opt.K);
  }
  if (opt.which == "gq-gaussian") {
    return bounds::gq_gaussian_error(opt.d, opt.r, opt.sigma, opt.T, opt.K,
                                     opt.c);
  }
  if (opt.which == "sr-upper") {
    return bounds::sr_upper_bound(opt.d, opt.B, opt.sigma, opt.T, opt.K);
  }
  if (opt.which == "kl") return bounds::kl_bound(opt.T, opt.delta);
  if (opt.which == "fano") return bounds::fano_lower(opt.d, opt.T, opt.delta);
  if (opt.which == "packing") {
    return {"packing_cardinality_bound",
            bounds::packing_cardinality_bound(opt.d), true, ""};
  }
  throw std::invalid_argument("unknown bound: " + opt.which);
}

int run_bounds(BoundsOptions opt) {
  if (opt.sweep.empty()) {
    const auto bv = evaluate_bound(opt);
    json out{{"name", bv.name}, {"value", bv.value}, {"valid", bv.valid}};
    if (!bv.note.empty()) out["note"] = bv.note;
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  char name[8];
  double lo, hi, step;
  if (std::sscanf(opt.sweep.c_str(), "%7[a-zA-Z]=%lf:%lf:%lf", name, &lo, &hi,
                  &step) != 4 ||
      step <= 0.0) {
    throw std::invalid_argument("malformed sweep spec: " + opt.sweep);
  }
  const std::string var = name;
  std::cout << var << ",value,valid\n";
  for (double v = lo; v <= hi + 1e-12 * step; v += step) {
    if (var == "T") opt.T = v;
    else if (var == "d") opt.d = static_cast<int>(v);
    else if (var == "r") opt.r = v;
    else if (var == "B") opt.B = v;
    else if (var == "sigma") opt.sigma = v;
    else if (var == "K") opt.K = v;
    else if (var == "delta") opt.delta = v;
    else throw std::invalid_argument("unknown sweep variable: " + var);
    const auto bv = evaluate_bound(opt);
    std::cout << fmt(v) << ',' << fmt(bv.value) << ','
              << (bv.valid ? "true" : "false") << '\n';
  }
  return 0;
}

struct RecoveryOptions {
  int d = 12;
  double delta = 0.1;
  double r = 0.5;
  double sigma = 1.0;
  std::uint64_t T = 4096;
  int trials = 500;
  std::uint64_t seed = 0;
  bool csv = false;
};

int run_recovery(const RecoveryOptions& opt) {
  const RecoverySummary s = recovery_experiment(opt.d, opt.delta, opt.r,
                                                opt.sigma, opt.T, opt.trials,
                                                opt.seed);
  if (opt.csv) {
    std::cout << "trials,failures,failure_rate,sum_failures,sum_failure_rate,"
                 "fano_bound,mean_abs_error,psi_third,ties\n"
              << s.trials << ',' << s.strict_failures << ','
              << fmt(s.strict_failure_rate) << ',' << s.sum_failures << ','
              << fmt(s.sum_failure_rate) << ',' << fmt(s.fano_bound) << ','
              << fmt(s.mean_abs_error) << ',' << fmt(s.psi_third) << ','
              << s.ties << '\n';
  } else {
    json out{{"trials", s.trials},
             {"failures", s.strict_failures},
             {"failure_rate", s.strict_failure_rate},
             {"sum_failures", s.sum_failures},
             {"sum_failure_rate", s.sum_failure_rate},
             {"fano_bound", s.fano_bound},
             {"mean_abs_error", s.mean_abs_error},
             {"psi_third", s.psi_third},
             {"ties", s.ties},
             {"fallbacks", s.fallbacks},
             {"packing_cardinality", s.packing_cardinality}};
    std::cout << out.dump(2) << '\n';
  }
  return 0;
}

int run_experiment_cmd(const harness::ExperimentConfig& config) {
  const auto rows = harness::run_experiment(config);
  std::cout << harness::csv_string(rows);
  return 0;
}

struct CompareOptions {
  int d = 4;
  double r = 1.0;
  double sigma = 1.0;
  std::uint64_t m = 4;
  double K = 0.0;
  std::uint64_t seed = 0;
  int polynomials = 20;
};

int run_compare(const CompareOptions& opt) {
  const auto c = harness::compare_gq_sr(opt.d, opt.r, opt.sigma, opt.m, opt.K,
                                        opt.seed, opt.polynomials);
  json out{{"d", c.d},
           {"r", c.r},
           {"m", c.m},
           {"gq_queries", c.gq_queries},
           {"sr_queries", c.sr_queries},
           {"query_ratio", c.query_ratio},
           {"gq_mean_abs_error", c.gq_mean_abs_error},
           {"sr_mean_abs_error", c.sr_mean_abs_error},
           {"gq_noise_term", c.gq_noise_term},
           {"sr_noise_term", c.sr_noise_term},
           {"gq_bias_term", c.gq_bias_term},
           {"sr_bias_term", c.sr_bias_term},
           {"bias_term_ratio", c.bias_term_ratio}};
  std::cout << out.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noisy-oracle definite-integral estimation and bounds"};
  app.require_subcommand(1);

  IntegrateOptions io;
  auto* integrate_cmd = app.add_subcommand("integrate", "Run one estimator");
  integrate_cmd->add_option("--method", io.method, "gq|sr");
  integrate_cmd->add_option("--region", io.region_spec,
                            "cube:d:r or a1,b1;a2,b2;...")->required();
  integrate_cmd->add_option("--poly", io.poly_path, "polynomial file")
      ->required();
  integrate_cmd->add_option("--oracle", io.oracle_kind, "none|gaussian");
  integrate_cmd->add_option("--sigma", io.sigma);
  integrate_cmd->add_option("--m", io.m, "queries per node");
  integrate_cmd->add_option("--seed", io.seed);
  integrate_cmd->add_flag("--csv", io.csv, "CSV output instead of JSON");

  BoundsOptions bo;
  double c_value = 0.0;
  auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate closed-form bounds");
  bounds_cmd->add_option("--which", bo.which,
                         "lower|gq-upper|gq-gaussian|sr-upper|kl|fano|packing");
  bounds_cmd->add_option("--d", bo.d);
  bounds_cmd->add_option("--r", bo.r);
  bounds_cmd->add_option("--B", bo.B);
  bounds_cmd->add_option("--sigma", bo.sigma);
  bounds_cmd->add_option("--T", bo.T);
  bounds_cmd->add_option("--K", bo.K);
  bounds_cmd->add_option("--delta", bo.delta);
  auto* c_opt = bounds_cmd->add_option("--c", c_value,
                                       "non-noisy error constant override");
  bounds_cmd->add_option("--sweep", bo.sweep, "VAR=lo:hi:step CSV sweep");

  RecoveryOptions ro;
  auto* recovery_cmd =
      app.add_subcommand("recovery", "Alpha-recovery simulation");
  recovery_cmd->add_option("--d", ro.d);
  recovery_cmd->add_option("--delta", ro.delta);
  recovery_cmd->add_option("--r", ro.r);
  recovery_cmd->add_option("--sigma", ro.sigma);
  recovery_cmd->add_option("--T", ro.T);
  recovery_cmd->add_option("--trials", ro.trials);
  recovery_cmd->add_option("--seed", ro.seed);
  recovery_cmd->add_flag("--csv", ro.csv);

  harness::ExperimentConfig config;
  std::string scale = "desk";
  std::string out_dir;
  auto* experiment_cmd =
      app.add_subcommand("experiment", "Figure sweep presets");
  experiment_cmd->add_option("--figure", config.figure, "1|2|3")->required();
  experiment_cmd->add_option("--scale", scale, "paper|desk");
  experiment_cmd->add_option("--polys", config.polynomials_per_point,
                             "polynomials per sweep point");
  experiment_cmd->add_option("--sigma", config.sigma);
  experiment_cmd->add_option("--seed", config.seed);
  experiment_cmd->add_option("--out", out_dir, "output directory");
  experiment_cmd->add_flag("--plot", config.emit_plot, "emit SVG plot");

  CompareOptions co;
  auto* compare_cmd =
      app.add_subcommand("compare", "Gaussian Quadrature vs Simpson's Rule");
  compare_cmd->add_option("--d", co.d);
  compare_cmd->add_option("--r", co.r);
  compare_cmd->add_option("--sigma", co.sigma);
  compare_cmd->add_option("--m", co.m);
  compare_cmd->add_option("--K", co.K);
  compare_cmd->add_option("--seed", co.seed);
  compare_cmd->add_option("--polys", co.polynomials);

  CLI11_PARSE(app, argc, argv);

  try {
    if (integrate_cmd->parsed()) return run_integrate(io);
    if (bounds_cmd->parsed()) {
      if (c_opt->count() > 0) bo.c = c_value;
      return run_bounds(bo);
    }
    if (recovery_cmd->parsed()) return run_recovery(ro);
    if (experiment_cmd->parsed()) {
      config.scale = harness::scale_from_string(scale);
      config.output_dir = out_dir;
      return run_experiment_cmd(config);
    }
    if (compare_cmd->parsed()) return run_compare(co);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
