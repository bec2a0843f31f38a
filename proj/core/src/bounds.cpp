#include "quadbound/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace quadbound::bounds {

namespace {

constexpr double kSqrt2OverPi = 0.79788456080286535588;  // sqrt(2/pi)

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

// ln(2/sqrt(e)) = ln 2 - 1/2
double log_two_over_sqrt_e() { return std::log(2.0) - 0.5; }

}  // namespace

BoundValue lower_bound(int d, double r, double total_queries) {
  require(d >= 1, "bounds: d must be >= 1");
  require(r > 0.0, "bounds: r must be > 0");
  require(total_queries >= 1.0, "bounds: T must be >= 1");

  const double radicand =
      (d * log_two_over_sqrt_e() - 3.0 * std::log(2.0)) /
      (324.0 * 3.0 * 16.0 * total_queries);
  BoundValue out{"lower_bound", 0.0, true, ""};
  out.value = std::pow(2.0, d) * std::pow(r, d + 1) * std::sqrt(radicand);
  if (radicand <= 0.0) {
    out.valid = false;
    out.note = "radicand nonpositive: d*ln(2/sqrt(e)) <= 3*ln(2)";
  }
  return out;
}

BoundValue gq_upper_bound(int d, double r, double sigma, double total_queries,
                          double K) {
  require(d >= 1, "bounds: d must be >= 1");
  require(r > 0.0, "bounds: r must be > 0");
  require(sigma >= 0.0, "bounds: sigma must be >= 0");
  require(total_queries >= 1.0, "bounds: T must be >= 1");
  require(K >= 0.0, "bounds: K must be >= 0");

  const double noise =
      std::pow(2.0, d + 1) * std::pow(r, d) * sigma / std::sqrt(total_queries);
  const double bias =
      std::pow(2.0, d + 1) * std::pow(r, d + 5) / (6.0 * 45.0) * K;
  BoundValue out{"gq_upper_bound", noise + bias, true, ""};
  const double nodes = std::pow(2.0, d);
  if (std::fmod(total_queries, nodes) != 0.0) {
    out.note = "T is not a multiple of 2^d; budget identity T = m*2^d fails";
  }
  return out;
}

BoundValue gq_gaussian_error(int d, double r, double sigma,
                             double total_queries, double K,
                             std::optional<double> c) {
  require(d >= 1, "bounds: d must be >= 1");
  require(r > 0.0, "bounds: r must be > 0");
  require(sigma > 0.0, "bounds: gaussian law requires sigma > 0");
  require(total_queries >= 1.0, "bounds: T must be >= 1");
  require(K >= 0.0, "bounds: K must be >= 0");

  const double scale =
      std::pow(2.0, d) * std::pow(r, d) * sigma / std::sqrt(total_queries);
  BoundValue out{"gq_gaussian_error", 0.0, true, ""};
  if (K == 0.0) {
    out.value = scale * kSqrt2OverPi;
    return out;
  }
  // Worst case of the stated constant ranges: c = 8r^5/45.
  const double c0 = c.value_or(8.0 * std::pow(r, 5) / 45.0);
  const double c1 = c0 * c0 / 48.0;
  const double c2 = c0 / 24.0;
  const double c3 = c0 / (24.0 * std::sqrt(2.0));
  const double noise =
      scale * std::exp(-c1 * std::pow(2.0, d) / (sigma * sigma)) * kSqrt2OverPi;
  const double bias = c2 * std::pow(2.0, 1.5 * d) * std::pow(r, d) /
                      std::sqrt(total_queries) *
                      std::erf(c3 * std::pow(2.0, 0.5 * d) / sigma);
  out.value = noise + bias;
  return out;
}

BoundValue sr_upper_bound(int d, double B, double sigma, double total_queries,
                          double K) {
  require(d >= 1, "bounds: d must be >= 1");
  require(B > 0.0, "bounds: B must be > 0");
  require(sigma >= 0.0, "bounds: sigma must be >= 0");
  require(total_queries >= 1.0, "bounds: T must be >= 1");
  require(K >= 0.0, "bounds: K must be >= 0");

  const double noise = std::pow(3.0, 0.5 * d) * std::pow(B, d) * sigma /
                       (std::pow(2.0, 0.5 * d - 1.0) * std::sqrt(total_queries));
  const double bias = std::pow(B, d + 7) / (840.0 * 24.0) * K;
  BoundValue out{"sr_upper_bound", noise + bias, true, ""};
  const double nodes = std::pow(3.0, d);
  if (std::fmod(total_queries, nodes) != 0.0) {
    out.note = "T is not a multiple of 3^d; budget identity T = m*3^d fails";
  }
  return out;
}

BoundValue kl_bound(double total_queries, double delta) {
  require(total_queries >= 0.0, "bounds: T must be >= 0");
  BoundValue out{"kl_bound", 16.0 * total_queries * delta * delta, true, ""};
  if (!(delta > 0.0) || delta > 0.25) {
    out.valid = false;
    out.note = "delta outside (0, 1/4]";
  }
  return out;
}

BoundValue fano_lower(int d, double total_queries, double delta) {
  require(d >= 1, "bounds: d must be >= 1");
  require(total_queries >= 0.0, "bounds: T must be >= 0");
  BoundValue out{"fano_lower", 0.0, true, ""};
  if (!(delta > 0.0) || delta > 0.25) {
    out.valid = false;
    out.note = "delta outside (0, 1/4]";
  }
  const double raw = 1.0 - (16.0 * total_queries * delta * delta +
                            std::log(2.0)) /
                               (0.5 * d * log_two_over_sqrt_e());
  out.value = std::fmin(1.0, std::fmax(0.0, raw));
  char buf[48];
  std::snprintf(buf, sizeof(buf), "raw=%.17g", raw);
  if (!out.note.empty()) out.note += "; ";
  out.note += buf;
  return out;
}

double packing_cardinality_bound(int d) {
  require(d >= 1, "bounds: d must be >= 1");
  return std::pow(2.0 / std::sqrt(std::exp(1.0)), 0.5 * d);
}

}  // namespace quadbound::bounds
