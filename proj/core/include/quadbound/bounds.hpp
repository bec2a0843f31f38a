#ifndef QUADBOUND_BOUNDS_HPP
#define QUADBOUND_BOUNDS_HPP

#include <optional>
#include <string>

namespace quadbound::bounds {

/// Result of a closed-form bound evaluation. valid is false when a stated
/// precondition of the formula fails; value then carries the raw expression
/// result (possibly NaN) and note says why.
struct BoundValue {
  std::string name;
  double value = 0.0;
  bool valid = true;
  std::string note;
};

/// Explicit minimax lower bound:
/// 2^d r^(d+1) sqrt((d ln(2/sqrt(e)) - 3 ln 2) / (324*3*16*T)).
/// Invalid when the radicand is nonpositive (d <= 10).
BoundValue lower_bound(int d, double r, double total_queries);

/// Two-term Gaussian Quadrature upper bound:
/// 2^(d+1) r^d sigma / sqrt(T) + 2^(d+1) r^(d+5) K / (6*45).
BoundValue gq_upper_bound(int d, double r, double sigma, double total_queries,
                          double K);

/// Exact Gaussian-oracle error law. K = 0 branch:
/// 2^d r^d sigma sqrt(2/pi) / sqrt(T). K > 0 branch uses the erf form with
/// c1 = c^2/48, c2 = c/24, c3 = c/(24 sqrt(2)); c defaults to 8r^5/45, the
/// endpoint of the non-noisy error constant's range.
BoundValue gq_gaussian_error(int d, double r, double sigma,
                             double total_queries, double K,
                             std::optional<double> c = std::nullopt);

/// Two-term Simpson's Rule upper bound with b_i - a_i <= B:
/// 3^(d/2) B^d sigma / (2^(d/2-1) sqrt(T)) + B^(d+7) K / (840*4!).
BoundValue sr_upper_bound(int d, double B, double sigma, double total_queries,
                          double K);

/// KL divergence bound for the T-query coordinate-Bernoulli channels:
/// 16 T delta^2, valid for 0 < delta <= 1/4.
BoundValue kl_bound(double total_queries, double delta);

/// Fano lower bound on identification failure:
/// 1 - (16 T delta^2 + ln 2) / ((d/2) ln(2/sqrt(e))), clamped to [0,1]
/// with the raw value kept in note.
BoundValue fano_lower(int d, double total_queries, double delta);

/// Guaranteed packing-set cardinality (2/sqrt(e))^(d/2).
double packing_cardinality_bound(int d);

}  // namespace quadbound::bounds

#endif
