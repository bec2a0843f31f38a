#ifndef QUADBOUND_ESTIMATORS_HPP
#define QUADBOUND_ESTIMATORS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quadbound/oracle.hpp"
#include "quadbound/polynomial.hpp"
#include "quadbound/region.hpp"

namespace quadbound {

enum class Method { GaussQuadrature, SimpsonRule };

std::string to_string(Method method);
Method method_from_string(const std::string& name);

/// Quadrature nodes and weights over a region, in deterministic
/// lexicographic order.
struct NodeSet {
  Method method;
  std::vector<std::vector<double>> nodes;
  std::vector<double> weights;
  Region region;
};

/// The 2^d sign-pattern points with coordinates +-r/sqrt(3) over [-r,r]^d,
/// all with weight r^d.
NodeSet gq_nodes(int d, double r);

/// The 3^d endpoint/midpoint grid with weights 4^(m_d(v)) * prod (b_i-a_i)/6,
/// m_d(v) counting midpoint coordinates.
NodeSet sr_nodes(const Region& region);

struct Budget {
  std::uint64_t total = 0;       // T
  std::uint64_t repeats = 0;     // m, queries per node
  std::uint64_t node_count = 0;  // 2^d or 3^d
};

struct IndivisibleBudget : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Splits T into m repeats per node; T must be a positive multiple of
/// node_count. Throws IndivisibleBudget with the nearest valid T suggested.
Budget budget_split(std::uint64_t total_queries, std::uint64_t node_count);

struct EstimateReport {
  Method method;
  double estimate = 0.0;
  Budget budget;
  std::optional<double> exact;
  std::optional<double> abs_error;
  std::map<std::string, double> bound_values;
};

/// Queries each node m times, averages into f_hat, and returns the weighted
/// sum. When exact is supplied, abs_error is filled in.
EstimateReport estimate(const NodeSet& nodes, Oracle& oracle,
                        const Polynomial& f, std::uint64_t repeats,
                        std::optional<double> exact = std::nullopt);

}  // namespace quadbound

#endif
