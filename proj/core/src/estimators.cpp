#include "quadbound/estimators.hpp"

#include <cmath>
#include <string>

namespace quadbound {

std::string to_string(Method method) {
  return method == Method::GaussQuadrature ? "gq" : "sr";
}

Method method_from_string(const std::string& name) {
  if (name == "gq") return Method::GaussQuadrature;
  if (name == "sr") return Method::SimpsonRule;
  throw std::invalid_argument("estimators: unknown method: " + name);
}

NodeSet gq_nodes(int d, double r) {
  if (d < 1) throw std::invalid_argument("estimators: dimension must be >= 1");
  if (!(r > 0.0)) throw std::invalid_argument("estimators: r must be > 0");
  const double coordinate = r / std::sqrt(3.0);
  const double weight = std::pow(r, d);
  const std::uint64_t count = std::uint64_t{1} << d;

  NodeSet set{Method::GaussQuadrature, {}, {}, Region::cube(d, r)};
  set.nodes.reserve(count);
  set.weights.assign(count, weight);
  // Lexicographic over sign patterns, minus before plus, first coordinate
  // most significant.
  for (std::uint64_t pattern = 0; pattern < count; ++pattern) {
    std::vector<double> node(d);
    for (int i = 0; i < d; ++i) {
      const bool plus = (pattern >> (d - 1 - i)) & 1;
      node[i] = plus ? coordinate : -coordinate;
    }
    set.nodes.push_back(std::move(node));
  }
  return set;
}

NodeSet sr_nodes(const Region& region) {
  const int d = region.dim();
  std::uint64_t count = 1;
  for (int i = 0; i < d; ++i) count *= 3;

  double base_weight = 1.0;
  for (int i = 0; i < d; ++i) base_weight *= region.width(i) / 6.0;

  NodeSet set{Method::SimpsonRule, {}, {}, region};
  set.nodes.reserve(count);
  set.weights.reserve(count);
  std::vector<int> grid(d, 0);  // 0 = a_i, 1 = midpoint, 2 = b_i
  while (true) {
    std::vector<double> node(d);
    int midpoints = 0;
    for (int i = 0; i < d; ++i) {
      switch (grid[i]) {
        case 0: node[i] = region.lower(i); break;
        case 1:
          node[i] = (region.lower(i) + region.upper(i)) / 2.0;
          ++midpoints;
          break;
        default: node[i] = region.upper(i); break;
      }
    }
    set.nodes.push_back(std::move(node));
    set.weights.push_back(std::pow(4.0, midpoints) * base_weight);

    int i = d - 1;
    while (i >= 0 && grid[i] == 2) grid[i--] = 0;
    if (i < 0) break;
    ++grid[i];
  }
  return set;
}

Budget budget_split(std::uint64_t total_queries, std::uint64_t node_count) {
  if (node_count == 0) {
    throw std::invalid_argument("estimators: node count must be >= 1");
  }
  if (total_queries < node_count) {
    throw IndivisibleBudget("estimators: T=" + std::to_string(total_queries) +
                            " is below the node count " +
                            std::to_string(node_count));
  }
  if (total_queries % node_count != 0) {
    const std::uint64_t lower = total_queries / node_count * node_count;
    const std::uint64_t upper = lower + node_count;
    const std::uint64_t nearest =
        (total_queries - lower <= upper - total_queries) ? lower : upper;
    throw IndivisibleBudget(
        "estimators: T=" + std::to_string(total_queries) +
        " is not a multiple of the node count " + std::to_string(node_count) +
        "; nearest valid T is " + std::to_string(nearest));
  }
  return Budget{total_queries, total_queries / node_count, node_count};
}

EstimateReport estimate(const NodeSet& nodes, Oracle& oracle,
                        const Polynomial& f, std::uint64_t repeats,
                        std::optional<double> exact) {
  if (repeats < 1) {
    throw std::invalid_argument("estimators: repeats must be >= 1");
  }
  if (f.dim() != nodes.region.dim()) {
    throw std::invalid_argument("estimators: polynomial/region dimension mismatch");
  }
  double sum = 0.0;
  for (std::size_t v = 0; v < nodes.nodes.size(); ++v) {
    double f_hat = 0.0;
    for (std::uint64_t q = 0; q < repeats; ++q) {
      f_hat += oracle.query(f, nodes.nodes[v]);
    }
    f_hat /= static_cast<double>(repeats);
    sum += nodes.weights[v] * f_hat;
  }

  EstimateReport report;
  report.method = nodes.method;
  report.estimate = sum;
  report.budget = Budget{repeats * nodes.nodes.size(), repeats,
                         nodes.nodes.size()};
  report.exact = exact;
  if (exact) report.abs_error = std::abs(sum - *exact);
  return report;
}

}  // namespace quadbound
