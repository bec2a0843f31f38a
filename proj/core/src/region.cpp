#include "quadbound/region.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace quadbound {

Region::Region(std::vector<std::pair<double, double>> bounds)
    : bounds_(std::move(bounds)) {
  if (bounds_.empty()) {
    throw std::invalid_argument("region: dimension must be >= 1");
  }
  for (const auto& [a, b] : bounds_) {
    if (!(a < b)) {
      throw std::invalid_argument("region: requires a_i < b_i");
    }
  }
}

Region Region::cube(int d, double r) {
  if (d < 1) throw std::invalid_argument("region: dimension must be >= 1");
  if (!(r > 0.0)) throw std::invalid_argument("region: cube radius must be > 0");
  return Region(std::vector<std::pair<double, double>>(d, {-r, r}));
}

double Region::volume() const {
  double v = 1.0;
  for (const auto& [a, b] : bounds_) v *= (b - a);
  return v;
}

double Region::max_width() const {
  double w = 0.0;
  for (const auto& [a, b] : bounds_) w = std::max(w, b - a);
  return w;
}

bool Region::is_cube(double r) const {
  if (!(r > 0.0)) return false;
  for (const auto& [a, b] : bounds_) {
    if (a != -r || b != r) return false;
  }
  return true;
}

bool Region::cube_radius(double& r) const {
  const double candidate = bounds_[0].second;
  if (is_cube(candidate)) {
    r = candidate;
    return true;
  }
  return false;
}

Region Region::parse(const std::string& text) {
  if (text.rfind("cube:", 0) == 0) {
    int d = 0;
    double r = 0.0;
    if (std::sscanf(text.c_str(), "cube:%d:%lf", &d, &r) != 2) {
      throw std::invalid_argument("region: malformed cube spec: " + text);
    }
    return cube(d, r);
  }
  std::vector<std::pair<double, double>> bounds;
  std::istringstream in(text);
  std::string axis;
  while (std::getline(in, axis, ';')) {
    if (axis.empty()) continue;
    double a = 0.0, b = 0.0;
    if (std::sscanf(axis.c_str(), "%lf,%lf", &a, &b) != 2) {
      throw std::invalid_argument("region: malformed interval: " + axis);
    }
    bounds.emplace_back(a, b);
  }
  return Region(std::move(bounds));
}

std::string Region::to_string() const {
  double r = 0.0;
  if (cube_radius(r)) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "cube:%d:%.17g", dim(), r);
    return buf;
  }
  std::string out;
  char buf[80];
  for (std::size_t i = 0; i < bounds_.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%s%.17g,%.17g", i ? ";" : "",
                  bounds_[i].first, bounds_[i].second);
    out += buf;
  }
  return out;
}

}  // namespace quadbound
