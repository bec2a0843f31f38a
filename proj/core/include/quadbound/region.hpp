#ifndef QUADBOUND_REGION_HPP
#define QUADBOUND_REGION_HPP

#include <string>
#include <utility>
#include <vector>

namespace quadbound {

/// Axis-aligned hyperrectangle [a_1,b_1] x ... x [a_d,b_d].
class Region {
 public:
  explicit Region(std::vector<std::pair<double, double>> bounds);

  /// The symmetric cube [-r, r]^d.
  static Region cube(int d, double r);

  int dim() const { return static_cast<int>(bounds_.size()); }
  double lower(int i) const { return bounds_[i].first; }
  double upper(int i) const { return bounds_[i].second; }
  double width(int i) const { return bounds_[i].second - bounds_[i].first; }
  const std::vector<std::pair<double, double>>& bounds() const {
    return bounds_;
  }

  double volume() const;
  double max_width() const;

  bool is_cube(double r) const;
  /// Radius r such that the region equals [-r, r]^d, if any.
  bool cube_radius(double& r) const;

  /// Parses "a1,b1;a2,b2;..." or "cube:d:r".
  static Region parse(const std::string& text);
  std::string to_string() const;

 private:
  std::vector<std::pair<double, double>> bounds_;
};

}  // namespace quadbound

#endif
