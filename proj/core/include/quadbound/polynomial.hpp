#ifndef QUADBOUND_POLYNOMIAL_HPP
#define QUADBOUND_POLYNOMIAL_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "quadbound/region.hpp"

namespace quadbound {

using Exponents = std::vector<int>;

/// Sparse multivariate polynomial: exponent vector -> coefficient.
/// Zero coefficients are never stored; all exponent vectors have length dim().
class Polynomial {
 public:
  explicit Polynomial(int dim);
  Polynomial(int dim, std::map<Exponents, double> terms);

  int dim() const { return dim_; }
  const std::map<Exponents, double>& terms() const { return terms_; }

  /// Accumulates coeff onto the term; erases the term if it cancels to zero.
  void add_term(const Exponents& exponents, double coeff);

  double evaluate(std::span<const double> x) const;

  /// Closed-form integral over R: sum of coeff * prod (b^(k+1)-a^(k+1))/(k+1).
  double exact_integral(const Region& region) const;

  int max_per_dim_degree(int i) const;
  bool is_cubic_per_dim() const;

  /// Upper bound K on |d^4/dx_i^4 p(x)| over R, any i. Zero for cubic-per-dim
  /// polynomials; otherwise a coefficient-magnitude bound (possibly loose).
  double fourth_derivative_bound(const Region& region) const;

  /// Full tensor cubic basis (exponents in {0,1,2,3}^d), truncated to at most
  /// max_terms uniformly sampled exponent vectors when 4^d exceeds it.
  /// Coefficients i.i.d. uniform on [-1, 1]; deterministic given (d, seed).
  static Polynomial random_cubic(int d, std::uint64_t seed,
                                 std::size_t max_terms = 200);

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator*(double scalar) const;

  /// Text format: one term per line, "coeff k1 k2 ... kd"; '#' starts a
  /// comment. The dimension is inferred from the first term.
  static Polynomial parse(std::istream& in);
  static Polynomial parse_string(const std::string& text);
  std::string to_string() const;

 private:
  int dim_;
  std::map<Exponents, double> terms_;
};

}  // namespace quadbound

#endif
