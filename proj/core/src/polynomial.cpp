#include "quadbound/polynomial.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "quadbound/rng.hpp"

namespace quadbound {

Polynomial::Polynomial(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("polynomial: dimension must be >= 1");
}

Polynomial::Polynomial(int dim, std::map<Exponents, double> terms)
    : Polynomial(dim) {
  for (auto& [exp, coeff] : terms) {
    if (static_cast<int>(exp.size()) != dim) {
      throw std::invalid_argument("polynomial: exponent vector length mismatch");
    }
    for (int k : exp) {
      if (k < 0) throw std::invalid_argument("polynomial: negative exponent");
    }
    if (coeff != 0.0) terms_.emplace(exp, coeff);
  }
}

void Polynomial::add_term(const Exponents& exponents, double coeff) {
  if (static_cast<int>(exponents.size()) != dim_) {
    throw std::invalid_argument("polynomial: exponent vector length mismatch");
  }
  for (int k : exponents) {
    if (k < 0) throw std::invalid_argument("polynomial: negative exponent");
  }
  auto it = terms_.find(exponents);
  if (it == terms_.end()) {
    if (coeff != 0.0) terms_.emplace(exponents, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0.0) terms_.erase(it);
}

double Polynomial::evaluate(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim_) {
    throw std::invalid_argument("polynomial: point dimension mismatch");
  }
  double sum = 0.0;
  for (const auto& [exp, coeff] : terms_) {
    double term = coeff;
    for (int i = 0; i < dim_; ++i) {
      for (int k = 0; k < exp[i]; ++k) term *= x[i];
    }
    sum += term;
  }
  return sum;
}

double Polynomial::exact_integral(const Region& region) const {
  if (region.dim() != dim_) {
    throw std::invalid_argument("polynomial: region dimension mismatch");
  }
  double sum = 0.0;
  for (const auto& [exp, coeff] : terms_) {
    double term = coeff;
    for (int i = 0; i < dim_; ++i) {
      const int k = exp[i];
      term *= (std::pow(region.upper(i), k + 1) -
               std::pow(region.lower(i), k + 1)) /
              (k + 1);
    }
    sum += term;
  }
  return sum;
}

int Polynomial::max_per_dim_degree(int i) const {
  int deg = 0;
  for (const auto& [exp, coeff] : terms_) deg = std::max(deg, exp[i]);
  return deg;
}

bool Polynomial::is_cubic_per_dim() const {
  for (const auto& [exp, coeff] : terms_) {
    for (int k : exp) {
      if (k > 3) return false;
    }
  }
  return true;
}

double Polynomial::fourth_derivative_bound(const Region& region) const {
  if (region.dim() != dim_) {
    throw std::invalid_argument("polynomial: region dimension mismatch");
  }
  if (is_cubic_per_dim()) return 0.0;
  double worst = 0.0;
  for (int i = 0; i < dim_; ++i) {
    double bound = 0.0;
    for (const auto& [exp, coeff] : terms_) {
      const int k = exp[i];
      if (k < 4) continue;
      // |coeff| * k(k-1)(k-2)(k-3) * prod_j max(|a_j|,|b_j|)^(k'_j),
      // with k'_i = k_i - 4.
      double term = std::abs(coeff) * k * (k - 1) * (k - 2) * (k - 3);
      for (int j = 0; j < dim_; ++j) {
        const int kp = (j == i) ? exp[j] - 4 : exp[j];
        const double extent =
            std::max(std::abs(region.lower(j)), std::abs(region.upper(j)));
        term *= std::pow(extent, kp);
      }
      bound += term;
    }
    worst = std::max(worst, bound);
  }
  return worst;
}

Polynomial Polynomial::random_cubic(int d, std::uint64_t seed,
                                    std::size_t max_terms) {
  if (d < 1) throw std::invalid_argument("polynomial: dimension must be >= 1");
  rng::Stream stream(rng::derive_seed(seed, 0x72616e64));

  // 4^d, saturating so high dimensions compare correctly against the cap.
  double basis_size = std::pow(4.0, d);
  Polynomial p(d);

  if (basis_size <= static_cast<double>(max_terms)) {
    // Full tensor cubic basis in lexicographic order.
    Exponents exp(d, 0);
    while (true) {
      p.add_term(exp, stream.uniform(-1.0, 1.0));
      int i = d - 1;
      while (i >= 0 && exp[i] == 3) exp[i--] = 0;
      if (i < 0) break;
      ++exp[i];
    }
  } else {
    std::set<Exponents> chosen;
    while (chosen.size() < max_terms) {
      Exponents exp(d);
      for (int i = 0; i < d; ++i) exp[i] = static_cast<int>(stream.below(4));
      if (chosen.insert(exp).second) {
        p.add_term(exp, stream.uniform(-1.0, 1.0));
      }
    }
  }
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  if (other.dim_ != dim_) {
    throw std::invalid_argument("polynomial: dimension mismatch in addition");
  }
  Polynomial out = *this;
  for (const auto& [exp, coeff] : other.terms_) out.add_term(exp, coeff);
  return out;
}

Polynomial Polynomial::operator*(double scalar) const {
  Polynomial out(dim_);
  if (scalar == 0.0) return out;
  for (const auto& [exp, coeff] : terms_) out.terms_[exp] = coeff * scalar;
  return out;
}

Polynomial Polynomial::parse(std::istream& in) {
  std::string line;
  std::map<Exponents, double> terms;
  int dim = -1;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    double coeff;
    if (!(fields >> coeff)) continue;  // blank or comment-only line
    Exponents exp;
    int k;
    while (fields >> k) exp.push_back(k);
    if (dim < 0) {
      dim = static_cast<int>(exp.size());
      if (dim < 1) {
        throw std::invalid_argument("polynomial: term without exponents");
      }
    } else if (static_cast<int>(exp.size()) != dim) {
      throw std::invalid_argument("polynomial: inconsistent term dimension");
    }
    terms[exp] += coeff;
  }
  if (dim < 1) throw std::invalid_argument("polynomial: no terms found");
  return Polynomial(dim, std::move(terms));
}

Polynomial Polynomial::parse_string(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

std::string Polynomial::to_string() const {
  std::string out;
  char buf[64];
  for (const auto& [exp, coeff] : terms_) {
    std::snprintf(buf, sizeof(buf), "%.17g", coeff);
    out += buf;
    for (int k : exp) {
      std::snprintf(buf, sizeof(buf), " %d", k);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace quadbound
