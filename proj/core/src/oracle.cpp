#include "quadbound/oracle.hpp"

#include <cmath>

namespace quadbound {

std::string to_string(OracleKind kind) {
  switch (kind) {
    case OracleKind::NoiseFree: return "none";
    case OracleKind::Gaussian: return "gaussian";
    case OracleKind::CoordinateBernoulli: return "bernoulli";
  }
  return "unknown";
}

OracleKind oracle_kind_from_string(const std::string& name) {
  if (name == "none" || name == "noise-free") return OracleKind::NoiseFree;
  if (name == "gaussian") return OracleKind::Gaussian;
  if (name == "bernoulli" || name == "coordinate-bernoulli") {
    return OracleKind::CoordinateBernoulli;
  }
  throw std::invalid_argument("oracle: unknown kind: " + name);
}

void OracleSpec::validate() const {
  if (sigma < 0.0) throw std::invalid_argument("oracle: sigma must be >= 0");
  switch (kind) {
    case OracleKind::NoiseFree:
      break;
    case OracleKind::Gaussian:
      if (!(sigma > 0.0)) {
        throw std::invalid_argument("oracle: gaussian requires sigma > 0");
      }
      break;
    case OracleKind::CoordinateBernoulli: {
      if (alpha.empty()) {
        throw std::invalid_argument("oracle: bernoulli requires alpha");
      }
      for (int a : alpha) {
        if (a != 1 && a != -1) {
          throw std::invalid_argument("oracle: alpha entries must be +-1");
        }
      }
      if (!(delta > 0.0) || delta > 0.25) {
        throw std::invalid_argument("oracle: delta must be in (0, 1/4]");
      }
      if (!(r > 0.0)) {
        throw std::invalid_argument("oracle: bernoulli requires r > 0");
      }
      break;
    }
  }
}

std::vector<std::string> OracleSpec::warnings() const {
  std::vector<std::string> out;
  if (kind == OracleKind::CoordinateBernoulli && r > sigma) {
    // sup|h_i| = 2r <= 2*sigma still allows r <= sigma only; the weaker
    // sup|x| <= 2*sigma side condition may hold on its own.
    out.push_back(
        "variance feasibility r <= sigma does not hold; declared variance "
        "bound sigma^2 may be exceeded");
  }
  return out;
}

void QueryLog::record(std::span<const double> x) {
  ++count_;
  if (track_points_) {
    ++per_point_[std::vector<double>(x.begin(), x.end())];
  }
}

Oracle::Oracle(OracleSpec spec)
    : spec_(std::move(spec)), stream_(rng::derive_seed(spec_.seed, 0x6f7261)) {
  spec_.validate();
}

double Oracle::query(const Polynomial& f, std::span<const double> x) {
  if (static_cast<int>(x.size()) != f.dim()) {
    throw std::invalid_argument("oracle: point dimension mismatch");
  }
  if (budget_ && log_.count() >= *budget_) {
    throw BudgetExhausted("oracle: query budget exhausted");
  }
  log_.record(x);
  switch (spec_.kind) {
    case OracleKind::NoiseFree:
      return f.evaluate(x);
    case OracleKind::Gaussian:
      return f.evaluate(x) + spec_.sigma * stream_.normal();
    case OracleKind::CoordinateBernoulli: {
      const int d = static_cast<int>(spec_.alpha.size());
      if (static_cast<int>(x.size()) != d) {
        throw std::invalid_argument("oracle: alpha dimension mismatch");
      }
      const auto i = static_cast<std::size_t>(stream_.below(d));
      const double p = 0.5 + spec_.alpha[i] * spec_.delta;
      const double half = (x[i] + spec_.r) / 2.0;
      return stream_.bernoulli(p) ? half : -half;
    }
  }
  return 0.0;  // unreachable
}

double bernoulli_oracle_mean(std::span<const int> alpha, double delta,
                             double r, std::span<const double> x) {
  if (alpha.size() != x.size()) {
    throw std::invalid_argument("oracle: alpha/point dimension mismatch");
  }
  const double d = static_cast<double>(alpha.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    sum += alpha[i] * (x[i] + r);
  }
  return delta / d * sum;
}

double bernoulli_oracle_variance_bound(double r, int d) {
  if (!(r > 0.0)) throw std::invalid_argument("oracle: r must be > 0");
  if (d < 1) throw std::invalid_argument("oracle: dimension must be >= 1");
  // (1/4) sup_{z in [-r,r]} (z + r)^2 = r^2, independent of d.
  return r * r;
}

}  // namespace quadbound
