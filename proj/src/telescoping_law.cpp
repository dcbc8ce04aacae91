#include "telescope/telescoping_law.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

namespace telescope::laws {

std::string_view family_name(Family family) {
  switch (family) {
    case Family::Zeta2:
      return "zeta2";
    case Family::TPoisson:
      return "tpoisson";
    case Family::TGeometric:
      return "tgeometric";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  if (name == "zeta2") return Family::Zeta2;
  if (name == "tpoisson") return Family::TPoisson;
  if (name == "tgeometric") return Family::TGeometric;
  throw std::invalid_argument(fmt::format("unknown law '{}'", name));
}

TelescopingLaw zeta2_law() { return TelescopingLaw(Family::Zeta2, 0.0); }

TelescopingLaw tpoisson_law(double theta) {
  if (!(theta > 0.0 && theta <= 1.0)) {
    throw std::invalid_argument(fmt::format("tpoisson requires 0 < theta <= 1, got {}", theta));
  }
  return TelescopingLaw(Family::TPoisson, theta);
}

TelescopingLaw tgeometric_law(double theta) {
  if (!(theta > 1.0) || !std::isfinite(theta)) {
    throw std::invalid_argument(fmt::format("tgeometric requires theta > 1, got {}", theta));
  }
  return TelescopingLaw(Family::TGeometric, theta);
}

TelescopingLaw make_law(Family family, double theta) {
  switch (family) {
    case Family::Zeta2:
      return zeta2_law();
    case Family::TPoisson:
      return tpoisson_law(theta);
    case Family::TGeometric:
      return tgeometric_law(theta);
  }
  throw std::invalid_argument("unknown family");
}

std::int64_t TelescopingLaw::start() const { return family_ == Family::TPoisson ? 0 : 1; }

std::string TelescopingLaw::label() const {
  if (family_ == Family::Zeta2) {
    return "zeta2";
  }
  return fmt::format("{}(theta={})", family_name(family_), theta_);
}

void TelescopingLaw::require_in_support(std::int64_t x) const {
  if (x < start()) {
    throw std::out_of_range(fmt::format("{}: x = {} below support start {}", label(), x, start()));
  }
}

namespace {

// theta^x / x! by running product; stops once the product underflows.
double poisson_term(double theta, std::int64_t x) {
  double q = 1.0;
  for (std::int64_t j = 1; j <= x && q > 0.0; ++j) {
    q *= theta / static_cast<double>(j);
  }
  return q;
}

}  // namespace

double TelescopingLaw::tail(std::int64_t x) const {
  if (x <= start()) {
    return 1.0;
  }
  const auto xd = static_cast<double>(x);
  switch (family_) {
    case Family::Zeta2:
      return 1.0 / xd;
    case Family::TPoisson:
      return poisson_term(theta_, x);
    case Family::TGeometric:
      return ((theta_ - 1.0) * xd + 1.0) * std::pow(theta_, -xd);
  }
  return 0.0;
}

double TelescopingLaw::pmf(std::int64_t x) const {
  require_in_support(x);
  const auto xd = static_cast<double>(x);
  // Each case is q(x) - q(x + 1) rearranged to avoid cancellation.
  switch (family_) {
    case Family::Zeta2:
      return 1.0 / (xd * (xd + 1.0));
    case Family::TPoisson:
      return poisson_term(theta_, x) * (1.0 - theta_ / (xd + 1.0));
    case Family::TGeometric:
      return (theta_ - 1.0) * (theta_ - 1.0) * xd * std::pow(theta_, -(xd + 1.0));
  }
  return 0.0;
}

double TelescopingLaw::cdf(std::int64_t x) const {
  require_in_support(x);
  return 1.0 - tail(x + 1);
}

std::int64_t TelescopingLaw::quantile(double u) const {
  if (!(u >= 0.0 && u < 1.0)) {
    throw std::out_of_range(fmt::format("quantile: u = {} outside [0, 1)", u));
  }
  const std::int64_t lo_support = start();
  if (family_ == Family::Zeta2) {
    auto x = static_cast<std::int64_t>(std::ceil(1.0 / (1.0 - u))) - 1;
    x = std::max<std::int64_t>(x, 1);
    // The closed form can land one step off when 1 / (1 - u) rounds.
    while (x > 1 && cdf(x - 1) >= u) --x;
    while (cdf(x) < u) ++x;
    return x;
  }
  if (cdf(lo_support) >= u) {
    return lo_support;
  }
  // Invariant: cdf(lo) < u <= cdf(hi).
  std::int64_t lo = lo_support;
  std::int64_t step = 1;
  std::int64_t hi = lo_support + step;
  while (cdf(hi) < u) {
    lo = hi;
    step *= 2;
    hi = lo_support + step;
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (cdf(mid) >= u) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

Moment TelescopingLaw::mean() const {
  switch (family_) {
    case Family::Zeta2:
      return Divergent{};
    case Family::TPoisson:
      return std::expm1(theta_);
    case Family::TGeometric:
      return 1.0 + 2.0 / (theta_ - 1.0);
  }
  return Divergent{};
}

Moment TelescopingLaw::variance() const {
  switch (family_) {
    case Family::Zeta2:
      return Divergent{};
    case Family::TPoisson: {
      const double e = std::exp(theta_);
      return e * (2.0 * theta_ + 1.0 - e);
    }
    case Family::TGeometric:
      return 2.0 * theta_ / ((theta_ - 1.0) * (theta_ - 1.0));
  }
  return Divergent{};
}

double TelescopingLaw::mgf(double t) const {
  if (t == 0.0) {
    return 1.0;
  }
  switch (family_) {
    case Family::Zeta2: {
      if (t > 0.0) {
        throw std::domain_error(fmt::format("zeta2 mgf requires t <= 0, got {}", t));
      }
      // sum z^x / (x (x + 1)) = 1 + (1 - z) ln(1 - z) / z with z = e^t.
      const double z = std::exp(t);
      if (z > 0.5) {
        return 1.0 + (1.0 - z) * std::log1p(-z) / z;
      }
      // The closed form cancels to z/2 + ... for small z; the power series
      // converges geometrically there.
      double sum = 0.0;
      double zx = z;
      for (int x = 1; x < 200 && zx > 0.0; ++x) {
        sum += zx / (static_cast<double>(x) * (x + 1.0));
        zx *= z;
      }
      return sum;
    }
    case Family::TPoisson:
      return -std::expm1(-t) * std::exp(theta_ * std::exp(t)) + std::exp(-t);
    case Family::TGeometric: {
      if (!(t < std::log(theta_))) {
        throw std::domain_error(
            fmt::format("tgeometric mgf requires t < ln(theta) = {}, got {}", std::log(theta_), t));
      }
      const double et = std::exp(t);
      const double ratio = (theta_ - 1.0) / (theta_ - et);
      return ratio * ratio * et;
    }
  }
  return 0.0;
}

namespace {

// Sum of w(x) pmf(x) for x = start, start + 1, ... stopped once a bound on
// the remainder drops below tol.  log_dominant(x) is the log of a function
// g(x) >= w(x) pmf(x); ratio_bound(y) bounds g(x + 1) / g(x) for all x >= y.
template <typename Weight, typename LogDominant, typename RatioBound>
double bounded_series(const TelescopingLaw& law, double tol, Weight weight,
                      LogDominant log_dominant, RatioBound ratio_bound) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("series tolerance must be positive");
  }
  double sum = 0.0;
  double compensation = 0.0;
  const std::int64_t first = law.start();
  for (std::int64_t x = first; x < first + kMaxSeriesTerms; ++x) {
    const double term = weight(x) * law.pmf(x);
    // Neumaier summation
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      compensation += (sum - t) + term;
    } else {
      compensation += (term - t) + sum;
    }
    sum = t;

    const double rho = ratio_bound(x + 1);
    if (rho < 1.0) {
      const double remainder = std::exp(log_dominant(x + 1)) / (1.0 - rho);
      if (remainder < tol) {
        return sum + compensation;
      }
    }
  }
  throw std::runtime_error(fmt::format("{}: series remainder above {} after {} terms",
                                       law.label(), tol, kMaxSeriesTerms));
}

double log_factorial(std::int64_t x) { return std::lgamma(static_cast<double>(x) + 1.0); }

}  // namespace

double mgf_series(const TelescopingLaw& law, double t, double tail_tol) {
  const double theta = law.theta();
  const auto weight = [t](std::int64_t x) { return std::exp(t * static_cast<double>(x)); };
  switch (law.family()) {
    case Family::Zeta2: {
      if (t > 0.0) {
        throw std::domain_error(fmt::format("zeta2 mgf series diverges for t = {} > 0", t));
      }
      if (t == 0.0) {
        // Partial sums equal 1 - 1/(H + 1); the remainder 1/(H + 1) is exact.
        return bounded_series(
            law, tail_tol, weight,
            [](std::int64_t x) { return -std::log(static_cast<double>(x)); },
            [](std::int64_t) { return 0.0; });
      }
      return bounded_series(
          law, tail_tol, weight,
          [t](std::int64_t x) {
            const auto xd = static_cast<double>(x);
            return t * xd - std::log(xd * (xd + 1.0));
          },
          [t](std::int64_t) { return std::exp(t); });
    }
    case Family::TPoisson: {
      // e^{tx} pmf(x) <= (theta e^t)^x / x!
      const double log_rate = std::log(theta) + t;
      return bounded_series(
          law, tail_tol, weight,
          [log_rate](std::int64_t x) { return static_cast<double>(x) * log_rate - log_factorial(x); },
          [log_rate](std::int64_t y) { return std::exp(log_rate) / (static_cast<double>(y) + 1.0); });
    }
    case Family::TGeometric: {
      if (!(t < std::log(theta))) {
        throw std::domain_error(
            fmt::format("tgeometric mgf series diverges for t = {} >= ln(theta)", t));
      }
      // e^{tx} pmf(x) = (theta - 1)^2 / theta * x r^x with r = e^t / theta
      const double log_r = t - std::log(theta);
      const double log_c = 2.0 * std::log(theta - 1.0) - std::log(theta);
      return bounded_series(
          law, tail_tol, weight,
          [=](std::int64_t x) {
            const auto xd = static_cast<double>(x);
            return log_c + std::log(xd) + xd * log_r;
          },
          [log_r](std::int64_t y) {
            const auto yd = static_cast<double>(y);
            return (yd + 1.0) / yd * std::exp(log_r);
          });
    }
  }
  throw std::invalid_argument("unknown family");
}

double raw_moment_series(const TelescopingLaw& law, int order, double tail_tol) {
  if (order < 0) {
    throw std::invalid_argument("moment order must be nonnegative");
  }
  const double theta = law.theta();
  const double k = order;
  const auto weight = [k](std::int64_t x) { return std::pow(static_cast<double>(x), k); };
  switch (law.family()) {
    case Family::Zeta2:
      if (order >= 1) {
        throw std::domain_error("zeta2 has no finite moments of order >= 1");
      }
      return bounded_series(
          law, tail_tol, weight, [](std::int64_t x) { return -std::log(static_cast<double>(x)); },
          [](std::int64_t) { return 0.0; });
    case Family::TPoisson: {
      // x^k pmf(x) <= x^k theta^x / x!
      const double log_theta = std::log(theta);
      return bounded_series(
          law, tail_tol, weight,
          [=](std::int64_t x) {
            const auto xd = static_cast<double>(x);
            return k * std::log(xd) + xd * log_theta - log_factorial(x);
          },
          [=](std::int64_t y) {
            const auto yd = std::max(static_cast<double>(y), 1.0);
            return std::pow((yd + 1.0) / yd, k) * theta / (yd + 1.0);
          });
    }
    case Family::TGeometric: {
      const double log_c = 2.0 * std::log(theta - 1.0) - std::log(theta);
      const double log_theta = std::log(theta);
      return bounded_series(
          law, tail_tol, weight,
          [=](std::int64_t x) {
            const auto xd = static_cast<double>(x);
            return log_c + (k + 1.0) * std::log(xd) - xd * log_theta;
          },
          [=](std::int64_t y) {
            const auto yd = static_cast<double>(y);
            return std::pow((yd + 1.0) / yd, k + 1.0) / theta;
          });
    }
  }
  throw std::invalid_argument("unknown family");
}

std::int64_t series_horizon(const TelescopingLaw& law, double tail_tol) {
  for (std::int64_t h = law.start(); h < law.start() + kMaxSeriesTerms; ++h) {
    if (law.tail(h + 1) < tail_tol) {
      return h;
    }
  }
  throw std::runtime_error(
      fmt::format("{}: tail stays above {} for {} terms", law.label(), tail_tol, kMaxSeriesTerms));
}

double SampleBatch::mean() const {
  if (values.empty()) {
    throw std::invalid_argument("mean of an empty batch");
  }
  long double total = 0;
  for (const auto v : values) {
    total += static_cast<long double>(v);
  }
  return static_cast<double>(total / static_cast<long double>(values.size()));
}

std::int64_t draw(const TelescopingLaw& law, Rng& rng) {
  // u = 0 would return start even when it carries no mass (tpoisson(1)).
  double u = rng.uniform();
  while (u == 0.0) {
    u = rng.uniform();
  }
  return law.quantile(u);
}

SampleBatch sample(const TelescopingLaw& law, std::uint64_t seed, std::size_t count) {
  if (count == 0) {
    throw std::invalid_argument("sample count must be at least 1");
  }
  Rng rng(seed);
  SampleBatch batch{law, seed, {}};
  batch.values.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    batch.values.push_back(draw(law, rng));
  }
  return batch;
}

double poisson_pmf(double lambda, std::int64_t x) {
  if (!(lambda > 0.0) || x < 0) {
    throw std::invalid_argument("poisson_pmf: requires lambda > 0 and x >= 0");
  }
  return std::exp(-lambda) * poisson_term(lambda, x);
}

std::partial_ordering poisson_comparison(double theta, std::int64_t x) {
  if (!(theta > 0.0 && theta < 1.0)) {
    throw std::invalid_argument(fmt::format("poisson_comparison requires 0 < theta < 1, got {}", theta));
  }
  return tpoisson_law(theta).pmf(x) <=> poisson_pmf(theta, x);
}

}  // namespace telescope::laws
