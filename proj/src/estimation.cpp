#include "telescope/estimation.hpp"

#include "telescope/golden_section.hpp"
#include "telescope/normal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include <fmt/format.h>

namespace telescope::inference {

std::string_view method_name(Method method) {
  switch (method) {
    case Method::Mom:
      return "MOM";
    case Method::MleClosed:
      return "MLE_CLOSED";
    case Method::MleNumeric:
      return "MLE_NUMERIC";
  }
  return "unknown";
}

namespace {

void require_nonempty(const SampleBatch& batch) {
  if (batch.values.empty()) {
    throw std::invalid_argument("empty sample batch");
  }
}

void require_at_least(const SampleBatch& batch, std::int64_t lowest, std::string_view family) {
  require_nonempty(batch);
  const auto smallest = *std::min_element(batch.values.begin(), batch.values.end());
  if (smallest < lowest) {
    throw std::invalid_argument(
        fmt::format("{} observations must be >= {}, found {}", family, lowest, smallest));
  }
}

// Counts per distinct value plus the total; enough for either log-likelihood.
struct Summary {
  std::map<std::int64_t, std::int64_t> counts;
  double n = 0.0;
  double total = 0.0;
  double log_factorial_total = 0.0;
  double log_total = 0.0;
};

Summary summarize(const SampleBatch& batch) {
  Summary s;
  for (const auto x : batch.values) {
    ++s.counts[x];
  }
  for (const auto& [x, c] : s.counts) {
    const auto xd = static_cast<double>(x);
    const auto cd = static_cast<double>(c);
    s.n += cd;
    s.total += cd * xd;
    s.log_factorial_total += cd * std::lgamma(xd + 1.0);
    if (x > 0) {
      s.log_total += cd * std::log(xd);
    }
  }
  return s;
}

double tpoisson_log_likelihood(const Summary& s, double theta) {
  double ll = s.total * std::log(theta) - s.log_factorial_total;
  for (const auto& [x, c] : s.counts) {
    ll += static_cast<double>(c) * std::log1p(-theta / (static_cast<double>(x) + 1.0));
  }
  return ll;
}

double tgeometric_estimate(const SampleBatch& batch, double& mean) {
  require_at_least(batch, 1, "tgeometric");
  mean = batch.mean();
  if (!(mean > 1.0)) {
    throw DegenerateSampleError(
        "tgeometric sample with every observation equal to 1: the likelihood increases without "
        "bound as theta -> infinity");
  }
  return 1.0 + 2.0 / (mean - 1.0);
}

}  // namespace

EstimationResult mom_tpoisson_from_mean(double sample_mean) {
  if (!(sample_mean >= 0.0) || !std::isfinite(sample_mean)) {
    throw std::invalid_argument(fmt::format("tpoisson sample mean must be >= 0, got {}", sample_mean));
  }
  const double raw = std::log1p(sample_mean);
  const bool clamped = raw >= 1.0;
  return {clamped ? 1.0 : raw, Method::Mom, clamped, sample_mean};
}

EstimationResult mom_tpoisson(const SampleBatch& batch) {
  require_at_least(batch, 0, "tpoisson");
  return mom_tpoisson_from_mean(batch.mean());
}

double log_likelihood_tpoisson(const SampleBatch& batch, double theta) {
  require_at_least(batch, 0, "tpoisson");
  if (!(theta > 0.0 && theta <= 1.0)) {
    throw std::invalid_argument(fmt::format("tpoisson requires 0 < theta <= 1, got {}", theta));
  }
  return tpoisson_log_likelihood(summarize(batch), theta);
}

EstimationResult mle_tpoisson_numeric(const SampleBatch& batch, double tol) {
  require_at_least(batch, 0, "tpoisson");
  if (!(tol > 0.0)) {
    throw std::invalid_argument("mle_tpoisson_numeric: tol must be positive");
  }
  const Summary s = summarize(batch);
  const auto ll = [&s](double theta) { return tpoisson_log_likelihood(s, theta); };

  const auto grid = [](int i) { return static_cast<double>(i) / kTPoissonGridPoints; };
  int best = 1;
  double best_value = ll(grid(1));
  for (int i = 2; i <= kTPoissonGridPoints; ++i) {
    const double value = ll(grid(i));
    if (value > best_value) {
      best = i;
      best_value = value;
    }
  }

  const double lo = best == 1 ? kTPoissonThetaFloor : grid(best - 1);
  const double hi = best == kTPoissonGridPoints ? 1.0 : grid(best + 1);
  Maximum refined = golden_section_maximize(ll, lo, hi, tol);
  // No concavity assumption: never return worse than the grid optimum.
  if (!(refined.value >= best_value)) {
    refined = {grid(best), best_value};
  }
  return {refined.argmax, Method::MleNumeric, false, s.total / s.n};
}

EstimationResult mle_tgeometric(const SampleBatch& batch) {
  double mean = 0.0;
  const double theta = tgeometric_estimate(batch, mean);
  return {theta, Method::MleClosed, false, mean};
}

EstimationResult mom_tgeometric(const SampleBatch& batch) {
  double mean = 0.0;
  const double theta = tgeometric_estimate(batch, mean);
  return {theta, Method::Mom, false, mean};
}

double log_likelihood_tgeometric(const SampleBatch& batch, double theta) {
  require_at_least(batch, 1, "tgeometric");
  if (!(theta > 1.0)) {
    throw std::invalid_argument(fmt::format("tgeometric requires theta > 1, got {}", theta));
  }
  const Summary s = summarize(batch);
  return 2.0 * s.n * std::log(theta - 1.0) + s.log_total - (s.n + s.total) * std::log(theta);
}

double score_tgeometric(const SampleBatch& batch, double theta) {
  require_at_least(batch, 1, "tgeometric");
  if (!(theta > 1.0)) {
    throw std::invalid_argument(fmt::format("tgeometric requires theta > 1, got {}", theta));
  }
  const Summary s = summarize(batch);
  return 2.0 * s.n / (theta - 1.0) - (s.n + s.total) / theta;
}

double k_theta(double theta) {
  if (!(theta > 0.0 && theta < 1.0)) {
    throw std::invalid_argument(fmt::format("k_theta requires 0 < theta < 1, got {}", theta));
  }
  const double e_theta = std::exp(theta);
  const double spread = 2.0 * theta + 1.0 - e_theta;
  if (!(spread > 0.0)) {
    throw std::domain_error(fmt::format("variance factor 2 theta + 1 - e^theta = {} is not positive", spread));
  }
  return (std::numbers::e - e_theta) / (std::exp(theta / 2.0) * std::sqrt(spread));
}

double mom_coverage_probability(double theta, int n) {
  if (n < 1) {
    throw std::invalid_argument("mom_coverage_probability: n must be >= 1");
  }
  return standard_normal_cdf(std::sqrt(static_cast<double>(n)) * k_theta(theta));
}

}  // namespace telescope::inference
