#pragma once

#include "telescope/telescoping_law.hpp"

#include <stdexcept>
#include <string_view>

namespace telescope::inference {

using laws::SampleBatch;

enum class Method { Mom, MleClosed, MleNumeric };

std::string_view method_name(Method method);

struct EstimationResult {
  double theta_hat = 0.0;
  Method method = Method::Mom;
  bool clamped = false;
  double sample_mean = 0.0;
};

/// The sample admits no finite estimate (e.g. an all-ones tgeometric batch,
/// whose likelihood increases without bound as theta grows).
class DegenerateSampleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// theta = min(ln(mean + 1), 1); `clamped` is set when the minimum binds.
EstimationResult mom_tpoisson(const SampleBatch& batch);
EstimationResult mom_tpoisson_from_mean(double sample_mean);

/// sum_i ln(theta^x_i / x_i! - theta^{x_i+1} / (x_i+1)!); -inf where a mass vanishes.
double log_likelihood_tpoisson(const SampleBatch& batch, double theta);

inline constexpr int kTPoissonGridPoints = 200;
/// Lower end of the search bracket below the first grid point.
inline constexpr double kTPoissonThetaFloor = 1e-9;

/// Numerical MLE over (0, 1]: grid scan at theta = i / 200 followed by golden
/// section on the two grid cells around the best grid point.
EstimationResult mle_tpoisson_numeric(const SampleBatch& batch, double tol = 1e-10);

/// theta = 1 + 2 / (mean - 1) for mean > 1; shared by MOM and MLE, which agree exactly.
/// Throws DegenerateSampleError when every observation equals 1.
EstimationResult mle_tgeometric(const SampleBatch& batch);
EstimationResult mom_tgeometric(const SampleBatch& batch);

/// 2n ln(theta - 1) + sum ln x_i - (n + sum x_i) ln theta.
double log_likelihood_tgeometric(const SampleBatch& batch, double theta);
/// d/dtheta of the log-likelihood: 2n / (theta - 1) - (n + sum x_i) / theta.
double score_tgeometric(const SampleBatch& batch, double theta);

/// (e - e^theta) / (e^{theta/2} sqrt(2 theta + 1 - e^theta)) for 0 < theta < 1.
double k_theta(double theta);

/// CLT approximation Phi(sqrt(n) k_theta) to P(mean < e - 1) under tpoisson(theta).
double mom_coverage_probability(double theta, int n);

}  // namespace telescope::inference
