#pragma once

namespace telescope::inference {

/// Phi(x), the standard normal CDF.
double standard_normal_cdf(double x);

/// Phi^{-1}(p) for 0 < p < 1.
double standard_normal_quantile(double p);

}  // namespace telescope::inference
