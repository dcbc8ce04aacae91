#pragma once

#include "telescope/random.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace telescope::laws {

enum class Family { Zeta2, TPoisson, TGeometric };

std::string_view family_name(Family family);
/// Accepts "zeta2", "tpoisson", "tgeometric"; throws std::invalid_argument otherwise.
Family parse_family(std::string_view name);

/// Marker for a moment that does not exist.
struct Divergent {
  friend bool operator==(Divergent, Divergent) = default;
};

using Moment = std::variant<double, Divergent>;

inline bool is_divergent(const Moment& m) { return std::holds_alternative<Divergent>(m); }

/// Law with pmf(x) = q(x) - q(x + 1) for a nonincreasing tail q with
/// q(start) = 1 and q(x) -> 0.
///
///   zeta2          q(x) = 1 / x                          x >= 1
///   tpoisson(t)    q(x) = t^x / x!,        0 < t <= 1,   x >= 0
///   tgeometric(t)  q(x) = ((t-1) x + 1) / t^x,  t > 1,   x >= 1
class TelescopingLaw {
 public:
  [[nodiscard]] Family family() const { return family_; }
  /// Zero for zeta2, which has no parameter.
  [[nodiscard]] double theta() const { return theta_; }
  [[nodiscard]] std::int64_t start() const;
  /// e.g. "zeta2", "tpoisson(theta=0.7)".
  [[nodiscard]] std::string label() const;

  /// q(x) = P(X >= x); 1 for x <= start.
  [[nodiscard]] double tail(std::int64_t x) const;
  /// Throws std::out_of_range for x below the support.
  [[nodiscard]] double pmf(std::int64_t x) const;
  [[nodiscard]] double cdf(std::int64_t x) const;
  /// Smallest x >= start with cdf(x) >= u; throws std::out_of_range unless 0 <= u < 1.
  [[nodiscard]] std::int64_t quantile(double u) const;

  [[nodiscard]] Moment mean() const;
  [[nodiscard]] Moment variance() const;

  /// Closed-form E[exp(tX)]; throws std::domain_error outside the convergence
  /// region (t <= 0 for zeta2, t < ln(theta) for tgeometric).
  [[nodiscard]] double mgf(double t) const;

  friend bool operator==(const TelescopingLaw&, const TelescopingLaw&) = default;

 private:
  TelescopingLaw(Family family, double theta) : family_(family), theta_(theta) {}

  void require_in_support(std::int64_t x) const;

  Family family_;
  double theta_;

  friend TelescopingLaw zeta2_law();
  friend TelescopingLaw tpoisson_law(double theta);
  friend TelescopingLaw tgeometric_law(double theta);
};

TelescopingLaw zeta2_law();
/// Throws std::invalid_argument unless 0 < theta <= 1.
TelescopingLaw tpoisson_law(double theta);
/// Throws std::invalid_argument unless theta > 1.
TelescopingLaw tgeometric_law(double theta);
/// Dispatches on family; theta is ignored for zeta2.
TelescopingLaw make_law(Family family, double theta);

inline constexpr double kDefaultTailTolerance = 1e-12;
inline constexpr std::int64_t kMaxSeriesTerms = 100000;

/// Truncated sum of exp(t x) pmf(x) whose remainder is bounded below tail_tol.
///
/// Independent of mgf(); throws std::domain_error where the series diverges
/// and std::runtime_error if kMaxSeriesTerms terms do not suffice.
double mgf_series(const TelescopingLaw& law, double t, double tail_tol = kDefaultTailTolerance);

/// Truncated sum of x^order pmf(x) with the same remainder contract.
double raw_moment_series(const TelescopingLaw& law, int order,
                         double tail_tol = kDefaultTailTolerance);

/// Smallest H >= start with q(H + 1) < tail_tol.
std::int64_t series_horizon(const TelescopingLaw& law, double tail_tol = kDefaultTailTolerance);

/// i.i.d. draws together with the seed and law that produced them.
struct SampleBatch {
  TelescopingLaw law;
  std::uint64_t seed = 0;
  std::vector<std::int64_t> values;

  [[nodiscard]] double mean() const;
};

/// One inverse-CDF draw.
std::int64_t draw(const TelescopingLaw& law, Rng& rng);

/// `count` draws from a generator seeded with `seed`; throws std::invalid_argument for count 0.
SampleBatch sample(const TelescopingLaw& law, std::uint64_t seed, std::size_t count);

/// e^{-lambda} lambda^x / x!.
double poisson_pmf(double lambda, std::int64_t x);

/// Sign of tpoisson(theta).pmf(x) - poisson_pmf(theta, x); `less` means the
/// telescoping law puts less mass at x.  Throws std::invalid_argument unless 0 < theta < 1.
std::partial_ordering poisson_comparison(double theta, std::int64_t x);

}  // namespace telescope::laws
