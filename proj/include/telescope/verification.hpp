#pragma once

#include "telescope/numeric.hpp"
#include "telescope/random.hpp"
#include "telescope/telescoping_law.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace telescope::oracle {

/// One compared quantity.  Exact checks carry integers or "p/q" rationals;
/// Monte Carlo checks carry decimal strings.
struct Entry {
  std::string key;
  std::string expected;
  std::string observed;
};

struct VerificationReport {
  std::string check;
  std::string parameters;
  std::vector<Entry> entries;
  /// Absent for exact comparisons.
  std::optional<double> tolerance;
  bool pass = false;
  double runtime_seconds = 0.0;
  std::string note;
};

inline constexpr int kDefaultLawCap = 8;
inline constexpr int kDefaultAvoidingCap = 9;
inline constexpr int kMaxConvolutionCheck = 30;

/// Histogram of the unicyclic-reduction statistic over S_n against n! times
/// the exact finite law.  Throws std::out_of_range when n exceeds the cap.
VerificationReport verify_unicyclic_law(int n, int cap = kDefaultLawCap);

/// First-ascent histogram over S_n against n! k/(k+1)! (and 1 at k = n).
VerificationReport verify_first_ascent_law(int n, int cap = kDefaultLawCap);

/// First-ascent histogram over the 123-avoiding part of S_n against C_{n,k}.
VerificationReport verify_avoiding_first_ascent(int n, int cap = kDefaultAvoidingCap);

/// Closed-form C_{n,k} against composition brute force for 1 <= k <= n <= n_max.
VerificationReport verify_catalan_convolution(int n_max);

struct Table1Row {
  int index = 0;
  Rational rho;
  std::vector<std::string> sample_points;
};

struct Table1Report {
  int n = 0;
  std::vector<Table1Row> rows;
  /// Permutation -> number of rows containing it (zero entries included).
  std::map<std::string, int> multiplicity;
  std::vector<std::string> excluded;
  std::vector<std::string> repeated;
  std::size_t total_memberships = 0;
  Rational rho_sum;
};

/// binom(n, i+1) (i-1)! (n-i-1)! / n! for i < n; 1/n at i = n.
Rational rho_mass(int n, int i);

/// Classifies S_n by rho_event_indices.
Table1Report table1_experiment(int n, int cap = kDefaultLawCap);

/// Row sizes equal n! rho_i and the rho_i sum to exactly 1.
VerificationReport verify_table1(int n, int cap = kDefaultLawCap);

/// sum_i rho_i == 1 exactly for every 1 <= n <= n_max.
VerificationReport verify_rho_sums(int n_max);

inline constexpr double kGrowthBandLow = 0.5;
inline constexpr double kGrowthBandHigh = 2.0;

/// Monte Carlo mean of the unicyclic-reduction statistic over random
/// permutations, divided by ln n, for each n in the grid.
///
/// Passes when every ratio lies in [kGrowthBandLow, kGrowthBandHigh] and the
/// exact-law ratio E(X) / ln n approaches 1 monotonically along the grid.
VerificationReport empirical_mean_growth(const std::vector<int>& n_grid, int reps,
                                         std::uint64_t seed = kDefaultSeed);

/// Sample mean and variance of tpoisson(1) and tgeometric(2) draws against
/// e - 1, e(3 - e), 3 and 4, each within three standard errors.
VerificationReport ascent_mean_comparison(std::size_t reps, std::uint64_t seed = kDefaultSeed);

/// Pearson chi-square goodness of fit of `count` draws.  Bins are the support
/// points up to the 0.999 quantile plus one merged tail bin.
VerificationReport verify_sampler_fit(const laws::TelescopingLaw& law, std::size_t count,
                                      std::uint64_t seed = kDefaultSeed,
                                      double significance = 0.001);

/// Every check at its default size.
std::vector<VerificationReport> verify_all(std::uint64_t seed = kDefaultSeed);

}  // namespace telescope::oracle
