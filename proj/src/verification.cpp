#include "telescope/verification.hpp"

#include "telescope/catalan.hpp"
#include "telescope/finite_law.hpp"
#include "telescope/permutation.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>

namespace telescope::oracle {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string decimal(double v) { return fmt::format("{:.17g}", v); }

// Exact comparison of a histogram (index k -> count) with n! times a finite law.
VerificationReport compare_histogram(std::string check, int n, const std::vector<BigInt>& observed,
                                     const std::vector<BigInt>& expected, const BigInt& total,
                                     const BigInt& expected_total, Clock::time_point start) {
  VerificationReport report;
  report.check = std::move(check);
  report.parameters = fmt::format("n={}", n);
  report.pass = total == expected_total;
  for (std::size_t k = 0; k < expected.size(); ++k) {
    report.entries.push_back({fmt::format("{}", k + 1), to_string(expected[k]), to_string(observed[k])});
    report.pass = report.pass && expected[k] == observed[k];
  }
  report.entries.push_back({"total", to_string(expected_total), to_string(total)});
  report.runtime_seconds = seconds_since(start);
  return report;
}

std::vector<BigInt> scaled_masses(const laws::FiniteLaw& law, const BigInt& scale) {
  std::vector<BigInt> out;
  for (const auto& m : law.masses()) {
    const Rational scaled = m * scale;
    if (boost::multiprecision::denominator(scaled) != 1) {
      throw std::logic_error("scaled mass is not an integer count");
    }
    out.push_back(boost::multiprecision::numerator(scaled));
  }
  return out;
}

}  // namespace

VerificationReport verify_unicyclic_law(int n, int cap) {
  const auto start = Clock::now();
  std::vector<BigInt> histogram(static_cast<std::size_t>(n), 0);
  BigInt total = 0;
  for (const auto& p : perm::enumerate_permutations(n, cap)) {
    ++histogram[static_cast<std::size_t>(perm::unicyclic_statistic(p) - 1)];
    ++total;
  }
  const BigInt n_factorial = factorial(n);
  return compare_histogram("unicyclic", n, histogram,
                           scaled_masses(laws::finite_unicyclic_law(n), n_factorial), total,
                           n_factorial, start);
}

VerificationReport verify_first_ascent_law(int n, int cap) {
  const auto start = Clock::now();
  std::vector<BigInt> histogram(static_cast<std::size_t>(n), 0);
  BigInt total = 0;
  for (const auto& p : perm::enumerate_permutations(n, cap)) {
    ++histogram[static_cast<std::size_t>(perm::first_ascent(p) - 1)];
    ++total;
  }
  const BigInt n_factorial = factorial(n);
  return compare_histogram("first-ascent", n, histogram,
                           scaled_masses(laws::finite_first_ascent_law(n), n_factorial), total,
                           n_factorial, start);
}

VerificationReport verify_avoiding_first_ascent(int n, int cap) {
  const auto start = Clock::now();
  std::vector<BigInt> histogram(static_cast<std::size_t>(n), 0);
  BigInt avoiding = 0;
  BigInt enumerated = 0;
  for (const auto& p : perm::enumerate_permutations(n, cap)) {
    ++enumerated;
    if (perm::is_123_avoiding(p)) {
      ++histogram[static_cast<std::size_t>(perm::first_ascent(p) - 1)];
      ++avoiding;
    }
  }
  std::vector<BigInt> expected;
  for (int k = 1; k <= n; ++k) {
    expected.push_back(perm::catalan_convolution(n, k));
  }
  auto report = compare_histogram("avoiding-first-ascent", n, histogram, expected, avoiding,
                                  perm::catalan(n), start);
  const BigInt n_factorial = factorial(n);
  report.entries.push_back({"enumerated", to_string(n_factorial), to_string(enumerated)});
  report.pass = report.pass && enumerated == n_factorial;
  report.runtime_seconds = seconds_since(start);
  return report;
}

VerificationReport verify_catalan_convolution(int n_max) {
  if (n_max < 1 || n_max > kMaxConvolutionCheck) {
    throw std::out_of_range(
        fmt::format("verify_catalan_convolution: n_max = {} outside [1, {}]", n_max, kMaxConvolutionCheck));
  }
  const auto start = Clock::now();
  VerificationReport report;
  report.check = "catalan-convolution";
  report.parameters = fmt::format("n_max={}", n_max);
  report.pass = true;
  int compared = 0;
  int agreeing = 0;
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      const BigInt closed = perm::catalan_convolution(n, k);
      const BigInt brute = perm::catalan_convolution_bruteforce(n, k);
      ++compared;
      if (closed == brute) {
        ++agreeing;
      } else {
        report.entries.push_back({fmt::format("C({},{})", n, k), to_string(brute), to_string(closed)});
      }
    }
  }
  report.pass = agreeing == compared;
  report.entries.push_back({"pairs-agreeing", fmt::format("{}", compared), fmt::format("{}", agreeing)});
  report.runtime_seconds = seconds_since(start);
  return report;
}

Rational rho_mass(int n, int i) {
  if (n < 1 || i < 1 || i > n) {
    throw std::out_of_range(fmt::format("rho_mass: need 1 <= i <= n, got n={}, i={}", n, i));
  }
  if (i == n) {
    return Rational(BigInt(1), BigInt(n));
  }
  return Rational(binomial(n, i + 1) * factorial(i - 1) * factorial(n - i - 1), factorial(n));
}

Table1Report table1_experiment(int n, int cap) {
  Table1Report report;
  report.n = n;
  for (int i = 1; i <= n; ++i) {
    report.rows.push_back({i, rho_mass(n, i), {}});
    report.rho_sum += report.rows.back().rho;
  }
  for (const auto& p : perm::enumerate_permutations(n, cap)) {
    const auto name = p.to_string();
    const auto rows = perm::rho_event_indices(p);
    for (const int i : rows) {
      report.rows[static_cast<std::size_t>(i - 1)].sample_points.push_back(name);
    }
    report.multiplicity[name] = static_cast<int>(rows.size());
    report.total_memberships += rows.size();
    if (rows.empty()) {
      report.excluded.push_back(name);
    } else if (rows.size() > 1) {
      report.repeated.push_back(name);
    }
  }
  return report;
}

VerificationReport verify_table1(int n, int cap) {
  const auto start = Clock::now();
  const Table1Report table = table1_experiment(n, cap);
  VerificationReport report;
  report.check = "table1";
  report.parameters = fmt::format("n={}", n);
  const BigInt n_factorial = factorial(n);
  report.pass = table.rho_sum == 1;
  for (const auto& row : table.rows) {
    const Rational expected = row.rho * n_factorial;
    const BigInt observed(row.sample_points.size());
    report.entries.push_back({fmt::format("row {}", row.index), to_string(expected), to_string(observed)});
    report.pass = report.pass && expected == observed;
  }
  for (const auto& row : table.rows) {
    report.entries.push_back({fmt::format("row {} points", row.index), "",
                              fmt::format("{}", fmt::join(row.sample_points, " "))});
  }
  report.entries.push_back({"rho-sum", "1", to_string(table.rho_sum)});
  report.entries.push_back({"memberships", to_string(n_factorial), fmt::format("{}", table.total_memberships)});
  report.entries.push_back({"repeated", "", fmt::format("{}", fmt::join(table.repeated, " "))});
  report.entries.push_back({"excluded", "", fmt::format("{}", fmt::join(table.excluded, " "))});
  report.pass = report.pass && BigInt(table.total_memberships) == n_factorial;
  report.runtime_seconds = seconds_since(start);
  return report;
}

VerificationReport verify_rho_sums(int n_max) {
  const auto start = Clock::now();
  VerificationReport report;
  report.check = "rho-sum";
  report.parameters = fmt::format("n_max={}", n_max);
  report.pass = n_max >= 1;
  for (int n = 1; n <= n_max; ++n) {
    Rational total = 0;
    for (int i = 1; i <= n; ++i) {
      total += rho_mass(n, i);
    }
    report.entries.push_back({fmt::format("n={}", n), "1", to_string(total)});
    report.pass = report.pass && total == 1;
  }
  report.runtime_seconds = seconds_since(start);
  return report;
}

VerificationReport empirical_mean_growth(const std::vector<int>& n_grid, int reps, std::uint64_t seed) {
  if (reps < 1) {
    throw std::invalid_argument("empirical_mean_growth: reps must be >= 1");
  }
  for (std::size_t g = 0; g < n_grid.size(); ++g) {
    if (n_grid[g] < 1 || (g > 0 && n_grid[g] <= n_grid[g - 1])) {
      throw std::invalid_argument("empirical_mean_growth: grid must be positive and increasing");
    }
  }
  const auto start = Clock::now();
  VerificationReport report;
  report.check = "mean-growth";
  report.parameters = fmt::format("grid=[{}] reps={} seed={}", fmt::join(n_grid, ","), reps, seed);
  report.tolerance = kGrowthBandHigh - 1.0;
  report.note = fmt::format("band [{}, {}] on mean / ln n; exact-law ratio must approach 1", kGrowthBandLow,
                            kGrowthBandHigh);
  report.pass = true;
  double previous_gap = std::numeric_limits<double>::infinity();
  for (std::size_t g = 0; g < n_grid.size(); ++g) {
    const int n = n_grid[g];
    Rng rng(derive_seed(seed, g));
    long double total = 0;
    for (int r = 0; r < reps; ++r) {
      total += perm::unicyclic_statistic(perm::random_permutation(n, rng));
    }
    const double mean = static_cast<double>(total / reps);
    if (n == 1) {
      report.entries.push_back({"n=1 mean", "1", decimal(mean)});
      report.pass = report.pass && mean == 1.0;
      continue;
    }
    const double log_n = std::log(static_cast<double>(n));
    const double ratio = mean / log_n;
    // Exact mean of the finite law: sum_{i<n} i / (i (i + 1)) + n / n.
    double exact_mean = 1.0;
    for (int i = 1; i < n; ++i) {
      exact_mean += 1.0 / (i + 1.0);
    }
    const double exact_ratio = exact_mean / log_n;
    report.entries.push_back({fmt::format("n={} mean/ln n", n),
                              fmt::format("[{}, {}]", kGrowthBandLow, kGrowthBandHigh), decimal(ratio)});
    report.entries.push_back({fmt::format("n={} exact mean/ln n", n), "-> 1", decimal(exact_ratio)});
    const double gap = std::abs(exact_ratio - 1.0);
    report.pass = report.pass && ratio >= kGrowthBandLow && ratio <= kGrowthBandHigh && gap < previous_gap;
    previous_gap = gap;
  }
  report.runtime_seconds = seconds_since(start);
  return report;
}

namespace {

struct SampleMoments {
  double mean = 0.0;
  double variance = 0.0;
};

SampleMoments sample_moments(const std::vector<std::int64_t>& values) {
  long double sum = 0;
  for (const auto v : values) sum += static_cast<long double>(v);
  const long double mean = sum / static_cast<long double>(values.size());
  long double squares = 0;
  for (const auto v : values) {
    const long double d = static_cast<long double>(v) - mean;
    squares += d * d;
  }
  return {static_cast<double>(mean),
          static_cast<double>(squares / static_cast<long double>(values.size() - 1))};
}

void compare_moments(VerificationReport& report, const laws::TelescopingLaw& law, std::size_t reps,
                     std::uint64_t seed) {
  const auto batch = laws::sample(law, seed, reps);
  const SampleMoments observed = sample_moments(batch.values);
  const double mu = std::get<double>(law.mean());
  const double var = std::get<double>(law.variance());
  const double m2 = laws::raw_moment_series(law, 2);
  const double m3 = laws::raw_moment_series(law, 3);
  const double m4 = laws::raw_moment_series(law, 4);
  const double central4 = m4 - 4.0 * mu * m3 + 6.0 * mu * mu * m2 - 3.0 * mu * mu * mu * mu;
  const double n = static_cast<double>(reps);
  const double mean_band = 3.0 * std::sqrt(var / n);
  const double var_band = 3.0 * std::sqrt((central4 - var * var) / n);
  report.entries.push_back({law.label() + " mean", decimal(mu), decimal(observed.mean)});
  report.entries.push_back({law.label() + " mean band", "", decimal(mean_band)});
  report.entries.push_back({law.label() + " variance", decimal(var), decimal(observed.variance)});
  report.entries.push_back({law.label() + " variance band", "", decimal(var_band)});
  report.pass = report.pass && std::abs(observed.mean - mu) <= mean_band &&
                std::abs(observed.variance - var) <= var_band;
}

}  // namespace

VerificationReport ascent_mean_comparison(std::size_t reps, std::uint64_t seed) {
  if (reps < 10000) {
    throw std::invalid_argument("ascent_mean_comparison: reps must be at least 10^4");
  }
  const auto start = Clock::now();
  VerificationReport report;
  report.check = "ascent-compare";
  report.parameters = fmt::format("reps={} seed={}", reps, seed);
  report.note = "bands are three standard errors";
  report.pass = true;
  compare_moments(report, laws::tpoisson_law(1.0), reps, derive_seed(seed, 0));
  compare_moments(report, laws::tgeometric_law(2.0), reps, derive_seed(seed, 1));
  report.runtime_seconds = seconds_since(start);
  return report;
}

VerificationReport verify_sampler_fit(const laws::TelescopingLaw& law, std::size_t count,
                                      std::uint64_t seed, double significance) {
  const auto start = Clock::now();
  const auto batch = laws::sample(law, seed, count);
  const std::int64_t first = law.start();
  const std::int64_t last = law.quantile(0.999);
  const auto bins = static_cast<std::size_t>(last - first + 2);  // + merged tail

  std::vector<double> observed(bins, 0.0);
  for (const auto x : batch.values) {
    const auto bin = x > last ? bins - 1 : static_cast<std::size_t>(x - first);
    observed[bin] += 1.0;
  }
  const double n = static_cast<double>(count);
  double statistic = 0.0;
  std::size_t used_bins = 0;
  for (std::size_t b = 0; b < bins; ++b) {
    const auto x = first + static_cast<std::int64_t>(b);
    const double expected = n * (b + 1 == bins ? law.tail(last + 1) : law.pmf(x));
    if (expected <= 0.0) {
      // Zero-mass support point (tpoisson(1) at 0): any draw there is a failure.
      if (observed[b] > 0.0) statistic = std::numeric_limits<double>::infinity();
      continue;
    }
    const double d = observed[b] - expected;
    statistic += d * d / expected;
    ++used_bins;
  }
  const auto dof = static_cast<double>(used_bins - 1);
  const boost::math::chi_squared_distribution<double> chi2(dof);
  const double p_value = std::isfinite(statistic) ? boost::math::cdf(boost::math::complement(chi2, statistic)) : 0.0;

  VerificationReport report;
  report.check = "sampler-fit";
  report.parameters = fmt::format("law={} count={} seed={}", law.label(), count, seed);
  report.tolerance = significance;
  report.entries.push_back({"chi-square", fmt::format("dof={}", used_bins - 1), decimal(statistic)});
  report.entries.push_back({"p-value", fmt::format(">= {}", significance), decimal(p_value)});
  report.pass = p_value >= significance;
  report.runtime_seconds = seconds_since(start);
  return report;
}

std::vector<VerificationReport> verify_all(std::uint64_t seed) {
  std::vector<VerificationReport> reports;
  for (int n = 1; n <= kDefaultLawCap; ++n) reports.push_back(verify_unicyclic_law(n));
  for (int n = 1; n <= kDefaultLawCap; ++n) reports.push_back(verify_first_ascent_law(n));
  for (int n = 1; n <= kDefaultAvoidingCap; ++n) reports.push_back(verify_avoiding_first_ascent(n));
  reports.push_back(verify_catalan_convolution(12));
  reports.push_back(verify_table1(4));
  reports.push_back(verify_rho_sums(20));
  reports.push_back(verify_sampler_fit(laws::zeta2_law(), 1000000, derive_seed(seed, 10)));
  reports.push_back(verify_sampler_fit(laws::tpoisson_law(1.0), 1000000, derive_seed(seed, 11)));
  reports.push_back(verify_sampler_fit(laws::tgeometric_law(2.0), 1000000, derive_seed(seed, 12)));
  reports.push_back(ascent_mean_comparison(1000000, derive_seed(seed, 13)));
  reports.push_back(empirical_mean_growth({100, 1000, 10000}, 2000, derive_seed(seed, 14)));
  return reports;
}

}  // namespace telescope::oracle
