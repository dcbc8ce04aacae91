#include "telescope/finite_law.hpp"

#include "telescope/catalan.hpp"

#include <stdexcept>

#include <fmt/format.h>

namespace telescope::laws {

FiniteLaw::FiniteLaw(std::vector<Rational> masses) : masses_(std::move(masses)) {
  if (masses_.empty()) {
    throw std::invalid_argument("finite law needs at least one mass");
  }
  Rational total = 0;
  for (const auto& m : masses_) {
    if (m < 0) {
      throw std::invalid_argument("finite law has a negative mass");
    }
    total += m;
  }
  if (total != 1) {
    throw std::invalid_argument(fmt::format("finite law masses sum to {}, not 1", to_string(total)));
  }
}

const Rational& FiniteLaw::mass(int k) const {
  if (k < 1 || k > n()) {
    throw std::out_of_range(fmt::format("mass index {} outside [1, {}]", k, n()));
  }
  return masses_[static_cast<std::size_t>(k - 1)];
}

Rational FiniteLaw::mean() const {
  Rational total = 0;
  for (int k = 1; k <= n(); ++k) {
    total += k * mass(k);
  }
  return total;
}

namespace {

void require_positive(int n, const char* what) {
  if (n < 1) {
    throw std::invalid_argument(fmt::format("{}: n must be at least 1, got {}", what, n));
  }
}

}  // namespace

FiniteLaw finite_unicyclic_law(int n) {
  require_positive(n, "finite_unicyclic_law");
  std::vector<Rational> masses;
  for (int i = 1; i < n; ++i) {
    masses.emplace_back(BigInt(1), BigInt(i) * (i + 1));
  }
  masses.emplace_back(BigInt(1), BigInt(n));
  return FiniteLaw(std::move(masses));
}

FiniteLaw finite_first_ascent_law(int n) {
  require_positive(n, "finite_first_ascent_law");
  std::vector<Rational> masses;
  for (int k = 1; k < n; ++k) {
    masses.emplace_back(BigInt(k), factorial(k + 1));
  }
  masses.emplace_back(BigInt(1), factorial(n));
  return FiniteLaw(std::move(masses));
}

FiniteLaw avoiding_first_ascent_law(int n) {
  require_positive(n, "avoiding_first_ascent_law");
  const BigInt total = perm::catalan(n);
  std::vector<Rational> masses;
  for (int k = 1; k <= n; ++k) {
    masses.emplace_back(perm::catalan_convolution(n, k), total);
  }
  return FiniteLaw(std::move(masses));
}

Rational avoiding_first_ascent_mass(int n, int k) {
  if (n < 1 || k < 1 || k > n) {
    throw std::out_of_range(fmt::format("avoiding_first_ascent_mass: need 1 <= k <= n, got n={}, k={}", n, k));
  }
  return Rational(k * factorial(2 * n - k - 1) * factorial(n + 1),
                  factorial(2 * n) * factorial(n - k));
}

double geometric_approximation_error(int n, int k) {
  if (n < 1 || k < 1 || k > n) {
    throw std::out_of_range(
        fmt::format("geometric_approximation_error: need 1 <= k <= n, got n={}, k={}", n, k));
  }
  const Rational exact(perm::catalan_convolution(n, k), perm::catalan(n));
  const Rational approx(BigInt(k), BigInt(1) << (k + 1));
  const Rational diff = exact - approx;
  return to_double(diff < 0 ? Rational(-diff) : diff);
}

}  // namespace telescope::laws
