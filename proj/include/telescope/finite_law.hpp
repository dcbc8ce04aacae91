#pragma once

#include "telescope/numeric.hpp"

#include <vector>

namespace telescope::laws {

/// Exact law on {1, ..., n}: masses()[k - 1] = P(X = k).
class FiniteLaw {
 public:
  /// Throws std::invalid_argument if a mass is negative or the total is not exactly 1.
  explicit FiniteLaw(std::vector<Rational> masses);

  [[nodiscard]] int n() const { return static_cast<int>(masses_.size()); }
  [[nodiscard]] const std::vector<Rational>& masses() const { return masses_; }
  /// P(X = k) for 1 <= k <= n.
  [[nodiscard]] const Rational& mass(int k) const;
  [[nodiscard]] Rational mean() const;

  friend bool operator==(const FiniteLaw&, const FiniteLaw&) = default;

 private:
  std::vector<Rational> masses_;
};

/// Largest-unicyclic-reduction statistic of a uniform permutation of [n]:
/// 1/(i(i+1)) for i < n and 1/n at i = n.
FiniteLaw finite_unicyclic_law(int n);

/// First ascent of a uniform permutation of [n]: k/(k+1)! for k < n and 1/n! at n.
FiniteLaw finite_first_ascent_law(int n);

/// First ascent of a uniform 123-avoiding permutation of [n]: C_{n,k} / C_n.
FiniteLaw avoiding_first_ascent_law(int n);

/// k (2n-k-1)! (n+1)! / ((2n)! (n-k)!), the factorial form of C_{n,k} / C_n.
Rational avoiding_first_ascent_mass(int n, int k);

/// |C_{n,k} / C_n - k / 2^{k+1}|, evaluated exactly and rounded once.
double geometric_approximation_error(int n, int k);

}  // namespace telescope::laws
