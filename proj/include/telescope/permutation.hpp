#pragma once

#include "telescope/numeric.hpp"
#include "telescope/random.hpp"

#include <compare>
#include <cstddef>
#include <iterator>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace telescope::perm {

/// A bijection on [n] in one-line notation: values()[i] is the image of i + 1.
class Permutation {
 public:
  /// Throws std::invalid_argument unless `values` rearranges {1, ..., n}, n >= 1.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);

  [[nodiscard]] int size() const { return static_cast<int>(values_.size()); }

  /// Image of the 1-based point i.
  [[nodiscard]] int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }

  [[nodiscard]] std::span<const int> values() const { return values_; }

  /// Digits run together for n <= 9 ("2314"); space separated otherwise.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Trusted {};
  Permutation(std::vector<int> values, Trusted) : values_(std::move(values)) {}

  std::vector<int> values_;

  friend class PermutationRange;
  friend Permutation standardize(std::span<const int> values);
  friend Permutation reduce(const Permutation& p, int i);
  friend Permutation random_permutation(int n, Rng& rng);
};

Permutation make_permutation(std::vector<int> values);

using Cycle = std::vector<int>;

/// Cycles led by their smallest element, sorted by leader.
std::vector<Cycle> cycle_decomposition(const Permutation& p);

bool is_unicyclic(const Permutation& p);

/// Number of cycles of each length: counts()[k] = j_k.
class CycleType {
 public:
  CycleType() = default;
  /// Throws std::invalid_argument on a non-positive length or negative count.
  explicit CycleType(std::map<int, int> counts);

  [[nodiscard]] const std::map<int, int>& counts() const { return counts_; }
  /// Sum of k * j_k.
  [[nodiscard]] int weight() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;

 private:
  std::map<int, int> counts_;
};

CycleType cycle_type(const Permutation& p);

/// Every cycle type of weight n (one per integer partition of n).
std::vector<CycleType> cycle_types(int n);

/// n! / prod_k k^{j_k} j_k!; throws std::invalid_argument if the weight is not n.
BigInt cauchy_count(int n, const CycleType& type);

/// Restriction to [i]: deletes n, n-1, ..., i+1 in turn, bridging a -> m -> b
/// into a -> b for each deleted m.  Throws std::out_of_range unless 1 <= i <= n.
Permutation reduce(const Permutation& p, int i);

/// Largest i such that reduce(p, i) is unicyclic.
int unicyclic_statistic(const Permutation& p);

/// Smallest k with p(k) < p(k+1); n for the decreasing permutation.
int first_ascent(const Permutation& p);

/// Length of a longest increasing subsequence.
int lis_length(const Permutation& p);

bool is_123_avoiding(const Permutation& p);

/// True iff some subsequence of p is order-isomorphic to `pattern`.
bool contains_pattern(const Permutation& p, const Permutation& pattern);

/// Order pattern of a sequence of distinct integers.
Permutation standardize(std::span<const int> values);

/// Rows of the pattern-interpretation table that contain p, ascending.
///
/// i < n is included when the first i entries form a unicyclic pattern and
/// entry i + 1 is the largest of the first i + 1 entries; n is included when
/// p itself is unicyclic.
std::vector<int> rho_event_indices(const Permutation& p);

/// Uniform over S_n.
Permutation random_permutation(int n, Rng& rng);

inline constexpr int kDefaultEnumerationCap = 10;

/// All of S_n in lexicographic order, one permutation at a time.
class PermutationRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;
    using pointer = const Permutation*;
    using reference = const Permutation&;

    iterator() = default;

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

   private:
    friend class PermutationRange;
    explicit iterator(int n);

    Permutation current_{std::vector<int>{1}};
    bool done_ = true;
  };

  [[nodiscard]] iterator begin() const { return iterator(n_); }
  [[nodiscard]] std::default_sentinel_t end() const { return {}; }
  [[nodiscard]] int n() const { return n_; }

 private:
  friend PermutationRange enumerate_permutations(int n, int cap);
  explicit PermutationRange(int n) : n_(n) {}

  int n_;
};

/// Throws std::out_of_range unless 1 <= n <= cap.
PermutationRange enumerate_permutations(int n, int cap = kDefaultEnumerationCap);

}  // namespace telescope::perm
