#include "telescope/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

namespace telescope::perm {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const auto n = values_.size();
  if (n == 0) {
    throw std::invalid_argument("permutation must be nonempty");
  }
  std::vector<bool> seen(n + 1, false);
  for (const int v : values_) {
    if (v < 1 || static_cast<std::size_t>(v) > n) {
      throw std::invalid_argument(fmt::format("value {} outside [1, {}]", v, n));
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument(fmt::format("duplicate value {}", v));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) {
    throw std::invalid_argument("identity: n must be positive");
  }
  std::vector<int> values(static_cast<std::size_t>(n));
  std::iota(values.begin(), values.end(), 1);
  return Permutation(std::move(values), Trusted{});
}

std::string Permutation::to_string() const {
  if (values_.size() <= 9) {
    return fmt::format("{}", fmt::join(values_, ""));
  }
  return fmt::format("{}", fmt::join(values_, " "));
}

Permutation make_permutation(std::vector<int> values) { return Permutation(std::move(values)); }

std::vector<Cycle> cycle_decomposition(const Permutation& p) {
  const int n = p.size();
  std::vector<bool> visited(static_cast<std::size_t>(n) + 1, false);
  std::vector<Cycle> cycles;
  // Scanning leaders in increasing order yields the canonical form directly.
  for (int leader = 1; leader <= n; ++leader) {
    if (visited[static_cast<std::size_t>(leader)]) {
      continue;
    }
    Cycle cycle;
    for (int x = leader; !visited[static_cast<std::size_t>(x)]; x = p(x)) {
      visited[static_cast<std::size_t>(x)] = true;
      cycle.push_back(x);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

bool is_unicyclic(const Permutation& p) {
  int length = 1;
  for (int x = p(1); x != 1; x = p(x)) {
    ++length;
  }
  return length == p.size();
}

CycleType::CycleType(std::map<int, int> counts) {
  for (const auto& [length, count] : counts) {
    if (length < 1) {
      throw std::invalid_argument(fmt::format("cycle length {} is not positive", length));
    }
    if (count < 0) {
      throw std::invalid_argument(fmt::format("negative count for cycle length {}", length));
    }
    if (count > 0) {
      counts_.emplace(length, count);
    }
  }
}

int CycleType::weight() const {
  int total = 0;
  for (const auto& [length, count] : counts_) {
    total += length * count;
  }
  return total;
}

CycleType cycle_type(const Permutation& p) {
  std::map<int, int> counts;
  for (const auto& cycle : cycle_decomposition(p)) {
    ++counts[static_cast<int>(cycle.size())];
  }
  return CycleType(std::move(counts));
}

namespace {

void partitions(int remaining, int max_part, std::map<int, int>& current,
                std::vector<CycleType>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    ++current[part];
    partitions(remaining - part, part, current, out);
    if (--current[part] == 0) {
      current.erase(part);
    }
  }
}

}  // namespace

std::vector<CycleType> cycle_types(int n) {
  if (n < 1) {
    throw std::invalid_argument("cycle_types: n must be positive");
  }
  std::vector<CycleType> out;
  std::map<int, int> current;
  partitions(n, n, current, out);
  return out;
}

BigInt cauchy_count(int n, const CycleType& type) {
  if (n < 1 || type.weight() != n) {
    throw std::invalid_argument(
        fmt::format("cycle type of weight {} is inconsistent with n = {}", type.weight(), n));
  }
  BigInt denominator = 1;
  for (const auto& [length, count] : type.counts()) {
    denominator *= boost::multiprecision::pow(BigInt(length), static_cast<unsigned>(count));
    denominator *= factorial(count);
  }
  return factorial(n) / denominator;
}

Permutation reduce(const Permutation& p, int i) {
  const int n = p.size();
  if (i < 1 || i > n) {
    throw std::out_of_range(fmt::format("reduce: i = {} outside [1, {}]", i, n));
  }
  // 1-based image and preimage arrays; slot 0 unused.
  std::vector<int> image(static_cast<std::size_t>(n) + 1);
  std::vector<int> preimage(static_cast<std::size_t>(n) + 1);
  for (int x = 1; x <= n; ++x) {
    image[static_cast<std::size_t>(x)] = p(x);
    preimage[static_cast<std::size_t>(p(x))] = x;
  }
  for (int m = n; m > i; --m) {
    const int a = preimage[static_cast<std::size_t>(m)];
    const int b = image[static_cast<std::size_t>(m)];
    if (a != m) {
      image[static_cast<std::size_t>(a)] = b;
      preimage[static_cast<std::size_t>(b)] = a;
    }
  }
  return Permutation(std::vector<int>(image.begin() + 1, image.begin() + 1 + i),
                     Permutation::Trusted{});
}

int unicyclic_statistic(const Permutation& p) {
  // reduce(p, i) keeps the cycles of p restricted to [i], so it is unicyclic
  // exactly when 1..i all share the cycle of 1.
  const int n = p.size();
  std::vector<bool> in_first_cycle(static_cast<std::size_t>(n) + 1, false);
  int x = 1;
  do {
    in_first_cycle[static_cast<std::size_t>(x)] = true;
    x = p(x);
  } while (x != 1);
  for (int i = 2; i <= n; ++i) {
    if (!in_first_cycle[static_cast<std::size_t>(i)]) {
      return i - 1;
    }
  }
  return n;
}

int first_ascent(const Permutation& p) {
  const auto v = p.values();
  for (std::size_t k = 0; k + 1 < v.size(); ++k) {
    if (v[k] < v[k + 1]) {
      return static_cast<int>(k) + 1;
    }
  }
  return p.size();
}

int lis_length(const Permutation& p) {
  std::vector<int> tails;
  for (const int v : p.values()) {
    const auto it = std::lower_bound(tails.begin(), tails.end(), v);
    if (it == tails.end()) {
      tails.push_back(v);
    } else {
      *it = v;
    }
  }
  return static_cast<int>(tails.size());
}

bool is_123_avoiding(const Permutation& p) { return lis_length(p) <= 2; }

namespace {

bool embed(std::span<const int> text, std::span<const int> pattern, std::size_t next_text,
           std::vector<int>& chosen) {
  const std::size_t j = chosen.size();
  if (j == pattern.size()) {
    return true;
  }
  const std::size_t needed = pattern.size() - j;
  for (std::size_t pos = next_text; pos + needed <= text.size(); ++pos) {
    const int v = text[pos];
    bool consistent = true;
    for (std::size_t t = 0; t < j && consistent; ++t) {
      consistent = (chosen[t] < v) == (pattern[t] < pattern[j]);
    }
    if (!consistent) {
      continue;
    }
    chosen.push_back(v);
    if (embed(text, pattern, pos + 1, chosen)) {
      return true;
    }
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool contains_pattern(const Permutation& p, const Permutation& pattern) {
  if (pattern.size() > p.size()) {
    return false;
  }
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(pattern.size()));
  return embed(p.values(), pattern.values(), 0, chosen);
}

Permutation standardize(std::span<const int> values) {
  if (values.empty()) {
    throw std::invalid_argument("standardize: empty sequence");
  }
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<int> ranks(values.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && values[order[r]] == values[order[r - 1]]) {
      throw std::invalid_argument("standardize: repeated value");
    }
    ranks[order[r]] = static_cast<int>(r) + 1;
  }
  return Permutation(std::move(ranks), Permutation::Trusted{});
}

std::vector<int> rho_event_indices(const Permutation& p) {
  const int n = p.size();
  const auto v = p.values();
  std::vector<int> rows;
  int prefix_max = 0;
  for (int i = 1; i <= n - 1; ++i) {
    prefix_max = std::max(prefix_max, v[static_cast<std::size_t>(i - 1)]);
    if (v[static_cast<std::size_t>(i)] > prefix_max &&
        is_unicyclic(standardize(v.first(static_cast<std::size_t>(i))))) {
      rows.push_back(i);
    }
  }
  if (is_unicyclic(p)) {
    rows.push_back(n);
  }
  return rows;
}

Permutation random_permutation(int n, Rng& rng) {
  if (n < 1) {
    throw std::invalid_argument("random_permutation: n must be positive");
  }
  std::vector<int> values(static_cast<std::size_t>(n));
  std::iota(values.begin(), values.end(), 1);
  shuffle(values, rng);
  return Permutation(std::move(values), Permutation::Trusted{});
}

PermutationRange::iterator::iterator(int n) : current_(Permutation::identity(n)), done_(false) {}

PermutationRange::iterator& PermutationRange::iterator::operator++() {
  done_ = !std::next_permutation(current_.values_.begin(), current_.values_.end());
  return *this;
}

PermutationRange enumerate_permutations(int n, int cap) {
  if (n < 1 || n > cap) {
    throw std::out_of_range(
        fmt::format("enumeration size n = {} outside [1, {}]; raise the cap to override", n, cap));
  }
  return PermutationRange(n);
}

}  // namespace telescope::perm
