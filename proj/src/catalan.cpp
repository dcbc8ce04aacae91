#include "telescope/catalan.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <fmt/format.h>

namespace telescope::perm {

BigInt catalan(int n) {
  if (n < 0) {
    throw std::out_of_range("catalan: n must be nonnegative");
  }
  return binomial(2 * n, n) / (n + 1);
}

BigInt catalan_convolution(int n, int k) {
  if (k < 1 || k > n) {
    throw std::out_of_range(fmt::format("catalan_convolution: k = {} outside [1, {}]", k, n));
  }
  return BigInt(k) * binomial(2 * n - k, n) / (2 * n - k);
}

namespace {

// Below the cap every C_j and every partial sum stays under C_30 < 2^52, so
// 64-bit accumulation is exact.
std::uint64_t sum_over_compositions(int remaining, int parts,
                                    const std::vector<std::uint64_t>& small_catalan) {
  if (parts == 1) {
    return small_catalan[static_cast<std::size_t>(remaining - 1)];
  }
  std::uint64_t total = 0;
  for (int first = 1; first <= remaining - (parts - 1); ++first) {
    total += small_catalan[static_cast<std::size_t>(first - 1)] *
             sum_over_compositions(remaining - first, parts - 1, small_catalan);
  }
  return total;
}

}  // namespace

BigInt catalan_convolution_bruteforce(int n, int k, int cap) {
  if (n < 1 || n > cap || cap > kDefaultConvolutionCap) {
    throw std::out_of_range(fmt::format(
        "catalan_convolution_bruteforce: n = {} outside [1, {}]", n, std::min(cap, kDefaultConvolutionCap)));
  }
  if (k < 1 || k > n) {
    throw std::out_of_range(
        fmt::format("catalan_convolution_bruteforce: k = {} outside [1, {}]", k, n));
  }
  std::vector<std::uint64_t> small_catalan;
  for (int j = 0; j < n; ++j) {
    small_catalan.push_back(catalan(j).convert_to<std::uint64_t>());
  }
  return BigInt(sum_over_compositions(n, k, small_catalan));
}

}  // namespace telescope::perm
