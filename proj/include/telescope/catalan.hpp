#pragma once

#include "telescope/numeric.hpp"

namespace telescope::perm {

/// C_n = binom(2n, n) / (n + 1).
BigInt catalan(int n);

/// k-fold Catalan convolution C_{n,k} = k / (2n - k) * binom(2n - k, n).
///
/// Counts the 123-avoiding permutations of [n] whose first ascent is at k.
/// Throws std::out_of_range unless 1 <= k <= n.
BigInt catalan_convolution(int n, int k);

inline constexpr int kDefaultConvolutionCap = 30;

/// C_{n,k} as the sum over compositions i_1 + ... + i_k = n of prod C_{i_r - 1}.
///
/// Walks every composition, so the cost grows like binom(n - 1, k - 1).
BigInt catalan_convolution_bruteforce(int n, int k, int cap = kDefaultConvolutionCap);

}  // namespace telescope::perm
