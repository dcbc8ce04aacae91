#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace telescope {

/// Exact integer used for every combinatorial count.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational used for finite laws and combinatorial ratios.
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(std::int64_t n);
BigInt binomial(std::int64_t n, std::int64_t k);

// Rounds to the nearest double; only call at reporting boundaries.
double to_double(const Rational& r);
double to_double(const BigInt& v);

/// "p/q" in lowest terms ("p" when the denominator is 1).
std::string to_string(const Rational& r);
std::string to_string(const BigInt& v);

}  // namespace telescope
