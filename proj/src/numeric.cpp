#include "telescope/numeric.hpp"

#include <stdexcept>

namespace telescope {

BigInt factorial(std::int64_t n) {
  if (n < 0) {
    throw std::invalid_argument("factorial: negative argument");
  }
  BigInt result = 1;
  for (std::int64_t i = 2; i <= n; ++i) {
    result *= i;
  }
  return result;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // Each partial product is itself a binomial coefficient, so the division is exact.
    result *= n - k + i;
    result /= i;
  }
  return result;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

double to_double(const BigInt& v) { return v.convert_to<double>(); }

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace telescope
