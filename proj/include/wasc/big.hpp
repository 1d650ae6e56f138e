#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace wasc {

// Exact counts and the rationals used while summing closed forms.
using BigCount = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigCount& value) { return value.str(); }

// C(n, k) by the multiplicative formula; each partial product is an integer.
inline BigCount binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

inline BigCount factorial(std::int64_t n) {
  BigCount result = 1;
  for (std::int64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

inline BigCount catalan(std::int64_t n) { return binomial(2 * n, n) / (n + 1); }

inline BigCount power_of_two(unsigned exponent) {
  BigCount result = 1;
  result <<= exponent;
  return result;
}

// Throws unless the rational is a non-negative integer.
inline BigCount exact_non_negative_integer(const Rational& value, const char* what) {
  if (denominator(value) != 1) {
    throw std::logic_error(std::string(what) + ": non-integral value " + value.str());
  }
  BigCount result = numerator(value);
  if (result < 0) {
    throw std::logic_error(std::string(what) + ": negative value " + result.str());
  }
  return result;
}

}  // namespace wasc
