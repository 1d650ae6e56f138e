#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "wasc/big.hpp"

namespace wasc {

// Formal power series truncated after x^order, with exact rational
// coefficients. Binary operations require equal orders.
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t order) : coeffs_(order + 1, Rational(0)) {}

  // Polynomial given lowest degree first; terms above `order` are dropped.
  PowerSeries(std::size_t order, std::initializer_list<Rational> poly) : PowerSeries(order) {
    std::size_t i = 0;
    for (const Rational& c : poly) {
      if (i > order) break;
      coeffs_[i++] = c;
    }
  }

  static PowerSeries constant(std::size_t order, const Rational& c) { return PowerSeries(order, {c}); }

  // x^k
  static PowerSeries monomial(std::size_t order, std::size_t k) {
    PowerSeries s(order);
    if (k <= order) s.coeffs_[k] = 1;
    return s;
  }

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
  Rational& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  // Coefficients as integers; throws if any is fractional or negative.
  std::vector<BigCount> integer_coefficients() const {
    std::vector<BigCount> out;
    out.reserve(coeffs_.size());
    for (const Rational& c : coeffs_) out.push_back(exact_non_negative_integer(c, "series coefficient"));
    return out;
  }

  PowerSeries& operator+=(const PowerSeries& other) {
    check_order(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
  }

  PowerSeries& operator-=(const PowerSeries& other) {
    check_order(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
  }

  PowerSeries& operator*=(const Rational& scalar) {
    for (Rational& c : coeffs_) c *= scalar;
    return *this;
  }

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(PowerSeries a, const Rational& s) { return a *= s; }

  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    a.check_order(b);
    PowerSeries out(a.order());
    const std::size_t n = a.coeffs_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; i + j < n; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
  }

  // Same series re-truncated (or zero-extended) to a new order.
  PowerSeries with_order(std::size_t new_order) const {
    PowerSeries out(new_order);
    for (std::size_t i = 0; i <= std::min(order(), new_order); ++i) out.coeffs_[i] = coeffs_[i];
    return out;
  }

  // Multiplication by x^k.
  PowerSeries shifted(std::size_t k) const {
    PowerSeries out(order());
    for (std::size_t i = 0; i + k < coeffs_.size(); ++i) out.coeffs_[i + k] = coeffs_[i];
    return out;
  }

  // The unique g with numerator = denominator * g (mod x^{order+1}).
  friend PowerSeries operator/(const PowerSeries& numerator, const PowerSeries& denominator) {
    numerator.check_order(denominator);
    const Rational& lead = denominator.coeffs_[0];
    if (lead == 0) throw std::domain_error("power series division by a series with zero constant term");
    PowerSeries out(numerator.order());
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) {
      Rational acc = numerator.coeffs_[i];
      for (std::size_t j = 1; j <= i; ++j) acc -= denominator.coeffs_[j] * out.coeffs_[i - j];
      out.coeffs_[i] = acc / lead;
    }
    return out;
  }

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.coeffs_ == b.coeffs_; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
  }

 private:
  void check_order(const PowerSeries& other) const {
    if (other.order() != order()) throw std::invalid_argument("power series order mismatch");
  }

  std::vector<Rational> coeffs_;
};

}  // namespace wasc
