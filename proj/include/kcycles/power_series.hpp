#pragma once

#include <cstddef>
#include <vector>

#include "kcycles/bignum.hpp"

namespace kcycles {

/// Formal power series truncated after x^order, with exact coefficients.
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t order) : coefficients_(order + 1) {}
  PowerSeries(std::size_t order, std::vector<BigRational> coefficients);

  std::size_t order() const noexcept { return coefficients_.size() - 1; }
  const BigRational& operator[](std::size_t j) const { return coefficients_.at(j); }
  BigRational& operator[](std::size_t j) { return coefficients_.at(j); }
  const std::vector<BigRational>& coefficients() const noexcept { return coefficients_; }

  /// exp(c x) truncated at order.
  static PowerSeries exponential(const BigRational& c, std::size_t order);
  /// 1/(1 - c x) truncated at order.
  static PowerSeries geometric(const BigRational& c, std::size_t order);

  PowerSeries& operator+=(const PowerSeries& rhs);
  PowerSeries& operator*=(const BigRational& scalar);

  friend PowerSeries operator+(PowerSeries lhs, const PowerSeries& rhs) { return lhs += rhs; }
  friend PowerSeries operator*(PowerSeries lhs, const BigRational& s) { return lhs *= s; }
  /// Cauchy product; the result has the smaller of the two orders.
  friend PowerSeries operator*(const PowerSeries& lhs, const PowerSeries& rhs);

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<BigRational> coefficients_;
};

}  // namespace kcycles
