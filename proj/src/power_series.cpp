#include "kcycles/power_series.hpp"

#include <algorithm>

#include "kcycles/error.hpp"

namespace kcycles {

PowerSeries::PowerSeries(std::size_t order, std::vector<BigRational> coefficients)
    : coefficients_(std::move(coefficients)) {
  coefficients_.resize(order + 1);
}

PowerSeries PowerSeries::exponential(const BigRational& c, std::size_t order) {
  PowerSeries out(order);
  BigRational term = 1;
  for (std::size_t j = 0; j <= order; ++j) {
    out[j] = term;
    term *= c;
    term /= static_cast<unsigned long>(j + 1);
  }
  return out;
}

PowerSeries PowerSeries::geometric(const BigRational& c, std::size_t order) {
  PowerSeries out(order);
  BigRational term = 1;
  for (std::size_t j = 0; j <= order; ++j) {
    out[j] = term;
    term *= c;
  }
  return out;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& rhs) {
  if (rhs.order() < order()) coefficients_.resize(rhs.order() + 1);
  for (std::size_t j = 0; j < coefficients_.size(); ++j) coefficients_[j] += rhs[j];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const BigRational& scalar) {
  for (auto& c : coefficients_) c *= scalar;
  return *this;
}

PowerSeries operator*(const PowerSeries& lhs, const PowerSeries& rhs) {
  const std::size_t order = std::min(lhs.order(), rhs.order());
  PowerSeries out(order);
  for (std::size_t i = 0; i <= order; ++i) {
    for (std::size_t j = 0; i + j <= order; ++j) out[i + j] += lhs[i] * rhs[j];
  }
  return out;
}

}  // namespace kcycles
