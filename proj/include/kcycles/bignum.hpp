#pragma once

// Exact integers and rationals used for every count and expectation.
// Both are thin aliases over GMP; mpq_class keeps values canonical as long
// as they are built through make_rational() or arithmetic.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace kcycles {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigRational make_rational(const BigInt& num, const BigInt& den = 1) {
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigInt factorial(std::uint64_t n);
BigInt binomial(std::uint64_t n, std::uint64_t r);
BigInt power(const BigInt& base, std::uint64_t exponent);

bool is_integral(const BigRational& q);

/// Returns the numerator of `q`, throwing an internal error when `q` has a
/// denominator other than one. `what` names the formula for the message.
BigInt require_integral(const BigRational& q, const char* what);

std::string to_string(const BigInt& z);

/// "13/5", or "2" for integers. With `force_denominator`, integers render as
/// "2/1".
std::string to_string(const BigRational& q, bool force_denominator = false);

/// Parses "p/q" or "p". Throws MalformedInput on anything else or q = 0.
BigRational parse_rational(const std::string& text);

}  // namespace kcycles
