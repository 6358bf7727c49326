#include "kcycles/bignum.hpp"

#include "kcycles/error.hpp"

namespace kcycles {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::malformed_input: return "malformed input";
    case ErrorCode::domain: return "domain error";
    case ErrorCode::empty_population: return "empty population";
    case ErrorCode::unsupported: return "unsupported parameter";
    case ErrorCode::resource: return "resource limit exceeded";
    case ErrorCode::internal: return "internal error";
    case ErrorCode::render: return "rendering error";
    case ErrorCode::network: return "network error";
  }
  return "unknown error";
}

BigInt factorial(std::uint64_t n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, r);
  return out;
}

BigInt power(const BigInt& base, std::uint64_t exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

bool is_integral(const BigRational& q) { return q.get_den() == 1; }

BigInt require_integral(const BigRational& q, const char* what) {
  if (!is_integral(q)) {
    fail(ErrorCode::internal,
         std::string(what) + " produced non-integral value " + q.get_str());
  }
  return q.get_num();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

std::string to_string(const BigRational& q, bool force_denominator) {
  if (q.get_den() == 1 && !force_denominator) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_integer_literal(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

BigRational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den =
      slash == std::string::npos ? std::string("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    fail(ErrorCode::malformed_input, "not a rational: '" + text + "'");
  }
  BigInt n(num[0] == '+' ? num.substr(1) : num);
  BigInt d(den[0] == '+' ? den.substr(1) : den);
  if (d == 0) fail(ErrorCode::malformed_input, "zero denominator: '" + text + "'");
  return make_rational(n, d);
}

}  // namespace kcycles
