#include "mds/bigint.hpp"

#include <algorithm>

#include "mds/error.hpp"

namespace mds {

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt pow_big(const BigInt& base, unsigned exponent) {
  BigInt r = 1;
  for (unsigned i = 0; i < exponent; ++i) r *= base;
  return r;
}

BigInt isometry_group_order(int q, int n) {
  return factorial(static_cast<unsigned>(n)) * pow_big(factorial(static_cast<unsigned>(q)), static_cast<unsigned>(n));
}

BigInt exact_div(const BigInt& num, const BigInt& den, const std::string& what) {
  if (den == 0) throw ConsistencyError(what + ": division by zero");
  BigInt quot, rem;
  boost::multiprecision::divide_qr(num, den, quot, rem);
  if (rem != 0) throw ConsistencyError(what + ": " + to_string(den) + " does not divide " + to_string(num));
  return quot;
}

BigInt ceil_div(const BigInt& num, const BigInt& den) {
  BigInt quot, rem;
  boost::multiprecision::divide_qr(num, den, quot, rem);
  if (rem != 0) ++quot;
  return quot;
}

std::string to_string(const BigInt& x) { return x.str(); }

BigInt parse_bigint(const std::string& text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw FormatError("not a nonnegative integer: '" + text + "'");
  return BigInt(text);
}

std::string sci2_floor(const BigInt& x) {
  const std::string digits = x.str();
  if (x < 100) return digits;
  const std::size_t exponent = digits.size() - 1;
  return std::string(1, digits[0]) + "." + digits[1] + "e" + std::to_string(exponent);
}

}  // namespace mds
