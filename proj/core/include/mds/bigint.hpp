#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace mds {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(unsigned n);

/// |G_n| = n! * (q!)^n, the order of the group of code isometries.
BigInt isometry_group_order(int q, int n);

BigInt pow_big(const BigInt& base, unsigned exponent);

/// Exact quotient; throws ConsistencyError when `den` does not divide `num`.
BigInt exact_div(const BigInt& num, const BigInt& den, const std::string& what);

BigInt ceil_div(const BigInt& num, const BigInt& den);

/// Decimal rendering.
std::string to_string(const BigInt& x);

BigInt parse_bigint(const std::string& text);

/// "4.8e7"-style rendering with two significant figures, rounded toward zero
/// so that a printed lower bound stays a lower bound.
std::string sci2_floor(const BigInt& x);

}  // namespace mds
