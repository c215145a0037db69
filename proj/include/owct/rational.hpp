#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace owct {

// All quantities in this library (processing times, releases, weights,
// schedule times, LP data) are exact rationals. Guarantee checks are exact
// inequalities, so there is no tolerance anywhere in the core.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Accepts "a", "-a", "a/b", "a.b", "-a.b", ".b" (no exponents).
Rational parse_rational(std::string_view text);

// "n" when the denominator is 1, "n/d" otherwise.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

// Exact value of the double (doubles are dyadic rationals).
Rational rational_from_double(double x);

BigInt floor_rat(const Rational& q);
BigInt ceil_rat(const Rational& q);

// 2^k as a rational, k may be negative.
Rational pow2(int k);

}  // namespace owct
