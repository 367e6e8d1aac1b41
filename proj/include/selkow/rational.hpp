// Exact rational arithmetic used for every bound, probability and expectation.
// Values are never rounded; decimal rendering exists for display only.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace selkow {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// n! for n >= 0.
BigInt factorial(int n);

// Binomial coefficient, 0 when k < 0 or k > n.
BigInt binomial(int n, int k);

// Smallest integer >= r.
BigInt ceil_rational(const Rational& r);

// Fixed-point rendering with `digits` decimals, ties rounded half to even.
// Display only; exact comparisons must always use the Rational itself.
std::string decimal_string(const Rational& r, int digits = 6);

}  // namespace selkow
