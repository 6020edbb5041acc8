#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace rwa {

// Exact arbitrary-precision rational, the weight domain. cpp_rational keeps
// the canonical form invariant (denominator > 0, gcd(|num|, den) = 1) across
// construction and arithmetic; nothing here ever rounds.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// Accepts "p", "-p", "p/q" (q > 0) and exact decimals like "0.25" or "-1.5".
// Throws ParseError on anything else, including "p/0".
Rational parse_rational(const std::string& text);

// Canonical form: "p/q", or plain "p" when q = 1.
std::string rational_to_string(const Rational& r);

} // namespace rwa
