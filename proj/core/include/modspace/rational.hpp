#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace modspace {

/// Arbitrary-precision exact rational. All index arithmetic goes through this type.
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

double to_double(const Rational& r);

/// "a/b", or "a" when the denominator is one.
std::string to_string(const Rational& r);

/// Accepts "a", "-a", "a/b"; no decimals, no whitespace.
Rational parse_rational(std::string_view text);

inline const Rational& min_of(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max_of(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace modspace
