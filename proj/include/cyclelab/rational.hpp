#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <string_view>

namespace cyclelab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "0.3", "3/10", "1e-2" or "2" into an exact rational.
/// Throws ParameterRejected on malformed input.
Rational parse_rational(std::string_view text);

BigInt ceil_rational(const Rational& q);
BigInt floor_rational(const Rational& q);

/// count >= q, compared exactly.
inline bool at_least(std::size_t count, const Rational& q) { return Rational(count) >= q; }

std::string to_string(const Rational& q);
double to_double(const Rational& q);

}  // namespace cyclelab
