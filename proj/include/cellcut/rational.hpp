#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace cellcut {

/// Exact non-negative quantity used for volumes, weights and traffic.
using Rational = boost::rational<std::int64_t>;

/// Parses "7", "2.5" or "5/2". Throws std::invalid_argument on malformed or
/// negative input.
Rational parse_rational(std::string_view text);

/// "7" for integers, "5/2" otherwise. Round-trips through parse_rational.
std::string format_rational(const Rational& value);

inline double to_double(const Rational& value) {
  return boost::rational_cast<double>(value);
}

}  // namespace cellcut
