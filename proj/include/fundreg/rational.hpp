#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace fundreg {

/// Exact rational scalar used by every set predicate in the library.
using Rational = boost::rational<std::int64_t>;

/// "p/q", or just "p" when the denominator is one.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Largest integer not greater than q.
std::int64_t floor(const Rational& q);

}  // namespace fundreg
