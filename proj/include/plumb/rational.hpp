#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace plumb {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Formats as "p/q" in lowest terms, always with an explicit denominator ("0/1", "-3/2").
std::string to_fraction_string(const Rational& r);

/// Accepts "p/q", "p" or a terminating decimal such as "2.5". Throws Error on bad input.
Rational parse_rational(std::string_view text);

/// Smallest integer B >= 0 with B*B >= r (r >= 0).
std::int64_t ceil_sqrt(const Rational& r);

std::int64_t floor_to_int(const Rational& r);

/// binom(n, k) as int64; throws on overflow.
std::int64_t binomial(std::int64_t n, std::int64_t k);

/// a + b and a * b with overflow detection.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace plumb
