#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace hncomb {

// All arithmetic in this library is exact. No floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using RatVec = std::vector<Rat>;

/// Parses "p" or "p/q" with q a positive integer. Throws ParseError otherwise.
Rat parse_rational(const std::string& text);

/// Canonical reduced form: "p" when the denominator is 1, else "p/q", q > 0.
std::string rat_to_string(const Rat& value);

Int rat_floor(const Rat& value);
Int rat_ceil(const Rat& value);

bool is_integer(const Rat& value);

std::string vec_to_string(const RatVec& values, char separator = ',');

}  // namespace hncomb
