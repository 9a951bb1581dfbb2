#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace fockcalc {

/// Arbitrary-precision signed integer used for every coefficient.
using Integer = boost::multiprecision::cpp_int;

inline std::string to_decimal(const Integer& v) { return v.str(); }

/// Parses an optionally signed decimal integer. Throws std::invalid_argument.
Integer parse_integer(std::string_view text);

}  // namespace fockcalc
