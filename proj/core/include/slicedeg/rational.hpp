#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace slicedeg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "num/den" or a bare integer. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// Canonical "num/den" form; integers print without a denominator.
std::string to_string(const Rational& q);

}  // namespace slicedeg
