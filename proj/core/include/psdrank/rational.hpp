#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace psdrank {

using Integer = boost::multiprecision::cpp_int;

/// Arbitrary-precision signed rational. cpp_rational keeps every value
/// reduced with a positive denominator, which is exactly the storage
/// invariant all exact computation here relies on.
using Rational = boost::multiprecision::cpp_rational;

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& n);

/// Accepts "p" or "p/q" with an optional leading minus; q must be nonzero.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

int sign_of(const Rational& r);
bool is_integer(const Rational& r);

}  // namespace psdrank
