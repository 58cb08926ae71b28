#ifndef BSPDE_RATIONAL_HPP
#define BSPDE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace bspde {

using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, kept in canonical form (positive denominator,
/// gcd(num, den) = 1) by the backend. All arithmetic is exact.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p", "-p" or "p/q" (q > 0 after normalization). Throws ConfigError
/// on anything else, including q = 0.
Rational parse_rational(std::string_view text);

/// Formats as "p" when the denominator is 1, otherwise "p/q". Inverse of
/// parse_rational, so round-trips are exact and byte-stable.
std::string format_rational(const Rational& value);

double to_double(const Rational& value);

/// Bit length of |numerator| (0 for a zero value). Size metadata for reports.
int numerator_bits(const Rational& value);

} // namespace bspde

#endif // BSPDE_RATIONAL_HPP
