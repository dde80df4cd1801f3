/// @file rational.hpp
/// @brief Exact rational scalars: the coefficient field for the whole workbench.
///
/// Every coefficient and parameter in the system is an arbitrary-precision
/// rational in canonical form (reduced, positive denominator).  Arithmetic is
/// exact; no rounding ever occurs.  Values are immutable and safe to share
/// across threads.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace qaw {

/// Arbitrary-precision integer.
using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, kept in lowest terms with positive
/// denominator by the underlying representation.
using Rational = boost::multiprecision::cpp_rational;

/// Parses `[-]?digits(/digits)?` into a canonical rational.
/// @throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical string form: `"p/q"` if q != 1, else `"p"`.
std::string rational_to_string(const Rational& r);

/// Multiplicative inverse.
/// @throws std::invalid_argument when @p r is zero.
Rational rational_inverse(const Rational& r);

/// Exact square root if @p r is a perfect square of a rational; nullopt
/// otherwise (including all negative inputs).
std::optional<Rational> rational_sqrt(const Rational& r);

/// Binomial coefficient C(n, k) as an exact integer (0 when k < 0 or k > n).
Int binomial(int n, int k);

}  // namespace qaw
