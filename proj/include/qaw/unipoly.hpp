/// @file unipoly.hpp
/// @brief Univariate polynomials over the rationals.
///
/// Used by the degree-one normal-element search: feasibility of the
/// one-parameter family u = g_i + t*g_j reduces to exact polynomial
/// conditions on t, whose rational roots are then enumerated and certified
/// individually.  Coefficients are stored low degree first with no trailing
/// zeros; the zero polynomial is the empty vector.

#pragma once

#include "qaw/rational.hpp"

#include <vector>

namespace qaw {

using UPoly = std::vector<Rational>;

/// Drops trailing zero coefficients in place and returns the argument.
UPoly& upoly_trim(UPoly& p);

bool upoly_is_zero(const UPoly& p);
int upoly_degree(const UPoly& p);  ///< -1 for the zero polynomial.

UPoly upoly_const(const Rational& c);
UPoly upoly_add(const UPoly& a, const UPoly& b);
UPoly upoly_sub(const UPoly& a, const UPoly& b);
UPoly upoly_mul(const UPoly& a, const UPoly& b);
UPoly upoly_scale(const UPoly& a, const Rational& c);

/// Exact evaluation at @p t.
Rational upoly_eval(const UPoly& p, const Rational& t);

/// Monic gcd (zero polynomial when both inputs are zero).
UPoly upoly_gcd(UPoly a, UPoly b);

/// All rational roots of @p p, each verified by exact evaluation.
/// @throws std::invalid_argument for the zero polynomial (every t is a root).
std::vector<Rational> rational_roots(const UPoly& p);

}  // namespace qaw
