/// @file linalg.hpp
/// @brief Exact dense linear algebra over the rationals.
///
/// Matrices here are small (at most a few hundred rows at desk scale), so a
/// plain dense Gaussian elimination with exact rational pivots is both simple
/// and fully reliable: feasibility answers are exact, never numerical.

#pragma once

#include "qaw/rational.hpp"

#include <optional>
#include <vector>

namespace qaw {

using Vec = std::vector<Rational>;
using Mat = std::vector<std::vector<Rational>>;

/// n x n identity matrix.
Mat identity_matrix(int n);

/// Matrix product A * B. @throws std::invalid_argument on shape mismatch.
Mat mat_mul(const Mat& a, const Mat& b);

/// Rank of @p m via exact Gaussian elimination (0 for an empty matrix).
int rank(Mat m);

/// Determinant of a square matrix. @throws std::invalid_argument otherwise.
Rational determinant(Mat m);

/// Exact inverse, or nullopt when singular.
std::optional<Mat> inverse(const Mat& m);

/// One exact solution of A x = b (free variables set to zero), or nullopt
/// when the system is infeasible.  A may be rectangular.
std::optional<Vec> solve_linear(const Mat& a, const Vec& b);

/// Reduced row echelon form computed in place; returns the pivot column of
/// each nonzero row, in order.
std::vector<int> rref(Mat& m);

}  // namespace qaw
