/// @file presentation.hpp
/// @brief Ordered quadratic rewriting presentations of three algebra families.
///
/// A Presentation fixes a totally ordered list of generators (position =
/// rank) and, for every out-of-order pair a > b, exactly one rewrite rule
///     a . b  ->  sum of c_m * m
/// where each monomial m is a degree-2 word that is nondecreasing in rank.
/// Rewriting with such rules strictly decreases the lexicographic order on
/// fixed-length words for the built-in families, so normal forms terminate.
///
/// Families:
///  * quantum_affine O_p(k^n): generators x_1 < ... < x_n with
///      x_i x_j = p_ij x_j x_i, so the rule is x_j.x_i -> p_ji x_i x_j (j>i).
///  * homogenized_weyl H_n^{p,gamma}: generators z < y_1 < x_1 < ... < y_n <
///    x_n; z is central; for i < j
///      y_j.y_i -> p_ji y_i y_j,
///      x_j.x_i -> gamma_i^{-1} p_ji x_i x_j,
///      y_j.x_i -> p_ij x_i y_j,
///      x_j.y_i -> gamma_i p_ij y_i x_j,
///    and on the diagonal
///      x_j.y_j -> z^2 + gamma_j y_j x_j + sum_{l<j} (gamma_l - 1) y_l x_l.
///  * quantum_matrix O_{lambda,p}(M_n): generators X_11 < X_12 < ... < X_nn
///    in row-major order; for (l,m) > (i,j) the rule for X_lm.X_ij is
///      l>i, m>j :  p_li p_jm X_ij X_lm + (lambda-1) p_li X_im X_lj
///      l>i, m<=j:  lambda p_li p_jm X_ij X_lm
///      l=i, m>j :  p_jm X_ij X_lm.
///
/// Presentations are immutable after construction and safe to share.

#pragma once

#include "qaw/ncpoly.hpp"
#include "qaw/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qaw {

/// Multiplicatively antisymmetric parameter matrix: p_ii = 1, p_ij p_ji = 1,
/// all entries nonzero.
struct ParamMatrix {
  int n = 0;
  std::vector<std::vector<Rational>> entries;

  /// Builds the full matrix from the strict upper triangle, row by row
  /// (p_12, p_13, ..., p_23, ...); the lower triangle holds the inverses.
  static ParamMatrix from_upper_triangle(int n, const std::vector<Rational>& upper);

  const Rational& at(int i, int j) const { return entries[i - 1][j - 1]; }  ///< 1-based.
};

/// Vector of nonzero scalars gamma_1..gamma_n.
struct GammaVector {
  int n = 0;
  std::vector<Rational> entries;

  const Rational& at(int i) const { return entries[i - 1]; }  ///< 1-based.
};

enum class Family { QuantumAffine, HomogenizedWeyl, QuantumMatrix, Custom };

std::string family_name(Family f);

/// One rewrite rule lhs_hi.lhs_lo -> rhs with lhs_hi > lhs_lo (ranks).
struct Rule {
  int lhs_hi = 0;
  int lhs_lo = 0;
  NCPoly rhs;
};

struct Presentation {
  Family family = Family::Custom;
  std::vector<std::string> generator_names;  ///< rank = index
  std::vector<Rule> rules;                   ///< one per out-of-order pair

  /// Defining parameters, present when applicable to the family.
  std::optional<ParamMatrix> p;
  std::optional<GammaVector> gamma;
  std::optional<Rational> lambda;
  int family_n = 0;  ///< the n of the family (0 for custom)

  int generator_count() const { return static_cast<int>(generator_names.size()); }

  /// Rule with left side a.b, or nullptr when none is declared.
  const Rule* find_rule(int a, int b) const;

  /// Rank of a named generator, or -1 when unknown.
  int rank_of(const std::string& name) const;
};

/// O_p(k^n). @throws std::invalid_argument on an invalid parameter matrix.
Presentation make_quantum_affine(const ParamMatrix& p);

/// H_n^{p,gamma}. @throws std::invalid_argument on invalid or mismatched
/// parameters.
Presentation make_homogenized_weyl(const ParamMatrix& p, const GammaVector& gamma);

/// O_{lambda,p}(M_n). @throws std::invalid_argument when lambda is 0 or +-1
/// (lambda = 1 degenerates to a quantum affine space, which has its own
/// constructor) or the matrix is invalid.
Presentation make_quantum_matrix(const Rational& lambda, const ParamMatrix& p);

/// Custom presentation from explicit generators and rules; validated
/// structurally but flagged unverified until a confluence check passes.
Presentation make_custom(std::vector<std::string> generator_names, std::vector<Rule> rules);

/// Reports every violated Presentation invariant (empty means valid):
/// parameter constraints, quadratic homogeneous rules, rank-nondecreasing
/// right sides, exactly one rule per out-of-order pair.
std::vector<std::string> validate_presentation(const Presentation& pres);

/// Row/column of a quantum-matrix generator rank and back (1-based).
std::pair<int, int> qma_position(int rank, int n);
int qma_rank(int row, int col, int n);

}  // namespace qaw
