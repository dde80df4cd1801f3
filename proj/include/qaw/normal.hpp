/// @file normal.hpp
/// @brief Degree-one normal elements, iterative quotient chains, and
///        randomized completeness evidence.
///
/// A degree-1 element u is normal when u.A = A.u as graded ideals; for an
/// algebra generated in degree 1 this is certified by exhibiting, for every
/// generator g, degree-1 witnesses r_g and s_g with g.u = u.r_g and
/// u.g = s_g.u, both identities holding exactly in normal form.  Finding the
/// witnesses is exact linear algebra over the degree-2 ordered-word basis.
///
/// The finder searches supports of size one and two.  For u = g_i + t*g_j the
/// per-generator feasibility conditions become polynomial conditions on t;
/// the rational roots of those polynomials are enumerated and every candidate
/// is certified individually, so each returned element carries an exact
/// certificate.  Completeness of the search beyond support two is not proven
/// here; falsify_completeness provides randomized evidence instead.

#pragma once

#include "qaw/ncpoly.hpp"
#include "qaw/presentation.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace qaw {

/// Exact two-sided normality witness for a degree-1 element.
struct NormalityCertificate {
  NCPoly u;
  std::vector<NCPoly> left;   ///< left[g]:  g.u = u.left[g]
  std::vector<NCPoly> right;  ///< right[g]: u.g = right[g].u
};

/// Certifies normality of a nonzero homogeneous degree-1 element, or returns
/// nullopt when some per-generator witness system is infeasible.  Every
/// returned certificate has been re-verified exactly.
/// @throws std::invalid_argument when u is zero or not degree-1 homogeneous.
std::optional<NormalityCertificate> is_normal_degree_one(const Presentation& pres,
                                                         const NCPoly& u);

/// All certified-normal elements of support <= support_bound (1 or 2),
/// deduplicated up to scalar and scaled so the lowest-rank coefficient is 1.
/// A pair whose two endpoints are both individually normal is skipped: the
/// returned generators already span that plane.
/// @throws std::invalid_argument for unsupported bounds.
std::vector<NCPoly> find_normal_degree_one(const Presentation& pres, int support_bound = 2);

/// Quotient by certified-normal degree-1 elements whose span is, after exact
/// row reduction, spanned by coordinate generators.  Drops the killed
/// generators, substitutes zero for them in every rule, re-validates, and
/// re-checks confluence.
/// @throws std::invalid_argument when an element is not normal or the span is
/// not a coordinate subspace; std::runtime_error when the quotient loses
/// confluence.
Presentation quotient_by_degree_one(const Presentation& pres,
                                    const std::vector<NCPoly>& elements);

/// One step of the iterative chain: the elements killed at this step
/// (expressed in the presentation being quotiented) and the quotient after.
struct ChainStep {
  int index = 0;
  std::vector<NCPoly> killed;
  Presentation quotient;
};

struct ChainReport {
  std::vector<ChainStep> steps;

  /// Set when the final quotient is a quantum plane (two generators, one
  /// single-term rule v.u -> q u v): the parameter q.
  std::optional<Rational> plane_parameter;
  /// For homogenized Weyl inputs: whether the plane parameter equals the
  /// first / last gamma entry.  Both are reported because the two candidate
  /// answers disagree in general; the computation decides.
  std::optional<bool> plane_parameter_equals_first_gamma;
  std::optional<bool> plane_parameter_equals_last_gamma;
};

/// Repeatedly finds degree-1 normal elements and quotients them out, until
/// nothing is found, the algebra is exhausted, or max_steps is reached.
ChainReport iterative_chain(const Presentation& pres, int max_steps);

/// Structural check: two generators and one rule v.u -> q*(u v).
std::optional<Rational> quantum_plane_parameter(const Presentation& pres);

struct FalsificationReport {
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<NCPoly> counterexamples;  ///< certified normal outside the span
};

/// Samples random degree-1 elements with integer coefficients in [-5, 5],
/// resampled to lie outside the claimed span, and reports any that certify
/// normal.  Vacuously clean when the claimed span is the whole degree-1
/// space.  Deterministic for a fixed seed.
FalsificationReport falsify_completeness(const Presentation& pres,
                                         const std::vector<NCPoly>& claimed_span, int trials,
                                         std::uint64_t seed = 0);

}  // namespace qaw
