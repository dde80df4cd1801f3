/// @file iso.hpp
/// @brief Isomorphism decisions, witness construction, and exact verification
///        for the three algebra families.
///
/// Decisions are purely parameter-level:
///  * quantum affine: a permutation sigma with q_ij = p_{sigma(i) sigma(j)};
///  * homogenized Weyl: a sign vector epsilon with mu_i = gamma_i^{eps_i} and,
///    for i < j, q_ij equal to p_ij / p_ji / gamma_i^{-1} p_ji / gamma_i p_ij
///    according to (eps_i, eps_j) = (+,+) / (-,+) / (+,-) / (-,-);
///  * quantum matrix: mu must equal lambda or lambda^{-1}, and then one of
///    four entrywise matches holds on the lower triangle (i > j):
///      (1) mu = lambda,      q_ij = p_ij                      (identity)
///      (2) mu = lambda,      q_ji = lambda p_ij               (transpose)
///      (3) mu = lambda^{-1}, q_{n+1-i,n+1-j} = p_ij           (flip)
///      (4) mu = lambda^{-1}, q_{n+1-j,n+1-i} = lambda p_ij    (transpose of flip)
///
/// Witness maps are a separate, always-verified layer: every map handed out
/// has passed verify_homomorphism, and certificates carry the exact inverse.
/// Degree-preserving maps suffice for these graded algebras, so witnesses are
/// square rational matrices acting on the degree-1 generators.

#pragma once

#include "qaw/linalg.hpp"
#include "qaw/ncpoly.hpp"
#include "qaw/presentation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qaw {

/// Degree-1 linear map: source generator i maps to sum_j matrix[i][j] * (target generator j).
struct GeneratorMap {
  Presentation source;
  Presentation target;
  Mat matrix;
};

/// Image of a polynomial under the map, reduced in the target.
NCPoly apply_generator_map(const GeneratorMap& map, const NCPoly& f);

/// Accumulated reasons why two presentations cannot be isomorphic.  An empty
/// report means "no obstruction found", not "isomorphic".
struct ObstructionReport {
  struct Item {
    std::string kind;    ///< stable identifier, e.g. "parameter_multiset_mismatch"
    std::string detail;  ///< human-readable explanation
  };
  std::vector<Item> items;

  bool empty() const { return items.empty(); }
  bool has_kind(const std::string& kind) const;
};

/// Lexicographically least permutation sigma (0-based) with
/// q_ij = p_{sigma(i) sigma(j)}, or nullopt.  Size mismatch is a decisive no.
std::optional<std::vector<int>> decide_qas(const ParamMatrix& p, const ParamMatrix& q);

/// First sign vector (+1 before -1, leftmost component most significant)
/// satisfying the componentwise and pairwise conditions above, or nullopt.
std::optional<std::vector<int>> decide_hweyl(const ParamMatrix& p, const GammaVector& gamma,
                                             const ParamMatrix& q, const GammaVector& mu);

/// Lowest case tag in {1,2,3,4} whose entrywise condition holds, or nullopt
/// (in particular whenever mu is neither lambda nor its inverse).
/// @throws std::invalid_argument when lambda or mu is 0 or +-1.
std::optional<int> decide_qma(const Rational& lambda, const ParamMatrix& p, const Rational& mu,
                              const ParamMatrix& q);

/// Witness maps for successful decisions.  Each result has already passed
/// verify_homomorphism; construction throws std::runtime_error if that check
/// ever fails (it indicates an inconsistent decision).
GeneratorMap build_witness_qas(const std::vector<int>& sigma, const Presentation& source,
                               const Presentation& target);
GeneratorMap build_witness_qma(int qma_case, const Presentation& source,
                               const Presentation& target);

/// Homogenized Weyl witness for a sign vector: scalars are delegated to
/// solve_scalar_map.  Returns nullopt when the scalar system is infeasible
/// (possible for mixed signs at n >= 3); construction is guaranteed for
/// n <= 2 and for pure sign vectors.
std::optional<GeneratorMap> build_witness_hweyl(const std::vector<int>& epsilon,
                                                const Presentation& source,
                                                const Presentation& target);

/// Generator correspondence with one unknown nonzero scalar per generator:
/// source generator k maps to (unknown_k) * target generator target_of[k].
struct ScalarPattern {
  std::vector<int> target_of;
};

/// Applies the pattern to every source rule, reduces in the target, and
/// solves the resulting monomial constraints by sequential elimination
/// (frontier constraints are univariate over already-determined scalars;
/// otherwise the lowest-rank undetermined scalar is normalized to 1, which
/// fixes the unit image z -> z first).  Returns the scalars by source rank,
/// or nullopt when the constraints are infeasible.
/// @throws std::invalid_argument when the pattern is not a bijection.
std::optional<std::vector<Rational>> solve_scalar_map(const Presentation& source,
                                                      const Presentation& target,
                                                      const ScalarPattern& pattern);

/// True iff every source rule a.b -> r satisfies
/// normal_form(map(a).map(b) - map(r)) = 0 in the target.
bool verify_homomorphism(const GeneratorMap& map);

/// True iff the matrix is invertible and both the map and its exact inverse
/// pass verify_homomorphism.
bool verify_isomorphism(const GeneratorMap& map);

/// Accumulates all applicable parameter-level obstructions between two
/// same-family presentations (generator counts, parameter multisets, the
/// lambda relation, sign-vector / case / permutation exhaustion).
ObstructionReport obstruction_report(const Presentation& a, const Presentation& b);

/// Full decision outcome with optional verified witness data.
struct IsoCertificate {
  bool isomorphic = false;
  std::string witness_kind;  ///< "permutation", "sign_vector", or "qma_case"
  std::optional<std::vector<int>> sigma;    ///< 0-based permutation
  std::optional<std::vector<int>> epsilon;  ///< entries +-1
  std::optional<std::vector<Rational>> scalars;
  std::optional<int> qma_case;
  std::optional<GeneratorMap> map;      ///< verified forward witness
  std::optional<Mat> inverse_matrix;    ///< exact inverse, reverse-verified
  ObstructionReport obstructions;       ///< populated on a negative decision
  std::optional<std::string> note;      ///< e.g. witness unavailable
};

/// Dispatches on the family, decides, and (optionally) builds and verifies
/// the witness map in both directions.
/// @throws std::invalid_argument for cross-family or custom inputs.
IsoCertificate decide_isomorphism(const Presentation& a, const Presentation& b,
                                  bool want_witness);

}  // namespace qaw
