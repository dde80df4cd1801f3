#include "qaw/iso.hpp"

#include "qaw/rewrite.hpp"
#include "qaw/unipoly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace qaw {

namespace {

void require_decidable_scalar(const Rational& value, const char* name) {
  if (value == 0 || value == 1 || value == -1) {
    throw std::invalid_argument(std::string("decide_qma: ") + name + " must not be 0, 1, or -1");
  }
}

/// Multiset of off-diagonal entries different from 1.
std::multiset<Rational> offdiagonal_multiset(const ParamMatrix& p) {
  std::multiset<Rational> out;
  for (int i = 1; i <= p.n; ++i) {
    for (int j = 1; j <= p.n; ++j) {
      if (i != j && p.at(i, j) != 1) out.insert(p.at(i, j));
    }
  }
  return out;
}

bool qas_extend(const ParamMatrix& p, const ParamMatrix& q, std::vector<int>& sigma,
                std::vector<bool>& used, int k) {
  const int n = p.n;
  if (k == n) return true;
  for (int v = 0; v < n; ++v) {
    if (used[v]) continue;
    bool ok = true;
    for (int l = 0; l < k && ok; ++l) {
      ok = q.at(k + 1, l + 1) == p.at(v + 1, sigma[l] + 1) &&
           q.at(l + 1, k + 1) == p.at(sigma[l] + 1, v + 1);
    }
    if (!ok) continue;
    sigma[k] = v;
    used[v] = true;
    if (qas_extend(p, q, sigma, used, k + 1)) return true;
    used[v] = false;
  }
  return false;
}

/// Pairwise condition of the sign-vector table for components i < j (1-based).
Rational expected_q_entry(int eps_i, int eps_j, const ParamMatrix& p, const GammaVector& gamma,
                          int i, int j) {
  if (eps_i > 0 && eps_j > 0) return p.at(i, j);
  if (eps_i < 0 && eps_j > 0) return p.at(j, i);
  if (eps_i > 0 && eps_j < 0) return p.at(j, i) / gamma.at(i);
  return gamma.at(i) * p.at(i, j);
}

NCPoly generator_image(const GeneratorMap& map, int source_rank) {
  NCPoly out;
  for (int j = 0; j < map.target.generator_count(); ++j) {
    out.add_term({j}, map.matrix[source_rank][j]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sequential solver for scalar patterns.
// ---------------------------------------------------------------------------

/// coeff * prod(factors), factors being unknown ids (0, 1, or 2 of them).
struct Monomial {
  Rational coeff;
  std::vector<int> factors;
};
using Equation = std::vector<Monomial>;

struct SolverState {
  std::vector<std::optional<Rational>> value;
  std::vector<Equation> equations;
};

/// Substitutes determined unknowns; returns the reduced equation.
Equation reduce_equation(const Equation& eq, const std::vector<std::optional<Rational>>& value) {
  Equation out;
  for (const Monomial& m : eq) {
    Monomial r;
    r.coeff = m.coeff;
    for (int u : m.factors) {
      if (value[u]) {
        r.coeff *= *value[u];
      } else {
        r.factors.push_back(u);
      }
    }
    if (r.coeff != 0) out.push_back(std::move(r));
  }
  return out;
}

/// Collapses a reduced equation into c2 u^2 + c1 u + c0 when it mentions at
/// most the single unknown @p u; false when several unknowns remain.
bool as_univariate(const Equation& eq, int& u, Rational& c2, Rational& c1, Rational& c0) {
  u = -1;
  c2 = c1 = c0 = 0;
  for (const Monomial& m : eq) {
    if (m.factors.empty()) {
      c0 += m.coeff;
      continue;
    }
    for (int f : m.factors) {
      if (u == -1) u = f;
      if (f != u) return false;
    }
    (m.factors.size() == 1 ? c1 : c2) += m.coeff;
  }
  return true;
}

bool solve_sequentially(SolverState state, std::vector<Rational>& out);

/// Tries one root assignment and recurses; used for the quadratic branches.
bool try_assignment(const SolverState& state, int unknown, const Rational& root,
                    std::vector<Rational>& out) {
  if (root == 0) return false;  // scalars must stay invertible
  SolverState next = state;
  next.value[unknown] = root;
  return solve_sequentially(std::move(next), out);
}

bool solve_sequentially(SolverState state, std::vector<Rational>& out) {
  while (true) {
    bool progressed = false;
    for (const Equation& eq : state.equations) {
      const Equation red = reduce_equation(eq, state.value);
      if (red.empty()) continue;
      int u;
      Rational c2, c1, c0;
      if (!as_univariate(red, u, c2, c1, c0)) continue;
      if (u == -1 || (c2 == 0 && c1 == 0)) {
        if (c0 == 0) continue;  // monomials cancelled: constraint holds
        return false;           // nonzero constant: contradiction
      }
      // c2 u^2 + c1 u + c0 = 0 exactly.
      if (c2 == 0) {
        return try_assignment(state, u, -c0 / c1, out);
      }
      UPoly quadratic = {c0, c1, c2};
      std::vector<Rational> roots = rational_roots(quadratic);
      std::sort(roots.begin(), roots.end(), std::greater<>());  // deterministic: larger first
      for (const Rational& root : roots) {
        if (try_assignment(state, u, root, out)) return true;
      }
      return false;
    }
    if (!progressed) {
      // No univariate frontier: normalize the lowest-rank free scalar to 1.
      for (size_t k = 0; k < state.value.size(); ++k) {
        if (!state.value[k]) {
          state.value[k] = 1;
          progressed = true;
          break;
        }
      }
      if (!progressed) break;  // everything determined
    }
  }
  // Final exact re-check of every constraint (all unknowns are set here, so
  // each reduced monomial is a constant; the constraint asks for sum zero).
  for (const Equation& eq : state.equations) {
    Rational total = 0;
    for (const Monomial& m : reduce_equation(eq, state.value)) {
      if (!m.factors.empty()) return false;
      total += m.coeff;
    }
    if (total != 0) return false;
  }
  out.clear();
  for (const auto& v : state.value) out.push_back(*v);
  return true;
}

}  // namespace

NCPoly apply_generator_map(const GeneratorMap& map, const NCPoly& f) {
  NCPoly out;
  for (const auto& [w, c] : f.terms) {
    NCPoly image = poly_monomial({}, c);
    for (int rank : w) {
      image = poly_free_mul(image, generator_image(map, rank));
    }
    out = poly_add(out, image);
  }
  return normal_form(map.target, out);
}

bool ObstructionReport::has_kind(const std::string& kind) const {
  for (const auto& item : items) {
    if (item.kind == kind) return true;
  }
  return false;
}

std::optional<std::vector<int>> decide_qas(const ParamMatrix& p, const ParamMatrix& q) {
  if (p.n != q.n) return std::nullopt;
  std::vector<int> sigma(p.n, -1);
  std::vector<bool> used(p.n, false);
  if (qas_extend(p, q, sigma, used, 0)) return sigma;
  return std::nullopt;
}

std::optional<std::vector<int>> decide_hweyl(const ParamMatrix& p, const GammaVector& gamma,
                                             const ParamMatrix& q, const GammaVector& mu) {
  if (p.n != q.n || gamma.n != mu.n || p.n != gamma.n) return std::nullopt;
  const int n = p.n;

  // Componentwise pruning: mu_i must be gamma_i or its inverse.
  std::vector<std::vector<int>> allowed(n);
  for (int i = 1; i <= n; ++i) {
    if (mu.at(i) == gamma.at(i)) allowed[i - 1].push_back(+1);
    if (mu.at(i) == rational_inverse(gamma.at(i))) allowed[i - 1].push_back(-1);
    if (allowed[i - 1].empty()) return std::nullopt;
  }

  std::vector<int> eps(n);
  const auto search = [&](auto&& self, int k) -> bool {
    if (k == n) return true;
    for (int sign : allowed[k]) {
      eps[k] = sign;
      bool ok = true;
      for (int i = 1; i <= k && ok; ++i) {
        ok = q.at(i, k + 1) == expected_q_entry(eps[i - 1], sign, p, gamma, i, k + 1);
      }
      if (ok && self(self, k + 1)) return true;
    }
    return false;
  };
  if (search(search, 0)) return eps;
  return std::nullopt;
}

std::optional<int> decide_qma(const Rational& lambda, const ParamMatrix& p, const Rational& mu,
                              const ParamMatrix& q) {
  require_decidable_scalar(lambda, "lambda");
  require_decidable_scalar(mu, "mu");
  if (p.n != q.n) return std::nullopt;
  if (mu != lambda && mu != rational_inverse(lambda)) return std::nullopt;
  const int n = p.n;

  const auto lower_triangle_all = [n](auto&& predicate) {
    for (int i = 2; i <= n; ++i) {
      for (int j = 1; j < i; ++j) {
        if (!predicate(i, j)) return false;
      }
    }
    return true;
  };
  if (mu == lambda) {
    if (lower_triangle_all([&](int i, int j) { return q.at(i, j) == p.at(i, j); })) return 1;
    if (lower_triangle_all([&](int i, int j) { return q.at(j, i) == lambda * p.at(i, j); })) return 2;
  }
  if (mu == rational_inverse(lambda)) {
    if (lower_triangle_all(
            [&](int i, int j) { return q.at(n + 1 - i, n + 1 - j) == p.at(i, j); })) {
      return 3;
    }
    if (lower_triangle_all(
            [&](int i, int j) { return q.at(n + 1 - j, n + 1 - i) == lambda * p.at(i, j); })) {
      return 4;
    }
  }
  return std::nullopt;
}

namespace {

GeneratorMap finish_witness(GeneratorMap map, const char* what) {
  if (!verify_homomorphism(map)) {
    throw std::runtime_error(std::string(what) + ": witness failed verification");
  }
  return map;
}

Mat required_inverse(const Mat& m) {
  auto inv = inverse(m);
  if (!inv) throw std::runtime_error("decide_isomorphism: witness matrix is singular");
  return *inv;
}

}  // namespace

GeneratorMap build_witness_qas(const std::vector<int>& sigma, const Presentation& source,
                               const Presentation& target) {
  const int n = source.generator_count();
  if (static_cast<int>(sigma.size()) != n || target.generator_count() != n) {
    throw std::invalid_argument("build_witness_qas: size mismatch");
  }
  GeneratorMap map{source, target, Mat(n, Vec(n, Rational(0)))};
  // q_ij = p_{sigma(i) sigma(j)} makes x_k -> y_{sigma^{-1}(k)} a
  // homomorphism, i.e. the generator at rank sigma[j] maps onto rank j.
  for (int j = 0; j < n; ++j) map.matrix[sigma[j]][j] = 1;
  return finish_witness(std::move(map), "build_witness_qas");
}

GeneratorMap build_witness_qma(int qma_case, const Presentation& source,
                               const Presentation& target) {
  const int g = source.generator_count();
  const int n = source.family_n;
  if (target.generator_count() != g || n * n != g) {
    throw std::invalid_argument("build_witness_qma: size mismatch");
  }
  GeneratorMap map{source, target, Mat(g, Vec(g, Rational(0)))};
  for (int rank = 0; rank < g; ++rank) {
    const auto [i, j] = qma_position(rank, n);
    int image;
    switch (qma_case) {
      case 1: image = rank; break;
      case 2: image = qma_rank(j, i, n); break;
      case 3: image = qma_rank(n + 1 - i, n + 1 - j, n); break;
      case 4: image = qma_rank(n + 1 - j, n + 1 - i, n); break;
      default: throw std::invalid_argument("build_witness_qma: case must be 1..4");
    }
    map.matrix[rank][image] = 1;
  }
  return finish_witness(std::move(map), "build_witness_qma");
}

std::optional<GeneratorMap> build_witness_hweyl(const std::vector<int>& epsilon,
                                                const Presentation& source,
                                                const Presentation& target) {
  const int g = source.generator_count();
  const int n = source.family_n;
  if (target.generator_count() != g || static_cast<int>(epsilon.size()) != n) {
    throw std::invalid_argument("build_witness_hweyl: size mismatch");
  }
  // Ranks: z = 0, y_i = 2i-1, x_i = 2i.  A +1 component keeps the pair, a -1
  // component swaps the roles of x_i and y_i.
  ScalarPattern pattern;
  pattern.target_of.resize(g);
  pattern.target_of[0] = 0;
  for (int i = 1; i <= n; ++i) {
    const bool swap = epsilon[i - 1] < 0;
    pattern.target_of[2 * i - 1] = swap ? 2 * i : 2 * i - 1;
    pattern.target_of[2 * i] = swap ? 2 * i - 1 : 2 * i;
  }
  const auto scalars = solve_scalar_map(source, target, pattern);
  if (!scalars) return std::nullopt;

  GeneratorMap map{source, target, Mat(g, Vec(g, Rational(0)))};
  for (int k = 0; k < g; ++k) map.matrix[k][pattern.target_of[k]] = (*scalars)[k];
  return finish_witness(std::move(map), "build_witness_hweyl");
}

std::optional<std::vector<Rational>> solve_scalar_map(const Presentation& source,
                                                      const Presentation& target,
                                                      const ScalarPattern& pattern) {
  const int g = source.generator_count();
  if (static_cast<int>(pattern.target_of.size()) != g || target.generator_count() != g) {
    throw std::invalid_argument("solve_scalar_map: pattern size mismatch");
  }
  std::vector<bool> hit(g, false);
  for (int t : pattern.target_of) {
    if (t < 0 || t >= g || hit[t]) {
      throw std::invalid_argument("solve_scalar_map: pattern must be a bijection on generators");
    }
    hit[t] = true;
  }

  // For every source rule a.b -> r, compare target normal forms of the
  // pattern images; each ordered target word yields one monomial constraint.
  SolverState state;
  state.value.assign(g, std::nullopt);
  for (const Rule& rule : source.rules) {
    std::map<Word, Equation, ShortLex> rows;
    const auto accumulate = [&rows, &target, &pattern](int u, int v, const Rational& scale) {
      const NCPoly nf = multiply(target, poly_monomial({pattern.target_of[u]}),
                                 poly_monomial({pattern.target_of[v]}));
      for (const auto& [w, c] : nf.terms) {
        rows[w].push_back({c * scale, {std::min(u, v), std::max(u, v)}});
      }
    };
    accumulate(rule.lhs_hi, rule.lhs_lo, Rational(1));
    for (const auto& [w, c] : rule.rhs.terms) accumulate(w[0], w[1], -c);
    for (auto& [w, eq] : rows) state.equations.push_back(std::move(eq));
  }

  std::vector<Rational> out;
  if (!solve_sequentially(std::move(state), out)) return std::nullopt;
  return out;
}

bool verify_homomorphism(const GeneratorMap& map) {
  if (map.matrix.size() != static_cast<size_t>(map.source.generator_count())) return false;
  for (const Rule& rule : map.source.rules) {
    const NCPoly lhs = multiply(map.target, generator_image(map, rule.lhs_hi),
                                generator_image(map, rule.lhs_lo));
    const NCPoly rhs = apply_generator_map(map, rule.rhs);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

bool verify_isomorphism(const GeneratorMap& map) {
  const auto inv = inverse(map.matrix);
  if (!inv) return false;
  if (!verify_homomorphism(map)) return false;
  return verify_homomorphism(GeneratorMap{map.target, map.source, *inv});
}

ObstructionReport obstruction_report(const Presentation& a, const Presentation& b) {
  ObstructionReport report;
  if (a.family != b.family) {
    report.items.push_back({"family_mismatch", "presentations belong to different families (" +
                                                   family_name(a.family) + " vs " +
                                                   family_name(b.family) + ")"});
    return report;
  }
  if (a.generator_count() != b.generator_count()) {
    report.items.push_back({"generator_count_mismatch",
                            "generator counts " + std::to_string(a.generator_count()) + " vs " +
                                std::to_string(b.generator_count()) +
                                " give different growth exponents"});
    return report;
  }
  switch (a.family) {
    case Family::QuantumAffine: {
      if (offdiagonal_multiset(*a.p) != offdiagonal_multiset(*b.p)) {
        report.items.push_back({"parameter_multiset_mismatch",
                                "multisets of off-diagonal parameters different from 1 disagree"});
      } else if (!decide_qas(*a.p, *b.p)) {
        report.items.push_back(
            {"permutation_exhausted", "no permutation aligns the parameter matrices"});
      }
      break;
    }
    case Family::HomogenizedWeyl: {
      bool component_failure = false;
      for (int i = 1; i <= a.gamma->n; ++i) {
        if (b.gamma->at(i) != a.gamma->at(i) &&
            b.gamma->at(i) != rational_inverse(a.gamma->at(i))) {
          report.items.push_back(
              {"sign_vector_exhausted", "component " + std::to_string(i) +
                                            ": target gamma is neither gamma nor its inverse"});
          component_failure = true;
        }
      }
      if (!component_failure && !decide_hweyl(*a.p, *a.gamma, *b.p, *b.gamma)) {
        report.items.push_back(
            {"sign_vector_exhausted", "no sign vector satisfies the pairwise conditions"});
      }
      break;
    }
    case Family::QuantumMatrix: {
      if (*b.lambda != *a.lambda && *b.lambda != rational_inverse(*a.lambda)) {
        report.items.push_back(
            {"lambda_relation_failure",
             "target lambda " + rational_to_string(*b.lambda) + " is neither lambda (" +
                 rational_to_string(*a.lambda) + ") nor its inverse"});
      } else if (!decide_qma(*a.lambda, *a.p, *b.lambda, *b.p)) {
        report.items.push_back({"case_exhausted", "none of the four entrywise cases holds"});
      }
      break;
    }
    case Family::Custom:
      report.items.push_back(
          {"family_mismatch", "custom presentations have no decision procedure"});
      break;
  }
  return report;
}

IsoCertificate decide_isomorphism(const Presentation& a, const Presentation& b,
                                  bool want_witness) {
  if (a.family != b.family || a.family == Family::Custom) {
    throw std::invalid_argument(
        "decide_isomorphism: both presentations must belong to the same built-in family");
  }
  IsoCertificate cert;
  switch (a.family) {
    case Family::QuantumAffine: {
      cert.witness_kind = "permutation";
      if (auto sigma = decide_qas(*a.p, *b.p)) {
        cert.isomorphic = true;
        cert.sigma = *sigma;
        if (want_witness) {
          GeneratorMap map = build_witness_qas(*sigma, a, b);
          cert.inverse_matrix = required_inverse(map.matrix);
          cert.map = std::move(map);
        }
      }
      break;
    }
    case Family::HomogenizedWeyl: {
      cert.witness_kind = "sign_vector";
      if (auto eps = decide_hweyl(*a.p, *a.gamma, *b.p, *b.gamma)) {
        cert.isomorphic = true;
        cert.epsilon = *eps;
        if (want_witness) {
          if (auto map = build_witness_hweyl(*eps, a, b)) {
            std::vector<Rational> scalars;
            for (int k = 0; k < a.generator_count(); ++k) {
              for (const auto& entry : map->matrix[k]) {
                if (entry != 0) scalars.push_back(entry);
              }
            }
            cert.scalars = std::move(scalars);
            cert.inverse_matrix = required_inverse(map->matrix);
            cert.map = std::move(*map);
          } else {
            cert.note =
                "witness unavailable: the scalar system for this sign vector is infeasible; "
                "the parameter-level decision stands";
          }
        }
      }
      break;
    }
    case Family::QuantumMatrix: {
      cert.witness_kind = "qma_case";
      if (auto qcase = decide_qma(*a.lambda, *a.p, *b.lambda, *b.p)) {
        cert.isomorphic = true;
        cert.qma_case = *qcase;
        if (want_witness) {
          GeneratorMap map = build_witness_qma(*qcase, a, b);
          cert.inverse_matrix = required_inverse(map.matrix);
          cert.map = std::move(map);
        }
      }
      break;
    }
    case Family::Custom:
      break;  // unreachable
  }
  if (!cert.isomorphic) {
    cert.obstructions = obstruction_report(a, b);
  } else if (cert.map && !verify_isomorphism(*cert.map)) {
    throw std::runtime_error("decide_isomorphism: witness failed two-sided verification");
  }
  return cert;
}

}  // namespace qaw
