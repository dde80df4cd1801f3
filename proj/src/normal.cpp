#include "qaw/normal.hpp"

#include "qaw/linalg.hpp"
#include "qaw/rewrite.hpp"
#include "qaw/unipoly.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace qaw {

namespace {

/// Coefficient vector of a degree-1 polynomial over the generator basis.
Vec degree_one_coeffs(const Presentation& pres, const NCPoly& u) {
  Vec v(pres.generator_count(), Rational(0));
  for (const auto& [w, c] : u.terms) v[w[0]] = c;
  return v;
}

NCPoly from_degree_one_coeffs(const Vec& v) {
  NCPoly u;
  for (size_t k = 0; k < v.size(); ++k) u.add_term({static_cast<int>(k)}, v[k]);
  return u;
}

void require_degree_one(const NCPoly& u, const char* who) {
  if (u.is_zero() || !u.is_homogeneous(1)) {
    throw std::invalid_argument(std::string(who) + ": element must be nonzero homogeneous of degree 1");
  }
}

/// Solves sum_k x_k columns[k] = rhs over the union of support words.
std::optional<Vec> solve_poly_combination(const std::vector<NCPoly>& columns, const NCPoly& rhs) {
  std::map<Word, int, ShortLex> row_of;
  const auto row_index = [&row_of](const Word& w) {
    return row_of.emplace(w, static_cast<int>(row_of.size())).first->second;
  };
  for (const auto& col : columns) {
    for (const auto& [w, c] : col.terms) row_index(w);
  }
  for (const auto& [w, c] : rhs.terms) row_index(w);

  Mat a(row_of.size(), Vec(columns.size(), Rational(0)));
  Vec b(row_of.size(), Rational(0));
  for (size_t k = 0; k < columns.size(); ++k) {
    for (const auto& [w, c] : columns[k].terms) a[row_index(w)][k] = c;
  }
  for (const auto& [w, c] : rhs.terms) b[row_index(w)] = c;
  return solve_linear(a, b);
}

/// Normalizes so the lowest-rank nonzero coefficient is 1.
NCPoly scale_to_monic(const NCPoly& u) {
  return poly_scale(u, rational_inverse(u.terms.begin()->second));
}

// ---------------------------------------------------------------------------
// Support-2 search: elimination over polynomials in the mixing parameter t.
// ---------------------------------------------------------------------------

using PolyVec = std::map<Word, UPoly, ShortLex>;  ///< word -> coefficient in Q[t]

/// NF(base + t*slope) as a word -> Q[t] table.
PolyVec affine_table(const NCPoly& base, const NCPoly& slope) {
  PolyVec out;
  for (const auto& [w, c] : base.terms) out[w] = upoly_add(out.count(w) ? out[w] : UPoly{}, UPoly{c});
  for (const auto& [w, c] : slope.terms) {
    UPoly& entry = out[w];
    entry.resize(std::max<size_t>(entry.size(), 2), Rational(0));
    entry[1] += c;
    upoly_trim(entry);
  }
  return out;
}

/// Fraction-free elimination of [A(t) | b(t)].  Appends to @p conditions the
/// polynomials in t that must vanish for feasibility (residuals) and may
/// vanish only where the generic elimination degenerates (pivots); the roots
/// of either are candidate mixing values, each certified separately later.
void collect_t_conditions(const std::vector<PolyVec>& columns, const PolyVec& rhs,
                          std::vector<UPoly>& conditions) {
  std::map<Word, int, ShortLex> row_of;
  const auto row_index = [&row_of](const Word& w) {
    return row_of.emplace(w, static_cast<int>(row_of.size())).first->second;
  };
  for (const auto& col : columns) {
    for (const auto& [w, entry] : col) row_index(w);
  }
  for (const auto& [w, entry] : rhs) row_index(w);

  const size_t rows = row_of.size();
  const size_t cols = columns.size();
  std::vector<std::vector<UPoly>> m(rows, std::vector<UPoly>(cols + 1));
  for (size_t k = 0; k < cols; ++k) {
    for (const auto& [w, entry] : columns[k]) m[row_of[w]][k] = entry;
  }
  for (const auto& [w, entry] : rhs) m[row_of[w]][cols] = entry;

  std::vector<UPoly> residuals;
  size_t lead = 0;
  for (size_t col = 0; col < cols && lead < rows; ++col) {
    size_t piv = lead;
    while (piv < rows && upoly_is_zero(m[piv][col])) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[lead]);
    const UPoly pivot = m[lead][col];
    if (upoly_degree(pivot) > 0) conditions.push_back(pivot);
    for (size_t r = lead + 1; r < rows; ++r) {
      if (upoly_is_zero(m[r][col])) continue;
      const UPoly factor = m[r][col];
      for (size_t j = col; j <= cols; ++j) {
        m[r][j] = upoly_sub(upoly_mul(pivot, m[r][j]), upoly_mul(factor, m[lead][j]));
      }
    }
    ++lead;
  }
  for (size_t r = lead; r < rows; ++r) {
    if (!upoly_is_zero(m[r][cols])) residuals.push_back(m[r][cols]);
  }
  if (!residuals.empty()) {
    UPoly g = residuals.front();
    for (size_t i = 1; i < residuals.size(); ++i) g = upoly_gcd(g, residuals[i]);
    conditions.push_back(g);
  }
}

}  // namespace

std::optional<NormalityCertificate> is_normal_degree_one(const Presentation& pres,
                                                         const NCPoly& u) {
  require_degree_one(u, "is_normal_degree_one");
  const int g = pres.generator_count();

  std::vector<NCPoly> left_basis(g), right_basis(g);  // NF(u.g_k), NF(g_k.u)
  for (int k = 0; k < g; ++k) {
    const NCPoly gen = poly_monomial({k});
    left_basis[k] = multiply(pres, u, gen);
    right_basis[k] = multiply(pres, gen, u);
  }

  NormalityCertificate cert;
  cert.u = u;
  cert.left.resize(g);
  cert.right.resize(g);
  for (int a = 0; a < g; ++a) {
    // g_a.u = u.r  with r over the generator basis.
    const auto r = solve_poly_combination(left_basis, right_basis[a]);
    if (!r) return std::nullopt;
    // u.g_a = s.u  symmetrically.
    const auto s = solve_poly_combination(right_basis, left_basis[a]);
    if (!s) return std::nullopt;
    cert.left[a] = from_degree_one_coeffs(*r);
    cert.right[a] = from_degree_one_coeffs(*s);
  }

  // Re-verify every witness identity exactly before handing the result out.
  for (int a = 0; a < g; ++a) {
    const NCPoly gen = poly_monomial({a});
    if (!poly_sub(multiply(pres, gen, u), multiply(pres, u, cert.left[a])).is_zero() ||
        !poly_sub(multiply(pres, u, gen), multiply(pres, cert.right[a], u)).is_zero()) {
      throw std::runtime_error("is_normal_degree_one: witness failed re-verification");
    }
  }
  return cert;
}

std::vector<NCPoly> find_normal_degree_one(const Presentation& pres, int support_bound) {
  if (support_bound < 1 || support_bound > 2) {
    throw std::invalid_argument("find_normal_degree_one: support bound must be 1 or 2");
  }
  const int g = pres.generator_count();

  std::vector<NCPoly> found;
  std::set<std::vector<std::pair<Word, Rational>>> seen;
  const auto push_unique = [&found, &seen](const NCPoly& u) {
    const NCPoly monic = scale_to_monic(u);
    std::vector<std::pair<Word, Rational>> key(monic.terms.begin(), monic.terms.end());
    if (seen.insert(std::move(key)).second) found.push_back(monic);
  };

  std::vector<bool> single_normal(g, false);
  for (int k = 0; k < g; ++k) {
    const NCPoly u = poly_monomial({k});
    if (is_normal_degree_one(pres, u)) {
      single_normal[k] = true;
      push_unique(u);
    }
  }
  if (support_bound == 1) return found;

  for (int i = 0; i < g; ++i) {
    for (int j = i + 1; j < g; ++j) {
      if (single_normal[i] && single_normal[j]) continue;  // plane already spanned

      // u(t) = g_i + t g_j.  Tabulate NF(u.g_k) and NF(g_k.u) with entries
      // affine in t, then eliminate each per-generator witness system.
      const NCPoly gi = poly_monomial({i});
      const NCPoly gj = poly_monomial({j});
      std::vector<PolyVec> left_cols(g), right_cols(g);
      for (int k = 0; k < g; ++k) {
        const NCPoly gen = poly_monomial({k});
        left_cols[k] = affine_table(multiply(pres, gi, gen), multiply(pres, gj, gen));
        right_cols[k] = affine_table(multiply(pres, gen, gi), multiply(pres, gen, gj));
      }
      std::vector<UPoly> conditions;
      for (int a = 0; a < g; ++a) {
        collect_t_conditions(left_cols, right_cols[a], conditions);
        collect_t_conditions(right_cols, left_cols[a], conditions);
      }

      std::set<Rational> candidates;
      for (const UPoly& cond : conditions) {
        if (upoly_is_zero(cond)) continue;
        for (const Rational& root : rational_roots(cond)) candidates.insert(root);
        if (candidates.size() > 64) break;  // defensive: desk-scale systems stay tiny
      }
      for (const Rational& t : candidates) {
        if (t == 0) continue;  // support 1, already covered
        NCPoly u = gi;
        u.add_term({j}, t);
        if (is_normal_degree_one(pres, u)) push_unique(u);
      }
    }
  }
  return found;
}

Presentation quotient_by_degree_one(const Presentation& pres,
                                    const std::vector<NCPoly>& elements) {
  if (elements.empty()) return pres;
  const int g = pres.generator_count();

  Mat coeffs;
  for (const NCPoly& u : elements) {
    require_degree_one(u, "quotient_by_degree_one");
    if (!is_normal_degree_one(pres, u)) {
      throw std::invalid_argument("quotient_by_degree_one: element is not normal");
    }
    coeffs.push_back(degree_one_coeffs(pres, u));
  }
  const std::vector<int> pivots = rref(coeffs);
  for (size_t row = 0; row < pivots.size(); ++row) {
    for (int col = 0; col < g; ++col) {
      if (coeffs[row][col] != 0 && col != pivots[row]) {
        throw std::invalid_argument(
            "quotient_by_degree_one: span is not a coordinate subspace, cannot quotient");
      }
    }
  }
  std::set<int> killed(pivots.begin(), pivots.end());

  Presentation out;
  out.family = Family::Custom;
  std::vector<int> new_rank(g, -1);
  for (int k = 0; k < g; ++k) {
    if (killed.count(k)) continue;
    new_rank[k] = out.generator_count();
    out.generator_names.push_back(pres.generator_names[k]);
  }
  for (const Rule& r : pres.rules) {
    if (killed.count(r.lhs_hi) || killed.count(r.lhs_lo)) continue;
    Rule nr;
    nr.lhs_hi = new_rank[r.lhs_hi];
    nr.lhs_lo = new_rank[r.lhs_lo];
    for (const auto& [w, c] : r.rhs.terms) {
      if (killed.count(w[0]) || killed.count(w[1])) continue;  // substituted by zero
      nr.rhs.add_term({new_rank[w[0]], new_rank[w[1]]}, c);
    }
    out.rules.push_back(std::move(nr));
  }

  const auto diag = validate_presentation(out);
  if (!diag.empty()) throw std::runtime_error("quotient_by_degree_one: " + diag.front());
  if (!check_confluence(out).all_resolved()) {
    throw std::runtime_error("quotient_by_degree_one: quotient is not confluent");
  }
  return out;
}

std::optional<Rational> quantum_plane_parameter(const Presentation& pres) {
  if (pres.generator_count() != 2 || pres.rules.size() != 1) return std::nullopt;
  const Rule& r = pres.rules.front();
  if (r.lhs_hi != 1 || r.lhs_lo != 0 || r.rhs.terms.size() != 1) return std::nullopt;
  const auto& [w, c] = *r.rhs.terms.begin();
  if (w != Word{0, 1}) return std::nullopt;
  return c;
}

ChainReport iterative_chain(const Presentation& pres, int max_steps) {
  ChainReport report;
  Presentation current = pres;
  for (int k = 0; k < max_steps; ++k) {
    if (current.generator_count() == 0) break;
    std::vector<NCPoly> killed = find_normal_degree_one(current, 2);
    if (killed.empty()) break;
    Presentation quotient = quotient_by_degree_one(current, killed);
    report.steps.push_back({k, std::move(killed), quotient});
    current = std::move(quotient);
  }

  if (const auto q = quantum_plane_parameter(current)) {
    report.plane_parameter = q;
    if (pres.family == Family::HomogenizedWeyl && pres.gamma) {
      report.plane_parameter_equals_first_gamma = (*q == pres.gamma->entries.front());
      report.plane_parameter_equals_last_gamma = (*q == pres.gamma->entries.back());
    }
  }
  return report;
}

FalsificationReport falsify_completeness(const Presentation& pres,
                                         const std::vector<NCPoly>& claimed_span, int trials,
                                         std::uint64_t seed) {
  FalsificationReport report;
  report.trials = trials;
  report.seed = seed;
  const int g = pres.generator_count();

  Mat span;
  for (const NCPoly& u : claimed_span) {
    require_degree_one(u, "falsify_completeness");
    span.push_back(degree_one_coeffs(pres, u));
  }
  const std::vector<int> pivots = rref(span);
  if (static_cast<int>(pivots.size()) == g) return report;  // span is everything: vacuous

  const auto in_span = [&span, &pivots](Vec v) {
    for (size_t row = 0; row < pivots.size(); ++row) {
      if (v[pivots[row]] == 0) continue;
      const Rational factor = v[pivots[row]];
      for (size_t col = 0; col < v.size(); ++col) v[col] -= factor * span[row][col];
    }
    for (const auto& c : v) {
      if (c != 0) return false;
    }
    return true;
  };

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int trial = 0; trial < trials; ++trial) {
    Vec v(g);
    do {
      for (auto& c : v) c = coeff(rng);
    } while (in_span(v));  // resample the degenerate all-in-span draws
    const NCPoly u = from_degree_one_coeffs(v);
    if (is_normal_degree_one(pres, u)) report.counterexamples.push_back(u);
  }
  return report;
}

}  // namespace qaw
