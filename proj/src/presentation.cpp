#include "qaw/presentation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qaw {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

std::vector<std::string> param_matrix_diagnostics(const ParamMatrix& p) {
  std::vector<std::string> out;
  if (p.n <= 0) {
    out.push_back("parameter matrix: n must be positive");
    return out;
  }
  if (static_cast<int>(p.entries.size()) != p.n) {
    out.push_back("parameter matrix: row count differs from n");
    return out;
  }
  for (const auto& row : p.entries) {
    if (static_cast<int>(row.size()) != p.n) {
      out.push_back("parameter matrix: column count differs from n");
      return out;
    }
  }
  for (int i = 1; i <= p.n; ++i) {
    if (p.at(i, i) != 1) out.push_back("parameter matrix: diagonal entry p_" + std::to_string(i) + std::to_string(i) + " != 1");
    for (int j = 1; j <= p.n; ++j) {
      if (p.at(i, j) == 0) {
        out.push_back("parameter matrix: zero entry at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      } else if (j > i && p.at(i, j) * p.at(j, i) != 1) {
        out.push_back("parameter matrix: antisymmetry violated at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
  return out;
}

std::vector<std::string> gamma_diagnostics(const GammaVector& g) {
  std::vector<std::string> out;
  if (g.n <= 0) out.push_back("gamma vector: n must be positive");
  if (static_cast<int>(g.entries.size()) != g.n) out.push_back("gamma vector: entry count differs from n");
  for (size_t i = 0; i < g.entries.size(); ++i) {
    if (g.entries[i] == 0) out.push_back("gamma vector: zero entry gamma_" + std::to_string(i + 1));
  }
  return out;
}

void require_valid(const ParamMatrix& p) {
  const auto diag = param_matrix_diagnostics(p);
  if (!diag.empty()) throw std::invalid_argument(diag.front());
}

}  // namespace

ParamMatrix ParamMatrix::from_upper_triangle(int n, const std::vector<Rational>& upper) {
  require(n > 0, "parameter matrix: n must be positive");
  require(static_cast<int>(upper.size()) == n * (n - 1) / 2,
          "parameter matrix: expected n(n-1)/2 upper-triangle entries");
  ParamMatrix p;
  p.n = n;
  p.entries.assign(n, std::vector<Rational>(n, Rational(1)));
  size_t k = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j, ++k) {
      require(upper[k] != 0, "parameter matrix: entries must be nonzero");
      p.entries[i - 1][j - 1] = upper[k];
      p.entries[j - 1][i - 1] = Rational(1) / upper[k];
    }
  }
  return p;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::QuantumAffine: return "quantum_affine";
    case Family::HomogenizedWeyl: return "homogenized_weyl";
    case Family::QuantumMatrix: return "quantum_matrix";
    case Family::Custom: return "custom";
  }
  return "custom";
}

const Rule* Presentation::find_rule(int a, int b) const {
  for (const Rule& r : rules) {
    if (r.lhs_hi == a && r.lhs_lo == b) return &r;
  }
  return nullptr;
}

int Presentation::rank_of(const std::string& name) const {
  for (size_t i = 0; i < generator_names.size(); ++i) {
    if (generator_names[i] == name) return static_cast<int>(i);
  }
  return -1;
}

Presentation make_quantum_affine(const ParamMatrix& p) {
  require_valid(p);
  Presentation pres;
  pres.family = Family::QuantumAffine;
  pres.family_n = p.n;
  pres.p = p;
  for (int i = 1; i <= p.n; ++i) pres.generator_names.push_back("x" + std::to_string(i));
  // x_j.x_i -> p_ji x_i x_j for j > i.
  for (int j = 2; j <= p.n; ++j) {
    for (int i = 1; i < j; ++i) {
      Rule r;
      r.lhs_hi = j - 1;
      r.lhs_lo = i - 1;
      r.rhs = poly_monomial({i - 1, j - 1}, p.at(j, i));
      pres.rules.push_back(std::move(r));
    }
  }
  return pres;
}

Presentation make_homogenized_weyl(const ParamMatrix& p, const GammaVector& gamma) {
  require_valid(p);
  const auto gd = gamma_diagnostics(gamma);
  if (!gd.empty()) throw std::invalid_argument(gd.front());
  require(p.n == gamma.n, "homogenized Weyl algebra: p and gamma sizes differ");

  const int n = p.n;
  Presentation pres;
  pres.family = Family::HomogenizedWeyl;
  pres.family_n = n;
  pres.p = p;
  pres.gamma = gamma;

  // Ranks: z = 0, y_i = 2i-1, x_i = 2i.
  pres.generator_names.push_back("z");
  for (int i = 1; i <= n; ++i) {
    pres.generator_names.push_back("y" + std::to_string(i));
    pres.generator_names.push_back("x" + std::to_string(i));
  }
  const auto y = [](int i) { return 2 * i - 1; };
  const auto x = [](int i) { return 2 * i; };

  // z is central: g.z -> z.g for every g > z.
  for (int g = 1; g <= 2 * n; ++g) {
    Rule r;
    r.lhs_hi = g;
    r.lhs_lo = 0;
    r.rhs = poly_monomial({0, g});
    pres.rules.push_back(std::move(r));
  }
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i < j; ++i) {
      // y_j.y_i -> p_ji y_i y_j
      pres.rules.push_back({y(j), y(i), poly_monomial({y(i), y(j)}, p.at(j, i))});
      // x_j.x_i -> gamma_i^{-1} p_ji x_i x_j
      pres.rules.push_back({x(j), x(i), poly_monomial({x(i), x(j)}, p.at(j, i) / gamma.at(i))});
      // y_j.x_i -> p_ij x_i y_j
      pres.rules.push_back({y(j), x(i), poly_monomial({x(i), y(j)}, p.at(i, j))});
      // x_j.y_i -> gamma_i p_ij y_i x_j
      pres.rules.push_back({x(j), y(i), poly_monomial({y(i), x(j)}, gamma.at(i) * p.at(i, j))});
    }
    // x_j.y_j -> z^2 + gamma_j y_j x_j + sum_{l<j} (gamma_l - 1) y_l x_l
    NCPoly rhs = poly_monomial({0, 0});
    rhs.add_term({y(j), x(j)}, gamma.at(j));
    for (int l = 1; l < j; ++l) rhs.add_term({y(l), x(l)}, gamma.at(l) - 1);
    pres.rules.push_back({x(j), y(j), std::move(rhs)});
  }
  std::sort(pres.rules.begin(), pres.rules.end(), [](const Rule& a, const Rule& b) {
    return std::pair(a.lhs_hi, a.lhs_lo) < std::pair(b.lhs_hi, b.lhs_lo);
  });
  return pres;
}

std::pair<int, int> qma_position(int rank, int n) {
  return {rank / n + 1, rank % n + 1};
}

int qma_rank(int row, int col, int n) {
  return (row - 1) * n + (col - 1);
}

Presentation make_quantum_matrix(const Rational& lambda, const ParamMatrix& p) {
  require_valid(p);
  if (lambda == 0 || lambda == 1 || lambda == -1) {
    std::string hint = lambda == 1
        ? " (lambda = 1 collapses the two-term relations; the resulting algebra is a quantum affine space -- use that constructor instead)"
        : "";
    throw std::invalid_argument("quantum matrix algebra: lambda must not be 0, 1, or -1" + hint);
  }

  const int n = p.n;
  Presentation pres;
  pres.family = Family::QuantumMatrix;
  pres.family_n = n;
  pres.p = p;
  pres.lambda = lambda;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      pres.generator_names.push_back("X" + std::to_string(i) + std::to_string(j));
    }
  }
  // For X_lm.X_ij with (l,m) > (i,j) row-major:
  //   l>i, m>j :  p_li p_jm X_ij X_lm + (lambda-1) p_li X_im X_lj
  //   l>i, m<=j:  lambda p_li p_jm X_ij X_lm
  //   l=i, m>j :  p_jm X_ij X_lm
  for (int hi = 1; hi < n * n; ++hi) {
    for (int lo = 0; lo < hi; ++lo) {
      const auto [l, m] = qma_position(hi, n);
      const auto [i, j] = qma_position(lo, n);
      NCPoly rhs;
      if (l > i && m > j) {
        rhs.add_term({lo, hi}, p.at(l, i) * p.at(j, m));
        rhs.add_term({qma_rank(i, m, n), qma_rank(l, j, n)}, (lambda - 1) * p.at(l, i));
      } else if (l > i) {
        rhs.add_term({lo, hi}, lambda * p.at(l, i) * p.at(j, m));
      } else {
        rhs.add_term({lo, hi}, p.at(j, m));
      }
      pres.rules.push_back({hi, lo, std::move(rhs)});
    }
  }
  return pres;
}

Presentation make_custom(std::vector<std::string> generator_names, std::vector<Rule> rules) {
  Presentation pres;
  pres.family = Family::Custom;
  pres.generator_names = std::move(generator_names);
  pres.rules = std::move(rules);
  const auto diag = validate_presentation(pres);
  if (!diag.empty()) throw std::invalid_argument("custom presentation: " + diag.front());
  return pres;
}

std::vector<std::string> validate_presentation(const Presentation& pres) {
  std::vector<std::string> out;
  const int g = pres.generator_count();
  if (g == 0) return out;  // the scalars: vacuously valid

  std::set<std::string> names(pres.generator_names.begin(), pres.generator_names.end());
  if (static_cast<int>(names.size()) != g) out.push_back("duplicate generator names");

  if (pres.p) {
    for (auto& d : param_matrix_diagnostics(*pres.p)) out.push_back(d);
  }
  if (pres.gamma) {
    for (auto& d : gamma_diagnostics(*pres.gamma)) out.push_back(d);
  }
  if (pres.lambda && (*pres.lambda == 0 || *pres.lambda == 1 || *pres.lambda == -1)) {
    out.push_back("lambda must not be 0, 1, or -1");
  }

  std::set<std::pair<int, int>> seen;
  for (const Rule& r : pres.rules) {
    const std::string where = "rule (" + std::to_string(r.lhs_hi) + "," + std::to_string(r.lhs_lo) + "): ";
    if (r.lhs_hi < 0 || r.lhs_hi >= g || r.lhs_lo < 0 || r.lhs_lo >= g) {
      out.push_back(where + "left-side rank out of range");
      continue;
    }
    if (r.lhs_hi <= r.lhs_lo) out.push_back(where + "left side must be strictly rank-decreasing");
    if (!seen.insert({r.lhs_hi, r.lhs_lo}).second) out.push_back(where + "duplicate rule for this pair");
    if (!r.rhs.is_homogeneous(2)) out.push_back(where + "right side must be homogeneous of degree 2");
    for (const auto& [w, c] : r.rhs.terms) {
      for (int rank : w) {
        if (rank < 0 || rank >= g) {
          out.push_back(where + "right-side rank out of range");
          break;
        }
      }
      if (w.size() == 2 && w[0] > w[1]) {
        out.push_back(where + "right-side word is rank-decreasing");
      }
    }
  }
  for (int a = 1; a < g; ++a) {
    for (int b = 0; b < a; ++b) {
      if (!seen.count({a, b})) {
        out.push_back("missing rule for pair (" + pres.generator_names[a] + "," + pres.generator_names[b] + ")");
      }
    }
  }
  return out;
}

}  // namespace qaw
