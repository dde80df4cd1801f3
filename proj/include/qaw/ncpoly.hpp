/// @file ncpoly.hpp
/// @brief Words and noncommutative polynomials over the rationals.
///
/// A Word is a sequence of generator ranks (the empty word is the unit).  An
/// NCPoly is a finite rational-weighted sum of words, stored sparsely with no
/// zero coefficients; words are ordered by length first and then
/// lexicographically by rank.  These are plain free-algebra elements: all
/// rewriting semantics live in rewrite.hpp.

#pragma once

#include "qaw/rational.hpp"

#include <map>
#include <vector>

namespace qaw {

/// Sequence of generator ranks; empty means the unit monomial 1.
using Word = std::vector<int>;

/// Length-then-lexicographic word order (a total order on the monomial basis).
struct ShortLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Finite map word -> nonzero coefficient.
struct NCPoly {
  std::map<Word, Rational, ShortLex> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const NCPoly& other) const { return terms == other.terms; }

  /// Coefficient of @p w (zero when absent).
  Rational coeff(const Word& w) const;

  /// Adds c * w, erasing the term if the sum cancels.
  void add_term(const Word& w, const Rational& c);

  /// True when every word has length @p d (vacuously true for zero).
  bool is_homogeneous(int d) const;

  /// Largest word length present; -1 for the zero polynomial.
  int degree() const;
};

NCPoly poly_monomial(const Word& w, const Rational& c = Rational(1));
NCPoly poly_add(const NCPoly& a, const NCPoly& b);
NCPoly poly_sub(const NCPoly& a, const NCPoly& b);
NCPoly poly_scale(const NCPoly& a, const Rational& c);

/// Concatenation product in the free algebra (no rewriting).
NCPoly poly_free_mul(const NCPoly& a, const NCPoly& b);

}  // namespace qaw
