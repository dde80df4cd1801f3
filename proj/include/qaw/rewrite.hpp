/// @file rewrite.hpp
/// @brief Normal forms, confluence certification, and graded dimensions.
///
/// Rewriting replaces an adjacent out-of-order pair inside a word by the
/// matching rule's right side until every word is rank-nondecreasing.  For
/// the built-in families every right-side word is lexicographically smaller
/// than the rule's left side, so reduction terminates; a defensive fuel
/// bound guards against defective custom rule sets.  When every overlap
/// resolves (see check_confluence), the normal form is independent of the
/// reduction strategy and the ordered words of length d form a basis of the
/// degree-d component.

#pragma once

#include "qaw/ncpoly.hpp"
#include "qaw/presentation.hpp"

#include <string>
#include <vector>

namespace qaw {

/// Which out-of-order pair to rewrite first inside a word.
enum class Strategy { Leftmost, Rightmost };

/// Fully reduces @p f; linear in the terms of f.
/// @throws std::runtime_error if the defensive fuel bound is exceeded
/// (impossible for valid family presentations).
NCPoly normal_form(const Presentation& pres, const NCPoly& f,
                   Strategy strategy = Strategy::Leftmost);

/// Normal form of the concatenation product f.g.
NCPoly multiply(const Presentation& pres, const NCPoly& f, const NCPoly& g,
                Strategy strategy = Strategy::Leftmost);

/// One overlap word c.b.a (ranks c > b > a) reduced both ways.
struct OverlapResult {
  int c = 0, b = 0, a = 0;
  bool resolved = false;
  NCPoly leftmost_nf;   ///< full reduction rewriting leftmost pairs first
  NCPoly rightmost_nf;  ///< full reduction rewriting rightmost pairs first
};

struct ConfluenceReport {
  std::vector<OverlapResult> overlaps;

  bool all_resolved() const;
  int resolved_count() const;
};

/// Reduces every overlap word both ways and reports agreement.  All-resolved
/// certifies confluence: ambiguities of quadratic rules are exactly the
/// length-3 words with two out-of-order adjacent pairs.
ConfluenceReport check_confluence(const Presentation& pres);

/// Dimensions of the degree-0..d_max components: C(g+d-1, d) ordered words
/// of length d over g generators.  Small degrees are additionally
/// cross-checked by reducing every length-d word and collecting the distinct
/// normal-form support words.
/// @throws std::invalid_argument when the presentation is not confluent.
/// @throws std::runtime_error if the cross-check disagrees.
std::vector<Int> hilbert_dims(const Presentation& pres, int d_max);

/// True when hilbert_dims cross-checks degree @p d by brute enumeration
/// (small degrees with at most 512 words of that length).
bool hilbert_brute_checkable(int gen_count, int d);

/// Generator count, which for a confluent quadratic presentation of this
/// shape equals the polynomial growth exponent of the dimension sequence;
/// used as an isomorphism obstruction.
/// @throws std::invalid_argument when the presentation is not confluent.
int growth_exponent(const Presentation& pres);

/// Space-separated generator names ("x2 x1" -> word); "" is the unit.
/// @throws std::invalid_argument on an unknown generator name.
Word parse_word(const Presentation& pres, const std::string& text);

std::string word_to_string(const Presentation& pres, const Word& w);

/// Renders `c1*w1 + c2*w2 - ...`; unit coefficients are omitted, the empty
/// word prints as `1`, and the zero polynomial prints as `0`.
std::string poly_to_string(const Presentation& pres, const NCPoly& f);

}  // namespace qaw
