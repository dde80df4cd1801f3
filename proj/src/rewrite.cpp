#include "qaw/rewrite.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace qaw {

namespace {

/// Position of the pair to rewrite next, or -1 when the word is ordered.
int find_trigger(const Word& w, Strategy strategy) {
  if (strategy == Strategy::Leftmost) {
    for (size_t k = 0; k + 1 < w.size(); ++k) {
      if (w[k] > w[k + 1]) return static_cast<int>(k);
    }
  } else {
    for (size_t k = w.size(); k-- > 1;) {
      if (w[k - 1] > w[k]) return static_cast<int>(k - 1);
    }
  }
  return -1;
}

/// Reduces a single word, accumulating coeff * normal_form(w) into out.
void reduce_word(const Presentation& pres, const Word& start, const Rational& coeff,
                 Strategy strategy, NCPoly& out) {
  // Fuel bounds the length of one rewrite chain; it is defensive only --
  // for the built-in families each step is a strict lexicographic descent
  // on fixed-length words, so chains are short.
  const long fuel = static_cast<long>(start.size()) * static_cast<long>(start.size()) *
                        (pres.generator_count() + 2) +
                    64;
  struct Item {
    Word w;
    Rational c;
    long steps;
  };
  std::vector<Item> stack;
  stack.push_back({start, coeff, 0});
  while (!stack.empty()) {
    Item item = std::move(stack.back());
    stack.pop_back();
    const int pos = find_trigger(item.w, strategy);
    if (pos < 0) {
      out.add_term(item.w, item.c);
      continue;
    }
    if (item.steps >= fuel) {
      throw std::runtime_error("normal_form: fuel bound exceeded (non-terminating rule set?)");
    }
    const Rule* rule = pres.find_rule(item.w[pos], item.w[pos + 1]);
    if (rule == nullptr) {
      throw std::runtime_error("normal_form: no rule for out-of-order pair " +
                               pres.generator_names[item.w[pos]] + "." +
                               pres.generator_names[item.w[pos + 1]]);
    }
    for (const auto& [rhs_word, rhs_coeff] : rule->rhs.terms) {
      Word next;
      next.reserve(item.w.size());
      next.insert(next.end(), item.w.begin(), item.w.begin() + pos);
      next.insert(next.end(), rhs_word.begin(), rhs_word.end());
      next.insert(next.end(), item.w.begin() + pos + 2, item.w.end());
      stack.push_back({std::move(next), item.c * rhs_coeff, item.steps + 1});
    }
  }
}

void require_confluent(const Presentation& pres, const char* who) {
  if (!check_confluence(pres).all_resolved()) {
    throw std::invalid_argument(std::string(who) + ": presentation is not confluent");
  }
}

}  // namespace

NCPoly normal_form(const Presentation& pres, const NCPoly& f, Strategy strategy) {
  NCPoly out;
  for (const auto& [w, c] : f.terms) reduce_word(pres, w, c, strategy, out);
  return out;
}

NCPoly multiply(const Presentation& pres, const NCPoly& f, const NCPoly& g, Strategy strategy) {
  return normal_form(pres, poly_free_mul(f, g), strategy);
}

bool ConfluenceReport::all_resolved() const {
  for (const auto& o : overlaps) {
    if (!o.resolved) return false;
  }
  return true;
}

int ConfluenceReport::resolved_count() const {
  int n = 0;
  for (const auto& o : overlaps) n += o.resolved ? 1 : 0;
  return n;
}

ConfluenceReport check_confluence(const Presentation& pres) {
  ConfluenceReport report;
  const int g = pres.generator_count();
  for (int c = 2; c < g; ++c) {
    for (int b = 1; b < c; ++b) {
      for (int a = 0; a < b; ++a) {
        OverlapResult o;
        o.c = c;
        o.b = b;
        o.a = a;
        const NCPoly start = poly_monomial({c, b, a});
        o.leftmost_nf = normal_form(pres, start, Strategy::Leftmost);
        o.rightmost_nf = normal_form(pres, start, Strategy::Rightmost);
        o.resolved = (o.leftmost_nf == o.rightmost_nf);
        report.overlaps.push_back(std::move(o));
      }
    }
  }
  return report;
}

std::vector<Int> hilbert_dims(const Presentation& pres, int d_max) {
  if (d_max < 0) throw std::invalid_argument("hilbert_dims: d_max must be nonnegative");
  require_confluent(pres, "hilbert_dims");
  const int g = pres.generator_count();

  std::vector<Int> dims;
  dims.reserve(d_max + 1);
  for (int d = 0; d <= d_max; ++d) dims.push_back(binomial(g + d - 1, d));

  // Cross-check small degrees by brute force: reduce every length-d word and
  // count the distinct (necessarily ordered) words across all supports.
  for (int d = 1; d <= d_max; ++d) {
    if (!hilbert_brute_checkable(g, d)) break;
    std::set<Word> support;
    std::vector<int> idx(d, 0);
    while (true) {
      const Word w(idx.begin(), idx.end());
      for (const auto& [nw, nc] : normal_form(pres, poly_monomial(w)).terms) {
        support.insert(nw);
      }
      int pos = d - 1;
      while (pos >= 0 && idx[pos] == g - 1) idx[pos--] = 0;
      if (pos < 0) break;
      ++idx[pos];
    }
    if (Int(support.size()) != dims[d]) {
      throw std::runtime_error("hilbert_dims: brute-force support count disagrees at degree " +
                               std::to_string(d));
    }
  }
  return dims;
}

bool hilbert_brute_checkable(int gen_count, int d) {
  if (d < 1 || d > 3) return false;
  long words = 1;
  for (int k = 0; k < d; ++k) {
    words *= gen_count;
    if (words > 512) return false;
  }
  return true;
}

int growth_exponent(const Presentation& pres) {
  require_confluent(pres, "growth_exponent");
  return pres.generator_count();
}

Word parse_word(const Presentation& pres, const std::string& text) {
  Word w;
  std::istringstream in(text);
  std::string name;
  while (in >> name) {
    const int rank = pres.rank_of(name);
    if (rank < 0) throw std::invalid_argument("unknown generator name: '" + name + "'");
    w.push_back(rank);
  }
  return w;
}

std::string word_to_string(const Presentation& pres, const Word& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ' ';
    out += pres.generator_names[w[i]];
  }
  return out;
}

std::string poly_to_string(const Presentation& pres, const NCPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : f.terms) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string word_text = word_to_string(pres, w);
    if (w.empty()) {
      out += rational_to_string(mag);
    } else if (mag == 1) {
      out += word_text;
    } else {
      out += rational_to_string(mag) + "*" + word_text;
    }
  }
  return out;
}

}  // namespace qaw
