#include "qaw/ncpoly.hpp"

namespace qaw {

Rational NCPoly::coeff(const Word& w) const {
  const auto it = terms.find(w);
  return it == terms.end() ? Rational(0) : it->second;
}

void NCPoly::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  const auto [it, inserted] = terms.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

bool NCPoly::is_homogeneous(int d) const {
  for (const auto& [w, c] : terms) {
    if (static_cast<int>(w.size()) != d) return false;
  }
  return true;
}

int NCPoly::degree() const {
  if (terms.empty()) return -1;
  // ShortLex orders by length first, so the last key is the longest word.
  return static_cast<int>(terms.rbegin()->first.size());
}

NCPoly poly_monomial(const Word& w, const Rational& c) {
  NCPoly p;
  p.add_term(w, c);
  return p;
}

NCPoly poly_add(const NCPoly& a, const NCPoly& b) {
  NCPoly out = a;
  for (const auto& [w, c] : b.terms) out.add_term(w, c);
  return out;
}

NCPoly poly_sub(const NCPoly& a, const NCPoly& b) {
  NCPoly out = a;
  for (const auto& [w, c] : b.terms) out.add_term(w, -c);
  return out;
}

NCPoly poly_scale(const NCPoly& a, const Rational& c) {
  NCPoly out;
  if (c == 0) return out;
  for (const auto& [w, coeff] : a.terms) out.terms.emplace(w, coeff * c);
  return out;
}

NCPoly poly_free_mul(const NCPoly& a, const NCPoly& b) {
  NCPoly out;
  for (const auto& [wa, ca] : a.terms) {
    for (const auto& [wb, cb] : b.terms) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  }
  return out;
}

}  // namespace qaw
