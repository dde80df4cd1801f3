#include "qaw/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace qaw {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.erase(body.begin());
  }
  std::string num = body;
  std::string den = "1";
  if (auto slash = body.find('/'); slash != std::string::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational literal: '" + text + "'");
  }
  Int n(num);
  Int d(den);
  if (d == 0) {
    throw std::invalid_argument("zero denominator in rational literal: '" + text + "'");
  }
  if (negative) n = -n;
  return Rational(n, d);
}

std::string rational_to_string(const Rational& r) {
  const Int num = boost::multiprecision::numerator(r);
  const Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational rational_inverse(const Rational& r) {
  if (r == 0) throw std::invalid_argument("inverse of zero");
  return Rational(1) / r;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  const Int num = boost::multiprecision::numerator(r);
  const Int den = boost::multiprecision::denominator(r);
  const Int ns = boost::multiprecision::sqrt(num);
  const Int ds = boost::multiprecision::sqrt(den);
  if (ns * ns != num || ds * ds != den) return std::nullopt;
  return Rational(ns, ds);
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

}  // namespace qaw
