#include "qaw/unipoly.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qaw {

UPoly& upoly_trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

bool upoly_is_zero(const UPoly& p) {
  for (const auto& c : p) {
    if (c != 0) return false;
  }
  return true;
}

int upoly_degree(const UPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    if (p[i] != 0) return i;
  }
  return -1;
}

UPoly upoly_const(const Rational& c) {
  if (c == 0) return {};
  return {c};
}

UPoly upoly_add(const UPoly& a, const UPoly& b) {
  UPoly out(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return upoly_trim(out);
}

UPoly upoly_sub(const UPoly& a, const UPoly& b) {
  UPoly out(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return upoly_trim(out);
}

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
  if (upoly_is_zero(a) || upoly_is_zero(b)) return {};
  UPoly out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return upoly_trim(out);
}

UPoly upoly_scale(const UPoly& a, const Rational& c) {
  if (c == 0) return {};
  UPoly out = a;
  for (auto& x : out) x *= c;
  return upoly_trim(out);
}

Rational upoly_eval(const UPoly& p, const Rational& t) {
  Rational acc = 0;
  for (size_t i = p.size(); i-- > 0;) acc = acc * t + p[i];
  return acc;
}

namespace {

/// Remainder of a by b (b nonzero), standard polynomial division.
UPoly upoly_rem(UPoly a, const UPoly& b) {
  const int db = upoly_degree(b);
  upoly_trim(a);
  while (upoly_degree(a) >= db) {
    const int da = upoly_degree(a);
    const Rational factor = a[da] / b[db];
    for (int i = 0; i <= db; ++i) a[da - db + i] -= factor * b[i];
    upoly_trim(a);
  }
  return a;
}

/// All positive divisors of |n| by trial division (n nonzero, desk scale).
std::vector<Int> positive_divisors(Int n) {
  if (n < 0) n = -n;
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

UPoly upoly_gcd(UPoly a, UPoly b) {
  upoly_trim(a);
  upoly_trim(b);
  while (!b.empty()) {
    UPoly r = upoly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

std::vector<Rational> rational_roots(const UPoly& p) {
  if (upoly_is_zero(p)) {
    throw std::invalid_argument("rational_roots: zero polynomial");
  }
  // Factor out t^k, remembering the root t = 0.
  size_t low = 0;
  while (p[low] == 0) ++low;
  std::set<Rational> roots;
  if (low > 0) roots.insert(Rational(0));
  std::vector<Rational> body(p.begin() + low, p.end());
  if (body.size() > 1) {
    // Clear denominators to an integer polynomial; rational roots are then
    // +-(divisor of constant term)/(divisor of leading term).
    Int common_den = 1;
    for (const auto& c : body) {
      const Int den = boost::multiprecision::denominator(c);
      common_den = common_den / boost::multiprecision::gcd(common_den, den) * den;
    }
    std::vector<Int> ip;
    ip.reserve(body.size());
    for (const auto& c : body) {
      ip.push_back(boost::multiprecision::numerator(c * Rational(common_den)));
    }
    for (const Int& num : positive_divisors(ip.front())) {
      for (const Int& den : positive_divisors(ip.back())) {
        for (int sign : {1, -1}) {
          const Rational candidate = Rational(sign * num, den);
          if (upoly_eval(body, candidate) == 0) roots.insert(candidate);
        }
      }
    }
  }
  return {roots.begin(), roots.end()};
}

}  // namespace qaw
