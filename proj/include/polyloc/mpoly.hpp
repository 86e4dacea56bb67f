#pragma once
// Multivariate polynomials over Q in named formal parameters (z, t, g, ...).

#include "polyloc/rational.hpp"

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace polyloc {

/// A monomial as a sorted list of (variable, positive exponent).
using Monomial = std::vector<std::pair<std::string, unsigned>>;

class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  RationalPolynomial(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace(Monomial{}, c);
  }
  RationalPolynomial(long c) : RationalPolynomial(Rational(c)) {}  // NOLINT

  static RationalPolynomial variable(const std::string& name, unsigned power = 1) {
    RationalPolynomial p;
    if (power == 0) return RationalPolynomial(1);
    p.terms_.emplace(Monomial{{name, power}}, Rational(1));
    return p;
  }

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
  Rational constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Coefficient of var^k, viewing the polynomial as univariate in `var`.
  /// Only valid for polynomials in `var` alone.
  Rational coefficient(const std::string& var, unsigned k) const {
    Monomial m;
    if (k) m.emplace_back(var, k);
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  unsigned degree(const std::string& var) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_)
      for (const auto& [v, e] : m)
        if (v == var) d = std::max(d, e);
    return d;
  }

  RationalPolynomial& operator+=(const RationalPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  RationalPolynomial& operator-=(const RationalPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  RationalPolynomial& operator*=(const RationalPolynomial& o) { return *this = *this * o; }

  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator-(const RationalPolynomial& a) {
    RationalPolynomial r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
  }
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    RationalPolynomial r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(multiply(ma, mb), ca * cb);
    return r;
  }
  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  /// Evaluates with `value(name)` supplying each variable; T must be a ring
  /// constructible from a Rational through `lift`.
  template <class T, class Lift>
  T evaluate(const std::function<T(const std::string&)>& value, Lift lift) const {
    T acc = lift(Rational(0));
    for (const auto& [m, c] : terms_) {
      T term = lift(c);
      for (const auto& [v, e] : m) {
        T x = value(v);
        for (unsigned i = 0; i < e; ++i) term = term * x;
      }
      acc = acc + term;
    }
    return acc;
  }

  /// Substitutes a rational for one variable.
  RationalPolynomial substitute(const std::string& var, const Rational& x) const {
    RationalPolynomial r;
    for (const auto& [m, c] : terms_) {
      Monomial rest;
      Rational coef = c;
      for (const auto& [v, e] : m) {
        if (v == var)
          coef *= pow(x, static_cast<long>(e));
        else
          rest.emplace_back(v, e);
      }
      r.add_term(rest, coef);
    }
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      Rational mag = c;
      bool neg = mag < 0;
      if (neg) mag = -mag;
      if (first)
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      first = false;
      std::string mono;
      for (const auto& [v, e] : m) {
        if (!mono.empty()) mono += "*";
        mono += e == 1 ? v : v + "^" + std::to_string(e);
      }
      if (mono.empty())
        out += to_string(mag);
      else if (mag == 1)
        out += mono;
      else
        out += to_string(mag) + "*" + mono;
    }
    return out;
  }

 private:
  static Monomial multiply(const Monomial& a, const Monomial& b) {
    Monomial r;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        r.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        r.push_back(b[j++]);
      } else {
        r.emplace_back(a[i].first, a[i].second + b[j].second);
        ++i;
        ++j;
      }
    }
    return r;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<Monomial, Rational> terms_;
};

}  // namespace polyloc
