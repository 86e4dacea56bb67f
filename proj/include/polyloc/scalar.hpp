#pragma once
// Coefficient rings usable by the noncommutative algebra: exact rationals,
// rational polynomials in formal parameters, and big complex floats.

#include "polyloc/bigfloat.hpp"
#include "polyloc/mpoly.hpp"
#include "polyloc/rational.hpp"

#include <concepts>
#include <string>

namespace polyloc {

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static Rational from_rational(const Rational& q) { return q; }
  static bool is_zero(const Rational& x) { return x == 0; }
  static std::string str(const Rational& x) { return to_string(x); }
};

template <>
struct scalar_traits<RationalPolynomial> {
  static RationalPolynomial from_rational(const Rational& q) { return RationalPolynomial(q); }
  static bool is_zero(const RationalPolynomial& x) { return x.is_zero(); }
  static std::string str(const RationalPolynomial& x) {
    return x.terms().size() > 1 ? "(" + x.str() + ")" : x.str();
  }
};

/// Complex coefficients are lifted from rationals at a fixed working precision;
/// values computed at higher precision keep theirs.
template <>
struct scalar_traits<BigComplex> {
  static constexpr mpfr_prec_t lift_bits = 200;
  static BigComplex from_rational(const Rational& q) { return BigComplex(q, lift_bits); }
  static bool is_zero(const BigComplex& x) { return x.is_zero(); }
  static std::string str(const BigComplex& x) { return "(" + to_string(x, 20) + ")"; }
};

template <class S>
concept Scalar = requires(S a, S b, Rational q) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { scalar_traits<S>::from_rational(q) } -> std::convertible_to<S>;
  { scalar_traits<S>::is_zero(a) } -> std::convertible_to<bool>;
  { scalar_traits<S>::str(a) } -> std::convertible_to<std::string>;
};

template <Scalar S>
S lift(const Rational& q) {
  return scalar_traits<S>::from_rational(q);
}

template <Scalar S>
bool is_zero(const S& x) {
  return scalar_traits<S>::is_zero(x);
}

}  // namespace polyloc
