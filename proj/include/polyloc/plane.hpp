#pragma once
// Plane series sum_i a_i y_i, their Kleene stars (the conc-characters), and
// the umbral coding sum a_n q^n <-> sum a_n y_n under which the stuffle of
// stars becomes multiplication of 1 + series.

#include "polyloc/series.hpp"
#include "polyloc/taylor.hpp"

#include <stdexcept>
#include <vector>

namespace polyloc {

template <Scalar S>
class PlaneSeries {
 public:
  /// Zero plane series a_1..a_w.
  explicit PlaneSeries(std::size_t w) : coeffs_(w, lift<S>(Rational(0))) {}
  explicit PlaneSeries(std::vector<S> coeffs) : coeffs_(std::move(coeffs)) {}

  std::size_t truncation() const { return coeffs_.size(); }
  /// Coefficient of y_i, 1-based.
  const S& operator[](std::size_t i) const { return coeffs_.at(i - 1); }
  S& operator[](std::size_t i) { return coeffs_.at(i - 1); }

  NCPolynomial<S> polynomial() const {
    NCPolynomial<S> p(Alphabet::Y);
    for (std::size_t i = 1; i <= coeffs_.size(); ++i) p.add(Word::y({i}), coeffs_[i - 1]);
    return p;
  }

  /// (sum a_i y_i)^* truncated at weight truncation().
  GradedSeries<S> star() const { return conc_star(polynomial(), truncation()); }

  friend bool operator==(const PlaneSeries&, const PlaneSeries&) = default;

 private:
  std::vector<S> coeffs_;
};

template <Scalar S>
TaylorSeries<S> umbral_encode(const PlaneSeries<S>& p, const std::string& var = "q") {
  TaylorSeries<S> t(p.truncation(), var);
  for (std::size_t n = 1; n <= p.truncation(); ++n) t[n] = p[n];
  return t;
}

template <Scalar S>
PlaneSeries<S> umbral_decode(const TaylorSeries<S>& t) {
  if (!polyloc::is_zero(t[0])) throw std::invalid_argument("umbral_decode needs a zero constant term");
  PlaneSeries<S> p(t.order());
  for (std::size_t n = 1; n <= t.order(); ++n) p[n] = t[n];
  return p;
}

namespace detail {

template <Scalar S>
TaylorSeries<S> one_plus(const PlaneSeries<S>& p) {
  TaylorSeries<S> t = umbral_encode(p);
  t[0] = lift<S>(Rational(1));
  return t;
}

template <Scalar S>
PlaneSeries<S> minus_one(TaylorSeries<S> t) {
  t[0] = t[0] - lift<S>(Rational(1));
  return umbral_decode(t);
}

}  // namespace detail

/// C with C^* = A^* ⊎ B^*: c_n = a_n + b_n + sum_{i+j=n} a_i b_j.
template <Scalar S>
PlaneSeries<S> char_stuffle_product(const PlaneSeries<S>& a, const PlaneSeries<S>& b) {
  if (a.truncation() != b.truncation()) throw std::invalid_argument("plane series with different truncations");
  return detail::minus_one(detail::one_plus(a) * detail::one_plus(b));
}

/// B with A^* ⊎ B^* = 1, i.e. 1 + B = 1/(1 + A) in the umbral coding.
template <Scalar S>
PlaneSeries<S> char_stuffle_inverse(const PlaneSeries<S>& a) {
  return detail::minus_one(reciprocal_unit(detail::one_plus(a)));
}

/// G(z) = (decode(e^{zT} - 1))^*, a one-parameter subgroup of stuffle characters.
template <Scalar S>
GradedSeries<S> one_param_group(const TaylorSeries<S>& t, const S& z, std::size_t w) {
  if (!polyloc::is_zero(t[0])) throw std::invalid_argument("one_param_group needs T with zero constant term");
  if (t.order() < w) throw std::invalid_argument("T is known to lower order than the truncation weight");
  TaylorSeries<S> e = exp_series(t.truncate(w).scaled(z));
  e[0] = e[0] - lift<S>(Rational(1));
  return umbral_decode(e).star();
}

}  // namespace polyloc
