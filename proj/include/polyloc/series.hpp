#pragma once
// Weight-truncated series: the carrier of the conc/shuffle/stuffle algebras
// when only finitely many homogeneous components are kept.

#include "polyloc/ncpoly.hpp"

#include <cstdint>
#include <stdexcept>

namespace polyloc {

/// A series known exactly on all words of weight <= truncation().
/// `lossy()` is set whenever terms of higher weight were (or may have been)
/// discarded, so a false flag means the stored data is the whole series.
template <Scalar S>
class GradedSeries {
 public:
  GradedSeries(Alphabet a, std::uint64_t truncation) : body_(a), truncation_(truncation) {}
  GradedSeries(const NCPolynomial<S>& p, std::uint64_t truncation)
      : body_(p.truncated(truncation)), truncation_(truncation) {
    lossy_ = body_.size() != p.size();
  }

  Alphabet alphabet() const { return body_.alphabet(); }
  std::uint64_t truncation() const { return truncation_; }
  bool lossy() const { return lossy_; }
  void mark_lossy() { lossy_ = true; }
  const NCPolynomial<S>& polynomial() const { return body_; }

  S coefficient(const Word& w) const {
    if (w.weight() > truncation_) throw std::out_of_range("word " + to_string(w) + " exceeds truncation");
    return body_.coefficient(w);
  }
  S constant_term() const { return body_.constant_term(); }

  GradedSeries& add(const Word& w, const S& c) {
    if (w.weight() > truncation_) {
      if (!polyloc::is_zero(c)) lossy_ = true;
      return *this;
    }
    body_.add(w, c);
    return *this;
  }

  /// Lowers the truncation weight.
  GradedSeries truncate(std::uint64_t w) const {
    if (w >= truncation_) return *this;
    GradedSeries r(body_, w);
    r.lossy_ = r.lossy_ || lossy_;
    return r;
  }

  friend GradedSeries operator+(const GradedSeries& a, const GradedSeries& b) {
    std::uint64_t w = std::min(a.truncation_, b.truncation_);
    GradedSeries r(a.body_.truncated(w) + b.body_.truncated(w), w);
    r.lossy_ = a.lossy_ || b.lossy_ || a.truncation_ != b.truncation_;
    return r;
  }
  friend GradedSeries operator-(const GradedSeries& a, const GradedSeries& b) {
    return a + b.scaled(lift<S>(Rational(-1)));
  }

  GradedSeries scaled(const S& k) const {
    GradedSeries r(body_.scaled(k), truncation_);
    r.lossy_ = lossy_;
    return r;
  }

  /// Equality of the data below the common truncation.
  friend bool agree_below(const GradedSeries& a, const GradedSeries& b, std::uint64_t w) {
    return a.body_.truncated(w) == b.body_.truncated(w);
  }

  friend bool operator==(const GradedSeries& a, const GradedSeries& b) {
    return a.truncation_ == b.truncation_ && a.body_ == b.body_;
  }

  std::string str() const { return body_.str() + (lossy_ ? " + O(w>" + std::to_string(truncation_) + ")" : ""); }

 private:
  NCPolynomial<S> body_;
  std::uint64_t truncation_;
  bool lossy_ = false;
};

/// [S]_n, the weight-n component.
template <Scalar S>
NCPolynomial<S> homogeneous_component(const GradedSeries<S>& s, std::uint64_t n) {
  if (n > s.truncation()) throw std::out_of_range("component above the truncation weight");
  return s.polynomial().homogeneous(n);
}

/// Product of two truncated series, exact below the smaller truncation.
template <Scalar S>
GradedSeries<S> product(Product kind, const GradedSeries<S>& a, const GradedSeries<S>& b) {
  std::uint64_t w = std::min(a.truncation(), b.truncation());
  NCPolynomial<S> p = product(kind, a.polynomial(), b.polynomial(), w);
  GradedSeries<S> r(p, w);
  // Anything of weight > w that the full product would carry was skipped.
  bool dropped = false;
  if (auto ma = a.polynomial().max_weight(), mb = b.polynomial().max_weight(); ma && mb)
    dropped = *ma + *mb > w;
  if (a.lossy() || b.lossy() || dropped) r.mark_lossy();
  return r;
}

template <Scalar S>
GradedSeries<S> stuffle(const GradedSeries<S>& a, const GradedSeries<S>& b) {
  return product(Product::Stuffle, a, b);
}

template <Scalar S>
GradedSeries<S> shuffle(const GradedSeries<S>& a, const GradedSeries<S>& b) {
  return product(Product::Shuffle, a, b);
}

template <Scalar S>
GradedSeries<S> conc(const GradedSeries<S>& a, const GradedSeries<S>& b) {
  return product(Product::Conc, a, b);
}

namespace detail {

template <Scalar S>
void require_proper(const NCPolynomial<S>& p, const char* what) {
  if (!p.is_proper()) throw std::invalid_argument(std::string(what) + " requires a proper series (zero constant term)");
}

template <Scalar S>
GradedSeries<S> unit_series(Alphabet a, std::uint64_t w) {
  GradedSeries<S> one(a, w);
  one.add(Word(a), lift<S>(Rational(1)));
  return one;
}

}  // namespace detail

/// sum_{m>=0} P^{kind m} with each power weighted by `coef(m)`; stops once a
/// power vanishes below the truncation.
template <Scalar S, class Coef>
GradedSeries<S> power_series(Product kind, const NCPolynomial<S>& p, std::uint64_t w, Coef coef) {
  detail::require_proper(p, "power series");
  GradedSeries<S> base(p, w);
  GradedSeries<S> acc = detail::unit_series<S>(p.alphabet(), w);
  GradedSeries<S> power = acc;
  for (unsigned m = 1; m <= w; ++m) {
    power = product(kind, power, base);
    if (power.polynomial().is_zero()) break;
    acc = acc + power.scaled(coef(m));
  }
  // Powers beyond the w-th start above weight w; a nonzero P always has some.
  if (!p.is_zero()) acc.mark_lossy();
  return acc;
}

/// Kleene star S^* = sum_m S^m under concatenation, truncated at weight w.
template <Scalar S>
GradedSeries<S> conc_star(const NCPolynomial<S>& p, std::uint64_t w) {
  return power_series(Product::Conc, p, w, [](unsigned) { return lift<S>(Rational(1)); });
}

template <Scalar S>
GradedSeries<S> conc_star(const GradedSeries<S>& s, std::uint64_t w) {
  GradedSeries<S> r = conc_star(s.polynomial(), std::min(w, s.truncation()));
  if (s.lossy()) r.mark_lossy();
  return r;
}

/// exp_⊎(P) = 1 + P + P⊎P/2! + ..., truncated at weight w.
template <Scalar S>
GradedSeries<S> stuffle_exp(const NCPolynomial<S>& p, std::uint64_t w) {
  if (p.alphabet() != Alphabet::Y) throw AlphabetMismatch("stuffle exponential is defined over Y");
  Rational fact = 1;
  return power_series(Product::Stuffle, p, w, [&fact](unsigned m) {
    fact *= m;
    return lift<S>(Rational(1) / fact);
  });
}

template <Scalar S>
GradedSeries<S> stuffle_exp(const GradedSeries<S>& s, std::uint64_t w) {
  GradedSeries<S> r = stuffle_exp(s.polynomial(), std::min(w, s.truncation()));
  if (s.lossy()) r.mark_lossy();
  return r;
}

/// P^{⧢m} (or ⊎) truncated at weight w.
template <Scalar S>
GradedSeries<S> power(Product kind, const NCPolynomial<S>& p, unsigned m, std::uint64_t w) {
  GradedSeries<S> base(p, w);
  GradedSeries<S> acc = detail::unit_series<S>(p.alphabet(), w);
  for (unsigned i = 0; i < m; ++i) acc = product(kind, acc, base);
  return acc;
}

}  // namespace polyloc
