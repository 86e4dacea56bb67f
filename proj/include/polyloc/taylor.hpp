#pragma once
// Truncated power series in one variable.

#include "polyloc/scalar.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyloc {

template <Scalar S>
class TaylorSeries {
 public:
  /// Zero series of order `order` (coefficients a_0..a_order).
  TaylorSeries(std::size_t order, std::string var = "z")
      : var_(std::move(var)), coeffs_(order + 1, lift<S>(Rational(0))) {}
  TaylorSeries(std::vector<S> coeffs, std::string var = "z") : var_(std::move(var)), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("Taylor series needs at least the constant term");
  }

  const std::string& variable() const { return var_; }
  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<S>& coefficients() const { return coeffs_; }
  const S& operator[](std::size_t n) const { return coeffs_.at(n); }
  S& operator[](std::size_t n) { return coeffs_.at(n); }

  std::optional<double> radius_hint() const { return radius_; }
  void set_radius_hint(double r) { radius_ = r; }

  TaylorSeries truncate(std::size_t order) const {
    std::vector<S> c(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(order, this->order()) + 1));
    return TaylorSeries(std::move(c), var_);
  }

  friend TaylorSeries operator+(const TaylorSeries& a, const TaylorSeries& b) {
    check(a, b);
    std::size_t d = std::min(a.order(), b.order());
    TaylorSeries r(d, a.var_);
    for (std::size_t n = 0; n <= d; ++n) r.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
    return r;
  }
  friend TaylorSeries operator-(const TaylorSeries& a, const TaylorSeries& b) {
    check(a, b);
    std::size_t d = std::min(a.order(), b.order());
    TaylorSeries r(d, a.var_);
    for (std::size_t n = 0; n <= d; ++n) r.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
    return r;
  }
  TaylorSeries scaled(const S& k) const {
    TaylorSeries r = *this;
    for (auto& c : r.coeffs_) c = k * c;
    return r;
  }

  /// Cauchy product.
  friend TaylorSeries operator*(const TaylorSeries& a, const TaylorSeries& b) {
    check(a, b);
    std::size_t d = std::min(a.order(), b.order());
    TaylorSeries r(d, a.var_);
    for (std::size_t i = 0; i <= d; ++i) {
      if (polyloc::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; i + j <= d; ++j) r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
  }

  friend bool operator==(const TaylorSeries& a, const TaylorSeries& b) {
    return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
  }

  std::string str() const {
    std::string out;
    for (std::size_t n = 0; n <= order(); ++n) {
      if (polyloc::is_zero(coeffs_[n])) continue;
      if (!out.empty()) out += " + ";
      out += scalar_traits<S>::str(coeffs_[n]);
      if (n) out += "*" + var_ + (n > 1 ? "^" + std::to_string(n) : "");
    }
    return (out.empty() ? "0" : out) + " + O(" + var_ + "^" + std::to_string(order() + 1) + ")";
  }

 private:
  static void check(const TaylorSeries& a, const TaylorSeries& b) {
    if (a.var_ != b.var_) throw std::invalid_argument("Taylor series in different variables");
  }

  std::string var_;
  std::vector<S> coeffs_;
  std::optional<double> radius_;
};

/// Coefficientwise product.
template <Scalar S>
TaylorSeries<S> hadamard(const TaylorSeries<S>& f, const TaylorSeries<S>& g) {
  if (f.variable() != g.variable()) throw std::invalid_argument("Hadamard product of series in different variables");
  std::size_t d = std::min(f.order(), g.order());
  TaylorSeries<S> r(d, f.variable());
  for (std::size_t n = 0; n <= d; ++n) r[n] = f[n] * g[n];
  return r;
}

/// exp(f) for f with zero constant term, via n b_n = sum_k k a_k b_{n-k}.
template <Scalar S>
TaylorSeries<S> exp_series(const TaylorSeries<S>& f) {
  if (!polyloc::is_zero(f[0])) throw std::invalid_argument("exp_series needs a zero constant term");
  TaylorSeries<S> r(f.order(), f.variable());
  r[0] = lift<S>(Rational(1));
  for (std::size_t n = 1; n <= f.order(); ++n) {
    S acc = lift<S>(Rational(0));
    for (std::size_t k = 1; k <= n; ++k)
      if (!polyloc::is_zero(f[k])) acc = acc + lift<S>(Rational(static_cast<long>(k))) * f[k] * r[n - k];
    r[n] = acc * lift<S>(Rational(1, static_cast<unsigned long>(n)));
  }
  return r;
}

/// 1/f for f with constant term 1.
template <Scalar S>
TaylorSeries<S> reciprocal_unit(const TaylorSeries<S>& f) {
  if (!polyloc::is_zero(S(f[0] - lift<S>(Rational(1))))) throw std::invalid_argument("reciprocal_unit needs constant term 1");
  TaylorSeries<S> r(f.order(), f.variable());
  r[0] = lift<S>(Rational(1));
  for (std::size_t n = 1; n <= f.order(); ++n) {
    S acc = lift<S>(Rational(0));
    for (std::size_t k = 1; k <= n; ++k) acc = acc - f[k] * r[n - k];
    r[n] = acc;
  }
  return r;
}

/// Keeps r times the coefficients at exponents divisible by r, which equals
/// the sum of f(chi z) over the r-th roots of unity chi.
template <Scalar S>
TaylorSeries<S> symmetrize(const TaylorSeries<S>& f, unsigned r) {
  if (r == 0) throw std::invalid_argument("symmetrize needs r >= 1");
  TaylorSeries<S> out(f.order(), f.variable());
  S scale = lift<S>(Rational(r));
  for (std::size_t n = 0; n <= f.order(); n += r) out[n] = scale * f[n];
  return out;
}

}  // namespace polyloc
