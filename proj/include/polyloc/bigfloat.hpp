#pragma once
// Arbitrary-precision real and complex floats on top of MPFR.
//
// Every BigReal carries its own precision; binary operations round to the
// larger precision of their operands, so no global precision state exists.
// A default-constructed BigReal is an exact zero of minimal precision.

#include "polyloc/rational.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>

namespace polyloc {

/// Requested precision or tolerance cannot be honoured.
struct PrecisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Working precision and comparison tolerance for numeric evaluations.
struct PrecisionContext {
  int digits = 50;
  double tolerance = 1e-30;

  PrecisionContext() = default;
  PrecisionContext(int d, double tol) : digits(d), tolerance(tol) { validate(); }
  explicit PrecisionContext(int d) : digits(d), tolerance(std::pow(10.0, -(d - 10))) { validate(); }

  void validate() const {
    if (digits < 15) throw PrecisionError("precision must be at least 15 digits");
    // 1% slack absorbs the rounding of pow(10, -k) itself.
    if (tolerance < 0.99 * std::pow(10.0, -(digits - 10)))
      throw PrecisionError("tolerance " + std::to_string(tolerance) + " is below 10^-(" +
                           std::to_string(digits) + "-10)");
  }

  /// Bits used internally: requested digits plus ten guard digits.
  mpfr_prec_t bits() const {
    return static_cast<mpfr_prec_t>(std::ceil((digits + 10) * 3.3219280948873623));
  }
};

class BigReal {
 public:
  BigReal() { mpfr_init2(v_, MPFR_PREC_MIN); mpfr_set_zero(v_, 1); }
  explicit BigReal(mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
  BigReal(long x, mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_si(v_, x, MPFR_RNDN); }
  BigReal(double x, mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_d(v_, x, MPFR_RNDN); }
  BigReal(const Rational& q, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  BigReal(const BigInt& z, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
  }
  /// Decimal literal such as "-0.125" or "3e-4"; throws std::invalid_argument.
  BigReal(const std::string& text, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    char* end = nullptr;
    mpfr_strtofr(v_, text.c_str(), &end, 10, MPFR_RNDN);
    if (text.empty() || end == text.c_str() || *end != '\0') {
      mpfr_clear(v_);
      throw std::invalid_argument("malformed real '" + text + "'");
    }
  }

  BigReal(const BigReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigReal(BigReal&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  BigReal& operator=(const BigReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigReal& operator=(BigReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigReal() { mpfr_clear(v_); }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  /// Scientific notation with the given number of significant digits.
  std::string str(int digits) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", std::max(digits - 1, 0), v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  }

  BigReal& operator+=(const BigReal& o) { return assign2(o, mpfr_add); }
  BigReal& operator-=(const BigReal& o) { return assign2(o, mpfr_sub); }
  BigReal& operator*=(const BigReal& o) { return assign2(o, mpfr_mul); }
  BigReal& operator/=(const BigReal& o) { return assign2(o, mpfr_div); }

  friend BigReal operator+(BigReal a, const BigReal& b) { return a += b; }
  friend BigReal operator-(BigReal a, const BigReal& b) { return a -= b; }
  friend BigReal operator*(BigReal a, const BigReal& b) { return a *= b; }
  friend BigReal operator/(BigReal a, const BigReal& b) { return a /= b; }
  friend BigReal operator-(BigReal a) {
    mpfr_neg(a.v_, a.v_, MPFR_RNDN);
    return a;
  }

  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }

  template <class F>
  friend BigReal apply1(const BigReal& x, F f) {
    BigReal r(x.precision());
    f(r.v_, x.v_, MPFR_RNDN);
    return r;
  }

 private:
  template <class F>
  BigReal& assign2(const BigReal& o, F f) {
    mpfr_prec_t p = std::max(precision(), o.precision());
    if (p == precision()) {
      f(v_, v_, o.v_, MPFR_RNDN);
    } else {
      BigReal r(p);
      f(r.v_, v_, o.v_, MPFR_RNDN);
      *this = std::move(r);
    }
    return *this;
  }

  mpfr_t v_;
};

inline BigReal abs(const BigReal& x) { return apply1(x, mpfr_abs); }
inline BigReal sqrt(const BigReal& x) { return apply1(x, mpfr_sqrt); }
inline BigReal exp(const BigReal& x) { return apply1(x, mpfr_exp); }
inline BigReal log(const BigReal& x) { return apply1(x, mpfr_log); }
inline BigReal sin(const BigReal& x) { return apply1(x, mpfr_sin); }
inline BigReal cos(const BigReal& x) { return apply1(x, mpfr_cos); }
inline BigReal sinh(const BigReal& x) { return apply1(x, mpfr_sinh); }
inline BigReal cosh(const BigReal& x) { return apply1(x, mpfr_cosh); }

inline BigReal atan2(const BigReal& y, const BigReal& x) {
  BigReal r(std::max(y.precision(), x.precision()));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

inline BigReal hypot(const BigReal& x, const BigReal& y) {
  BigReal r(std::max(y.precision(), x.precision()));
  mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

inline BigReal pow_int(const BigReal& x, long e) {
  BigReal r(x.precision());
  mpfr_pow_si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

/// n^(-s) for a positive integer n.
inline BigReal inverse_power(std::uint64_t n, unsigned long s, mpfr_prec_t bits) {
  BigReal r(bits);
  mpfr_ui_pow_ui(r.get(), n, s, MPFR_RNDN);
  mpfr_ui_div(r.get(), 1, r.get(), MPFR_RNDN);
  return r;
}

inline BigReal const_pi(mpfr_prec_t bits) {
  BigReal r(bits);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

class BigComplex {
 public:
  BigComplex() = default;
  /// Zero at the given precision.
  explicit BigComplex(mpfr_prec_t bits) : re_(bits), im_(bits) {}
  BigComplex(BigReal re, BigReal im) : re_(std::move(re)), im_(std::move(im)) {}
  explicit BigComplex(BigReal re) : re_(std::move(re)), im_() {}
  BigComplex(const Rational& q, mpfr_prec_t bits) : re_(q, bits), im_() {}
  BigComplex(double re, double im, mpfr_prec_t bits) : re_(re, bits), im_(im, bits) {}

  const BigReal& real() const { return re_; }
  const BigReal& imag() const { return im_; }
  mpfr_prec_t precision() const { return std::max(re_.precision(), im_.precision()); }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  BigComplex& operator+=(const BigComplex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  BigComplex& operator-=(const BigComplex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  BigComplex& operator*=(const BigComplex& o) {
    BigReal re = re_ * o.re_ - im_ * o.im_;
    BigReal im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  BigComplex& operator/=(const BigComplex& o) {
    BigReal den = o.re_ * o.re_ + o.im_ * o.im_;
    if (den.is_zero()) throw std::domain_error("complex division by zero");
    BigReal re = (re_ * o.re_ + im_ * o.im_) / den;
    BigReal im = (im_ * o.re_ - re_ * o.im_) / den;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  BigComplex& operator*=(const BigReal& s) {
    re_ *= s;
    im_ *= s;
    return *this;
  }

  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  friend BigComplex operator*(BigComplex a, const BigReal& s) { return a *= s; }
  friend BigComplex operator*(const BigReal& s, BigComplex a) { return a *= s; }
  friend BigComplex operator-(const BigComplex& a) { return BigComplex(-a.re_, -a.im_); }
  friend bool operator==(const BigComplex& a, const BigComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  BigReal re_;
  BigReal im_;
};

inline BigReal abs(const BigComplex& z) { return hypot(z.real(), z.imag()); }
inline BigReal arg(const BigComplex& z) { return atan2(z.imag(), z.real()); }

inline BigComplex exp(const BigComplex& z) {
  BigReal m = exp(z.real());
  return BigComplex(m * cos(z.imag()), m * sin(z.imag()));
}

/// Principal branch.
inline BigComplex log(const BigComplex& z) {
  if (z.is_zero()) throw std::domain_error("log of zero");
  return BigComplex(log(abs(z)), arg(z));
}

inline BigComplex sin(const BigComplex& z) {
  return BigComplex(sin(z.real()) * cosh(z.imag()), cos(z.real()) * sinh(z.imag()));
}

inline BigComplex pow_int(BigComplex base, unsigned long e) {
  BigComplex r(BigReal(1L, base.precision()), BigReal(base.precision()));
  while (e) {
    if (e & 1U) r *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return r;
}

/// e^{i theta}
inline BigComplex polar_unit(const BigReal& theta) { return BigComplex(cos(theta), sin(theta)); }

inline BigComplex to_complex(const Rational& q, mpfr_prec_t bits) { return BigComplex(q, bits); }

/// "re+imi" with the given number of significant digits.
inline std::string to_string(const BigComplex& z, int digits) {
  std::string im = z.imag().str(digits);
  if (im[0] != '-') im = "+" + im;
  return z.real().str(digits) + im + "i";
}

}  // namespace polyloc
