#pragma once
// Numeric characters: zeta values, multiple zeta values, the regularized
// character gamma_* (y1 -> Euler's constant), the exponent series ell_k and
// the functions 1/Gamma_{y_k}(1+z) = exp(ell_k(z)).

#include "polyloc/bigfloat.hpp"
#include "polyloc/harmonic.hpp"
#include "polyloc/mpoly.hpp"
#include "polyloc/series.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <tuple>
#include <vector>

namespace polyloc {

/// A numeric value together with an estimate of its total error.
struct CharacterValue {
  BigComplex value;
  double error_bound = 0;
};

namespace detail {

/// Thread-safe memo table; values are deterministic so racing inserts agree.
template <class Key, class Value>
class MemoTable {
 public:
  template <class Make>
  Value get(const Key& key, Make make) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = map_.find(key); it != map_.end()) return it->second;
    }
    Value v = make();
    std::unique_lock lock(mutex_);
    return map_.emplace(key, std::move(v)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<Key, Value> map_;
};

inline BigReal from_rational(const Rational& q, mpfr_prec_t bits) { return BigReal(q, bits); }

/// 10^-(digits+5): nominal rounding error of a value carried with ten guard digits.
inline double rounding_bound(const PrecisionContext& ctx) { return std::pow(10.0, -(ctx.digits + 5)); }

inline double to_double_abs(const BigComplex& z) { return abs(z).to_double(); }

}  // namespace detail

// ---------------------------------------------------------------- Bernoulli

/// B_n with B_1 = -1/2, from sum_{k<=n} C(n+1, k) B_k = 0.
inline Rational bernoulli(unsigned n) {
  static std::shared_mutex mutex;
  static std::vector<Rational> table{Rational(1)};
  {
    std::shared_lock lock(mutex);
    if (n < table.size()) return table[n];
  }
  std::unique_lock lock(mutex);
  while (table.size() <= n) {
    const auto m = static_cast<unsigned>(table.size());
    Rational acc = 0;
    for (unsigned k = 0; k < m; ++k)
      if (table[k] != 0) acc += Rational(binomial(m + 1, k)) * table[k];
    Rational b = -acc / Rational(m + 1);
    b.canonicalize();
    table.push_back(b);
  }
  return table[n];
}

/// zeta(2m) / pi^{2m} = (-1)^{m+1} B_{2m} 2^{2m-1} / (2m)!.
inline Rational zeta_even_ratio(unsigned m) {
  if (m == 0) throw std::invalid_argument("zeta_even_ratio needs m >= 1");
  BigInt two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, 2 * m - 1);
  Rational r = bernoulli(2 * m) * Rational(two_pow) / Rational(factorial(2 * m));
  r.canonicalize();
  return m % 2 ? r : Rational(-r);
}

// ---------------------------------------------------------------- constants

namespace detail {

/// sum_{k=1}^{K} k^-s when a K <= 64 makes the tail K^{1-s}/(s-1) negligible.
inline std::optional<BigReal> zeta_direct(unsigned s, mpfr_prec_t bits) {
  for (unsigned k = 2; k <= 64; ++k) {
    double log2_tail = (1.0 - s) * std::log2(static_cast<double>(k)) - std::log2(s - 1.0);
    if (log2_tail < -static_cast<double>(bits) - 4) {
      BigReal acc(1L, bits);
      for (unsigned n = 2; n <= k; ++n) acc += inverse_power(n, s, bits);
      return acc;
    }
  }
  return std::nullopt;
}

/// Borwein's acceleration of the alternating series eta(s), then
/// zeta(s) = eta(s) / (1 - 2^{1-s}). Error below 3 (3 + sqrt 8)^-n.
inline BigReal zeta_borwein(unsigned s, mpfr_prec_t bits) {
  const mpfr_prec_t wb = bits + 32;
  const auto n = static_cast<unsigned>(std::ceil((wb + 2) * std::log(2.0) / std::log(3.0 + std::sqrt(8.0)))) + 1;
  // d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!)
  std::vector<BigInt> d(n + 1);
  Rational partial = 0;
  for (unsigned i = 0; i <= n; ++i) {
    BigInt four;
    mpz_ui_pow_ui(four.get_mpz_t(), 4, i);
    Rational term(BigInt(BigInt(n) * factorial(n + i - 1) * four), BigInt(factorial(n - i) * factorial(2 * i)));
    term.canonicalize();
    partial += term;
    if (partial.get_den() != 1) throw std::logic_error("Borwein weights must be integers");
    d[i] = partial.get_num();
  }
  BigReal acc(wb);
  for (unsigned k = 0; k < n; ++k) {
    BigReal t = BigReal(BigInt(d[k] - d[n]), wb) * inverse_power(k + 1, s, wb);
    if (k % 2) acc -= t;
    else acc += t;
  }
  BigReal eta = -acc / BigReal(d[n], wb);
  BigReal denom = BigReal(1L, wb) - pow_int(BigReal(2L, wb), 1 - static_cast<long>(s));
  BigReal r = eta / denom;
  BigReal out(bits);
  mpfr_set(out.get(), r.get(), MPFR_RNDN);
  return out;
}

inline MemoTable<std::pair<unsigned, mpfr_prec_t>, BigReal>& zeta_cache() {
  static MemoTable<std::pair<unsigned, mpfr_prec_t>, BigReal> t;
  return t;
}

}  // namespace detail

/// zeta(s) for integer s >= 2 at `bits` of precision. Large s are summed
/// directly; even s use the Bernoulli closed form, odd s the eta acceleration.
inline BigReal zeta_real(unsigned s, mpfr_prec_t bits) {
  if (s < 2) throw DomainError("zeta(s) needs s >= 2");
  return detail::zeta_cache().get({s, bits}, [&] {
    if (auto direct = detail::zeta_direct(s, bits)) return *direct;
    if (s % 2 == 0) {
      BigReal v = BigReal(zeta_even_ratio(s / 2), bits + 16) * pow_int(const_pi(bits + 16), s);
      BigReal out(bits);
      mpfr_set(out.get(), v.get(), MPFR_RNDN);
      return out;
    }
    return detail::zeta_borwein(s, bits);
  });
}

inline CharacterValue zeta_int(unsigned n, const PrecisionContext& ctx) {
  ctx.validate();
  return {BigComplex(zeta_real(n, ctx.bits())), detail::rounding_bound(ctx)};
}

/// Euler's constant by the Brent-McMillan formula gamma = U/V with
/// U = sum A_k, V = sum B_k; error about pi e^{-4n}.
inline BigReal euler_gamma(mpfr_prec_t bits) {
  static detail::MemoTable<mpfr_prec_t, BigReal> cache;
  return cache.get(bits, [bits] {
    const auto n = static_cast<unsigned long>(std::ceil((bits + 8) * std::log(2.0) / 4)) + 1;
    const auto big_k = static_cast<unsigned long>(std::ceil(3.5911 * static_cast<double>(n))) + 1;
    const mpfr_prec_t wb = bits + static_cast<mpfr_prec_t>(3 * n) + 64;
    const BigReal n2(BigInt(BigInt(n) * BigInt(n)), wb);
    BigReal a = -log(BigReal(static_cast<long>(n), wb));
    BigReal b(1L, wb);
    BigReal u = a, v = b;
    for (unsigned long k = 1; k <= big_k; ++k) {
      const BigReal kk(static_cast<long>(k), wb);
      b = b * n2 / (kk * kk);
      a = (a * n2 / kk + b) / kk;
      u += a;
      v += b;
    }
    BigReal g = u / v;
    BigReal out(bits);
    mpfr_set(out.get(), g.get(), MPFR_RNDN);
    return out;
  });
}

// ---------------------------------------------------------------- tails

namespace detail {

/// B_{2k}/(2k)! * (q)_{2k-1}, the Euler-Maclaurin weights for f(x) = x^-q.
inline Rational em_weight(unsigned q, unsigned k) {
  BigInt poch = 1;
  for (unsigned i = 0; i + 1 < 2 * k; ++i) poch *= q + i;
  Rational r = bernoulli(2 * k) * Rational(poch) / Rational(factorial(2 * k));
  r.canonicalize();
  return r;
}

/// sum_{m >= a} m^-q by Euler-Maclaurin at a >= max(q, 64).
inline BigReal em_tail(unsigned q, std::uint64_t a, mpfr_prec_t bits) {
  const BigReal ar(BigInt(static_cast<unsigned long>(a)), bits);
  BigReal p = inverse_power(a, q, bits);  // a^-q
  BigReal sum = p * ar / BigReal(static_cast<long>(q) - 1, bits) + p / BigReal(2L, bits);
  BigReal apow = p / ar;  // a^{-q-1}
  const BigReal a2 = ar * ar;
  BigReal eps = abs(sum) * pow_int(BigReal(2L, bits), -static_cast<long>(bits) - 8);
  double last = INFINITY;
  for (unsigned k = 1;; ++k) {
    BigReal term = BigReal(em_weight(q, k), bits) * apow;
    if (abs(term) < eps) break;
    double mag = std::fabs(term.to_double());
    if (mag > last || k > 4 * a) throw PrecisionError("Euler-Maclaurin tail did not converge");
    last = mag;
    sum += term;
    apow /= a2;
  }
  return sum;
}

}  // namespace detail

/// sum_{n > m} n^-s for s >= 2.
inline BigReal zeta_tail(unsigned s, std::uint64_t m, mpfr_prec_t bits) {
  if (s < 2) throw DomainError("zeta_tail needs s >= 2");
  static detail::MemoTable<std::tuple<unsigned, std::uint64_t, mpfr_prec_t>, BigReal> cache;
  return cache.get({s, m, bits}, [&] {
    const std::uint64_t a = std::max<std::uint64_t>({m + 1, 64, s});
    BigReal acc(bits);
    for (std::uint64_t n = m + 1; n < a; ++n) acc += inverse_power(n, s, bits);
    return acc + detail::em_tail(s, a, bits);
  });
}

// ---------------------------------------------------------------- MZV

namespace detail {

/// Asymptotic expansion sum_e c[e] x^e, x = 1/M, of a nested tail
/// Z(M) = sum_{n_1 > ... > n_j > M} prod n_i^{-s_i}.
using Expansion = std::vector<BigReal>;

/// From Z_{j-1} to Z_j(M) = sum_{m > M} m^{-s} Z_{j-1}(m), with
/// sum_{m>M} m^-q = x^{q-1}/(q-1) - x^q/2 + sum_k B_{2k}/(2k)! (q)_{2k-1} x^{q+2k-1}.
inline Expansion tail_step(const Expansion& prev, unsigned s, mpfr_prec_t bits) {
  const std::size_t top = prev.size() - 1;
  Expansion next(prev.size(), BigReal(bits));
  for (std::size_t e = 0; e <= top; ++e) {
    if (prev[e].is_zero()) continue;
    const auto q = static_cast<unsigned>(e + s);
    if (q - 1 <= top) next[q - 1] += prev[e] / BigReal(static_cast<long>(q) - 1, bits);
    if (q <= top) next[q] -= prev[e] / BigReal(2L, bits);
    for (unsigned k = 1; q + 2 * k - 1 <= top; ++k)
      next[q + 2 * k - 1] += prev[e] * BigReal(em_weight(q, k), bits);
  }
  return next;
}

inline BigReal evaluate_expansion(const Expansion& c, std::uint64_t m, mpfr_prec_t bits) {
  const BigReal x = BigReal(1L, bits) / BigReal(BigInt(static_cast<unsigned long>(m)), bits);
  BigReal acc(bits), xp(1L, bits);
  for (const auto& ce : c) {
    acc += ce * xp;
    xp *= x;
  }
  return acc;
}

/// zeta(s_1..s_r) = sum_j Z_j(M) H_{s_{j+1}..s_r}(M): nested sum below M plus
/// the asymptotic tail expansions above it.
inline BigReal mzv_at_cutoff(const Word& w, std::uint64_t m, std::size_t order, mpfr_prec_t bits) {
  const std::size_t r = w.length();
  // h[j] = H_{s_{j+1}..s_r}(n), updated in place for n = 1..m.
  std::vector<BigReal> h(r + 1, BigReal(bits));
  h[r] = BigReal(1L, bits);
  for (std::uint64_t n = 1; n <= m; ++n)
    for (std::size_t j = 0; j < r; ++j) h[j] += inverse_power(n, static_cast<unsigned>(w[j]), bits) * h[j + 1];
  BigReal value = h[0];
  Expansion z(order + 1, BigReal(bits));
  z[0] = BigReal(1L, bits);
  for (std::size_t j = 1; j <= r; ++j) {
    z = tail_step(z, static_cast<unsigned>(w[j - 1]), bits);
    value += evaluate_expansion(z, m, bits) * h[j];
  }
  return value;
}

}  // namespace detail

/// Multiple zeta value of a convergent word, by truncated nesting at cutoff
/// M plus asymptotic tails; M doubles until two cutoffs agree within the
/// tolerance, capped at 10^7 summand evaluations.
inline CharacterValue mzv(const Word& w, const PrecisionContext& ctx, double tol = 0) {
  ctx.validate();
  if (w.alphabet() != Alphabet::Y) throw AlphabetMismatch("mzv is indexed by Y-words");
  if (!is_convergent(w)) throw DomainError("mzv of divergent word " + to_string(w));
  const mpfr_prec_t bits = ctx.bits();
  if (w.empty()) return {BigComplex(BigReal(1L, bits)), 0};
  static detail::MemoTable<std::tuple<Word, mpfr_prec_t, double>, CharacterValue> cache;
  const double target = std::max(tol, ctx.tolerance);
  return cache.get({w, bits, target}, [&] {
    const std::uint64_t cap = 10'000'000;
    std::uint64_t m = 64;
    const auto order = static_cast<std::size_t>(std::ceil((bits + 20) / std::log2(static_cast<double>(m)))) + 4;
    BigReal prev = detail::mzv_at_cutoff(w, m, order, bits);
    while (true) {
      m *= 2;
      if (m * w.length() > cap) throw PrecisionError("mzv(" + to_string(w) + "): tolerance not reached within 10^7 summands");
      BigReal cur = detail::mzv_at_cutoff(w, m, order, bits);
      double err = abs(cur - prev).to_double() + static_cast<double>(m * w.length()) * std::ldexp(1.0, -static_cast<int>(bits) + 4);
      if (err <= target) return CharacterValue{BigComplex(cur), err};
      prev = std::move(cur);
    }
  });
}

// ---------------------------------------------------------------- regularization

/// sum_d g^d P_d with each P_d a rational combination of convergent words.
class RegularizedValue {
 public:
  RegularizedValue() = default;
  RegularizedValue(unsigned degree, NCPolynomial<Rational> p) { add(degree, p); }

  const std::map<unsigned, NCPolynomial<Rational>>& parts() const { return parts_; }
  unsigned degree() const { return parts_.empty() ? 0 : parts_.rbegin()->first; }
  NCPolynomial<Rational> part(unsigned d) const {
    auto it = parts_.find(d);
    return it == parts_.end() ? NCPolynomial<Rational>(Alphabet::Y) : it->second;
  }

  RegularizedValue& add(unsigned degree, const NCPolynomial<Rational>& p) {
    auto [it, fresh] = parts_.try_emplace(degree, Alphabet::Y);
    it->second += p;
    if (it->second.is_zero()) parts_.erase(it);
    return *this;
  }

  friend RegularizedValue operator+(RegularizedValue a, const RegularizedValue& b) {
    for (const auto& [d, p] : b.parts_) a.add(d, p);
    return a;
  }
  friend RegularizedValue operator-(RegularizedValue a, const RegularizedValue& b) {
    for (const auto& [d, p] : b.parts_) a.add(d, -p);
    return a;
  }
  RegularizedValue scaled(const Rational& k) const {
    RegularizedValue r;
    for (const auto& [d, p] : parts_) r.add(d, p.scaled(k));
    return r;
  }

  /// Product in Q^conv<Y>[g] with stuffle on the word parts.
  friend RegularizedValue operator*(const RegularizedValue& a, const RegularizedValue& b) {
    RegularizedValue r;
    for (const auto& [da, pa] : a.parts_)
      for (const auto& [db, pb] : b.parts_) r.add(da + db, stuffle(pa, pb));
    return r;
  }

  friend bool operator==(const RegularizedValue&, const RegularizedValue&) = default;

  std::string str() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
      const auto& [d, p] = *it;
      if (!out.empty()) out += " + ";
      if (d == 0) {
        out += p.str();
        continue;
      }
      std::string g = d == 1 ? "g" : "g^" + std::to_string(d);
      bool scalar = p.size() == 1 && p.terms().begin()->first.empty();
      if (scalar) {
        const Rational& c = p.terms().begin()->second;
        out += c == 1 ? g : to_string(c) + "*" + g;
      } else {
        out += "(" + p.str() + ")*" + g;
      }
    }
    return out;
  }

 private:
  std::map<unsigned, NCPolynomial<Rational>> parts_;
};

/// Writes w = y1^k u (u convergent) through y1^{⊎k} ⊎ u = k! w + (words with
/// fewer leading y1) and solves the resulting triangular system.
inline RegularizedValue stuffle_regularize(const Word& w) {
  if (w.alphabet() != Alphabet::Y) throw AlphabetMismatch("regularization is defined on Y-words");
  if (is_convergent(w)) return RegularizedValue(0, NCPolynomial<Rational>(w));
  static detail::MemoTable<Word, RegularizedValue> cache;
  return cache.get(w, [&] {
    const auto k = static_cast<unsigned>(leading_y1_count(w));
    const Word u = w.suffix(k);
    NCPolynomial<Rational> p(Word(Alphabet::Y));
    for (unsigned i = 0; i < k; ++i) p = stuffle(p, NCPolynomial<Rational>(Word::y({1})));
    p = stuffle(p, NCPolynomial<Rational>(u));
    const Rational diagonal(factorial(k));
    if (p.coefficient(w) != diagonal) throw std::logic_error("regularization: unexpected diagonal coefficient");
    RegularizedValue acc(k, NCPolynomial<Rational>(u));
    for (const auto& [v, c] : p.terms()) {
      if (v == w) continue;
      if (leading_y1_count(v) >= k) throw std::logic_error("regularization system is not triangular");
      acc = acc - stuffle_regularize(v).scaled(c);
    }
    return acc.scaled(Rational(1) / diagonal);
  });
}

inline RegularizedValue stuffle_regularize(const NCPolynomial<Rational>& p) {
  if (p.alphabet() != Alphabet::Y) throw AlphabetMismatch("regularization is defined on Y-polynomials");
  RegularizedValue acc;
  for (const auto& [w, c] : p.terms()) acc = acc + stuffle_regularize(w).scaled(c);
  return acc;
}

/// g -> Euler's constant, convergent words -> MZVs.
inline CharacterValue evaluate(const RegularizedValue& v, const PrecisionContext& ctx, double mzv_tol = 0) {
  const mpfr_prec_t bits = ctx.bits();
  const BigReal gamma = euler_gamma(bits);
  BigReal total(bits);
  double err = 0;
  for (const auto& [d, p] : v.parts()) {
    BigReal part(bits);
    double part_err = 0;
    for (const auto& [w, c] : p.terms()) {
      CharacterValue z = mzv(w, ctx, mzv_tol);
      BigReal cr(c, bits);
      part += cr * z.value.real();
      part_err += std::fabs(cr.to_double()) * z.error_bound;
    }
    BigReal gd = pow_int(gamma, static_cast<long>(d));
    total += gd * part;
    err += gd.to_double() * part_err + std::fabs(part.to_double()) * gd.to_double() * detail::rounding_bound(ctx);
  }
  return {BigComplex(total), err + detail::rounding_bound(ctx)};
}

/// The character gamma_* on Q<Y>.
inline CharacterValue gamma_char(const NCPolynomial<Rational>& p, const PrecisionContext& ctx, double mzv_tol = 0) {
  ctx.validate();
  return evaluate(stuffle_regularize(p), ctx, mzv_tol);
}

/// sum_{n <= W} gamma_*([S]_n) with the formal parameter set to z0, plus a
/// geometric estimate of the discarded weights when S is truncated.
inline CharacterValue gamma_char_hat(const GradedSeries<RationalPolynomial>& s, const BigComplex& z0,
                                     const PrecisionContext& ctx, const std::string& var = "z",
                                     double mzv_tol = 0) {
  ctx.validate();
  if (s.alphabet() != Alphabet::Y) throw AlphabetMismatch("gamma_char_hat expects a series over Y");
  if (!(abs(z0).to_double() < 1)) throw DomainError("gamma_char_hat needs |z0| < 1");
  const mpfr_prec_t bits = ctx.bits();
  auto value_of = [&](const std::string& name) -> BigComplex {
    if (name != var) throw std::invalid_argument("unbound parameter '" + name + "'");
    return z0;
  };
  auto lift_q = [bits](const Rational& q) { return BigComplex(q, bits); };
  BigComplex total(bits);
  double err = 0;
  std::vector<std::pair<std::uint64_t, double>> sizes;
  for (std::uint64_t n = 0; n <= s.truncation(); ++n) {
    BigComplex comp(bits);
    const auto component = homogeneous_component(s, n);
    for (const auto& [w, c] : component.terms()) {
      BigComplex cz = c.evaluate<BigComplex>(value_of, lift_q);
      CharacterValue g = gamma_char(NCPolynomial<Rational>(w), ctx, mzv_tol);
      comp += cz * g.value;
      err += detail::to_double_abs(cz) * g.error_bound;
    }
    double mag = detail::to_double_abs(comp);
    if (mag > 0) sizes.emplace_back(n, mag);
    total += comp;
  }
  if (s.lossy()) {
    if (sizes.size() < 2) {
      err = INFINITY;
    } else {
      auto [n1, a1] = sizes[sizes.size() - 2];
      auto [n2, a2] = sizes.back();
      double ratio = std::pow(a2 / a1, 1.0 / static_cast<double>(n2 - n1));
      err += ratio < 1 ? a2 * ratio / (1 - ratio) : INFINITY;
    }
  }
  return {std::move(total), err};
}

// ---------------------------------------------------------------- ell_k

/// Coefficients of ell_k up to z^order: for k = 1, gamma z - sum_{n>=2}
/// zeta(n) (-z)^n / n; for k >= 2, -sum_n zeta(nk) (-z^k)^n / n.
inline std::vector<BigReal> ell_coefficients(unsigned k, std::size_t order, mpfr_prec_t bits) {
  if (k == 0) throw std::invalid_argument("ell needs k >= 1");
  std::vector<BigReal> c(order + 1, BigReal(bits));
  for (std::size_t n = 1; n * k <= order; ++n) {
    if (k == 1 && n == 1) {
      c[1] = euler_gamma(bits);
      continue;
    }
    BigReal t = zeta_real(static_cast<unsigned>(n * k), bits) / BigReal(static_cast<long>(n), bits);
    // -(-1)^n
    c[n * k] = n % 2 ? t : -t;
  }
  return c;
}

/// ell_k(z) for |z| < 1, with `terms` powers of z^k (adaptive when absent).
inline CharacterValue ell(unsigned k, const BigComplex& z, const PrecisionContext& ctx,
                          std::optional<std::size_t> terms = std::nullopt) {
  ctx.validate();
  if (k == 0) throw std::invalid_argument("ell needs k >= 1");
  const double r = abs(z).to_double();
  if (!(r < 1)) throw DomainError("ell_k(z) needs |z| < 1");
  const mpfr_prec_t bits = ctx.bits();
  const double rk = std::pow(r, k);
  // Tail after N terms: zeta(2) rk^{N+1} / ((N+1)(1 - rk)).
  auto tail = [&](std::size_t n) {
    if (rk == 0) return 0.0;
    return std::exp(std::log(M_PI * M_PI / 6) + (n + 1) * std::log(rk) - std::log(n + 1.0) - std::log1p(-rk));
  };
  std::size_t n_terms;
  if (terms) {
    n_terms = std::max<std::size_t>(*terms, 1);
  } else {
    n_terms = 1;
    while (tail(n_terms) > detail::rounding_bound(ctx)) ++n_terms;
  }
  std::vector<BigReal> c = ell_coefficients(k, n_terms * k, bits);
  BigComplex acc(bits);
  BigComplex zk = pow_int(z, k), p = zk;
  for (std::size_t n = 1; n <= n_terms; ++n) {
    acc += c[n * k] * p;
    p *= zk;
  }
  return {std::move(acc), tail(n_terms) + detail::rounding_bound(ctx)};
}

// ---------------------------------------------------------------- 1/Gamma_{y_k}

enum class EvalMode { Series, Product };

/// exp(ell_k(z)) = 1/Gamma_{y_k}(1+z). The product mode evaluates
/// prod_{n<=N} (1 + z^k/n^k) times the exponential of the remaining log-tail
/// sum_j (-1)^{j+1} z^{kj}/j zeta_tail(kj, N), with the Weierstrass factor
/// exp(gamma z - z H_N) when k = 1; it is valid on the whole plane.
inline CharacterValue inv_gamma_yk(unsigned k, const BigComplex& z, const PrecisionContext& ctx,
                                   EvalMode mode = EvalMode::Product) {
  ctx.validate();
  if (k == 0) throw std::invalid_argument("inv_gamma_yk needs k >= 1");
  const mpfr_prec_t bits = ctx.bits();
  if (mode == EvalMode::Series) {
    CharacterValue l = ell(k, z, ctx);
    BigComplex v = exp(l.value);
    double mag = detail::to_double_abs(v);
    return {std::move(v), mag * (l.error_bound + detail::rounding_bound(ctx))};
  }
  const double r = abs(z).to_double();
  const std::uint64_t big_n = std::max<std::uint64_t>(64, 64 * static_cast<std::uint64_t>(std::ceil(2 * r / 64)));
  const BigComplex zk = pow_int(z, k);
  BigComplex prod{BigReal(1L, bits)};
  for (std::uint64_t n = 1; n <= big_n; ++n)
    prod *= BigComplex(BigReal(1L, bits)) + zk * inverse_power(n, k, bits);
  BigComplex corr(bits);
  if (k == 1) {
    BigReal h(bits);
    for (std::uint64_t n = 1; n <= big_n; ++n) h += inverse_power(n, 1, bits);
    corr += z * (euler_gamma(bits) - h);
  }
  const double log_eps = -(static_cast<double>(bits) + 10) * std::log(2.0);
  const double log_ratio = std::log(std::max(r, 1e-300)) - std::log(static_cast<double>(big_n));
  BigComplex zpow = zk;
  for (unsigned j = 1;; ++j) {
    if (j > 1) zpow *= zk;
    if (r == 0) break;
    const unsigned q = k * j;
    // |z|^q N^{1-q} / (j (q-1)) bounds the j-th term.
    double log_bound = q * log_ratio + std::log(static_cast<double>(big_n)) - std::log(j * (q - 1.0 + (q == 1)));
    if (k == 1 && j == 1) continue;
    if (log_bound < log_eps) break;
    BigReal t = zeta_tail(q, big_n, bits) / BigReal(static_cast<long>(j), bits);
    if (j % 2 == 0) t = -t;
    corr += zpow * t;
  }
  BigComplex v = prod * exp(corr);
  double mag = detail::to_double_abs(v);
  return {std::move(v), (mag + 1) * detail::rounding_bound(ctx)};
}

/// chi * m with chi^r = (-1)^{r-1}, m <= -1 and |chi m| <= bound.
inline std::vector<BigComplex> predicted_zeros(unsigned r, double bound, mpfr_prec_t bits = 200) {
  if (r == 0) throw std::invalid_argument("predicted_zeros needs r >= 1");
  std::vector<BigComplex> out;
  const BigReal pi = const_pi(bits);
  for (unsigned j = 0; j < r; ++j) {
    // chi = exp(i pi (r - 1 + 2j) / r)
    BigComplex chi = polar_unit(pi * BigReal(static_cast<long>(r - 1 + 2 * j), bits) / BigReal(static_cast<long>(r), bits));
    for (long m = 1; m <= bound; ++m) {
      BigComplex p = chi * BigReal(-m, bits);
      bool dup = false;
      for (const auto& q : out)
        if (abs(q - p).to_double() < 1e-30) dup = true;
      if (!dup) out.push_back(std::move(p));
    }
  }
  return out;
}

struct ReflectionResult {
  BigComplex lhs;
  BigComplex rhs;
  BigReal difference;
  bool pole = false;
  std::string pole_location;
};

/// Gamma_{y_{2r}}(1+z) against Gamma_{y_r}(1+rho z) Gamma_{y_r}(1+rho xi z),
/// by default with rho = e^{i pi/2r} and xi = e^{i pi/r}.
inline ReflectionResult reflection_check(unsigned r, const BigComplex& z, const PrecisionContext& ctx,
                                         std::optional<BigComplex> rho = std::nullopt,
                                         std::optional<BigComplex> xi = std::nullopt) {
  ctx.validate();
  if (r == 0) throw std::invalid_argument("reflection_check needs r >= 1");
  const mpfr_prec_t bits = ctx.bits();
  const BigReal pi = const_pi(bits);
  if (!rho) rho = polar_unit(pi / BigReal(2L * r, bits));
  if (!xi) xi = polar_unit(pi / BigReal(static_cast<long>(r), bits));
  const BigComplex inv_l = inv_gamma_yk(2 * r, z, ctx).value;
  const BigComplex inv_a = inv_gamma_yk(r, *rho * z, ctx).value;
  const BigComplex inv_b = inv_gamma_yk(r, *rho * *xi * z, ctx).value;
  ReflectionResult res;
  const BigReal tiny = pow_int(BigReal(2L, bits), -static_cast<long>(bits) / 2);
  if (abs(inv_l) < tiny || abs(inv_a) < tiny || abs(inv_b) < tiny) {
    res.pole = true;
    res.pole_location = "pole of Gamma_{y_k} at z = " + to_string(z, 20);
    return res;
  }
  const BigComplex one{BigReal(1L, bits)};
  res.lhs = one / inv_l;
  res.rhs = one / (inv_a * inv_b);
  res.difference = abs(res.lhs - res.rhs);
  return res;
}

/// pi w / sin(pi w) at w = i z, i.e. Gamma(1 + iz) Gamma(1 - iz).
inline BigComplex classical_reflection(const BigComplex& z, mpfr_prec_t bits) {
  const BigComplex iz = BigComplex(-z.imag(), z.real());
  if (iz.is_zero()) return BigComplex(BigReal(1L, bits));
  BigComplex piw = iz * const_pi(bits);
  return piw / sin(piw);
}

}  // namespace polyloc
