#pragma once
// Harmonic sums H_w(N) and the Taylor data at 0 of polylogarithms:
//   Li_w(z) / (1 - z) = sum_N H_{pi_Y(w)}(N) z^N.

#include "polyloc/comb.hpp"
#include "polyloc/plane.hpp"
#include "polyloc/series.hpp"
#include "polyloc/taylor.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyloc {

/// Memoized tables N -> H_w(N), keyed on the word. Inserts are idempotent:
/// racing writers compute identical values and the longer table wins.
class HarmonicCache {
 public:
  /// H_w(0..n).
  std::vector<Rational> table(const Word& w, std::uint64_t n) {
    if (w.alphabet() != Alphabet::Y) throw AlphabetMismatch("harmonic sums are indexed by Y-words");
    {
      std::shared_lock lock(mutex_);
      auto it = tables_.find(w);
      if (it != tables_.end() && it->second.size() > n)
        return std::vector<Rational>(it->second.begin(), it->second.begin() + static_cast<std::ptrdiff_t>(n + 1));
    }
    std::vector<Rational> t(n + 1);
    if (w.empty()) {
      for (auto& v : t) v = 1;
    } else {
      // H_{y_s v}(N) = H_{y_s v}(N-1) + N^{-s} H_v(N-1)
      const auto s = static_cast<unsigned>(w.front());
      std::vector<Rational> inner = n ? table(w.suffix(1), n - 1) : std::vector<Rational>{};
      t[0] = 0;
      for (std::uint64_t k = 1; k <= n; ++k) t[k] = t[k - 1] + inverse_power(k, s) * inner[k - 1];
    }
    std::unique_lock lock(mutex_);
    auto& slot = tables_[w];
    if (slot.size() < t.size()) slot = t;
    return t;
  }

  Rational value(const Word& w, std::uint64_t n) { return table(w, n).back(); }

  static HarmonicCache& instance() {
    static HarmonicCache cache;
    return cache;
  }

 private:
  std::shared_mutex mutex_;
  std::map<Word, std::vector<Rational>> tables_;
};

/// H_w(N) = sum_{N >= n_1 > ... > n_r > 0} prod n_i^{-s_i}.
inline Rational hsum(const Word& w, std::uint64_t n) { return HarmonicCache::instance().value(w, n); }

/// Linear extension to polynomials over Y.
template <Scalar S>
S hsum(const NCPolynomial<S>& p, std::uint64_t n) {
  if (p.alphabet() != Alphabet::Y) throw AlphabetMismatch("harmonic sums are indexed by Y-polynomials");
  S acc = lift<S>(Rational(0));
  for (const auto& [w, c] : p.terms()) acc = acc + c * lift<S>(hsum(w, n));
  return acc;
}

/// Direct r-fold nested loop; independent of the memoized recursion.
inline Rational hsum_oracle(const Word& w, std::uint64_t n) {
  if (w.alphabet() != Alphabet::Y) throw AlphabetMismatch("harmonic sums are indexed by Y-words");
  if (w.length() > 4 || n > 60) throw std::invalid_argument("hsum_oracle: length <= 4 and N <= 60");
  Rational total = 0;
  std::vector<std::uint64_t> idx(w.length());
  auto loop = [&](auto&& self, std::size_t depth, std::uint64_t upper) -> void {
    if (depth == w.length()) {
      Rational term = 1;
      for (std::size_t i = 0; i < w.length(); ++i) term *= inverse_power(idx[i], static_cast<unsigned>(w[i]));
      total += term;
      return;
    }
    for (std::uint64_t k = 1; k <= upper; ++k) {
      idx[depth] = k;
      self(self, depth + 1, k - 1);
    }
  };
  loop(loop, 0, n);
  return total;
}

/// Taylor coefficients at 0 of Li_P for P supported on X* x1 and the empty
/// word: c_N = H_{pi_Y(P)}(N) - H_{pi_Y(P)}(N-1), c_0 = <P|1>.
template <Scalar S>
TaylorSeries<S> li_coeffs(const NCPolynomial<S>& p, std::size_t order) {
  NCPolynomial<S> q = pi_y(p);
  TaylorSeries<S> t(order);
  for (const auto& [w, c] : q.terms()) {
    std::vector<Rational> h = HarmonicCache::instance().table(w, order);
    t[0] = t[0] + c * lift<S>(h[0]);
    for (std::size_t n = 1; n <= order; ++n) {
      Rational d = h[n] - h[n - 1];
      if (d != 0) t[n] = t[n] + c * lift<S>(d);
    }
  }
  return t;
}

/// Uses the stored data of a truncated series. Exact to order L when the
/// series is supported on powers of x1 and truncated at length L.
template <Scalar S>
TaylorSeries<S> li_coeffs(const GradedSeries<S>& s, std::size_t order) {
  return li_coeffs(s.polynomial(), order);
}

template <Scalar S>
struct TruncatedTaylor {
  TaylorSeries<S> series;
  bool lossy;
};

/// a_N = sum_n H_{pi_Y([S]_n)}(N): Taylor coefficients of Li_S / (1 - z).
template <Scalar S>
TruncatedTaylor<S> li_over_1mz_coeffs(const GradedSeries<S>& s, std::size_t order) {
  TaylorSeries<S> t(order);
  for (std::uint64_t n = 0; n <= s.truncation(); ++n) {
    NCPolynomial<S> component = pi_y(homogeneous_component(s, n));
    for (std::size_t k = 0; k <= order; ++k) t[k] = t[k] + hsum(component, k);
  }
  return {std::move(t), s.lossy()};
}

template <Scalar S>
TaylorSeries<S> li_over_1mz_coeffs(const NCPolynomial<S>& p, std::size_t order) {
  std::uint64_t w = p.max_weight().value_or(0);
  return li_over_1mz_coeffs(GradedSeries<S>(p, w), order).series;
}

/// S = sum_N a_N (-(-x1)^+)^{⧢N} truncated at length L. Its coefficient on
/// x1^n is sum_N (-1)^{N+n} a_N N! S2(n, N), so Li_S reproduces T.
inline GradedSeries<Rational> preimage_from_taylor(const TaylorSeries<Rational>& t, std::size_t length) {
  GradedSeries<Rational> s(Alphabet::X, length);
  Word xn(Alphabet::X);
  for (std::size_t n = 0; n <= length; ++n) {
    Rational c = 0;
    for (std::size_t big_n = 0; big_n <= std::min(n, t.order()); ++big_n) {
      if (t[big_n] == 0) continue;
      Rational term = t[big_n] * Rational(BigInt(factorial(static_cast<unsigned>(big_n)) *
                                                 stirling2(static_cast<unsigned>(n), static_cast<unsigned>(big_n))));
      c += (n + big_n) % 2 ? Rational(-term) : term;
    }
    s.add(xn, c);
    xn.push_back(1);
  }
  for (std::size_t k = 1; k <= t.order(); ++k)
    if (t[k] != 0) s.mark_lossy();
  return s;
}

struct SummabilityReport {
  double partial_sum = 0;
  std::vector<double> row_sums;
  /// Ratio of the last two dyadic blocks of row sums; near 1 for
  /// harmonic-like rows, near 0 for summable ones.
  double block_ratio = 0;
  bool growth_flag = false;
  static constexpr const char* note =
      "heuristic finite-truncation diagnostic; not a proof of (non)summability";
};

/// Finite-truncation check of sum_{n,N} |a_{n,N}| r^N. Flags when the row
/// sums decay too slowly (dyadic block condensation ratio >= 0.75).
inline SummabilityReport summability_diagnostic(const std::vector<std::vector<double>>& tau, double r) {
  if (!(r > 0)) throw std::invalid_argument("summability_diagnostic needs r > 0");
  SummabilityReport rep;
  for (const auto& row : tau) {
    double s = 0, rn = 1;
    for (double a : row) {
      s += std::fabs(a) * rn;
      rn *= r;
    }
    rep.row_sums.push_back(s);
    rep.partial_sum += s;
  }
  const std::size_t n = rep.row_sums.size();
  if (n >= 4) {
    auto block = [&](std::size_t lo, std::size_t hi) {
      double s = 0;
      for (std::size_t i = lo; i < hi; ++i) s += rep.row_sums[i];
      return s;
    };
    double last = block(n / 2, n), prev = block(n / 4, n / 2);
    if (prev > 0) {
      rep.block_ratio = last / prev;
      rep.growth_flag = rep.block_ratio >= 0.75 && last > 1e-12 * rep.partial_sum;
    } else if (last > 0) {
      rep.block_ratio = INFINITY;
      rep.growth_flag = true;
    }
  }
  return rep;
}

struct DomWitness {
  GradedSeries<Rational> series;
  TaylorSeries<Rational> closed_form;
};

/// S(t) = sum_m t^m (x1^+)^{⧢m} truncated at length w, built in the shuffle
/// algebra, with the Taylor coefficients of (1 - z)/(1 - (t+1) z) to order d.
inline DomWitness dom_witness(const Rational& t, std::size_t w, std::size_t d) {
  if (t < 0) throw std::invalid_argument("dom_witness needs t >= 0");
  NCPolynomial<Rational> plus = x1_plus(w);
  GradedSeries<Rational> series(Alphabet::X, w);
  series.add(Word(Alphabet::X), Rational(1));
  GradedSeries<Rational> pw = series;
  Rational tm = 1;
  for (std::size_t m = 1; m <= w && t != 0; ++m) {
    pw = shuffle(pw, GradedSeries<Rational>(plus, w));
    tm *= t;
    series = series + pw.scaled(tm);
  }
  if (t != 0) series.mark_lossy();
  TaylorSeries<Rational> closed(d);
  closed[0] = 1;
  Rational base = t + 1, pk = 1;
  for (std::size_t n = 1; n <= d; ++n) {
    closed[n] = t * pk;  // t (t+1)^{n-1}
    pk *= base;
  }
  return {std::move(series), std::move(closed)};
}

}  // namespace polyloc
