#pragma once
// Stirling numbers of the second kind and the shuffle-power lemma
// <(a^+)^{⧢m} | a^n> = m! S2(n, m).

#include "polyloc/rational.hpp"
#include "polyloc/series.hpp"
#include "polyloc/taylor.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

namespace polyloc {

/// Triangular table S2(n, m), grown on demand; safe for concurrent readers.
class StirlingCache {
 public:
  BigInt get(unsigned n, unsigned m) {
    if (m > n) return 0;
    {
      std::shared_lock lock(mutex_);
      if (n < rows_.size()) return rows_[n][m];
    }
    std::unique_lock lock(mutex_);
    while (rows_.size() <= n) {
      const std::size_t k = rows_.size();
      std::vector<BigInt> row(k + 1, BigInt(0));
      if (k == 0) {
        row[0] = 1;
      } else {
        const auto& prev = rows_[k - 1];
        for (std::size_t j = 1; j <= k; ++j) {
          BigInt v = j < prev.size() ? BigInt(prev[j] * static_cast<unsigned long>(j)) : BigInt(0);
          v += prev[j - 1];
          row[j] = v;
        }
      }
      rows_.push_back(std::move(row));
    }
    return rows_[n][m];
  }

  static StirlingCache& instance() {
    static StirlingCache cache;
    return cache;
  }

 private:
  std::shared_mutex mutex_;
  std::vector<std::vector<BigInt>> rows_;
};

/// Number of partitions of an n-set into m nonempty blocks.
inline BigInt stirling2(unsigned n, unsigned m) { return StirlingCache::instance().get(n, m); }

/// x1^+ = x1 + x1^2 + ... truncated at length w.
inline NCPolynomial<Rational> x1_plus(std::size_t w) {
  NCPolynomial<Rational> p(Alphabet::X);
  Word x(Alphabet::X);
  for (std::size_t n = 1; n <= w; ++n) p.add(x.push_back(1), Rational(1));
  return p;
}

/// <(x1^+)^{⧢m} | x1^n>, computed in the shuffle algebra.
inline BigInt shuffle_power_coeff(unsigned m, unsigned n) {
  if (m > 10 || n > 10) throw std::invalid_argument("shuffle_power_coeff: n, m <= 10");
  GradedSeries<Rational> p = power(Product::Shuffle, x1_plus(n), m, n);
  Word xn(Alphabet::X, std::vector<LetterIndex>(n, 1));
  Rational c = p.coefficient(xn);
  return c.get_num();
}

/// Checks sum_n m! S2(n, m) x^n / n! = (e^x - 1)^m up to order D exactly.
inline bool egf_check(unsigned m, unsigned order) {
  if (m > 8 || order > 20) throw std::invalid_argument("egf_check: m <= 8, order <= 20");
  TaylorSeries<Rational> ex_minus_1(order, "x");
  for (unsigned n = 1; n <= order; ++n) ex_minus_1[n] = Rational(BigInt(1), factorial(n));
  TaylorSeries<Rational> rhs(order, "x");
  rhs[0] = 1;
  for (unsigned i = 0; i < m; ++i) rhs = rhs * ex_minus_1;
  for (unsigned n = 0; n <= order; ++n) {
    Rational lhs(BigInt(factorial(m) * stirling2(n, m)), factorial(n));
    lhs.canonicalize();
    if (lhs != rhs[n]) return false;
  }
  return true;
}

}  // namespace polyloc
