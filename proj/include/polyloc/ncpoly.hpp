#pragma once
// Noncommutative polynomials over a commutative scalar ring with the
// concatenation, shuffle and stuffle (quasi-shuffle) products.

#include "polyloc/scalar.hpp"
#include "polyloc/words.hpp"

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace polyloc {

/// Word-level product result with integer multiplicities.
using WordCounts = std::map<Word, BigInt>;

namespace detail {

inline WordCounts prepend(LetterIndex letter, const WordCounts& tail, Alphabet a) {
  WordCounts out;
  for (const auto& [w, c] : tail) {
    std::vector<LetterIndex> ls;
    ls.reserve(w.length() + 1);
    ls.push_back(letter);
    ls.insert(ls.end(), w.letters().begin(), w.letters().end());
    out.emplace(Word(a, std::move(ls)), c);
  }
  return out;
}

inline void accumulate(WordCounts& into, const WordCounts& from) {
  for (const auto& [w, c] : from) {
    auto [it, inserted] = into.try_emplace(w, c);
    if (!inserted) it->second += c;
  }
}

// Dynamic programme over suffix pairs (i, j) of u and v.
inline WordCounts quasi_shuffle_words(const Word& u, const Word& v, bool with_overlap) {
  if (u.alphabet() != v.alphabet()) throw AlphabetMismatch("product of words over different alphabets");
  const Alphabet a = u.alphabet();
  const std::size_t n = u.length(), m = v.length();
  std::vector<std::vector<WordCounts>> table(n + 1, std::vector<WordCounts>(m + 1));
  for (std::size_t i = n + 1; i-- > 0;) {
    for (std::size_t j = m + 1; j-- > 0;) {
      WordCounts& cell = table[i][j];
      if (i == n) {
        cell.emplace(v.suffix(j), BigInt(1));
      } else if (j == m) {
        cell.emplace(u.suffix(i), BigInt(1));
      } else {
        cell = prepend(u[i], table[i + 1][j], a);
        accumulate(cell, prepend(v[j], table[i][j + 1], a));
        if (with_overlap) {
          if (u[i] > std::numeric_limits<LetterIndex>::max() - v[j])
            throw std::overflow_error("stuffle letter index overflows 64 bits");
          accumulate(cell, prepend(u[i] + v[j], table[i + 1][j + 1], a));
        }
      }
    }
    if (i + 1 <= n) table[i + 1].clear();
  }
  return std::move(table[0][0]);
}

}  // namespace detail

/// Shuffle of two words: au ⧢ bv = a(u ⧢ bv) + b(au ⧢ v).
inline WordCounts shuffle_words(const Word& u, const Word& v) { return detail::quasi_shuffle_words(u, v, false); }

/// Stuffle of two Y-words: adds the overlap term y_{s+t}(u ⊎ v).
inline WordCounts stuffle_words(const Word& u, const Word& v) {
  if (u.alphabet() != Alphabet::Y || v.alphabet() != Alphabet::Y)
    throw AlphabetMismatch("stuffle is defined on Y-words only");
  return detail::quasi_shuffle_words(u, v, true);
}

template <Scalar S>
class NCPolynomial {
 public:
  using Map = std::map<Word, S>;

  NCPolynomial() = default;
  explicit NCPolynomial(Alphabet a) : alphabet_(a) {}
  NCPolynomial(const Word& w, S c = lift<S>(Rational(1))) : alphabet_(w.alphabet()) {  // NOLINT
    add(w, std::move(c));
  }

  static NCPolynomial constant(Alphabet a, S c) { return NCPolynomial(Word(a), std::move(c)); }

  Alphabet alphabet() const { return alphabet_; }
  const Map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  S coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? lift<S>(Rational(0)) : it->second;
  }
  S constant_term() const { return coefficient(Word(alphabet_)); }
  bool is_proper() const { return polyloc::is_zero(constant_term()); }

  /// Largest weight in the support; nullopt for the zero polynomial.
  std::optional<std::uint64_t> max_weight() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first.weight();
  }

  NCPolynomial& add(const Word& w, const S& c) {
    check(w.alphabet());
    if (polyloc::is_zero(c)) return *this;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second = it->second + c;
      if (polyloc::is_zero(it->second)) terms_.erase(it);
    }
    return *this;
  }

  NCPolynomial& operator+=(const NCPolynomial& o) {
    check(o.alphabet_);
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  NCPolynomial& operator-=(const NCPolynomial& o) {
    check(o.alphabet_);
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
  friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }
  friend NCPolynomial operator-(const NCPolynomial& a) { return a.scaled(lift<S>(Rational(-1))); }

  NCPolynomial scaled(const S& k) const {
    NCPolynomial r(alphabet_);
    for (const auto& [w, c] : terms_) r.add(w, k * c);
    return r;
  }

  /// Restriction to words of weight exactly n.
  NCPolynomial homogeneous(std::uint64_t n) const {
    NCPolynomial r(alphabet_);
    for (const auto& [w, c] : terms_)
      if (w.weight() == n) r.terms_.emplace(w, c);
    return r;
  }

  /// Restriction to words of weight at most n.
  NCPolynomial truncated(std::uint64_t n) const {
    NCPolynomial r(alphabet_);
    for (const auto& [w, c] : terms_)
      if (w.weight() <= n) r.terms_.emplace(w, c);
    return r;
  }

  /// Applies f to every coefficient, pruning zeros.
  template <Scalar T, class F>
  NCPolynomial<T> map_coefficients(F f) const {
    NCPolynomial<T> r(alphabet_);
    for (const auto& [w, c] : terms_) r.add(w, f(c));
    return r;
  }

  friend bool operator==(const NCPolynomial& a, const NCPolynomial& b) {
    return a.alphabet_ == b.alphabet_ && a.terms_ == b.terms_;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      std::string coef = scalar_traits<S>::str(c);
      bool neg = !coef.empty() && coef[0] == '-';
      if (neg) coef.erase(0, 1);
      out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
      first = false;
      if (w.empty())
        out += coef;
      else if (coef == "1")
        out += to_string(w);
      else
        out += coef + "*" + to_string(w);
    }
    return out;
  }

 private:
  void check(Alphabet a) const {
    if (a != alphabet_) throw AlphabetMismatch("mixing X- and Y-polynomials");
  }

  Alphabet alphabet_ = Alphabet::Y;
  Map terms_;
};

enum class Product { Conc, Shuffle, Stuffle };

namespace detail {

template <Scalar S>
void add_counts(NCPolynomial<S>& into, const WordCounts& counts, const S& coef) {
  for (const auto& [w, k] : counts) into.add(w, coef * lift<S>(Rational(k)));
}

}  // namespace detail

/// Bilinear product, dropping terms of weight above `max_weight` when given.
/// Graded products never need the dropped pairs, so they are skipped early.
template <Scalar S>
NCPolynomial<S> product(Product kind, const NCPolynomial<S>& p, const NCPolynomial<S>& q,
                        std::optional<std::uint64_t> max_weight = std::nullopt) {
  if (p.alphabet() != q.alphabet()) throw AlphabetMismatch("product of polynomials over different alphabets");
  if (kind == Product::Stuffle && p.alphabet() != Alphabet::Y)
    throw AlphabetMismatch("stuffle is defined on Y-polynomials only");
  NCPolynomial<S> r(p.alphabet());
  for (const auto& [u, a] : p.terms()) {
    for (const auto& [v, b] : q.terms()) {
      if (max_weight && u.weight() + v.weight() > *max_weight) continue;
      S ab = a * b;
      switch (kind) {
        case Product::Conc: r.add(u * v, ab); break;
        case Product::Shuffle: detail::add_counts(r, shuffle_words(u, v), ab); break;
        case Product::Stuffle: detail::add_counts(r, stuffle_words(u, v), ab); break;
      }
    }
  }
  return r;
}

template <Scalar S>
NCPolynomial<S> conc(const NCPolynomial<S>& p, const NCPolynomial<S>& q) {
  return product(Product::Conc, p, q);
}

template <Scalar S>
NCPolynomial<S> shuffle(const NCPolynomial<S>& p, const NCPolynomial<S>& q) {
  return product(Product::Shuffle, p, q);
}

template <Scalar S>
NCPolynomial<S> stuffle(const NCPolynomial<S>& p, const NCPolynomial<S>& q) {
  return product(Product::Stuffle, p, q);
}

/// <S | P> = sum over words of coefficient products.
template <Scalar S>
S pairing(const NCPolynomial<S>& s, const NCPolynomial<S>& p) {
  if (s.alphabet() != p.alphabet()) throw AlphabetMismatch("pairing over different alphabets");
  S acc = lift<S>(Rational(0));
  const auto& small = s.size() < p.size() ? s : p;
  const auto& large = s.size() < p.size() ? p : s;
  for (const auto& [w, c] : small.terms()) {
    auto it = large.terms().find(w);
    if (it != large.terms().end()) acc = acc + c * it->second;
  }
  return acc;
}

/// Letterwise pi_x extended linearly.
template <Scalar S>
NCPolynomial<S> pi_x(const NCPolynomial<S>& p) {
  if (p.alphabet() != Alphabet::Y) throw AlphabetMismatch("pi_x expects a Y-polynomial");
  NCPolynomial<S> r(Alphabet::X);
  for (const auto& [w, c] : p.terms()) r.add(pi_x(w), c);
  return r;
}

/// pi_y extended linearly; every word must lie in X* x1 or be empty.
template <Scalar S>
NCPolynomial<S> pi_y(const NCPolynomial<S>& p) {
  if (p.alphabet() != Alphabet::X) throw AlphabetMismatch("pi_y expects an X-polynomial");
  NCPolynomial<S> r(Alphabet::Y);
  for (const auto& [w, c] : p.terms()) r.add(pi_y(w), c);
  return r;
}

}  // namespace polyloc
