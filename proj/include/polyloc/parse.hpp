#pragma once
// Text syntax for words and linear combinations:
//   expr   := term (('+' | '-') term)*
//   term   := ['-'] (rational ['*' word] | word)
//   word   := '1' | letter+
//   letter := 'x0' | 'x1' | 'y' positive-integer
// A bare rational stands for a multiple of the empty word, so printed
// polynomials read back unchanged.

#include "polyloc/ncpoly.hpp"

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polyloc {

struct ParseError : std::invalid_argument {
  ParseError(std::size_t pos, const std::string& msg)
      : std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + msg), position(pos) {}
  std::size_t position;
};

namespace detail {

class ExprParser {
 public:
  ExprParser(std::string_view text, std::optional<Alphabet> hint) : s_(text), hint_(hint) {}

  NCPolynomial<Rational> expression() {
    std::vector<std::pair<Word, Rational>> terms;
    skip();
    if (at_end()) throw ParseError(i_, "expected a term");
    bool negate = false;
    if (peek() == '-') {
      ++i_;
      negate = true;
    } else if (peek() == '+') {
      ++i_;
    }
    while (true) {
      auto [w, c] = term();
      terms.emplace_back(std::move(w), negate ? Rational(-c) : c);
      skip();
      if (at_end()) break;
      if (peek() == '+') negate = false;
      else if (peek() == '-') negate = true;
      else throw ParseError(i_, std::string("expected '+' or '-', found '") + peek() + "'");
      ++i_;
    }
    const Alphabet a = alphabet_ ? *alphabet_ : hint_.value_or(Alphabet::Y);
    NCPolynomial<Rational> p(a);
    for (auto& [w, c] : terms) {
      if (w.empty()) w = Word(a);
      p.add(w, c);
    }
    return p;
  }

  Word single_word() {
    skip();
    Word w = word();
    skip();
    if (!at_end()) throw ParseError(i_, "unexpected trailing input");
    if (w.empty()) w = Word(hint_.value_or(alphabet_.value_or(Alphabet::Y)));
    return w;
  }

 private:
  bool at_end() const { return i_ >= s_.size(); }
  char peek() const { return s_[i_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++i_;
  }

  std::string digits() {
    std::size_t start = i_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++i_;
    return std::string(s_.substr(start, i_ - start));
  }

  std::pair<Word, Rational> term() {
    skip();
    if (at_end()) throw ParseError(i_, "expected a term");
    if (peek() == '-') {
      ++i_;
      auto [w, c] = term();
      return {std::move(w), Rational(-c)};
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t start = i_;
      std::string num = digits();
      std::string den = "1";
      if (!at_end() && peek() == '/') {
        ++i_;
        den = digits();
        if (den.empty()) throw ParseError(i_, "expected a positive integer denominator");
        if (BigInt(den) == 0) throw ParseError(start, "zero denominator");
      }
      Rational c{BigInt(num), BigInt(den)};
      c.canonicalize();
      skip();
      if (!at_end() && peek() == '*') {
        ++i_;
        skip();
        return {word(), c};
      }
      return {Word(), c};
    }
    return {word(), Rational(1)};
  }

  /// Returns the empty word for the literal 1; alphabet fixed by the caller.
  Word word() {
    skip();
    if (at_end()) throw ParseError(i_, "expected a word");
    if (peek() == '1') {
      ++i_;
      if (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError(i_ - 1, "expected '1' or a letter");
      return Word();
    }
    std::vector<LetterIndex> letters;
    std::optional<Alphabet> a;
    while (true) {
      skip();
      if (at_end() || (peek() != 'x' && peek() != 'y')) break;
      const std::size_t start = i_;
      const Alphabet la = peek() == 'x' ? Alphabet::X : Alphabet::Y;
      ++i_;
      std::string idx = digits();
      if (idx.empty()) throw ParseError(i_, "expected a letter index");
      if (idx.size() > 19) throw ParseError(start, "letter index too large");
      const auto n = static_cast<LetterIndex>(std::stoull(idx));
      if (la == Alphabet::X && n > 1) throw ParseError(start, "X-letters are x0 and x1");
      if (la == Alphabet::Y && n == 0) throw ParseError(start, "Y-letter indices start at 1");
      if (a && *a != la) throw ParseError(start, "word mixes X- and Y-letters");
      if (alphabet_ && *alphabet_ != la) throw ParseError(start, "expression mixes X- and Y-words");
      a = la;
      letters.push_back(n);
    }
    if (letters.empty())
      throw ParseError(i_, at_end() ? "expected a word" : std::string("expected a word, found '") + peek() + "'");
    alphabet_ = a;
    return Word(*a, std::move(letters));
  }

  std::string_view s_;
  std::size_t i_ = 0;
  std::optional<Alphabet> hint_;
  std::optional<Alphabet> alphabet_;
};

}  // namespace detail

/// Parses a linear combination; constants-only input takes the hinted alphabet (Y by default).
inline NCPolynomial<Rational> parse_expression(std::string_view text, std::optional<Alphabet> hint = std::nullopt) {
  return detail::ExprParser(text, hint).expression();
}

inline Word parse_word(std::string_view text, std::optional<Alphabet> hint = std::nullopt) {
  return detail::ExprParser(text, hint).single_word();
}

}  // namespace polyloc
