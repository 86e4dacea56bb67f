#pragma once
// Words over X = {x0, x1} and Y = {y1, y2, ...}, their weights, and the
// coding pi_X : y_s -> x0^{s-1} x1 with its inverse on X* x1.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polyloc {

/// Input outside the domain of a partial map (e.g. pi_Y on a word ending in x0).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Operands over different alphabets.
struct AlphabetMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Alphabet : std::uint8_t { X, Y };

inline char alphabet_char(Alphabet a) { return a == Alphabet::X ? 'x' : 'y'; }

using LetterIndex = std::uint64_t;

class Word {
 public:
  Word() = default;
  explicit Word(Alphabet a) : alphabet_(a) {}
  Word(Alphabet a, std::vector<LetterIndex> letters) : alphabet_(a), letters_(std::move(letters)) {
    for (LetterIndex l : letters_) {
      check_letter(l);
      weight_ = add_weight(weight_, letter_weight(l));
    }
  }

  static Word x(std::initializer_list<LetterIndex> ls) { return Word(Alphabet::X, std::vector<LetterIndex>(ls)); }
  static Word y(std::initializer_list<LetterIndex> ls) { return Word(Alphabet::Y, std::vector<LetterIndex>(ls)); }

  Alphabet alphabet() const { return alphabet_; }
  const std::vector<LetterIndex>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  LetterIndex operator[](std::size_t i) const { return letters_[i]; }
  LetterIndex front() const { return letters_.front(); }
  LetterIndex back() const { return letters_.back(); }

  Word& push_back(LetterIndex l) {
    check_letter(l);
    weight_ = add_weight(weight_, letter_weight(l));
    letters_.push_back(l);
    return *this;
  }

  /// Suffix starting at position `from`.
  Word suffix(std::size_t from) const {
    return Word(alphabet_, std::vector<LetterIndex>(letters_.begin() + static_cast<std::ptrdiff_t>(from), letters_.end()));
  }

  friend Word operator*(const Word& u, const Word& v) {
    if (u.alphabet_ != v.alphabet_) throw AlphabetMismatch("concatenation of words over different alphabets");
    Word r = u;
    r.letters_.insert(r.letters_.end(), v.letters_.begin(), v.letters_.end());
    r.weight_ = r.add_weight(u.weight_, v.weight_);
    return r;
  }

  friend bool operator==(const Word&, const Word&) = default;

  /// Canonical order: alphabet, then weight, then lexicographic on indices.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.alphabet_ <=> b.alphabet_; c != 0) return c;
    if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

  /// Sum of indices over Y, length over X.
  std::uint64_t weight() const { return weight_; }

 private:
  void check_letter(LetterIndex l) const {
    if (alphabet_ == Alphabet::X && l > 1) throw std::invalid_argument("X-letter index must be 0 or 1");
    if (alphabet_ == Alphabet::Y && l == 0) throw std::invalid_argument("Y-letter index must be >= 1");
  }

  std::uint64_t letter_weight(LetterIndex l) const { return alphabet_ == Alphabet::X ? 1 : l; }

  std::uint64_t add_weight(std::uint64_t w, std::uint64_t l) const {
    if (w > std::numeric_limits<std::uint64_t>::max() - l) throw std::overflow_error("word weight overflows 64 bits");
    return w + l;
  }

  Alphabet alphabet_ = Alphabet::Y;
  std::vector<LetterIndex> letters_;
  std::uint64_t weight_ = 0;
};

/// Sum of indices over Y, length over X.
inline std::uint64_t weight(const Word& w) { return w.weight(); }

/// Letterwise y_n -> x0^{n-1} x1.
inline Word pi_x(const Word& w) {
  if (w.alphabet() != Alphabet::Y) throw AlphabetMismatch("pi_x expects a Y-word");
  Word r(Alphabet::X);
  for (LetterIndex s : w.letters()) {
    for (LetterIndex i = 1; i < s; ++i) r.push_back(0);
    r.push_back(1);
  }
  return r;
}

/// Inverse of pi_x, defined on X* x1 and the empty word.
inline Word pi_y(const Word& w) {
  if (w.alphabet() != Alphabet::X) throw AlphabetMismatch("pi_y expects an X-word");
  if (!w.empty() && w.back() != 1) throw DomainError("pi_y: word does not end in x1");
  Word r(Alphabet::Y);
  LetterIndex run = 1;
  for (LetterIndex l : w.letters()) {
    if (l == 0) {
      ++run;
    } else {
      r.push_back(run);
      run = 1;
    }
  }
  return r;
}

/// True iff w is empty or does not start with y1.
inline bool is_convergent(const Word& w) {
  if (w.alphabet() != Alphabet::Y) throw AlphabetMismatch("is_convergent expects a Y-word");
  return w.empty() || w.front() >= 2;
}

/// Number of leading y1 letters.
inline std::size_t leading_y1_count(const Word& w) {
  std::size_t k = 0;
  while (k < w.length() && w[k] == 1) ++k;
  return k;
}

inline std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (i) s += ' ';
    s += alphabet_char(w.alphabet());
    s += std::to_string(w[i]);
  }
  return s;
}

/// All Y-words of weight n (compositions of n), in canonical order.
inline std::vector<Word> y_words_of_weight(std::uint64_t n) {
  std::vector<Word> out;
  if (n == 0) {
    out.emplace_back(Alphabet::Y);
    return out;
  }
  std::vector<LetterIndex> cur;
  auto rec = [&](auto&& self, std::uint64_t rest) -> void {
    if (rest == 0) {
      out.emplace_back(Alphabet::Y, cur);
      return;
    }
    for (LetterIndex s = 1; s <= rest; ++s) {
      cur.push_back(s);
      self(self, rest - s);
      cur.pop_back();
    }
  };
  rec(rec, n);
  std::sort(out.begin(), out.end());
  return out;
}

/// All X-words of length n, in canonical order.
inline std::vector<Word> x_words_of_length(std::size_t n) {
  std::vector<Word> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<LetterIndex> ls(n);
    for (std::size_t i = 0; i < n; ++i) ls[i] = (mask >> (n - 1 - i)) & 1U;
    out.emplace_back(Alphabet::X, std::move(ls));
  }
  return out;
}

}  // namespace polyloc
