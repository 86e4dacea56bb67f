#pragma once
// Exact integers and rationals backed by GMP.

#include <gmpxx.h>

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polyloc {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Prints `p` for integers and `p/q` otherwise.
inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string to_string(const BigInt& z) { return z.get_str(); }

/// n/d in canonical form; GMP arithmetic requires canonical operands.
inline Rational ratio(const BigInt& n, const BigInt& d) {
  if (d == 0) throw std::domain_error("zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

/// Parses `p` or `p/q` with optional leading sign. Throws std::invalid_argument.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw std::invalid_argument("malformed rational '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  BigInt d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Rational q(BigInt(num), d);
  q.canonicalize();
  return q;
}

inline BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// Rational power with a signed exponent; 0^0 = 1.
inline Rational pow(const Rational& base, long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("0 raised to a negative power");
    return pow(Rational(1) / base, -e);
  }
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

inline Rational inverse_power(std::uint64_t n, unsigned s) {
  BigInt d;
  mpz_ui_pow_ui(d.get_mpz_t(), n, s);
  return Rational(BigInt(1), d);
}

}  // namespace polyloc
