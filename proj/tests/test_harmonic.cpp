#include "polyloc/harmonic.hpp"

#include <gtest/gtest.h>

#include <random>
#include <thread>

using namespace polyloc;
using Poly = NCPolynomial<Rational>;

namespace {

Poly P(const Word& w, Rational c = 1) { return Poly(w, c); }

TaylorSeries<Rational> taylor(std::vector<Rational> c) { return TaylorSeries<Rational>(std::move(c)); }

}  // namespace

TEST(Harmonic, Examples) {
  EXPECT_EQ(hsum(Word::y({1}), 3), Rational(11, 6));
  EXPECT_EQ(hsum(Word::y({2, 1}), 4), Rational(17, 32));
  EXPECT_EQ(hsum(Word::y({3, 1, 2}), 0), Rational(0));
  EXPECT_EQ(hsum(Word(Alphabet::Y), 0), Rational(1));
  EXPECT_EQ(hsum_oracle(Word::y({1}), 3), Rational(11, 6));
  EXPECT_EQ(hsum_oracle(Word::y({1, 1}), 3), Rational(1));
}

TEST(HarmonicOracle, AgreesOnAllShortWords) {
  for (std::uint64_t n = 0; n <= 5; ++n)
    for (const Word& w : y_words_of_weight(n)) {
      if (w.length() > 4) continue;
      for (std::uint64_t big_n = 0; big_n <= 40; ++big_n)
        ASSERT_EQ(hsum(w, big_n), hsum_oracle(w, big_n)) << to_string(w) << " N=" << big_n;
    }
}

TEST(HarmonicOracle, GuardsInstanceSize) {
  EXPECT_THROW(hsum_oracle(Word::y({1, 1, 1, 1, 1}), 10), std::invalid_argument);
  EXPECT_THROW(hsum_oracle(Word::y({1}), 61), std::invalid_argument);
}

TEST(Harmonic, CacheIsSafeUnderConcurrentUse) {
  std::vector<std::thread> pool;
  std::vector<Rational> got(8);
  for (int i = 0; i < 8; ++i)
    pool.emplace_back([&got, i] { got[i] = hsum(Word::y({2, 1, 1}), 30 + i); });
  for (auto& t : pool) t.join();
  for (int i = 0; i < 8; ++i) EXPECT_EQ(got[i], hsum_oracle(Word::y({2, 1, 1}), 30 + i));
}

TEST(Li, Examples) {
  EXPECT_EQ(li_coeffs(P(Word::x({0, 1})), 4), taylor({0, 1, Rational(1, 4), Rational(1, 9), Rational(1, 16)}));
  EXPECT_EQ(li_coeffs(P(Word::x({1})), 3), taylor({0, 1, Rational(1, 2), Rational(1, 3)}));
  EXPECT_EQ(li_coeffs(P(Word(Alphabet::X)), 2), taylor({1, 0, 0}));
  EXPECT_THROW(li_coeffs(P(Word::x({1, 0})), 3), DomainError);
}

TEST(Li, OverOneMinusZ) {
  EXPECT_EQ(li_over_1mz_coeffs(P(Word::x({0, 1})), 3), taylor({0, 1, Rational(5, 4), Rational(49, 36)}));
  EXPECT_EQ(li_over_1mz_coeffs(P(Word(Alphabet::X)), 2), taylor({1, 1, 1}));
  // x1 x1 shuffled with itself gives 2 H_{1,1}(N); H_1(N)^2 comes from the stuffle y1 * y1.
  const Poly sh = shuffle(P(Word::x({1})), P(Word::x({1})));
  EXPECT_EQ(li_over_1mz_coeffs(sh, 3), taylor({0, 0, 1, 2}));
  const Poly st = pi_x(stuffle(P(Word::y({1})), P(Word::y({1}))));
  EXPECT_EQ(li_over_1mz_coeffs(st, 3), taylor({0, 1, Rational(9, 4), Rational(121, 36)}));
}

TEST(Li, TruncatedSeriesCarriesFlag) {
  const auto s = conc_star(P(Word::x({1})), 4);
  const auto t = li_over_1mz_coeffs(s, 6);
  EXPECT_TRUE(t.lossy);
  EXPECT_FALSE(li_over_1mz_coeffs(GradedSeries<Rational>(P(Word::x({0, 1})), 3), 6).lossy);
}

TEST(LiProperty, ShuffleGivesCauchyProduct) {
  std::vector<Word> ws;
  for (std::size_t len = 1; len <= 3; ++len)
    for (const Word& w : x_words_of_length(len))
      if (w.back() == 1) ws.push_back(w);
  for (const Word& u : ws)
    for (const Word& v : ws) EXPECT_EQ(li_coeffs(shuffle(P(u), P(v)), 25), li_coeffs(P(u), 25) * li_coeffs(P(v), 25));
}

TEST(LiProperty, OverOneMinusZMatchesHarmonicSums) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> c(-6, 6);
  for (int t = 0; t < 5; ++t) {
    Poly s(Alphabet::X);
    for (std::size_t len = 0; len <= 3; ++len)
      for (const Word& w : x_words_of_length(len))
        if ((w.empty() || w.back() == 1) && c(rng) > 2) s.add(w, ratio(c(rng), 5));
    const auto a = li_over_1mz_coeffs(s, 15);
    for (std::uint64_t n = 0; n <= 15; ++n) EXPECT_EQ(a[n], hsum(pi_y(s), n));
  }
}

TEST(LiProperty, HadamardIdentity) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> c(-6, 6);
  auto random_poly = [&] {
    Poly s(Alphabet::X);
    for (std::size_t len = 0; len <= 3; ++len)
      for (const Word& w : x_words_of_length(len))
        if ((w.empty() || w.back() == 1) && c(rng) > 3) s.add(w, ratio(c(rng), 4));
    return s;
  };
  for (int t = 0; t < 5; ++t) {
    const Poly s = random_poly(), u = random_poly();
    EXPECT_EQ(hadamard(li_over_1mz_coeffs(s, 20), li_over_1mz_coeffs(u, 20)),
              li_over_1mz_coeffs(pi_x(stuffle(pi_y(s), pi_y(u))), 20));
  }
}

TEST(Preimage, Examples) {
  const auto s = preimage_from_taylor(taylor({0, 1}), 4);
  Poly expect = P(Word::x({1})) - P(Word::x({1, 1})) + P(Word::x({1, 1, 1})) - P(Word::x({1, 1, 1, 1}));
  EXPECT_EQ(s.polynomial(), expect);
  EXPECT_EQ(li_coeffs(s, 4), taylor({0, 1, 0, 0, 0}));
  EXPECT_EQ(preimage_from_taylor(taylor({1}), 6).polynomial(), P(Word(Alphabet::X)));
  // z/(1-z)
  const auto g = preimage_from_taylor(taylor({0, 1, 1, 1, 1, 1}), 5);
  Poly plus(Alphabet::X);
  for (std::size_t n = 1; n <= 5; ++n) plus.add(Word(Alphabet::X, std::vector<LetterIndex>(n, 1)), 1);
  EXPECT_EQ(g.polynomial(), plus);
  EXPECT_EQ(li_coeffs(g, 5), taylor({0, 1, 1, 1, 1, 1}));
}

TEST(PreimageProperty, ReproducesRandomTaylorData) {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> c(-9, 9);
  for (std::size_t len = 1; len <= 12; ++len) {
    std::vector<Rational> coeffs(len + 1);
    for (auto& a : coeffs) a = ratio(c(rng), 1 + (c(rng) + 9) % 5);
    EXPECT_EQ(li_coeffs(preimage_from_taylor(taylor(coeffs), len), len), taylor(coeffs));
  }
}

TEST(Summability, Diagnostic) {
  // T = sum (-1)^{n-1} y_n / n: row n holds H_{y_n}(N) (-1)^{n-1}/n.
  std::vector<std::vector<double>> tau;
  for (unsigned n = 1; n <= 16; ++n) {
    std::vector<double> row;
    for (std::uint64_t big_n = 0; big_n <= 40; ++big_n)
      row.push_back((n % 2 ? 1.0 : -1.0) / n * hsum(Word::y({n}), big_n).get_d());
    tau.push_back(row);
  }
  const auto flagged = summability_diagnostic(tau, 0.5);
  EXPECT_TRUE(flagged.growth_flag);
  EXPECT_NE(std::string(SummabilityReport::note).find("heuristic"), std::string::npos);

  const auto zero = summability_diagnostic(std::vector<std::vector<double>>(4, std::vector<double>(10, 0.0)), 1.0);
  EXPECT_EQ(zero.partial_sum, 0.0);
  EXPECT_FALSE(zero.growth_flag);

  std::vector<std::vector<double>> geo(1);
  for (int big_n = 0; big_n <= 60; ++big_n) geo[0].push_back(std::ldexp(1.0, -big_n));
  const auto g = summability_diagnostic(geo, 1.0);
  EXPECT_NEAR(g.partial_sum, 2.0, 1e-12);
  EXPECT_FALSE(g.growth_flag);
}

TEST(DomWitness, Examples) {
  const auto w0 = dom_witness(Rational(0), 6, 6);
  EXPECT_EQ(w0.series.polynomial(), P(Word(Alphabet::X)));
  EXPECT_EQ(w0.closed_form, taylor({1, 0, 0, 0, 0, 0, 0}));
  const auto w1 = dom_witness(Rational(1), 3, 3);
  EXPECT_EQ(w1.closed_form, taylor({1, 1, 2, 4}));
  EXPECT_EQ(li_coeffs(w1.series, 3), w1.closed_form);
  const Rational t(2, 3);
  const auto wt = dom_witness(t, 6, 6);
  for (unsigned n = 1; n <= 6; ++n) {
    Rational expect = 0;
    for (unsigned m = 1; m <= n; ++m) expect += pow(t, m) * Rational(factorial(m) * stirling2(n, m));
    EXPECT_EQ(wt.series.coefficient(Word(Alphabet::X, std::vector<LetterIndex>(n, 1))), expect) << n;
  }
}

TEST(DomWitnessProperty, MatchesClosedFormToOrder12) {
  for (const Rational& t : {Rational(1, 2), Rational(1), Rational(2)}) {
    const auto w = dom_witness(t, 12, 12);
    EXPECT_EQ(li_coeffs(w.series, 12), w.closed_form);
    // closed form (1-z)/(1-(t+1)z): a_n = t (t+1)^{n-1}
    for (unsigned n = 1; n <= 12; ++n) EXPECT_EQ(w.closed_form[n], t * pow(Rational(t + 1), n - 1));
  }
}
