#include "polyloc/suites.hpp"

#include <gtest/gtest.h>

using namespace polyloc;

class Suite : public ::testing::TestWithParam<std::string> {};

TEST_P(Suite, Passes) {
  const SuiteReport rep = run_suite(GetParam(), SuiteOptions{});
  std::string log;
  for (const auto& l : rep.lines) log += l + "\n";
  EXPECT_TRUE(rep.passed) << log;
}

INSTANTIATE_TEST_SUITE_P(All, Suite,
                         ::testing::Values("surjection-lemma", "quasi-shuffle", "shuffle-li", "hadamard-eq3", "wi-star",
                                           "wik-exp", "group-law", "preimage", "zeta-2k", "zeta-31", "sin-formula",
                                           "reflection", "zeros", "regularization", "dom-witness"),
                         [](const auto& info) {
                           std::string n = info.param;
                           for (char& c : n)
                             if (c == '-') c = '_';
                           return n;
                         });

TEST(Suites, UnknownNameThrows) { EXPECT_THROW(run_suite("nope", SuiteOptions{}), std::invalid_argument); }

TEST(Suites, WikReportsLiteralSignVariant) {
  const SuiteReport rep = run_suite("wik-exp", SuiteOptions{});
  int holds = 0, fails = 0;
  for (const auto& l : rep.lines) {
    if (l.find("(-z)^{n") == std::string::npos) continue;
    holds += l.find(": holds") != std::string::npos;
    fails += l.find("does not hold") != std::string::npos;
  }
  EXPECT_EQ(holds, 2);
  EXPECT_EQ(fails, 1);
}
