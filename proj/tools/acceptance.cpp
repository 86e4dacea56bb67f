// One line per acceptance criterion; exit status 1 if any fails.

#include "polyloc/suites.hpp"

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

struct Criterion {
  int id;
  const char* title;
  std::vector<const char*> suites;
  double limit_seconds;
};

}  // namespace

int main(int argc, char** argv) {
  using namespace polyloc;
  const bool verbose = argc > 1 && std::string(argv[1]) == "-v";
  const std::vector<Criterion> criteria{
      {1, "surjection lemma and EGF", {"surjection-lemma"}, 5},
      {2, "quasi-shuffle morphism of harmonic sums", {"quasi-shuffle"}, 30},
      {3, "shuffle morphism on Taylor data and Hadamard identity", {"shuffle-li", "hadamard-eq3"}, 30},
      {4, "star product closed form and stuffle exponential of (z^k y_k)^*", {"wi-star", "wik-exp"}, 20},
      {5, "one-parameter group law", {"group-law"}, 10},
      {6, "preimage of Taylor polynomials", {"preimage"}, 10},
      {7, "zeta({2}^k) = pi^{2k}/(2k+1)!", {"zeta-2k"}, 10},
      {8, "zeta(3,1) = pi^4/360 and the 4^{-k} exponent", {"zeta-31"}, 60},
      {9, "sin formula from ell_2", {"sin-formula"}, 10},
      {10, "generalized reflection", {"reflection"}, 30},
      {11, "zero sets of 1/Gamma_{y_r}", {"zeros"}, 20},
      {12, "regularization morphism and gamma(y1 y1)", {"regularization"}, 60},
      {13, "dom witness fixture", {"dom-witness"}, 10},
  };
  SuiteOptions opt;
  opt.ctx = PrecisionContext(50, 1e-30);
  opt.kmax = 6;
  bool all = true;
  for (const auto& c : criteria) {
    bool ok = true;
    double seconds = 0;
    std::vector<std::string> details;
    for (const char* name : c.suites) {
      try {
        const SuiteReport rep = run_suite(name, opt);
        ok = ok && rep.passed;
        seconds += rep.seconds;
        for (const auto& l : rep.lines)
          if (verbose || l.rfind("FAIL", 0) == 0 || l.rfind("info", 0) == 0) details.push_back(l);
      } catch (const std::exception& e) {
        ok = false;
        details.push_back(std::string("FAIL  ") + name + " threw: " + e.what());
      }
    }
    const bool in_time = seconds < c.limit_seconds;
    ok = ok && in_time;
    all = all && ok;
    std::printf("[%s] %2d. %s (%.2f s, limit %.0f s)\n", ok ? "PASS" : "FAIL", c.id, c.title, seconds, c.limit_seconds);
    if (!in_time) std::printf("        time limit exceeded\n");
    for (const auto& d : details) std::printf("        %s\n", d.c_str());
  }
  std::printf("%s\n", all ? "all criteria pass" : "some criteria FAIL");
  return all ? 0 : 1;
}
