#pragma once
// Command-line front end. Exit codes: 0 ok, 1 identity violated, 2 parse or
// usage error, 3 domain error, 4 precision not achievable.

#include "polyloc/io.hpp"
#include "polyloc/parse.hpp"
#include "polyloc/suites.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace polyloc::cli {

enum Exit : int { Ok = 0, Violated = 1, Usage = 2, Domain = 3, Precision = 4 };

struct Settings {
  std::string format = "text";
  int prec = 50;
  std::optional<double> tol;
  std::uint64_t trunc = 8;
  std::uint64_t upper = 10;
  std::size_t order = 10;
  unsigned kmax = 6;

  PrecisionContext context() const { return tol ? PrecisionContext(prec, *tol) : PrecisionContext(prec); }
};

/// "a", "bi", "a+bi", "a-bi"; parts are decimals or p/q.
inline BigComplex parse_complex(std::string s, mpfr_prec_t bits) {
  std::erase_if(s, [](unsigned char c) { return std::isspace(c); });
  if (s.empty()) throw ParseError(0, "expected a complex number");
  auto real_part = [&](const std::string& t, std::size_t at) -> BigReal {
    if (t.empty() || t == "+") return BigReal(1L, bits);
    if (t == "-") return BigReal(-1L, bits);
    if (auto slash = t.find('/'); slash != std::string::npos) {
      try {
        Rational q{BigInt(t.substr(0, slash)), BigInt(t.substr(slash + 1))};
        if (q.get_den() == 0) throw ParseError(at, "zero denominator");
        q.canonicalize();
        return BigReal(q, bits);
      } catch (const std::invalid_argument&) {
        throw ParseError(at, "malformed rational '" + t + "'");
      }
    }
    try {
      return BigReal(t, bits);
    } catch (const std::invalid_argument&) {
      throw ParseError(at, "malformed number '" + t + "'");
    }
  };
  if (s.back() != 'i') return BigComplex(real_part(s, 0), BigReal(bits));
  const std::string body = s.substr(0, s.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;)
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  if (split == std::string::npos) return BigComplex(BigReal(bits), real_part(body, 0));
  return BigComplex(real_part(body.substr(0, split), 0), real_part(body.substr(split), split));
}

/// Comma-separated rationals c0,c1,...
inline TaylorSeries<Rational> parse_coefficients(const std::string& s) {
  std::vector<Rational> c;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = s.find(',', pos);
    std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::erase_if(item, [](unsigned char ch) { return std::isspace(ch); });
    try {
      Rational q(item);
      q.canonicalize();
      c.push_back(q);
    } catch (const std::invalid_argument&) {
      throw ParseError(pos, "malformed rational '" + item + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return TaylorSeries<Rational>(std::move(c));
}

namespace detail {

inline std::string poly_csv(const NCPolynomial<Rational>& p) {
  std::string out = "word,coefficient\n";
  for (const auto& [w, c] : p.terms()) out += to_string(w) + "," + to_string(c) + "\n";
  return out;
}

class Runner {
 public:
  Runner(const Settings& s, std::ostream& out) : s_(s), out_(out), fmt_(parse_format(s.format)) {}

  int exact(const std::string& op, const nlohmann::json& inputs, const std::string& value,
            const std::string& csv = "") {
    if (fmt_ == Format::Json) out_ << exact_record(op, inputs, value).dump() << "\n";
    else if (fmt_ == Format::Csv && !csv.empty()) out_ << csv;
    else out_ << value << "\n";
    return Ok;
  }

  int poly(const std::string& op, const nlohmann::json& inputs, const NCPolynomial<Rational>& p) {
    return exact(op, inputs, p.str(), poly_csv(p));
  }

  int series(const std::string& op, const nlohmann::json& inputs, const GradedSeries<Rational>& g) {
    if (fmt_ == Format::Json) {
      auto rec = exact_record(op, inputs, g.polynomial().str());
      rec["truncation"] = g.truncation();
      out_ << rec.dump() << "\n";
      return Ok;
    }
    return exact(op, inputs, g.str(), poly_csv(g.polynomial()));
  }

  int taylor(const std::string& op, const nlohmann::json& inputs, const TaylorSeries<Rational>& t) {
    if (fmt_ == Format::Json) {
      nlohmann::json rec{{"operation", op}, {"inputs", inputs}, {"value", taylor_json(t)}};
      out_ << rec.dump() << "\n";
    } else if (fmt_ == Format::Csv) {
      out_ << taylor_csv(t);
    } else {
      for (std::size_t n = 0; n <= t.order(); ++n) out_ << n << " " << to_string(t[n]) << "\n";
    }
    return Ok;
  }

  int numeric(const std::string& op, const nlohmann::json& inputs, const CharacterValue& v) {
    const int d = s_.prec;
    if (fmt_ == Format::Json) {
      out_ << character_record(op, inputs, v, d).dump() << "\n";
    } else if (fmt_ == Format::Csv) {
      out_ << "re,im,error_bound\n" << v.value.real().str(d) << "," << v.value.imag().str(d) << "," << v.error_bound
           << "\n";
    } else {
      out_ << to_string(v.value, d) << "\n";
    }
    return Ok;
  }

  Format format() const { return fmt_; }
  std::ostream& out() { return out_; }

 private:
  const Settings& s_;
  std::ostream& out_;
  Format fmt_;
};

inline Word single_word(const NCPolynomial<Rational>& p, const std::string& text) {
  if (p.size() != 1 || p.terms().begin()->second != 1) throw ParseError(0, "expected a single word, got '" + text + "'");
  return p.terms().begin()->first;
}

inline NCPolynomial<Rational> as_x(const NCPolynomial<Rational>& p) {
  return p.alphabet() == Alphabet::X ? p : pi_x(p);
}

inline NCPolynomial<Rational> as_y(const NCPolynomial<Rational>& p) {
  return p.alphabet() == Alphabet::Y ? p : pi_y(p);
}

}  // namespace detail

inline int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local calculus of polylogarithms and harmonic sums"};
  app.require_subcommand(1);
  Settings s;
  auto global = [&s](CLI::App* c) {
    c->add_option("--format", s.format, "text|json|csv")->check(CLI::IsMember({"text", "json", "csv"}));
    c->add_option("--prec", s.prec, "working precision in decimal digits (>= 15)");
    c->add_option("--tol", s.tol, "tolerance; at least 10^-(prec-10)");
    c->add_option("--trunc", s.trunc, "truncation weight or length");
    c->add_option("--upper", s.upper, "upper summation bound N");
    c->add_option("--order", s.order, "Taylor order");
    c->add_option("--kmax", s.kmax, "largest k for zeta-2k");
  };

  std::string a, b, op = "stuffle", mode = "product", suite;
  unsigned k = 1, m = 0;
  double bound = 3.2;
  std::function<int(detail::Runner&)> action;

  auto sub = [&](const char* name, const char* help) {
    CLI::App* c = app.add_subcommand(name, help);
    global(c);
    return c;
  };

  auto* product = sub("product", "conc, shuffle or stuffle product of two expressions");
  product->add_option("--op", op, "conc|shuffle|stuffle")->check(CLI::IsMember({"conc", "shuffle", "stuffle"}));
  product->add_option("lhs", a)->required();
  product->add_option("rhs", b)->required();
  product->callback([&] {
    action = [&](detail::Runner& r) {
      const auto p = parse_expression(a);
      const auto q = parse_expression(b, p.alphabet());
      const Product kind = op == "conc" ? Product::Conc : op == "shuffle" ? Product::Shuffle : Product::Stuffle;
      return r.poly("product", {{"op", op}, {"lhs", a}, {"rhs", b}}, polyloc::product(kind, p, q));
    };
  });

  auto* hs = sub("hsum", "harmonic sum H_P(N), exact");
  hs->add_option("expr", a)->required();
  hs->callback([&] {
    action = [&](detail::Runner& r) {
      const auto p = detail::as_y(parse_expression(a));
      std::string csv = "N,value\n";
      if (r.format() == Format::Csv)
        for (std::uint64_t n = 0; n <= s.upper; ++n) csv += std::to_string(n) + "," + to_string(hsum(p, n)) + "\n";
      return r.exact("hsum", {{"expr", a}, {"upper", s.upper}}, to_string(hsum(p, s.upper)), csv);
    };
  });

  auto* li = sub("li", "Taylor coefficients of Li_P");
  li->add_option("expr", a)->required();
  li->callback([&] {
    action = [&](detail::Runner& r) {
      return r.taylor("li", {{"expr", a}, {"order", s.order}}, li_coeffs(detail::as_x(parse_expression(a)), s.order));
    };
  });

  auto* li1 = sub("li-1mz", "Taylor coefficients of Li_P/(1-z)");
  li1->add_option("expr", a)->required();
  li1->callback([&] {
    action = [&](detail::Runner& r) {
      return r.taylor("li-1mz", {{"expr", a}, {"order", s.order}},
                      li_over_1mz_coeffs(detail::as_x(parse_expression(a)), s.order));
    };
  });

  auto* reg = sub("regularize", "stuffle regularization as a polynomial in g");
  reg->add_option("expr", a)->required();
  reg->callback([&] {
    action = [&](detail::Runner& r) {
      return r.exact("regularize", {{"expr", a}}, stuffle_regularize(detail::as_y(parse_expression(a))).str());
    };
  });

  auto* zt = sub("zeta", "Riemann zeta at an integer n >= 2");
  zt->add_option("n", k)->required();
  zt->callback([&] {
    action = [&](detail::Runner& r) { return r.numeric("zeta", {{"n", k}}, zeta_int(k, s.context())); };
  });

  auto* mz = sub("mzv", "multiple zeta value of a convergent word");
  mz->add_option("word", a)->required();
  mz->callback([&] {
    action = [&](detail::Runner& r) {
      const Word w = detail::single_word(detail::as_y(parse_expression(a)), a);
      const auto ctx = s.context();
      return r.numeric("mzv", {{"word", a}}, mzv(w, ctx));
    };
  });

  auto* gc = sub("gamma-char", "regularized character gamma(P)");
  gc->add_option("expr", a)->required();
  gc->callback([&] {
    action = [&](detail::Runner& r) {
      return r.numeric("gamma-char", {{"expr", a}}, gamma_char(detail::as_y(parse_expression(a)), s.context()));
    };
  });

  auto* el = sub("ell", "ell_k(z) for |z| < 1");
  el->add_option("k", k)->required();
  el->add_option("z", a)->required();
  el->callback([&] {
    action = [&](detail::Runner& r) {
      const auto ctx = s.context();
      return r.numeric("ell", {{"k", k}, {"z", a}}, ell(k, parse_complex(a, ctx.bits()), ctx));
    };
  });

  auto* ig = sub("inv-gamma", "1/Gamma_{y_k}(1+z)");
  ig->add_option("k", k)->required();
  ig->add_option("z", a)->required();
  ig->add_option("--mode", mode, "series|product")->check(CLI::IsMember({"series", "product"}));
  ig->callback([&] {
    action = [&](detail::Runner& r) {
      const auto ctx = s.context();
      const EvalMode em = mode == "series" ? EvalMode::Series : EvalMode::Product;
      return r.numeric("inv-gamma", {{"k", k}, {"z", a}, {"mode", mode}},
                       inv_gamma_yk(k, parse_complex(a, ctx.bits()), ctx, em));
    };
  });

  auto* zs = sub("zeros", "predicted zeros of 1/Gamma_{y_r}(1+z) with |z| <= bound");
  zs->add_option("r", k)->required();
  zs->add_option("--bound", bound, "modulus bound");
  zs->callback([&] {
    action = [&](detail::Runner& r) {
      const auto ctx = s.context();
      const int d = std::min(s.prec, 20);
      nlohmann::json rows = nlohmann::json::array();
      std::string text, csv = "re,im,abs_value\n";
      bool ok = true;
      for (const auto& p : predicted_zeros(k, bound, ctx.bits())) {
        const BigReal v = abs(inv_gamma_yk(k, p, ctx).value);
        ok = ok && v.to_double() < ctx.tolerance;
        rows.push_back({{"zero", complex_json(p, d)}, {"abs_value", v.str(6)}});
        text += to_string(p, d) + "  |1/Gamma| = " + v.str(6) + "\n";
        csv += p.real().str(d) + "," + p.imag().str(d) + "," + v.str(6) + "\n";
      }
      if (r.format() == Format::Json)
        r.out() << nlohmann::json{{"operation", "zeros"}, {"inputs", {{"r", k}, {"bound", bound}}}, {"value", rows}}.dump()
                << "\n";
      else r.out() << (r.format() == Format::Csv ? csv : text);
      return ok ? Ok : Violated;
    };
  });

  auto* rf = sub("reflection", "Gamma_{y_2r}(1+z) against Gamma_{y_r}(1+rho z) Gamma_{y_r}(1+rho xi z)");
  rf->add_option("r", k)->required();
  rf->add_option("z", a)->required();
  rf->callback([&] {
    action = [&](detail::Runner& r) {
      const auto ctx = s.context();
      const auto res = reflection_check(k, parse_complex(a, ctx.bits()), ctx);
      if (res.pole) throw DomainError(res.pole_location);
      const int d = s.prec;
      const bool ok = res.difference.to_double() <= ctx.tolerance;
      if (r.format() == Format::Json) {
        r.out() << nlohmann::json{{"operation", "reflection"},
                                  {"inputs", {{"r", k}, {"z", a}}},
                                  {"lhs", complex_json(res.lhs, d)},
                                  {"rhs", complex_json(res.rhs, d)},
                                  {"difference", res.difference.str(6)},
                                  {"holds", ok},
                                  {"precision_digits", d}}
                       .dump()
                << "\n";
      } else if (r.format() == Format::Csv) {
        r.out() << "lhs_re,lhs_im,rhs_re,rhs_im,difference\n"
                << res.lhs.real().str(d) << "," << res.lhs.imag().str(d) << "," << res.rhs.real().str(d) << ","
                << res.rhs.imag().str(d) << "," << res.difference.str(6) << "\n";
      } else {
        r.out() << "lhs " << to_string(res.lhs, d) << "\nrhs " << to_string(res.rhs, d) << "\ndifference "
                << res.difference.str(6) << "\n";
      }
      return ok ? Ok : Violated;
    };
  });

  auto* st = sub("stirling", "Stirling number of the second kind S2(n,m)");
  st->add_option("n", k)->required();
  st->add_option("m", m)->required();
  st->callback([&] {
    action = [&](detail::Runner& r) { return r.exact("stirling", {{"n", k}, {"m", m}}, stirling2(k, m).get_str()); };
  });

  auto* sp = sub("shuffle-power", "<(x1^+)^{sh m} | x1^n>");
  sp->add_option("m", m)->required();
  sp->add_option("n", k)->required();
  sp->callback([&] {
    action = [&](detail::Runner& r) {
      return r.exact("shuffle-power", {{"m", m}, {"n", k}}, shuffle_power_coeff(m, k).get_str());
    };
  });

  auto* sr = sub("star", "concatenation star of a proper expression, truncated at --trunc");
  sr->add_option("expr", a)->required();
  sr->callback([&] {
    action = [&](detail::Runner& r) {
      return r.series("star", {{"expr", a}, {"trunc", s.trunc}}, conc_star(parse_expression(a), s.trunc));
    };
  });

  auto* se = sub("stuffle-exp", "stuffle exponential of a proper Y-expression, truncated at --trunc");
  se->add_option("expr", a)->required();
  se->callback([&] {
    action = [&](detail::Runner& r) {
      return r.series("stuffle-exp", {{"expr", a}, {"trunc", s.trunc}}, stuffle_exp(parse_expression(a), s.trunc));
    };
  });

  auto* pre = sub("preimage", "X-series whose Li has the given Taylor coefficients c0,c1,...");
  pre->add_option("coefficients", a)->required();
  pre->callback([&] {
    action = [&](detail::Runner& r) {
      return r.series("preimage", {{"coefficients", a}, {"trunc", s.trunc}},
                      preimage_from_taylor(parse_coefficients(a), s.trunc));
    };
  });

  auto* vf = sub("verify", "run a named verification suite, or all");
  vf->add_option("suite", suite)->required();
  vf->callback([&] {
    action = [&](detail::Runner& r) {
      SuiteOptions opt;
      opt.ctx = s.tol ? s.context() : PrecisionContext(s.prec, std::max(1e-30, std::pow(10.0, -(s.prec - 10))));
      opt.kmax = s.kmax;
      std::vector<std::string> names;
      if (suite == "all")
        for (const auto& e : suites()) names.emplace_back(e.name);
      else
        names.push_back(suite);
      bool all_ok = true;
      nlohmann::json reports = nlohmann::json::array();
      for (const auto& n : names) {
        const SuiteReport rep = run_suite(n, opt);
        all_ok = all_ok && rep.passed;
        if (r.format() == Format::Json) {
          reports.push_back({{"suite", rep.name}, {"passed", rep.passed}, {"seconds", rep.seconds}, {"lines", rep.lines}});
        } else {
          r.out() << (rep.passed ? "PASS " : "FAIL ") << rep.name << " (" << rep.seconds << " s)\n";
          for (const auto& l : rep.lines) r.out() << "  " << l << "\n";
        }
      }
      if (r.format() == Format::Json) r.out() << nlohmann::json{{"operation", "verify"}, {"value", reports}}.dump() << "\n";
      return all_ok ? Ok : Violated;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return Usage;
  }

  try {
    detail::Runner runner(s, out);
    return action(runner);
  } catch (const PrecisionError& e) {
    err << "precision error: " << e.what() << "\n";
    return Precision;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return Domain;
  } catch (const AlphabetMismatch& e) {
    err << "domain error: " << e.what() << "\n";
    return Domain;
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return Usage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return Usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return Domain;
  }
}

}  // namespace polyloc::cli
