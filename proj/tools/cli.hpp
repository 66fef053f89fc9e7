#pragma once

// Command-line front end. run_cli is separate from main so tests can drive it
// in-process with their own streams.

#include <zetaforge/registry.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <ostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

namespace zf::cli {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CliConfig {
  long bits = 128;
  std::string tol;
  std::vector<std::string> tags;
  std::string out;
  std::string format = "text";
};

inline bool is_positive_decimal(const std::string& s) {
  static const std::regex re(R"(\+?([0-9]+\.?[0-9]*|\.[0-9]+)([eE][-+]?[0-9]+)?)");
  if (!std::regex_match(s, re)) return false;
  PrecisionScope ps(64);
  return Real(s) > Real(0);
}

inline long parse_long(const std::string& s, const char* what) {
  static const std::regex re(R"([-+]?[0-9]{1,17})");
  if (!std::regex_match(s, re))
    throw UsageError(std::string(what) + " must be an integer, got '" + s + "'");
  return std::stol(s);
}

// a signed product of an optional number and an optional constant: 3, -0.25,
// pi, 2pi, 3*log2
inline Real parse_factor(const std::string& tok) {
  static const std::regex re(
      R"(([-+])?([0-9]+\.?[0-9]*(?:[eE][-+]?[0-9]+)?|\.[0-9]+)?\*?(pi|e|log2)?)");
  std::smatch m;
  if (tok.empty() || !std::regex_match(tok, m, re) || (!m[2].matched && !m[3].matched))
    throw UsageError("cannot parse argument '" + tok + "'");
  Real v = m[2].matched ? Real(m[2].str()) : Real(1);
  if (m[3].matched) {
    std::string c = m[3].str();
    v *= c == "pi" ? K::pi() : c == "e" ? K::e() : K::log2();
  }
  if (m[1].matched && m[1].str() == "-") v = -v;
  return v;
}

// factor or factor/factor, evaluated at the current working precision
inline Real parse_real(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return parse_factor(s);
  if (s.find('/', slash + 1) != std::string::npos)
    throw UsageError("cannot parse argument '" + s + "'");
  Real den = parse_factor(s.substr(slash + 1));
  if (den.is_zero()) throw UsageError("zero denominator in '" + s + "'");
  return parse_factor(s.substr(0, slash)) / den;
}

struct EvalFn {
  std::string usage;
  size_t min_args, max_args;
  // returns the printed value; runs inside a ContextScope for the request
  std::function<std::string(const PrecisionContext&, const std::vector<std::string>&)> run;
};

inline std::string fmt(const PrecisionContext& ctx, const Real& v) {
  return to_string(v, display_digits(ctx.target_bits));
}

inline const std::map<std::string, EvalFn>& eval_table() {
  using A = std::vector<std::string>;
  using C = PrecisionContext;
  static const std::map<std::string, EvalFn> t{
      {"zeta", {"zeta s", 1, 1,
                [](const C& c, const A& a) { return fmt(c, zeta(c, parse_real(a[0]))); }}},
      {"zeta_alt", {"zeta_alt s", 1, 1,
                    [](const C& c, const A& a) { return fmt(c, zeta_alt(c, parse_real(a[0]))); }}},
      {"hurwitz_zeta", {"hurwitz_zeta s a", 2, 2,
                        [](const C& c, const A& a) {
                          return fmt(c, hurwitz_zeta(c, parse_real(a[0]), parse_real(a[1])));
                        }}},
      {"hurwitz_zeta_deriv", {"hurwitz_zeta_deriv s a [order]", 2, 3,
                              [](const C& c, const A& a) {
                                int o = a.size() > 2 ? int(parse_long(a[2], "order")) : 1;
                                return fmt(c, hurwitz_zeta_deriv(c, parse_real(a[0]),
                                                                 parse_real(a[1]), o));
                              }}},
      {"zeta_prime", {"zeta_prime s", 1, 1,
                      [](const C& c, const A& a) {
                        return fmt(c, zeta_deriv(c, parse_real(a[0]), 1));
                      }}},
      {"log_gamma", {"log_gamma x", 1, 1,
                     [](const C& c, const A& a) { return fmt(c, log_gamma(c, parse_real(a[0]))); }}},
      {"polygamma", {"polygamma k x", 2, 2,
                     [](const C& c, const A& a) {
                       return fmt(c, polygamma(c, parse_long(a[0], "k"), parse_real(a[1])));
                     }}},
      {"gamma_deriv", {"gamma_deriv j x", 2, 2,
                       [](const C& c, const A& a) {
                         return fmt(c, gamma_deriv(c, parse_long(a[0], "j"), parse_real(a[1])));
                       }}},
      {"dirichlet_beta", {"dirichlet_beta s", 1, 1,
                          [](const C& c, const A& a) {
                            return fmt(c, dirichlet_beta(c, parse_real(a[0])));
                          }}},
      {"polylog", {"polylog s x", 2, 2,
                   [](const C& c, const A& a) {
                     return fmt(c, polylog(c, parse_long(a[0], "s"), parse_real(a[1])));
                   }}},
      {"clausen", {"clausen n theta", 2, 2,
                   [](const C& c, const A& a) {
                     return fmt(c, clausen(c, parse_long(a[0], "n"), parse_real(a[1])));
                   }}},
      {"sin_integral", {"sin_integral x", 1, 1,
                        [](const C& c, const A& a) {
                          return fmt(c, sin_integral(c, parse_real(a[0])));
                        }}},
      {"barnes_log_g", {"barnes_log_g x", 1, 1,
                        [](const C& c, const A& a) {
                          return fmt(c, barnes_log_g(c, parse_real(a[0])));
                        }}},
      {"bernoulli_poly", {"bernoulli_poly n x", 2, 2,
                          [](const C& c, const A& a) {
                            return fmt(c, bernoulli_poly(c, parse_long(a[0], "n"),
                                                         parse_real(a[1])));
                          }}},
      {"harmonic", {"harmonic n [r]  (exact)", 1, 2,
                    [](const C&, const A& a) {
                      long n = parse_long(a[0], "n");
                      long r = a.size() > 1 ? parse_long(a[1], "r") : 1;
                      if (n < 0 || r < 1) throw DomainError("harmonic needs n >= 0, r >= 1");
                      return harmonic(n, int(r)).get_str();
                    }}},
      {"bernoulli", {"bernoulli n  (exact)", 1, 1,
                     [](const C&, const A& a) {
                       long n = parse_long(a[0], "n");
                       if (n < 0) throw DomainError("bernoulli needs n >= 0");
                       return bernoulli(n).get_str();
                     }}},
      {"binomial", {"binomial n k  (exact)", 2, 2,
                    [](const C&, const A& a) {
                      return binomial(parse_long(a[0], "n"), parse_long(a[1], "k")).get_str();
                    }}},
      {"euler_sum", {"euler_sum p q", 2, 2,
                     [](const C& c, const A& a) {
                       return fmt(c, euler_sum(c, int(parse_long(a[0], "p")), parse_real(a[1])));
                     }}},
      {"weighted", {"weighted W1..W10", 1, 1,
                    [](const C& c, const A& a) { return fmt(c, weighted_euler_sum(c, a[0])); }}},
      {"gen", {"gen G1..G7 x [p q]", 2, 4,
               [](const C& c, const A& a) {
                 detail::GenArgs g;
                 if (a.size() == 3) throw UsageError("gen needs both p and q");
                 if (a.size() == 4) {
                   g.p = int(parse_long(a[2], "p"));
                   g.q = int(parse_long(a[3], "q"));
                 }
                 ContextScope cs(c);
                 return fmt(c, gen_function(c, a[0], parse_real(a[1]), g));
               }}},
      {"knuth", {"knuth s x", 2, 2,
                 [](const C& c, const A& a) {
                   return fmt(c, knuth_hsum(c, parse_long(a[0], "s"), parse_real(a[1])));
                 }}},
      {"si_zeta_sum", {"si_zeta_sum", 0, 0,
                       [](const C& c, const A&) { return fmt(c, si_zeta_sum(c)); }}},
      {"constant", {"constant name", 1, 1,
                    [](const C& c, const A& a) { return fmt(c, constant(c, a[0])); }}},
      {"integral", {"integral id [param]", 1, 2,
                    [](const C& c, const A& a) {
                      const NamedIntegral& ni = find_named_integral(a[0]);
                      long p = a.size() > 1 ? parse_long(a[1], "param") : ni.default_param;
                      return fmt(c, named_integral(c, a[0], p).quad);
                    }}},
      {"mellin", {"mellin x k n", 3, 3,
                  [](const C& c, const A& a) {
                    return fmt(c, mellin_log_moment(c, parse_real(a[0]), parse_real(a[1]),
                                                    parse_long(a[2], "n"))
                                      .quad);
                  }}},
  };
  return t;
}

inline long default_bits() {
  const char* env = std::getenv("ZETAFORGE_BITS");
  if (!env || !*env) return 128;
  std::string s(env);
  static const std::regex re(R"([0-9]{1,9})");
  if (!std::regex_match(s, re) || std::stol(s) < 16)
    throw UsageError("ZETAFORGE_BITS must be an integer >= 16, got '" + s + "'");
  return std::stol(s);
}

inline int emit(const CliConfig& cfg, const std::string& body, std::ostream& out,
                std::ostream& err) {
  if (cfg.out.empty() || cfg.out == "-") {
    out << body;
    return kOk;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) {
    err << "error: cannot write " << cfg.out << "\n";
    return kUsage;
  }
  f << body;
  return kOk;
}

inline std::string render(const VerificationReport& rep, const std::string& format) {
  if (format == "json") return to_json(rep).dump(2) + "\n";
  return to_text(rep);
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"zetaforge: high-precision zeta and harmonic-sum identities"};
  app.require_subcommand(1);
  CliConfig cfg;
  try {
    cfg.bits = default_bits();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  auto bits_check = CLI::Validator(
      [](std::string& s) -> std::string {
        static const std::regex re(R"([0-9]{1,9})");
        if (!std::regex_match(s, re) || std::stol(s) < 16) return "--bits must be an integer >= 16";
        return {};
      },
      "INT>=16");
  auto tol_check = CLI::Validator(
      [](std::string& s) -> std::string {
        return is_positive_decimal(s) ? std::string{} : "--tol must be a positive decimal";
      },
      "DECIMAL>0");
  auto add_common = [&](CLI::App* sc, bool report_opts) {
    sc->add_option("--bits", cfg.bits, "target precision in bits")->check(bits_check);
    if (!report_opts) return;
    sc->add_option("--tol", cfg.tol, "tolerance override (positive decimal)")->check(tol_check);
    sc->add_option("--tag", cfg.tags, "only identities with this tag (repeatable)")
        ->take_all()
        ->expected(1)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    sc->add_option("--out", cfg.out, "output file (default stdout)");
    sc->add_option("--format", cfg.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
  };

  std::string fn;
  std::vector<std::string> fargs;
  auto* ev = app.add_subcommand("eval", "evaluate a function");
  add_common(ev, false);
  ev->add_option("function", fn, "function name")->required();
  ev->add_option("args", fargs, "arguments (integers, decimals, pi, e, log2, p/q)");
  ev->allow_extras(false);

  bool all = false;
  std::vector<std::string> ids;
  auto* vf = app.add_subcommand("verify", "verify identities");
  add_common(vf, true);
  vf->add_flag("--all", all, "verify the whole catalog");
  vf->add_option("ids", ids, "identity ids");

  auto* ls = app.add_subcommand("list", "list the catalog");
  add_common(ls, true);

  bool catalog_only = false;
  auto* rp = app.add_subcommand("report", "full verification report (JSON by default)");
  add_common(rp, true);
  rp->add_flag("--catalog", catalog_only, "export catalog metadata instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  PrecisionContext ctx;
  try {
    ctx = ctx_new(cfg.bits);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  auto filter = any_tag(cfg.tags);

  try {
    if (*ev) {
      auto it = eval_table().find(fn);
      if (it == eval_table().end()) {
        err << "error: unknown function '" << fn << "'; known:";
        for (const auto& [name, f] : eval_table()) err << " " << name;
        err << "\n";
        return kUsage;
      }
      const EvalFn& f = it->second;
      if (fargs.size() < f.min_args || fargs.size() > f.max_args) {
        err << "error: usage: eval " << f.usage << "\n";
        return kUsage;
      }
      std::string v;
      {
        ContextScope cs(ctx);
        v = f.run(ctx, fargs);
      }
      out << v << "\n";
      return kOk;
    }

    VerifyOptions opt;
    if (!cfg.tol.empty()) {
      ContextScope cs(ctx);
      opt.tol = Real(cfg.tol);
    }

    if (*vf || *rp) {
      if (*rp && catalog_only) return emit(cfg, catalog_json().dump(2) + "\n", out, err);
      if (*rp && rp->count("--format") == 0) cfg.format = "json";
      VerificationReport rep;
      if (*rp || all) {
        if (!ids.empty()) {
          err << "error: give either --all or ids, not both\n";
          return kUsage;
        }
        rep = verify_all(ctx, filter, opt);
      } else {
        if (ids.empty()) {
          err << "error: verify needs --all or at least one id\n";
          return kUsage;
        }
        for (const auto& id : ids)
          if (!find_identity(id)) {
            err << "error: unknown identity id '" << id << "'\n";
            return kUsage;
          }
        rep = verify_ids(ctx, ids, opt);
      }
      int rc = emit(cfg, render(rep, cfg.format), out, err);
      if (rc != kOk) return rc;
      return rep.ok() ? kOk : kVerifyFailed;
    }

    if (*ls) {
      std::string body;
      if (cfg.format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& e : catalog_json())
          if (filter(*find_identity(e["id"].get<std::string>()))) j.push_back(e);
        body = j.dump(2) + "\n";
      } else {
        for (const auto& e : catalog())
          if (filter(e))
            body += e.id + "\t" + e.eq + "\t" + to_string(e.kind) + "\t" + e.description + "\n";
      }
      return emit(cfg, body, out, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace zf::cli
