#pragma once

// Precision contract, constant cache and the precision ladder.

#include <zetaforge/accel.hpp>
#include <zetaforge/combinatoric.hpp>
#include <zetaforge/hurwitz.hpp>
#include <zetaforge/real.hpp>

#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

namespace zf {

namespace detail {

inline Real compute_constant(const std::string& name);

class ConstantCache {
 public:
  Real get(const std::string& name, long bits) {
    auto key = std::make_pair(name, bits);
    {
      std::shared_lock lk(mu_);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    Real v;
    {
      PrecisionScope ps(bits + 16);
      Real raw = compute_constant(name);
      v = round_to(raw, bits);
    }
    std::unique_lock lk(mu_);
    auto [it, inserted] = memo_.emplace(key, v);
    return it->second;
  }
  size_t size() const {
    std::shared_lock lk(mu_);
    return memo_.size();
  }

 private:
  mutable std::shared_mutex mu_;
  std::map<std::pair<std::string, long>, Real> memo_;
};

inline ConstantCache& constant_cache() {
  static ConstantCache c;
  return c;
}

inline Real cached(const std::string& name) {
  return constant_cache().get(name, wp());
}

inline Real catalan_series() {
  return euler_transform_impl(
      [](long n) {
        Real d(2 * n + 1);
        return 1 / sqr(d);
      },
      true);
}

inline Real li_at_half(int s) {
  Real sum(0), p(1);
  Real eps = pow2(-(wp() + 4));
  for (long k = 1;; ++k) {
    p = ldexp(p, -1);
    Real t = p / pow(Real(k), long(s));
    sum += t;
    if (t < eps * sum) break;
  }
  return sum;
}

}  // namespace detail

// Constants at the current working precision.
namespace K {
inline Real pi() { return detail::cached("pi"); }
inline Real log2() { return detail::cached("log2"); }
inline Real e() { return detail::cached("e"); }
inline Real euler() { return detail::cached("gamma"); }
inline Real catalan() { return detail::cached("catalan"); }
inline Real zeta(long k) { return detail::cached("zeta(" + std::to_string(k) + ")"); }
inline Real zeta_prime_2() { return detail::cached("zeta'(2)"); }
inline Real zeta_prime_m1() { return detail::cached("zeta'(-1)"); }
inline Real zeta_prime_m2() { return detail::cached("zeta'(-2)"); }
inline Real log_glaisher() { return detail::cached("logA"); }
inline Real li_half(int s) { return detail::cached("Li" + std::to_string(s) + "(1/2)"); }
}  // namespace K

namespace detail {

inline Real compute_constant(const std::string& name) {
  Real r;
  if (name == "pi") {
    mpfr_const_pi(r.raw(), MPFR_RNDN);
  } else if (name == "log2") {
    mpfr_const_log2(r.raw(), MPFR_RNDN);
  } else if (name == "e") {
    r = exp(Real(1));
  } else if (name == "gamma") {
    mpfr_const_euler(r.raw(), MPFR_RNDN);
  } else if (name == "catalan") {
    r = catalan_series();
  } else if (name.rfind("zeta(", 0) == 0) {
    long k = std::stol(name.substr(5));
    if (k < 2) throw DomainError("zeta(k) constant needs k >= 2");
    r = hurwitz_value(Real(k), Real(1));
  } else if (name == "zeta'(2)") {
    r = hurwitz_derivs(Real(2), Real(1), 2)[1];
  } else if (name == "zeta'(-1)") {
    r = hurwitz_derivs(Real(-1), Real(1), 2)[1];
  } else if (name == "zeta'(-2)") {
    r = hurwitz_derivs(Real(-2), Real(1), 2)[1];
  } else if (name == "logA") {
    r = Real(1) / 12 - K::zeta_prime_m1();
  } else if (name == "Li2(1/2)" || name == "Li3(1/2)" || name == "Li4(1/2)") {
    r = li_at_half(name[2] - '0');
  } else {
    throw DomainError("unknown constant: " + name);
  }
  return r;
}

}  // namespace detail

inline std::vector<std::string> constant_names() {
  return {"pi",       "log2",     "e",        "gamma",     "catalan",
          "zeta(2)",  "zeta(3)",  "zeta(4)",  "zeta(5)",   "zeta(6)",
          "zeta'(2)", "zeta'(-1)", "zeta'(-2)", "logA",    "Li2(1/2)",
          "Li3(1/2)", "Li4(1/2)"};
}

inline Real constant(const PrecisionContext& ctx, const std::string& name) {
  ContextScope cs(ctx);
  Real v = detail::cached(name);
  return round_to(v, ctx.target_bits);
}

// Evaluates f at P and 2P bits; returns the 2P value rounded to P.
inline Real ladder_check(const std::function<Real(const PrecisionContext&)>& f,
                         const PrecisionContext& ctx) {
  PrecisionContext hi = ctx;
  hi.target_bits = 2 * ctx.target_bits;
  Real lo_v = f(ctx);
  Real hi_v = f(hi);
  PrecisionScope ps(hi.work_bits());
  Real diff = abs(lo_v - hi_v);
  Real scale = max(Real(1), abs(hi_v));
  if (diff > scale * pow2(-(ctx.target_bits - 4)))
    throw PrecisionUnstable("ladder rungs disagree by " + to_string(diff, 6));
  return round_to(hi_v, ctx.target_bits);
}

}  // namespace zf
