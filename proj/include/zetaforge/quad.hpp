#pragma once

// Double-exponential quadrature: tanh-sinh on (0,1), exp-sinh on (0,inf).
// Integrands on (0,1) receive both x and xc = 1 - x so that they can stay
// accurate next to the right endpoint.

#include <zetaforge/specfun.hpp>

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

namespace zf {

using Integrand01 = std::function<Real(const Real& x, const Real& xc)>;
using IntegrandInf = std::function<Real(const Real& u)>;

struct QuadResult {
  Real value;
  Real error;  // difference between the last two levels
  int level = 0;
};

namespace detail {

struct DeNode {
  Real x, xc, w;
};

class NodeCache {
 public:
  // nodes new at `level`: level 0 is the integer grid, level L > 0 the odd
  // multiples of 2^-L
  const std::vector<DeNode>& get(long bits, int level) {
    auto key = std::make_pair(bits, level);
    {
      std::shared_lock lk(mu_);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    std::vector<DeNode> nodes = build(bits, level);
    std::unique_lock lk(mu_);
    auto [it, inserted] = memo_.emplace(key, std::move(nodes));
    return it->second;
  }

 private:
  static std::vector<DeNode> build(long bits, int level) {
    PrecisionScope ps(bits);
    // reach x ~ 2^-2P so integrable x^-1/2 endpoint singularities are covered
    double tmax =
        std::asinh(double(2 * bits + 64) * 0.6931471805599453 / M_PI) + 0.05;
    Real pi = K::pi();
    std::vector<DeNode> out;
    long step = level == 0 ? 1 : 2;
    long first = level == 0 ? 0 : 1;
    double h = std::ldexp(1.0, -level);
    long kmax = long(tmax / h);
    for (long k = first; k <= kmax; k += step) {
      for (int sgn : {1, -1}) {
        if (k == 0 && sgn < 0) continue;
        Real t = ldexp(Real(sgn * k), -level);
        Real u = pi * sinh(t);
        Real eu = exp(u);
        Real x = 1 / (1 + eu);
        Real xc = eu / (1 + eu);
        if (x.is_zero() || xc.is_zero()) continue;
        Real w = pi * cosh(t) * x * xc;
        out.push_back({x, xc, w});
      }
    }
    return out;
  }

  std::shared_mutex mu_;
  std::map<std::pair<long, int>, std::vector<DeNode>> memo_;
};

inline NodeCache& node_cache() {
  static NodeCache c;
  return c;
}

inline Real quad_tolerance() {
  long tb = std::min<long>(current_ctx().target_bits, wp());
  return pow2(-(tb + 4));
}

inline QuadResult integrate01(const Integrand01& f, int max_level = 14) {
  Real tol = quad_tolerance();
  Real acc(0);
  Real prev;
  long bits = wp();
  for (int L = 0; L <= max_level; ++L) {
    const auto& nodes = node_cache().get(bits, L);
    for (const auto& nd : nodes) acc += nd.w * f(nd.x, nd.xc);
    Real S = ldexp(acc, -L);
    if (L >= 3) {
      Real diff = abs(S - prev);
      if (diff <= tol * max(Real(1), abs(S))) return {S, diff, L};
    }
    prev = S;
  }
  throw PrecisionUnstable("tanh-sinh quadrature did not converge by level " +
                          std::to_string(max_level));
}

// exp-sinh: u = exp(pi/2 sinh t)
inline QuadResult integrate0inf(const IntegrandInf& f, int max_level = 14) {
  Real tol = quad_tolerance();
  Real halfpi = K::pi() / 2;
  Real negligible = pow2(-(wp() + 10));
  auto term = [&](const Real& t) {
    Real u = exp(halfpi * sinh(t));
    if (u.is_zero()) return Real(0);
    return halfpi * cosh(t) * u * f(u);
  };
  // level 0 fixes the t-range adaptively on both sides
  Real acc = term(Real(0));
  long kmin = 0, kmax = 0;
  for (int dir : {1, -1}) {
    int small = 0;
    for (long k = 1; k <= 12; ++k) {
      Real v = term(Real(dir * k));
      acc += v;
      if (dir > 0) kmax = k; else kmin = -k;
      if (abs(v) <= negligible * max(Real(1), abs(acc))) {
        if (++small >= 2) break;
      } else {
        small = 0;
      }
    }
  }
  Real prev = acc;
  for (int L = 1; L <= max_level; ++L) {
    long lo = kmin << L, hi = kmax << L;
    for (long j = lo + 1; j < hi; j += 2) acc += term(ldexp(Real(j), -L));
    Real S = ldexp(acc, -L);
    Real diff = abs(S - prev);
    if (L >= 3 && diff <= tol * max(Real(1), abs(S))) return {S, diff, L};
    prev = S;
  }
  throw PrecisionUnstable("exp-sinh quadrature did not converge");
}

// log x and Li_s(x) taking the complement into account
inline Real log_c(const Real& x, const Real& xc) {
  return x < xc ? log(x) : log1p(-xc);
}
inline Real log1m_c(const Real& x, const Real& xc) {
  return x < xc ? log1p(-x) : log(xc);
}
inline Real polylog_c(long s, const Real& x, const Real& xc) {
  if (s == 1) return -log1m_c(x, xc);
  if (x > ldexp(Real(1), -1)) {
    PrecisionScope ps(wp() + 8);
    return polylog_detail::near_one(s, log1p(-xc));
  }
  return polylog(s, x);
}

inline Real mellin_closed(const Real& x, const Real& k, long n) {
  Real lk = log(k);
  Real s(0);
  for (long j = 0; j <= n; ++j)
    s += Real(binomial(n, j)) * gamma_deriv(j, x) * pow(-lk, n - j);
  return s / pow(k, x);
}

inline Real mellin_quad(const Real& x, const Real& k, long n) {
  return integrate0inf([&](const Real& u) {
           Real lu = log(u);
           return pow(u, x - 1) * exp(-k * u) * pow(lu, n);
         })
      .value;
}

}  // namespace detail

inline QuadResult integrate01(const PrecisionContext& ctx, const Integrand01& f) {
  ContextScope cs(ctx);
  QuadResult r = detail::integrate01(f);
  r.value = round_to(r.value, ctx.target_bits);
  return r;
}

inline QuadResult integrate0inf(const PrecisionContext& ctx,
                                const IntegrandInf& f) {
  ContextScope cs(ctx);
  QuadResult r = detail::integrate0inf(f);
  r.value = round_to(r.value, ctx.target_bits);
  return r;
}

struct MellinResult {
  Real quad, closed;
};

// int_0^inf u^{x-1} e^{-ku} log^n u du by quadrature and by the
// Gamma-derivative closed form
inline MellinResult mellin_log_moment(const PrecisionContext& ctx,
                                      const Real& x, const Real& k, long n) {
  if (!(x.sign() > 0) || !(k.sign() > 0))
    throw DomainError("mellin_log_moment needs x > 0 and k > 0");
  if (n < 0 || n > 4) throw DomainError("mellin_log_moment needs 0 <= n <= 4");
  ContextScope cs(ctx);
  Real q = detail::mellin_quad(x, k, n);
  Real c = detail::mellin_closed(x, k, n);
  Real tol = pow2(-(ctx.target_bits - 16)) * max(Real(1), abs(c));
  if (abs(q - c) > tol)
    throw PrecisionUnstable("mellin routes disagree by " +
                            to_string(abs(q - c), 6));
  return {round_to(q, ctx.target_bits), round_to(c, ctx.target_bits)};
}

// ---- named integrals ----

struct NamedIntegral {
  std::string id;
  std::string eq;
  std::string description;
  long default_param = 0;
  // integrand for a given parameter; integrate over (0,1) unless on_half
  std::function<Integrand01(long)> integrand;
  // printed closed form
  std::function<Real(long)> closed;
  // corrected closed form where the printed one is wrong, else empty
  std::function<Real(long)> corrected;
  Real scale = Real(1);  // applied to the (0,1) quadrature value
};

struct NamedIntegralResult {
  Real quad, closed;
};

namespace detail {

inline Real H_real(long n, int r) { return Real(harmonic(n, r)); }

inline std::vector<NamedIntegral> build_named_integrals() {
  using K::zeta;
  std::vector<NamedIntegral> v;
  auto add = [&](std::string id, std::string eq, std::string desc, long p,
                 std::function<Integrand01(long)> f,
                 std::function<Real(long)> closed,
                 std::function<Real(long)> corrected = {}) {
    NamedIntegral ni;
    ni.id = std::move(id);
    ni.eq = std::move(eq);
    ni.description = std::move(desc);
    ni.default_param = p;
    ni.integrand = std::move(f);
    ni.closed = std::move(closed);
    ni.corrected = std::move(corrected);
    v.push_back(std::move(ni));
  };
  auto fixed = [](Integrand01 f) {
    return [f](long) { return f; };
  };

  auto li_over = [](long s, int logpow) {
    return [s, logpow](const Real& x, const Real& xc) {
      return pow(log_c(x, xc), logpow) * polylog_c(s, x, xc) / xc;
    };
  };
  add("I1", "4.4.239a", "int log x Li2(x)/(1-x)", 0, fixed(li_over(2, 1)),
      [](long) { return -Real(3) / 4 * zeta(4); });
  add("I2", "4.4.239a", "int log x Li3(x)/(1-x)", 0, fixed(li_over(3, 1)),
      [](long) { return 2 * zeta(2) * zeta(3) - Real(9) / 2 * zeta(5); });
  add("I3", "4.4.239a", "int log x Li4(x)/(1-x)", 0, fixed(li_over(4, 1)),
      [](long) { return sqr(zeta(3)) - Real(25) / 12 * zeta(6); });
  add("I4", "4.4.232b", "int log^2 x Li2(x)/(1-x)", 0, fixed(li_over(2, 2)),
      [](long) { return -(zeta(4) - sqr(zeta(2))) / 2; },
      [](long) { return 6 * zeta(2) * zeta(3) - 11 * zeta(5); });
  add("I5", "4.4.232c", "int log^2 x Li3(x)/(1-x)", 0, fixed(li_over(3, 2)),
      [](long) { return sqr(zeta(3)) - zeta(6); });
  add("I6", "4.4.168c", "int Li2(t)^2/t", 0,
      fixed([](const Real& x, const Real& xc) {
        return sqr(polylog_c(2, x, xc)) / x;
      }),
      [](long) { return 2 * zeta(2) * zeta(3) - 3 * zeta(5); });
  add("I7", "4.4.244a", "int log^2(1-x)/(1+x)", 0,
      fixed([](const Real& x, const Real& xc) {
        return sqr(log1m_c(x, xc)) / (1 + x);
      }),
      [](long) { return 2 * K::li_half(3); });
  add("I8", "4.4.245k", "int log^2 t log(1-t/2)/t", 0,
      fixed([](const Real& x, const Real& xc) {
        return sqr(log_c(x, xc)) * log1p(-x / 2) / x;
      }),
      [](long) { return -2 * K::li_half(4); });
  add("I9", "4.4.245n", "int log^2 t Li2(t)/t", 0,
      fixed([](const Real& x, const Real& xc) {
        return sqr(log_c(x, xc)) * polylog_c(2, x, xc) / x;
      }),
      [](long) { return 2 * zeta(5); });
  add("I10", "4.4.245a", "int log x log^2(1-x)/(1-x)", 0,
      fixed([](const Real& x, const Real& xc) {
        return log_c(x, xc) * sqr(log1m_c(x, xc)) / xc;
      }),
      [](long) { return -2 * zeta(4); });
  add("I11", "4.4.245a", "int log^3(1-x)/x", 0,
      fixed([](const Real& x, const Real& xc) {
        return pow(log1m_c(x, xc), 3) / x;
      }),
      [](long) { return -6 * zeta(4); });
  add("I12", "4.4.245a", "int log^4 t/(1-t)", 0,
      fixed([](const Real& x, const Real& xc) {
        return pow(log_c(x, xc), 4) / xc;
      }),
      [](long) { return 24 * zeta(5); });
  {
    // (0,1/2) mapped onto (0,1) by x = u/2
    NamedIntegral* p = nullptr;
    add("I13", "4.4.228d", "int_0^{1/2} log Gamma", 0,
        fixed([](const Real& u, const Real&) {
          return log_gamma(ldexp(u, -1));
        }),
        [](long) {
          return Real(5) / 24 * K::log2() + log(K::pi()) / 4 +
                 Real(3) / 2 * K::log_glaisher();
        });
    p = &v.back();
    p->scale = ldexp(Real(1), -1);
    add("I14", "4.4.223", "int_0^{1/2} x log Gamma", 0,
        fixed([](const Real& u, const Real&) {
          Real x = ldexp(u, -1);
          return x * log_gamma(x);
        }),
        [](long) {
          Real pi2 = sqr(K::pi());
          return log(K::pi()) / 12 - Real(7) / (32 * pi2) * zeta(3) +
                 K::log2() / 16 + K::euler() / 48 -
                 K::zeta_prime_2() / (8 * pi2);
        });
    p = &v.back();
    p->scale = ldexp(Real(1), -1);
  }
  add("I15", "4.4.228d", "int x log Gamma", 0,
      fixed([](const Real& x, const Real&) { return x * log_gamma(x); }),
      [](long) { return log(2 * K::pi()) / 4 - K::log_glaisher(); });
  add("I16", "4.4.229p", "int B2(x) log sin(pi x)", 0,
      fixed([](const Real& x, const Real& xc) {
        return (x * x - x + Real(1) / 6) * log(sin_pi(x, xc));
      }),
      [](long) { return zeta(3) / (4 * sqr(K::pi())); },
      [](long) { return -zeta(3) / (2 * sqr(K::pi())); });
  add("I17", "4.4.229q", "int log Gamma log sin(pi x)", 0,
      fixed([](const Real& x, const Real& xc) {
        return log_gamma(x) * log(sin_pi(x, xc));
      }),
      [](long) {
        Real l2 = K::log2();
        return -sqr(l2) / 2 - l2 * log(K::pi()) / 2 - sqr(K::pi()) / 24;
      });
  add("I18", "4.4.213d", "int (x-1/2) log Gamma", 0,
      fixed([](const Real& x, const Real&) {
        return (x - ldexp(Real(1), -1)) * log_gamma(x);
      }),
      [](long) {
        Real pi = K::pi();
        return (6 * K::zeta_prime_2() / sqr(pi) - log(2 * pi) - K::euler()) /
               12;
      });
  add("I19", "4.4.229t", "int (zeta'(-1,x) - zeta'(-1)) cot(pi x)", 0,
      fixed([](const Real& x, const Real& xc) {
        Real d = hurwitz_zeta_deriv(Real(-1), x, 1) - K::zeta_prime_m1();
        return d * cot_pi(x, xc);
      }),
      [](long) {
        Real pi = K::pi();
        return -zeta(3) / (8 * pow(pi, 3)) + pi / 24;
      },
      [](long) { return K::pi() / 24; });
  add("I20", "4.4.229y", "int t zeta'(-1,t)", 0,
      fixed([](const Real& x, const Real&) {
        return x * hurwitz_zeta_deriv(Real(-1), x, 1);
      }),
      [](long) { return -zeta(3) / (8 * sqr(K::pi())); });
  add("I21", "4.4.213c", "int (x^2-x+1/6) log Gamma", 0,
      fixed([](const Real& x, const Real&) {
        return (x * x - x + Real(1) / 6) * log_gamma(x);
      }),
      [](long) { return zeta(3) / (4 * sqr(K::pi())); });
  add("I22", "4.4.187a", "int log log(1/x) Li2(x)/x", 0,
      fixed([](const Real& x, const Real& xc) {
        return log(-log_c(x, xc)) * polylog_c(2, x, xc) / x;
      }),
      [](long) {
        return hurwitz_zeta_deriv(Real(3), Real(1), 1) - K::euler() * zeta(3);
      });
  add("I23", "4.4.195a", "-int log(1-x) (log log(1/x))^2/x", 0,
      fixed([](const Real& x, const Real& xc) {
        return -log1m_c(x, xc) * sqr(log(-log_c(x, xc))) / x;
      }),
      [](long) {
        Real g = K::euler();
        Real z2 = zeta(2);
        Real zpp = hurwitz_zeta_deriv(Real(2), Real(1), 2);
        return (sqr(g) + z2) * z2 - 2 * g * K::zeta_prime_2() + zpp;
      });
  add("I24", "4.4.155c", "int (1-(1-t)^n)/t", 5,
      [](long n) {
        return Integrand01([n](const Real& x, const Real& xc) {
          return (1 - pow(xc, n)) / x;
        });
      },
      [](long n) { return H_real(n, 1); });
  add("I25", "4.4.238a", "int x^k log x/(1-x)", 3,
      [](long k) {
        return Integrand01([k](const Real& x, const Real& xc) {
          return pow(x, k) * log_c(x, xc) / xc;
        });
      },
      [](long k) { return H_real(k, 2) - zeta(2); });
  add("I26", "4.4.235", "int x^k log^2 x/(1-x)", 4,
      [](long k) {
        return Integrand01([k](const Real& x, const Real& xc) {
          return pow(x, k) * sqr(log_c(x, xc)) / xc;
        });
      },
      [](long k) { return 2 * zeta(3) - 2 * H_real(k, 3); });
  add("I27", "4.4.246", "int x^n log^2(1-x)", 3,
      [](long n) {
        return Integrand01([n](const Real& x, const Real& xc) {
          return pow(x, n) * sqr(log1m_c(x, xc));
        });
      },
      [](long n) {
        return (sqr(H_real(n + 1, 1)) + H_real(n + 1, 2)) / (n + 1);
      });
  add("I28", "4.4.155y", "int (1-t)^n log t log(1-t)/t", 3,
      [](long n) {
        return Integrand01([n](const Real& x, const Real& xc) {
          return pow(xc, n) * log_c(x, xc) * log1m_c(x, xc) / x;
        });
      },
      [](long n) {
        return zeta(3) - H_real(n, 3) + H_real(n, 1) * (zeta(2) - H_real(n, 2));
      });
  add("I29", "4.4.155q", "n int (1-t)^{n-1} log^3 t", 4,
      [](long n) {
        return Integrand01([n](const Real& x, const Real& xc) {
          return n * pow(xc, n - 1) * pow(log_c(x, xc), 3);
        });
      },
      [](long n) {
        Real h1 = H_real(n, 1), h2 = H_real(n, 2), h3 = H_real(n, 3);
        return -(pow(h1, 3) + 3 * h1 * h2 + 2 * h3);
      });
  // parameter p encodes the upper limit t = 1/p
  add("I30", "4.4.167m", "int_0^t log(1-x) Li2(x)/x", 1,
      [](long p) {
        return Integrand01([p](const Real& u, const Real& uc) {
          if (p == 1) return log1m_c(u, uc) * polylog_c(2, u, uc) / u;
          Real x = u / p;
          return log1p(-x) * polylog(2, x) / u;
        });
      },
      [](long p) { return -sqr(polylog(2, Real(1) / p)) / 2; });

  // Fourier coefficients and related checks
  add("F-SIN", "4.4.229f", "int log Gamma(t) sin(2 n pi t)", 1,
      [](long n) {
        return Integrand01([n](const Real& x, const Real& xc) {
          Real a = 2 * n * K::pi();
          Real s = x < xc ? sin(a * x) : -sin(a * xc);
          return log_gamma(x) * s;
        });
      },
      [](long n) {
        Real w = 2 * n * K::pi();
        return (log(w) + K::euler()) / w;
      });
  add("F-COS", "4.4.229h", "int log Gamma(t) cos(2 n pi t)", 1,
      [](long n) {
        return Integrand01([n](const Real& x, const Real& xc) {
          Real a = 2 * n * K::pi();
          Real c = x < xc ? cos(a * x) : cos(a * xc);
          return log_gamma(x) * c;
        });
      },
      [](long n) { return Real(1) / (4 * n); });
  add("F-ZSIN", "4.4.229hi", "int zeta'(-1,t) sin(2 n pi t)", 1,
      [](long n) {
        return Integrand01([n](const Real& x, const Real& xc) {
          Real a = 2 * n * K::pi();
          Real s = x < xc ? sin(a * x) : -sin(a * xc);
          return hurwitz_zeta_deriv(Real(-1), x, 1) * s;
        });
      },
      [](long n) { return 1 / (8 * K::pi() * n * n); });
  add("B-LG", "4.4.213a", "int B_{2n}(x) log Gamma", 1,
      [](long n) {
        return Integrand01([n](const Real& x, const Real&) {
          return bernoulli_poly_real(2 * n, x) * log_gamma(x);
        });
      },
      [](long n) {
        Real f(1);
        for (long i = 2; i <= 2 * n; ++i) f *= i;
        Real r = f * zeta(2 * n + 1) / (2 * pow(2 * K::pi(), 2 * n));
        return n % 2 ? r : -r;
      });
  add("E-LS", "4.4.213e", "int (x-1/2) log sin(pi x)", 0,
      fixed([](const Real& x, const Real& xc) {
        return (x - ldexp(Real(1), -1)) * log(sin_pi(x, xc));
      }),
      [](long) { return Real(0); });
  add("E-LS0", "4.4.229r", "int log sin(pi x)", 0,
      fixed([](const Real& x, const Real& xc) { return log(sin_pi(x, xc)); }),
      [](long) { return -K::log2(); });
  add("Q-LL", "4.4.167q", "int log x log^2(1-x)/x", 0,
      fixed([](const Real& x, const Real& xc) {
        return log_c(x, xc) * sqr(log1m_c(x, xc)) / x;
      }),
      [](long) { return -zeta(4) / 2; });
  return v;
}

}  // namespace detail

inline const std::vector<NamedIntegral>& named_integrals() {
  static const std::vector<NamedIntegral> v = [] {
    // closures only; constants are evaluated lazily at call time
    return detail::build_named_integrals();
  }();
  return v;
}

inline const NamedIntegral& find_named_integral(const std::string& id) {
  for (const auto& ni : named_integrals())
    if (ni.id == id) return ni;
  throw DomainError("unknown integral id: " + id);
}

namespace detail {
inline Real named_integral_quad(const NamedIntegral& ni, long param) {
  Real q = integrate01(ni.integrand(param)).value;
  return q * ni.scale;
}
}  // namespace detail

inline NamedIntegralResult named_integral(const PrecisionContext& ctx,
                                          const std::string& id,
                                          long param = -1) {
  const NamedIntegral& ni = find_named_integral(id);
  if (param < 0) param = ni.default_param;
  ContextScope cs(ctx);
  Real q = detail::named_integral_quad(ni, param);
  Real c = ni.closed(param);
  return {round_to(q, ctx.target_bits), round_to(c, ctx.target_bits)};
}

}  // namespace zf
