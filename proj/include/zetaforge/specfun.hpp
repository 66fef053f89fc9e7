#pragma once

// Transcendental functions: gamma family, zeta family, polylogarithm,
// Clausen functions, sine integral, Barnes G.
//
// detail:: functions work at the caller's working precision; the public
// overloads take a PrecisionContext, evaluate at target+guard bits and round.

#include <zetaforge/accel.hpp>
#include <zetaforge/combinatoric.hpp>
#include <zetaforge/hurwitz.hpp>
#include <zetaforge/mpcore.hpp>
#include <zetaforge/real.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

namespace zf {

namespace detail {

inline Real bernoulli_real(long n) { return Real(bernoulli(n)); }

inline Real bernoulli_poly_real(long n, const Real& x) {
  Real s(0), xp(1);
  for (long k = n; k >= 0; --k) {
    s += Real(binomial(n, k)) * bernoulli_real(k) * xp;
    xp *= x;
  }
  return s;
}

// shift target for the asymptotic expansions of log-gamma and digamma
inline long asymptotic_shift(const Real& x) {
  double x0 = std::max(12.0, double(wp()) / 7.0);
  double xd = x.to_double();
  return xd >= x0 ? 0 : long(std::ceil(x0 - xd));
}

inline Real log_gamma(const Real& x) {
  if (!(x.sign() > 0)) throw DomainError("log_gamma needs x > 0");
  long M = asymptotic_shift(x);
  PrecisionScope ps(wp() + 16);
  Real prod(1);
  for (long k = 0; k < M; ++k) prod *= x + k;
  Real y = x + M;
  Real pi = K::pi();
  Real r = (y - ldexp(Real(1), -1)) * log(y) - y + log(2 * pi) / 2;
  Real eps = pow2(-(wp() + 4));
  Real y2 = sqr(y);
  Real yp = y;
  for (long k = 1; k < 2000; ++k) {
    Real t = bernoulli_real(2 * k) / (2 * k * (2 * k - 1)) / yp;
    r += t;
    if (abs(t) < eps) break;
    yp *= y2;
  }
  if (M > 0) r -= log(prod);
  return r;
}

inline Real digamma(const Real& x) {
  if (!(x.sign() > 0)) throw DomainError("digamma needs x > 0");
  long M = asymptotic_shift(x);
  PrecisionScope ps(wp() + 16);
  Real corr(0);
  for (long k = 0; k < M; ++k) corr += 1 / (x + k);
  Real y = x + M;
  Real r = log(y) - 1 / (2 * y);
  Real eps = pow2(-(wp() + 4));
  Real y2 = sqr(y);
  Real yp = y2;
  for (long k = 1; k < 2000; ++k) {
    Real t = bernoulli_real(2 * k) / (2 * k) / yp;
    r -= t;
    if (abs(t) < eps) break;
    yp *= y2;
  }
  return r - corr;
}

inline Real polygamma(long k, const Real& x) {
  if (k < 0) throw DomainError("polygamma order must be nonnegative");
  if (k == 0) return digamma(x);
  if (!(x.sign() > 0)) throw DomainError("polygamma needs x > 0");
  Real f(1);
  for (long i = 2; i <= k; ++i) f *= i;
  Real z = hurwitz_value(Real(k + 1), x);
  return (k % 2 ? f : -f) * z;
}

// Gamma^{(j)}(x) = Gamma(x) Y_j with Y_{n+1} = sum_i C(n,i) Y_{n-i} psi^{(i)}
inline Real gamma_deriv(long j, const Real& x) {
  if (j < 0 || j > 6) throw DomainError("gamma_deriv supports 0 <= j <= 6");
  std::vector<Real> psi(size_t(j) + 1), Y(size_t(j) + 1);
  for (long i = 0; i < j; ++i) psi[i] = polygamma(i, x);
  Y[0] = Real(1);
  for (long n = 0; n < j; ++n) {
    Real s(0);
    for (long i = 0; i <= n; ++i)
      s += Real(binomial(n, i)) * Y[n - i] * psi[i];
    Y[n + 1] = s;
  }
  return exp(log_gamma(x)) * Y[j];
}

// s = 1 - m for a positive integer m, or 0 when s is not of that form
inline long negative_integer_m(const Real& s) {
  if (!s.is_integer() || s > Real(0) || s < Real(-100000)) return 0;
  return 1 - s.to_long();
}

inline Real zeta(const Real& s) {
  if (long m = negative_integer_m(s)) {
    // B_m(1) differs from B_m only at m = 1
    if (m == 1) return -ldexp(Real(1), -1);
    return -bernoulli_real(m) / m;
  }
  return hurwitz_value(s, Real(1));
}

inline Real zeta_alt(const Real& s) {
  if (s == Real(1)) return K::log2();
  return (1 - pow(Real(2), 1 - s)) * zeta(s);
}

inline Real zeta_deriv(const Real& s, int order) {
  return hurwitz_derivs(s, Real(1), order + 1)[order];
}

inline Real hurwitz_zeta(const Real& s, const Real& a) {
  if (long m = negative_integer_m(s)) {
    if (!(a.sign() > 0)) throw DomainError("hurwitz zeta needs a > 0");
    return -bernoulli_poly_real(m, a) / m;
  }
  return hurwitz_value(s, a);
}

inline Real hurwitz_zeta_deriv(const Real& s, const Real& a, int order) {
  return hurwitz_derivs(s, a, order + 1)[order];
}

// sum (-1)^n (n+u)^{-s} by Euler's transformation
inline Real hurwitz_zeta_alt(const Real& s, const Real& u) {
  if (!(u.sign() > 0)) throw DomainError("alternating Hurwitz zeta needs u > 0");
  return euler_transform_impl(
      [&](long n) { return pow(u + n, -s); }, false);
}

inline Real dirichlet_beta(const Real& s) {
  if (s == Real(1)) return K::pi() / 4;
  PrecisionScope ps(wp() + 8);
  Real q = pow(Real(4), -s);
  return q * (hurwitz_value(s, Real(1) / 4) - hurwitz_value(s, Real(3) / 4));
}

// zeta(-m) and zeta(k) as needed by the log-expansions below
inline Real zeta_int(long n) {
  if (n >= 2) return K::zeta(n);
  if (n == 0) return Real(-1) / 2;
  if (n == 1) throw DomainError("zeta pole");
  long m = -n;
  if (m % 2 == 0) return Real(0);
  return -bernoulli_real(m + 1) / (m + 1);
}

inline Real polylog(long s, const Real& x);

namespace polylog_detail {

inline Real direct(long s, const Real& x) {
  Real sum(0), xp(1);
  Real eps = pow2(-(wp() + 4));
  for (long k = 1;; ++k) {
    charge_terms(k);
    xp *= x;
    Real t = xp / pow(Real(k), s);
    sum += t;
    if (abs(t) <= eps * max(abs(sum), pow2(-wp()))) break;
  }
  return sum;
}

// Li_s(e^mu) for mu <= 0 near 0
inline Real near_one(long s, const Real& mu) {
  PrecisionScope ps(wp() + 16);
  Real sum(0);
  Real mp(1);  // mu^k / k!
  Real eps = pow2(-(wp() + 4));
  int small = 0;
  for (long k = 0;; ++k) {
    if (k > 0) mp = mp * mu / k;
    if (k == s - 1) {
      Real H(harmonic(s - 1));
      Real lg = mu.is_zero() ? Real(0) : log(-mu);
      sum += mp * (H - lg);
      continue;
    }
    Real t = zeta_int(s - k) * mp;
    sum += t;
    if (k > s + 2) {
      if (abs(t) <= eps * max(Real(1), abs(sum))) {
        if (++small >= 2) break;
      } else {
        small = 0;
      }
    }
    charge_terms(k);
  }
  return sum;
}

}  // namespace polylog_detail

inline Real polylog(long s, const Real& x) {
  if (s < 1) throw DomainError("polylog supports integer s >= 1");
  if (x > Real(1)) throw DomainError("polylog needs x <= 1");
  if (x.is_zero()) return Real(0);
  if (s == 1) {
    if (x == Real(1)) throw DomainError("Li_1 diverges at x = 1");
    return -log1p(-x);
  }
  if (x < Real(-1)) {
    // inversion: Li_s(-t) + (-1)^s Li_s(-1/t) in terms of log t and eta(2k)
    PrecisionScope ps(wp() + 16);
    Real L = log(-x);
    auto term = [&](long m) {
      Real t(1);
      for (long j = 1; j <= m; ++j) t = t * L / j;
      return t;
    };
    Real r = -term(s);
    for (long k = 1; 2 * k <= s; ++k) r -= 2 * term(s - 2 * k) * zeta_alt(Real(2 * k));
    Real inv = polylog(s, 1 / x);
    return s % 2 ? r + inv : r - inv;
  }
  if (x == Real(1)) return K::zeta(s);
  if (x == Real(-1)) return -zeta_alt(Real(s));
  Real half = ldexp(Real(1), -1);
  if (abs(x) <= half) return polylog_detail::direct(s, x);
  if (x.sign() > 0) {
    PrecisionScope ps(wp() + 8);
    return polylog_detail::near_one(s, log(x));
  }
  PrecisionScope ps(wp() + 8);
  Real x2 = sqr(x);
  return pow(Real(2), 1 - s) * polylog(s, x2) - polylog(s, -x);
}

// Cl_n(theta): sine series for even n, cosine series for odd n
inline Real clausen(long n, const Real& theta) {
  if (n < 2) throw DomainError("clausen needs n >= 2");
  PrecisionScope ps(wp() + 16);
  Real pi = K::pi();
  Real two_pi = 2 * pi;
  Real t = theta - two_pi * floor(theta / two_pi);
  int sgn = 1;
  if (t > pi) {
    t = two_pi - t;
    if (n % 2 == 0) sgn = -1;
  }
  if (t.is_zero()) return n % 2 == 0 ? Real(0) : K::zeta(n);
  // singular term (i t)^{n-1}/(n-1)! [H_{n-1} - log t + i pi/2]
  Real T(1);
  for (long i = 1; i <= n - 1; ++i) T = T * t / i;
  Real A = Real(harmonic(n - 1)) - log(t);
  Real halfpi = pi / 2;
  int r = int((n - 1) % 4);
  Real alpha = (r == 0) ? Real(1) : (r == 2 ? Real(-1) : Real(0));
  Real beta = (r == 1) ? Real(1) : (r == 3 ? Real(-1) : Real(0));
  Real sum = (n % 2 == 1) ? (alpha * A - beta * halfpi) * T
                          : (beta * A + alpha * halfpi) * T;
  Real tp(1);  // t^k/k!
  Real eps = pow2(-(wp() + 4));
  int small = 0;
  for (long k = 0;; ++k) {
    if (k > 0) tp = tp * t / k;
    if (k == n - 1) continue;
    bool want = (n % 2 == 1) ? (k % 2 == 0) : (k % 2 == 1);
    if (!want) continue;
    long q = (n % 2 == 1) ? k / 2 : (k - 1) / 2;
    Real term = zeta_int(n - k) * tp;
    if (q % 2) term = -term;
    sum += term;
    if (k > n + 2) {
      if (abs(term) <= eps * max(Real(1), abs(sum))) {
        if (++small >= 2) break;
      } else {
        small = 0;
      }
    }
    charge_terms(k);
  }
  return sgn > 0 ? sum : -sum;
}

// Si(x); power series below (P+G) ln 2, asymptotic expansion above
inline Real sin_integral(const Real& x) {
  if (x.sign() < 0) return -sin_integral(-x);
  if (x.is_zero()) return Real(0);
  double xd = x.to_double();
  double cut = double(wp() + 10) * 0.6931471805599453;
  if (xd <= cut) {
    PrecisionScope ps(wp() + long(xd * 1.4426950408889634) + 24);
    Real x2 = sqr(x);
    Real p = x;  // x^{2k+1}/(2k+1)!
    Real sum = x;
    Real eps = pow2(-(wp() + 4));
    for (long k = 1;; ++k) {
      charge_terms(k);
      p = -p * x2 / ((2 * k) * (2 * k + 1));
      Real t = p / (2 * k + 1);
      sum += t;
      if (abs(t) < eps && double(2 * k) > xd) break;
    }
    return sum;
  }
  PrecisionScope ps(wp() + 16);
  Real f(0), g(0);
  Real inv = 1 / x;
  Real inv2 = sqr(inv);
  Real tf = inv;         // (2k)!/x^{2k+1}
  Real tg = inv2;        // (2k+1)!/x^{2k+2}
  Real eps = pow2(-(wp() + 4));
  for (long k = 0;; ++k) {
    charge_terms(k);
    if (k % 2) {
      f -= tf;
      g -= tg;
    } else {
      f += tf;
      g += tg;
    }
    if (abs(tf) < eps && abs(tg) < eps) break;
    Real ntf = tf * inv2 * ((2 * k + 1) * (2 * k + 2));
    Real ntg = tg * inv2 * ((2 * k + 2) * (2 * k + 3));
    if (ntf > tf) throw PrecisionUnstable("Si asymptotic expansion exhausted");
    tf = ntf;
    tg = ntg;
  }
  return K::pi() / 2 - f * cos(x) - g * sin(x);
}

// log G(x) = (x-1) log Gamma(x) + zeta'(-1) - zeta'(-1, x)
inline Real barnes_log_g(const Real& x) {
  if (!(x.sign() > 0) || x > Real(2))
    throw DomainError("barnes_log_g needs 0 < x <= 2");
  PrecisionScope ps(wp() + 8);
  if (x == Real(1) || x == Real(2)) return Real(0);
  return (x - 1) * log_gamma(x) + K::zeta_prime_m1() -
         hurwitz_zeta_deriv(Real(-1), x, 1);
}

// sin(pi x) for x in (0,1), using the complement xc = 1 - x near 1
inline Real sin_pi(const Real& x, const Real& xc) {
  return x < xc ? sin(K::pi() * x) : sin(K::pi() * xc);
}
inline Real cot_pi(const Real& x, const Real& xc) {
  return x < xc ? cot(K::pi() * x) : -cot(K::pi() * xc);
}

// N-term partial sum of Kummer's Fourier series for log Gamma on (0,1)
inline Real kummer_partial(const Real& x, long N) {
  PrecisionScope ps(wp() + 16);
  Real pi = K::pi();
  Real g = K::euler();
  Real two_pi = 2 * pi;
  Real sum = log(pi) / 2 - log(sin(pi * x)) / 2;
  for (long n = 1; n <= N; ++n) {
    Real w = two_pi * n;
    sum += (g + log(w)) * sin(w * x) / (pi * n);
  }
  return sum;
}

}  // namespace detail

// ---- public surface ----

#define ZF_PUBLIC_EVAL(expr)                  \
  ContextScope zf_cs(ctx);                    \
  Real zf_v = (expr);                         \
  return round_to(zf_v, ctx.target_bits)

inline Real log_gamma(const PrecisionContext& ctx, const Real& x) {
  ZF_PUBLIC_EVAL(detail::log_gamma(x));
}
inline Real polygamma(const PrecisionContext& ctx, long k, const Real& x) {
  ZF_PUBLIC_EVAL(detail::polygamma(k, x));
}
inline Real gamma_deriv(const PrecisionContext& ctx, long j, const Real& x) {
  ZF_PUBLIC_EVAL(detail::gamma_deriv(j, x));
}
inline Real zeta(const PrecisionContext& ctx, const Real& s) {
  ZF_PUBLIC_EVAL(detail::zeta(s));
}
inline Real zeta_alt(const PrecisionContext& ctx, const Real& s) {
  ZF_PUBLIC_EVAL(detail::zeta_alt(s));
}
inline Real hurwitz_zeta(const PrecisionContext& ctx, const Real& s,
                         const Real& a) {
  ZF_PUBLIC_EVAL(detail::hurwitz_zeta(s, a));
}
inline Real hurwitz_zeta_alt(const PrecisionContext& ctx, const Real& s,
                             const Real& u) {
  ZF_PUBLIC_EVAL(detail::hurwitz_zeta_alt(s, u));
}
inline Real hurwitz_zeta_sderiv(const PrecisionContext& ctx, const Real& s,
                                const Real& a) {
  if (!(s < Real(1))) throw DomainError("hurwitz_zeta_sderiv needs s < 1");
  if (!(a.sign() > 0) || a > Real(1))
    throw DomainError("hurwitz_zeta_sderiv needs 0 < a <= 1");
  ZF_PUBLIC_EVAL(detail::hurwitz_zeta_deriv(s, a, 1));
}
inline Real hurwitz_zeta_deriv(const PrecisionContext& ctx, const Real& s,
                               const Real& a, int order) {
  ZF_PUBLIC_EVAL(detail::hurwitz_zeta_deriv(s, a, order));
}
inline Real zeta_prime(const PrecisionContext& ctx, const Real& s) {
  if (!(s > Real(1))) throw DomainError("zeta_prime needs s > 1");
  ZF_PUBLIC_EVAL(detail::zeta_deriv(s, 1));
}
inline Real zeta_deriv(const PrecisionContext& ctx, const Real& s, int order) {
  ZF_PUBLIC_EVAL(detail::zeta_deriv(s, order));
}
inline Real dirichlet_beta(const PrecisionContext& ctx, const Real& s) {
  ZF_PUBLIC_EVAL(detail::dirichlet_beta(s));
}
inline Real polylog(const PrecisionContext& ctx, long s, const Real& x) {
  ZF_PUBLIC_EVAL(detail::polylog(s, x));
}
inline Real clausen(const PrecisionContext& ctx, long n, const Real& theta) {
  ZF_PUBLIC_EVAL(detail::clausen(n, theta));
}
inline Real sin_integral(const PrecisionContext& ctx, const Real& x) {
  if (x.sign() < 0) throw DomainError("sin_integral needs x >= 0");
  ZF_PUBLIC_EVAL(detail::sin_integral(x));
}
inline Real barnes_log_g(const PrecisionContext& ctx, const Real& x) {
  ZF_PUBLIC_EVAL(detail::barnes_log_g(x));
}
inline Real bernoulli_poly(const PrecisionContext& ctx, long n, const Real& x) {
  ZF_PUBLIC_EVAL(detail::bernoulli_poly_real(n, x));
}
inline Real kummer_partial(const PrecisionContext& ctx, const Real& x, long N) {
  ZF_PUBLIC_EVAL(detail::kummer_partial(x, N));
}

}  // namespace zf
