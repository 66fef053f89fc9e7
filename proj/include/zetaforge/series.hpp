#pragma once

// Summation engines and the Euler-sum / generating-function evaluators.

#include <zetaforge/accel.hpp>
#include <zetaforge/combinatoric.hpp>
#include <zetaforge/hurwitz.hpp>
#include <zetaforge/mpcore.hpp>
#include <zetaforge/quad.hpp>
#include <zetaforge/real.hpp>
#include <zetaforge/specfun.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace zf {

class DivergentSeries : public DomainError {
 public:
  using DomainError::DomainError;
};

enum class SeriesKind { PositiveDecreasing, Alternating, GeometricWeighted };

struct SeriesSpec {
  std::function<Real(long)> term;
  SeriesKind kind = SeriesKind::PositiveDecreasing;
  // bound on |sum_{k>n} term(k)| given the partial sum through n
  std::function<Real(long, const Real&)> tail_bound;
  // optional estimate of the remainder added once the bound is met
  std::function<Real(long)> tail_estimate;
  long start = 1;
};

namespace detail {

inline Real sum_series(const SeriesSpec& spec) {
  if (!spec.term) throw DomainError("series has no term function");
  if (!spec.tail_bound && spec.kind != SeriesKind::Alternating)
    throw DomainError("series kind needs a tail bound");
  const long limit = current_ctx().max_terms;
  PrecisionScope ps(wp() + 8);
  Real eps = pow2(-(wp()));
  Real S(0);
  Real next = spec.term(spec.start);
  for (long n = spec.start;; ++n) {
    if (n - spec.start >= limit) charge_terms(n - spec.start + 1);
    Real t = next;
    S += t;
    next = spec.term(n + 1);
    Real bound = spec.tail_bound ? spec.tail_bound(n, S) : abs(next);
    if (bound <= eps * max(Real(1), abs(S))) {
      if (spec.tail_estimate) S += spec.tail_estimate(n);
      return S;
    }
  }
}

// ---- harmonic numbers on the fly ----

// caches H_n^{(r)} for increasing n at the working precision
class HarmonicStream {
 public:
  explicit HarmonicStream(int rmax) : h_(size_t(rmax) + 1) {
    for (auto& v : h_) v.push_back(Real(0));
  }
  const Real& get(int r, long n) {
    auto& v = h_[size_t(r)];
    while (long(v.size()) <= n) {
      long k = long(v.size());
      v.push_back(v.back() + 1 / pow(Real(k), long(r)));
    }
    return v[size_t(n)];
  }

 private:
  std::vector<std::vector<Real>> h_;
};

// ---- asymptotic expansions in log n and 1/n ----

// sum_{l,j} c[l][j] log^l(n) n^{-j}
struct LogLaurent {
  int J;
  std::vector<std::vector<Real>> c;
  LogLaurent(int maxl, int J_) : J(J_), c(size_t(maxl) + 1) {
    for (auto& row : c) row.assign(size_t(J) + 1, Real(0));
  }
  int maxl() const { return int(c.size()) - 1; }
};

inline LogLaurent operator*(const LogLaurent& a, const LogLaurent& b) {
  LogLaurent r(a.maxl() + b.maxl(), a.J);
  for (int la = 0; la <= a.maxl(); ++la)
    for (int ja = 0; ja <= a.J; ++ja) {
      if (a.c[la][ja].is_zero()) continue;
      for (int lb = 0; lb <= b.maxl(); ++lb)
        for (int jb = 0; ja + jb <= a.J; ++jb) {
          if (b.c[lb][jb].is_zero()) continue;
          r.c[la + lb][ja + jb] += a.c[la][ja] * b.c[lb][jb];
        }
    }
  return r;
}

// H_n^{(p)} as n -> infinity
inline LogLaurent harmonic_asymptotic(int p, int J) {
  if (p == 1) {
    LogLaurent e(1, J);
    e.c[0][0] = K::euler();
    e.c[1][0] = Real(1);
    if (J >= 1) e.c[0][1] = ldexp(Real(1), -1);
    for (int k = 1; 2 * k <= J; ++k)
      e.c[0][2 * k] = -bernoulli_real(2 * k) / (2 * k);
    return e;
  }
  LogLaurent e(0, J);
  e.c[0][0] = K::zeta(p);
  if (p - 1 <= J) e.c[0][p - 1] -= Real(1) / (p - 1);
  if (p <= J) e.c[0][p] += ldexp(Real(1), -1);
  Real rising(p);  // (p)_{2k-1}
  Real fact(2);    // (2k)!
  for (int k = 1; p + 2 * k - 1 <= J; ++k) {
    e.c[0][p + 2 * k - 1] -= bernoulli_real(2 * k) * rising / fact;
    rising *= Real(long(p + 2 * k - 1)) * long(p + 2 * k);
    fact *= Real(long(2 * k + 1)) * long(2 * k + 2);
  }
  return e;
}

// sum_{n>N} n^{-q} sum c[l][j] log^l n n^{-j}
inline Real laurent_tail(const LogLaurent& e, const Real& q, long N) {
  Real total(0);
  Real a(N + 1);
  for (int j = 0; j <= e.J; ++j) {
    int top = -1;
    for (int l = 0; l <= e.maxl(); ++l)
      if (!e.c[l][j].is_zero()) top = l;
    if (top < 0) continue;
    auto d = hurwitz_derivs(q + j, a, top + 1);
    for (int l = 0; l <= top; ++l) {
      Real t = e.c[l][j] * d[l];
      total += (l % 2) ? -t : t;
    }
  }
  return total;
}

inline long euler_sum_cutoff() { return std::max<long>(64, wp()); }

inline int laurent_order(long N) {
  return int(std::ceil(double(wp() + 16) / std::log2(double(N)))) + 2;
}

// sum_{n>N} prod_i H_n^{(p_i)} / n^q
inline Real euler_tail(const std::vector<int>& ps, const Real& q, long N) {
  PrecisionScope ps_(wp() + 16);
  int J = laurent_order(N);
  LogLaurent e(0, J);
  e.c[0][0] = Real(1);
  for (int p : ps) e = e * harmonic_asymptotic(p, J);
  return laurent_tail(e, q, N);
}

// sum_{n>=1} prod_i H_n^{(p_i)} / n^q
inline Real euler_sum_product(const std::vector<int>& ps, const Real& q) {
  if (!(q > Real(1))) throw DivergentSeries("euler sum needs q > 1");
  for (int p : ps)
    if (p < 1) throw DomainError("harmonic order must be >= 1");
  long N = euler_sum_cutoff();
  PrecisionScope ps_(wp() + 16);
  int rmax = *std::max_element(ps.begin(), ps.end());
  HarmonicStream hs(rmax);
  bool int_q = q.is_integer();
  long qi = int_q ? q.to_long() : 0;
  Real S(0);
  for (long n = 1; n <= N; ++n) {
    Real prod(1);
    for (int p : ps) prod *= hs.get(p, n);
    S += prod / (int_q ? pow(Real(n), qi) : pow(Real(n), q));
  }
  return S + euler_tail(ps, q, N);
}

// ---- power series with harmonic coefficients ----

// sum_{n>=1} a(n) x^n; a is called with increasing n
inline Real power_series(const std::function<Real(long)>& a, const Real& x) {
  if (x.is_zero()) return Real(0);
  Real bound = Real(3) / 4;
  if (x >= Real(1)) throw DomainError("power series needs x < 1");
  if (x < Real(-1)) throw DomainError("power series needs x >= -1");
  if (x.sign() < 0 && -x > bound) {
    // Euler's transformation: sum_m b_m z^m = sum_k z^k/(1-z)^{k+1} D^k b_0
    const long out = wp();
    long Kn = out + 48;
    PrecisionScope ps(out + Kn + 32);
    Real z = x;
    std::vector<Real> d(size_t(Kn) + 1);
    for (long m = 0; m <= Kn; ++m) d[m] = a(m + 1);
    Real r = z / (1 - z);
    Real pk = 1 / (1 - z);
    Real S(0);
    Real eps = pow2(-(out + 6));
    int small = 0;
    for (long k = 0; k <= Kn; ++k) {
      Real t = pk * d[0];
      S += t;
      if (abs(t) <= eps * max(Real(1), abs(S))) {
        if (++small >= 3) return x * S;
      } else {
        small = 0;
      }
      for (long j = 0; j + k < Kn; ++j) d[j] = d[j + 1] - d[j];
      pk *= r;
    }
    throw TermLimitExceeded("Euler transformation of power series");
  }
  PrecisionScope ps(wp() + 16);
  Real eps = pow2(-(wp()));
  Real S(0), xp(1);
  int small = 0;
  const long limit = current_ctx().max_terms;
  for (long n = 1;; ++n) {
    if (n > limit) charge_terms(n);
    xp *= x;
    Real t = a(n) * xp;
    S += t;
    if (abs(t) <= eps * max(Real(1), abs(S))) {
      if (++small >= 3) return S;
    } else {
      small = 0;
    }
  }
}

// ---- Euler transform for alternating sums (public form) ----

inline Real euler_transform(const std::function<Real(long)>& a) {
  return euler_transform_impl(a, true);
}

// ---- binomial (Hasse) transform ----

struct BinomialTransformSpec {
  std::function<Real(long)> f;  // f(k) for k >= k0, zero below
  long k0 = 0;
  int scale_shift = 1;         // weight 2^{-n-scale_shift}
  bool alternating = true;     // f changes sign so the inner sums cancel
  std::function<Real(long)> f_tail;  // sum_{k>K} f(k), needed when !alternating
};

// T_n = 2^{-n} sum_k C(n,k) f(k) for n = 0..M by repeated averaging
inline std::vector<Real> binomial_rows(const BinomialTransformSpec& spec,
                                       long M) {
  std::vector<Real> e(size_t(M) + 1);
  for (long k = 0; k <= M; ++k)
    e[k] = k < spec.k0 ? Real(0) : spec.f(k);
  std::vector<Real> T(size_t(M) + 1);
  for (long n = 0; n <= M; ++n) {
    T[n] = e[0];
    for (long j = 0; j + n < M; ++j) e[j] = ldexp(e[j] + e[j + 1], -1);
  }
  return T;
}

inline Real binomial_transform_sum(const BinomialTransformSpec& spec) {
  const long out = wp();
  PrecisionScope ps(out + 24);
  Real eps = pow2(-(out + 4));
  Real outer = ldexp(Real(1), 1 - spec.scale_shift);  // sum_{n>=k} C(n,k) 2^{-n-s}
  if (!spec.alternating) {
    // decay exponent of T_n from two samples
    long M = 128;
    auto T = binomial_rows(spec, M);
    Real a = abs(T[M / 2]), b = abs(T[M]);
    if (b.is_zero()) return Real(0);
    double rate = (log(a) - log(b)).to_double() / std::log(2.0);
    if (rate < 1.25)
      throw DivergentSeries(
          "binomial transform diverges: outer terms decay like n^-" +
          std::to_string(rate));
    if (!spec.f_tail)
      throw DomainError("positive binomial transform needs a tail for f");
    long Kc = std::max<long>(64, out);
    Real S(0);
    for (long k = spec.k0; k <= Kc; ++k) S += spec.f(k);
    S += spec.f_tail(Kc);
    return outer * S;
  }
  long M = 2 * out + 64;
  for (int attempt = 0; attempt < 3; ++attempt, M *= 2) {
    charge_terms(M);
    auto T = binomial_rows(spec, M);
    Real S(0);
    int small = 0;
    for (long n = 0; n <= M; ++n) {
      Real t = ldexp(T[n], -spec.scale_shift);
      S += t;
      if (abs(t) <= eps * max(Real(1), abs(S))) {
        if (++small >= 3) return S;
      } else {
        small = 0;
      }
    }
    // slow decay: check whether it is divergent rather than just slow
    Real a = abs(T[M / 2]), b = abs(T[M]);
    if (!b.is_zero()) {
      double rate = (log(a) - log(b)).to_double() / std::log(2.0);
      if (rate < 1.25)
        throw DivergentSeries("binomial transform diverges");
    }
  }
  throw TermLimitExceeded("binomial transform did not settle");
}

// ---- weighted Euler sums ----

inline Real w_direct(const std::function<Real(HarmonicStream&, long)>& coef,
                     const Real& x) {
  HarmonicStream hs(3);
  return power_series([&](long n) { return coef(hs, n); }, x);
}

inline Real w1() {
  return w_direct([](HarmonicStream& h, long n) { return h.get(2, n) / n; },
                  ldexp(Real(1), -1));
}
inline Real w2() {
  return w_direct([](HarmonicStream& h, long n) { return h.get(3, n) / n; },
                  ldexp(Real(1), -1));
}
inline Real w3() {
  return w_direct([](HarmonicStream& h, long n) { return h.get(3, n) / n; },
                  -ldexp(Real(1), -1));
}

inline Real positive_harmonic_transform(int r, int s, int shift) {
  BinomialTransformSpec spec;
  auto hs = std::make_shared<HarmonicStream>(r);
  spec.f = [hs, r, s](long k) { return hs->get(r, k) / pow(Real(k), long(s)); };
  spec.k0 = 1;
  spec.scale_shift = shift;
  spec.alternating = false;
  spec.f_tail = [r, s](long K) { return euler_tail({r}, Real(s), K); };
  return binomial_transform_sum(spec);
}

inline Real w4() { return positive_harmonic_transform(3, 3, 0); }
inline Real w5() { return positive_harmonic_transform(2, 2, 1); }
inline Real w6() { return positive_harmonic_transform(2, 3, 1); }
inline Real w7() { return positive_harmonic_transform(2, 4, 1); }

// (1/3) sum_n 1/(n+1) sum_k C(n,k) (-1)^k H_{k+1}^{(2)}/(k+1)^3
inline Real w8() {
  const long wb = wp();
  const long N = 2 * wb;
  Real direct;
  {
    PrecisionScope ps(wb + N + 32);
    std::vector<Real> d(size_t(N) + 1);
    Real h2(0);
    for (long k = 0; k <= N; ++k) {
      Real kp(k + 1);
      h2 += 1 / sqr(kp);
      d[k] = h2 / pow(kp, 3L);
    }
    Real S(0);
    for (long n = 0; n <= N; ++n) {
      S += d[0] / (n + 1);
      for (long j = 0; j + n < N; ++j) d[j] -= d[j + 1];
    }
    direct = S;
  }
  // tail n > N: a_n/(n+1) = sum_m B(m, n+1)[c1_m + c2_m(psi(n+m+1) - psi(m))]/(n+1)
  // expanded in x = 1/(n+1) with a separate log(n+1) part
  PrecisionScope ps(wb + 32);
  Real nu0(N + 2);
  double lnu = std::log2(double(N + 2));
  int mmax = 1;
  {
    double lf = 0;  // log2 (m-1)!
    for (int m = 1; m < 400; ++m) {
      if (m > 1) lf += std::log2(double(m - 1));
      double mag = lf - double(m + 1) * lnu + std::log2(4.0 * lnu + 8);
      mmax = m;
      if (mag < -double(wb + 16)) break;
    }
  }
  const int J = mmax + 2;
  using Poly = std::vector<Real>;
  auto mul = [J](const Poly& a, const Poly& b) {
    Poly r(size_t(J) + 1);
    for (int i = 0; i <= J; ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; i + j <= J; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
  };
  auto geom = [J](long i) {  // 1/(1 + i x)
    Poly r(size_t(J) + 1);
    Real t(1);
    for (int k = 0; k <= J; ++k) {
      r[k] = t;
      t *= -i;
    }
    return r;
  };
  Poly psi_m_log(size_t(J) + 1);  // psi(nu) - log nu
  if (J >= 1) psi_m_log[1] = -ldexp(Real(1), -1);
  for (int k = 1; 2 * k <= J; ++k)
    psi_m_log[2 * k] = -bernoulli_real(2 * k) / (2 * k);
  Real z3 = K::zeta(3), z4 = K::zeta(4), g = K::euler();
  Poly alpha(size_t(J) + 1), beta(size_t(J) + 1);
  Poly prodinv(size_t(J) + 1);  // prod_{i=1}^{m-1} 1/(1+ix)
  prodinv[0] = Real(1);
  Poly Q = psi_m_log;           // psi(nu + m) - log nu
  Real fact(1);                 // (m-1)!
  for (int m = 1; m <= mmax; ++m) {
    if (m > 1) {
      fact *= long(m - 1);
      prodinv = mul(prodinv, geom(m - 1));
    }
    // add x/(1 + (m-1) x) to move psi(nu + m - 1) to psi(nu + m)
    {
      Poly gm = geom(m - 1);
      for (int k = J; k >= 1; --k) Q[k] += gm[k - 1];
    }
    Real c1, c2;
    if (m == 1) {
      c2 = 2 * z3;
      c1 = -3 * z4;
    } else {
      c2 = 1 / pow(Real(m - 1), 3L);
      c1 = 3 / pow(Real(m - 1), 4L);
    }
    Real psim = -g + Real(harmonic(m - 1));
    Real dm = c1 - c2 * psim;
    // P = (m-1)! x^{m+1} prodinv
    Poly P(size_t(J) + 1);
    for (int k = 0; k + m + 1 <= J; ++k) P[k + m + 1] = fact * prodinv[k];
    Poly PQ = mul(P, Q);
    for (int k = 0; k <= J; ++k) {
      alpha[k] += P[k] * dm + c2 * PQ[k];
      beta[k] += c2 * P[k];
    }
  }
  Real tail(0);
  for (int j = 2; j <= J; ++j) {
    if (alpha[j].is_zero() && beta[j].is_zero()) continue;
    auto dz = hurwitz_derivs(Real(j), nu0, 2);
    tail += alpha[j] * dz[0] - beta[j] * dz[1];
  }
  return (direct + tail) / 3;
}

// sum_{n>=1} (1/n^3) sum_{k<=n} 1/(k 2^k)
inline Real w9() {
  long N = wp() + 16;
  PrecisionScope ps(wp() + 16);
  Real inner(0), S(0), p(1);
  for (long n = 1; n <= N; ++n) {
    p = ldexp(p, -1);
    inner += p / n;
    S += inner / pow(Real(n), 3L);
  }
  // inner_n = log 2 - O(2^-n / n) beyond N
  return S + K::log2() * hurwitz_value(Real(3), Real(N + 1));
}

inline Real w10() {
  return ldexp(
      w_direct(
          [](HarmonicStream& h, long n) {
            return (sqr(h.get(1, n)) + h.get(2, n)) / n;
          },
          ldexp(Real(1), -1)),
      -1);
}

inline Real weighted_euler_sum(const std::string& fam) {
  if (fam == "W1") return w1();
  if (fam == "W2") return w2();
  if (fam == "W3") return w3();
  if (fam == "W4") return w4();
  if (fam == "W5") return w5();
  if (fam == "W6") return w6();
  if (fam == "W7") return w7();
  if (fam == "W8") return w8();
  if (fam == "W9") return w9();
  if (fam == "W10") return w10();
  throw DomainError("unknown weighted family: " + fam);
}

// printed closed forms
inline Real weighted_closed(const std::string& fam) {
  using K::zeta;
  Real l2 = K::log2();
  if (fam == "W1") return Real(5) / 8 * zeta(3);
  if (fam == "W2")
    return zeta(2) * sqr(l2) - Real(7) / 8 * zeta(3) * l2 + K::li_half(4) -
           pow(l2, 4) / 6;
  if (fam == "W3")
    return K::li_half(4) + K::li_half(3) * l2 - sqr(K::li_half(2)) / 2;
  if (fam == "W4") return sqr(zeta(3)) + zeta(6);
  if (fam == "W5") return sqr(zeta(2)) - Real(3) / 4 * zeta(4);
  if (fam == "W6") return 2 * zeta(2) * zeta(3) - Real(9) / 2 * zeta(5);
  if (fam == "W7")
    return zeta(2) * zeta(4) + sqr(zeta(3)) - Real(25) / 12 * zeta(6);
  if (fam == "W8")
    return Real(4) / 3 * sqr(zeta(3)) - Real(29) / 12 * zeta(6) +
           zeta(2) * zeta(4);
  if (fam == "W9")
    return Real(15) / 8 * zeta(3) * l2 - zeta(2) * sqr(l2) + pow(l2, 4) / 6;
  if (fam == "W10") return zeta_alt(Real(3));
  throw DomainError("unknown weighted family: " + fam);
}

// values that hold where the printed form does not
inline Real weighted_corrected(const std::string& fam) {
  using K::zeta;
  Real l2 = K::log2();
  if (fam == "W2")
    return K::li_half(4) + K::li_half(3) * l2 - sqr(K::li_half(2)) / 2;
  if (fam == "W3") {
    Real mh = -ldexp(Real(1), -1);
    Real L2 = polylog(2, mh), L3 = polylog(3, mh), L4 = polylog(4, mh);
    return L4 - L3 * log(Real(3) / 2) - sqr(L2) / 2;
  }
  if (fam == "W6") return 3 * zeta(2) * zeta(3) - Real(9) / 2 * zeta(5);
  if (fam == "W8") return Real(2) / 3 * sqr(zeta(3));
  if (fam == "W9")
    return zeta(3) * l2 / 8 + zeta(2) * sqr(l2) / 4 - pow(l2, 4) / 24 +
           sqr(zeta(2)) / 8;
  throw DomainError("no corrected form for " + fam);
}

inline bool weighted_has_correction(const std::string& fam) {
  return fam == "W2" || fam == "W3" || fam == "W6" || fam == "W8" ||
         fam == "W9";
}

// ---- generating functions ----

struct GenArgs {
  int p = 2, q = 2;  // used by G7
};

inline Real gen_series(const std::string& fam, const Real& x, GenArgs ga = {}) {
  HarmonicStream hs(std::max(4, ga.p));
  auto H = [&](int r, long n) -> const Real& { return hs.get(r, n); };
  if (fam == "G1")
    return power_series([&](long n) { return H(1, n) / n; }, x);
  if (fam == "G2") {
    if (!(x.sign() > 0) || !(x < Real(1))) throw DomainError("G2 needs 0 < x < 1");
    return power_series([&](long n) { return H(2, n) / n; }, x);
  }
  if (fam == "G3")
    return power_series(
        [&](long n) { return (H(2, n) + sqr(H(1, n))) / n; }, x);
  if (fam == "G4")
    return power_series(
        [&](long n) {
          Real h = H(1, n);
          return (pow(h, 3L) + 3 * h * H(2, n) + 2 * H(3, n)) / n;
        },
        x);
  if (fam == "G5") {
    // argument is t; the series runs in 1 - t
    if (!(x.sign() > 0) || x > Real(2)) throw DomainError("G5 needs 0 < t <= 2");
    if (x == Real(2)) throw DomainError("G5 at t = 2 is outside the admitted range");
    return power_series([&](long n) { return H(3, n) / n; }, 1 - x);
  }
  if (fam == "G6") {
    if (!(x.sign() > 0) || x > Real(1)) throw DomainError("G6 needs 0 < x <= 1");
    if (x == Real(1)) return euler_sum_product({1, 1}, Real(2));
    return power_series([&](long n) { return sqr(H(1, n)) / pow(Real(n), 2L); },
                        x);
  }
  if (fam == "G7") {
    if (abs(x) > Real(3) / 4) throw DomainError("G7 needs |x| <= 3/4");
    int p = ga.p, q = ga.q;
    if (p < 2 || q < 1) throw DomainError("G7 needs p >= 2 and q >= 1");
    Real a = power_series([&](long n) { return H(p, n) / pow(Real(n), long(q)); },
                          x);
    Real b = polylog(q, x) * K::zeta(p);
    // third sum: direct to N, tail Li_q(x) zeta(p, N+1)
    double ax = abs(x).to_double();
    long N = ax == 0 ? 1 : long(std::ceil(double(wp() + 16) / -std::log2(ax))) + 4;
    PrecisionScope ps(wp() + 16);
    Real inner(0), xp(1), c(0);
    for (long n = 1; n <= N; ++n) {
      xp *= x;
      inner += xp / pow(Real(n), long(q));
      c += inner / pow(Real(n), long(p));
    }
    c += polylog(q, x) * hurwitz_value(Real(p), Real(N + 1));
    return a - b + c;
  }
  throw DomainError("unknown generating-function family: " + fam);
}

inline Real gen_closed(const std::string& fam, const Real& x, GenArgs ga = {}) {
  using K::zeta;
  auto landen = [&]() {
    if (!(x < Real(1))) throw DomainError("closed form needs x < 1");
    return -x / (1 - x);
  };
  if (fam == "G1") return -polylog(2, landen());
  if (fam == "G3") return -2 * polylog(3, landen());
  if (fam == "G4") return -6 * polylog(4, landen());
  if (fam == "G2") {
    Real y = 1 - x;
    return 2 * polylog(3, y) - 2 * zeta(3) + polylog(3, x) -
           log(y) * (polylog(2, y) + zeta(2));
  }
  if (fam == "G5") {
    Real y = 1 - x;
    return polylog(4, y) - polylog(3, y) * log(x) - sqr(polylog(2, y)) / 2;
  }
  if (fam == "G6") {
    Real l2 = polylog(2, x);
    Real base = polylog(4, x) + sqr(l2) / 2;
    if (x == Real(1)) return base + 2 * zeta(4);
    Real y = 1 - x;
    Real ly = log(y);
    Real br = pow(ly, 3L) * log(x) + 3 * sqr(ly) * polylog(2, y) -
              6 * ly * polylog(3, y) + 6 * polylog(4, y) - 6 * zeta(4);
    return base - br / 3;
  }
  if (fam == "G7") return polylog(ga.p + ga.q, x);
  throw DomainError("unknown generating-function family: " + fam);
}

// ---- Knuth's harmonic generating function ----

// sum H_n x^n / n^s by direct summation (or the Euler-sum engine at x = 1)
inline Real knuth_hsum_direct(long s, const Real& x) {
  if (x == Real(1)) return euler_sum_product({1}, Real(s));
  HarmonicStream hs(1);
  return power_series(
      [&](long n) { return hs.get(1, n) / pow(Real(n), s); }, x);
}

// int_0^1 [Li_s(x) - Li_s(xu)]/(1-u) du
inline Real knuth_hsum(long s, const Real& x) {
  if (s < 2) throw DomainError("knuth_hsum needs s >= 2");
  if (abs(x) > Real(1)) throw DomainError("knuth_hsum needs |x| <= 1");
  if (x.is_zero()) return Real(0);
  Real lx = polylog(s, x);
  bool one = x == Real(1);
  return integrate01([&](const Real& u, const Real& uc) {
           Real li = one ? polylog_c(s, u, uc) : polylog(s, x * u);
           return (lx - li) / uc;
         })
      .value;
}

// ---- gamma series partial sums ----

inline Real gamma_series_partial(long N) {
  PrecisionScope ps(wp() + 16);
  Real e_inv = 1 / K::e();
  Real S = (1 - e_inv) / 2;
  Real two_pi2 = sqr(2 * K::pi());
  Real fact(1);  // (2n-1)!
  Real pw(1);    // (2 pi)^{2n}
  Real expsum(1);  // sum_{k<=2n-1} 1/k!
  Real kf(1);
  long kdone = 0;
  for (long n = 1; n <= N; ++n) {
    if (n > 1) fact *= Real(2 * n - 2) * (2 * n - 1);
    pw *= two_pi2;
    while (kdone < 2 * n - 1) {
      ++kdone;
      kf /= kdone;
      expsum += kf;
    }
    Real t = fact * K::zeta(2 * n) / pw * (1 - e_inv * expsum);
    S += (n % 2) ? t : -t;
  }
  return S;
}

// log n (zeta(2) - H_n^{(2)})
inline Real limit_law(long n) {
  PrecisionScope ps(wp() + 16);
  return log(Real(n)) * hurwitz_value(Real(2), Real(n + 1));
}

// sum Si(2 n pi)/n^3: direct to N, tail from the asymptotic series of Si
inline Real si_zeta_sum() {
  long wb = wp();
  long N = long(std::ceil(double(wb) * 0.6931471805599453 / (2 * M_PI))) + 2;
  PrecisionScope ps(wb + 16);
  Real pi = K::pi();
  Real S(0);
  for (long n = 1; n <= N; ++n)
    S += sin_integral(2 * pi * n) / pow(Real(n), 3L);
  // Si(2 n pi) = pi/2 - f(2 n pi), f(x) ~ sum (-1)^k (2k)!/x^{2k+1}
  Real tail = pi / 2 * hurwitz_value(Real(3), Real(N + 1));
  Real fact(1);
  Real eps = pow2(-(wb + 8));
  Real a(N + 1);
  for (long k = 0;; ++k) {
    if (k > 0) fact *= Real(2 * k - 1) * (2 * k);
    Real c = fact / pow(2 * pi, 2 * k + 1);
    Real t = c * hurwitz_value(Real(2 * k + 4), a);
    if (k % 2) tail += t; else tail -= t;
    if (abs(t) < eps) break;
    if (k > 4 * wb) throw PrecisionUnstable("Si tail expansion");
  }
  return S + tail;
}

}  // namespace detail

// ---- public surface ----

using detail::BinomialTransformSpec;
using detail::GenArgs;

inline Real sum_series(const PrecisionContext& ctx, const SeriesSpec& spec) {
  ZF_PUBLIC_EVAL(detail::sum_series(spec));
}

inline Real euler_transform(const PrecisionContext& ctx,
                            const std::function<Real(long)>& a) {
  ZF_PUBLIC_EVAL(detail::euler_transform(a));
}

inline Real binomial_transform_sum(const PrecisionContext& ctx,
                                   const BinomialTransformSpec& spec) {
  ZF_PUBLIC_EVAL(detail::binomial_transform_sum(spec));
}

inline Real euler_sum(const PrecisionContext& ctx, int p, const Real& q) {
  ZF_PUBLIC_EVAL(detail::euler_sum_product({p}, q));
}

inline Real euler_sum_product(const PrecisionContext& ctx,
                              const std::vector<int>& ps, const Real& q) {
  ZF_PUBLIC_EVAL(detail::euler_sum_product(ps, q));
}

inline std::pair<Real, Real> euler_sum_symmetric_check(
    const PrecisionContext& ctx, int p, int q) {
  if (p < 2 || q < 2) throw DomainError("symmetric relation needs p, q >= 2");
  ContextScope cs(ctx);
  Real lhs = detail::euler_sum_product({p}, Real(q)) +
             detail::euler_sum_product({q}, Real(p));
  Real rhs = K::zeta(p) * K::zeta(q) + K::zeta(p + q);
  return {round_to(lhs, ctx.target_bits), round_to(rhs, ctx.target_bits)};
}

inline Real weighted_euler_sum(const PrecisionContext& ctx,
                               const std::string& family) {
  ZF_PUBLIC_EVAL(detail::weighted_euler_sum(family));
}

inline Real gen_function(const PrecisionContext& ctx, const std::string& family,
                         const Real& x, detail::GenArgs ga = {}) {
  ZF_PUBLIC_EVAL(detail::gen_series(family, x, ga));
}

inline Real gen_function_closed(const PrecisionContext& ctx,
                                const std::string& family, const Real& x,
                                detail::GenArgs ga = {}) {
  ZF_PUBLIC_EVAL(detail::gen_closed(family, x, ga));
}

inline Real knuth_hsum(const PrecisionContext& ctx, long s, const Real& x) {
  ZF_PUBLIC_EVAL(detail::knuth_hsum(s, x));
}

inline std::pair<Real, Real> gamma_euler_bracket(const PrecisionContext& ctx,
                                                 long N) {
  if (N < 1) throw DomainError("gamma_euler_bracket needs N >= 1");
  ContextScope cs(ctx);
  Real a = detail::gamma_series_partial(N);
  Real b = detail::gamma_series_partial(N + 1);
  return {round_to(a, ctx.target_bits), round_to(b, ctx.target_bits)};
}

inline Real si_zeta_sum(const PrecisionContext& ctx) {
  ZF_PUBLIC_EVAL(detail::si_zeta_sum());
}

}  // namespace zf
