#pragma once

// Hurwitz zeta and its derivatives in s by Euler-Maclaurin summation carried
// out on truncated Taylor jets in s.  Works for every real s != 1.

#include <zetaforge/combinatoric.hpp>
#include <zetaforge/jet.hpp>
#include <zetaforge/real.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

namespace zf::detail {

// d^l/ds^l zeta(s, a) for l = 0 .. L-1, at the working precision.
inline std::vector<Real> hurwitz_derivs(const Real& s0, const Real& a, int L) {
  if (!(a.sign() > 0)) throw DomainError("hurwitz zeta needs a > 0");
  if (s0 == Real(1)) throw DomainError("hurwitz zeta has a pole at s = 1");

  const long out_prec = wp();
  const double sd = s0.to_double();
  const double xmin =
      std::max({20.0, 0.4 * double(out_prec), std::fabs(sd) + 10.0});
  // negative s: the direct sum grows like X^{1-s} before cancelling
  long extra = 16 + 4 * L;
  if (sd < 1) extra += long((1.0 - sd) * std::log2(xmin + 1.0)) + 8;
  PrecisionScope ps(out_prec + extra);

  const double ad = a.to_double();
  long N = ad >= xmin ? 0 : long(std::ceil(xmin - ad));
  charge_terms(N);

  const bool int_s = s0.is_integer() && std::fabs(sd) < 1e9;
  const long si = int_s ? s0.to_long() : 0;

  Jet acc(L);
  std::vector<Real> fact(size_t(L) + 1);
  fact[0] = Real(1);
  for (int l = 1; l <= L; ++l) fact[l] = fact[l - 1] * long(l);

  for (long k = 0; k < N; ++k) {
    Real t = a + k;
    Real base = int_s ? pow(t, -si) : exp(-s0 * log(t));
    acc[0] += base;
    if (L > 1) {
      Real mlt = -log(t);
      Real p = base;
      for (int l = 1; l < L; ++l) {
        p *= mlt;
        acc[l] += p / fact[l];
      }
    }
  }

  Real X = a + N;
  Real lX = log(X);
  Jet E(L);  // X^{-s}
  E[0] = int_s ? pow(X, -si) : exp(-s0 * lX);
  for (int l = 1; l < L; ++l) E[l] = E[l - 1] * (-lX) / long(l);

  Jet sm1 = Jet::variable(L, s0 - 1);
  Jet tail = (E * X) / sm1;
  tail += E * ldexp(Real(1), -1);

  Jet R = Jet::variable(L, s0);  // rising factorial (s)_{2j-1}
  Real invX2 = 1 / sqr(X);
  Real xp = 1 / X;  // X^{1-2j}
  Real fac2(2);     // (2j)!
  Real eps = pow2(-(wp() + 8));  // tail may be far larger than the result
  Real prev_mag;
  bool have_prev = false;
  for (long j = 1;; ++j) {
    if (j > 4000) throw PrecisionUnstable("hurwitz EM did not converge");
    Real c = Real(bernoulli(2 * j)) / fac2 * xp;
    Jet term = (R * E) * c;
    tail += term;
    Real mag = term.max_abs();
    Real ref = max(Real(1), tail.max_abs());
    if (mag <= eps * ref) break;
    if (have_prev && mag > prev_mag && j > 8)
      throw PrecisionUnstable("hurwitz EM tail diverging");
    prev_mag = mag;
    have_prev = true;
    // advance to j+1
    Jet f1 = Jet::variable(L, s0 + (2 * j - 1));
    Jet f2 = Jet::variable(L, s0 + 2 * j);
    R = R * f1 * f2;
    xp *= invX2;
    fac2 *= (2 * j + 1) * (2 * j + 2);
  }
  acc += tail;

  std::vector<Real> out(static_cast<size_t>(L));
  PrecisionScope back(out_prec);
  for (int l = 0; l < L; ++l) out[l] = round_to(acc[l] * fact[l], out_prec);
  return out;
}

inline Real hurwitz_value(const Real& s, const Real& a) {
  return hurwitz_derivs(s, a, 1)[0];
}

}  // namespace zf::detail
