#pragma once

// Euler's transformation of an alternating series sum (-1)^n a_n.

#include <zetaforge/real.hpp>

#include <functional>
#include <vector>

namespace zf::detail {

// a(n) is sampled at a raised precision; the difference table loses about one
// bit per row, so the raise matches the row count.
inline Real euler_transform_impl(const std::function<Real(long)>& a,
                                 bool require_monotone) {
  const long out = wp();
  long K = out + 40;
  for (int attempt = 0; attempt < 4; ++attempt, K *= 2) {
    charge_terms(K);
    PrecisionScope ps(out + K + 32);
    std::vector<Real> d(size_t(K) + 1);
    for (long n = 0; n <= K; ++n) d[n] = a(n);
    if (require_monotone) {
      for (long n = 0; n < K; ++n)
        if (d[n].sign() < 0 || d[n] < d[n + 1])
          throw DomainError("euler transform needs positive decreasing terms");
    }
    Real S(0);
    Real eps = pow2(-(out + 6));
    int small = 0;
    bool done = false;
    for (long k = 0; k <= K; ++k) {
      Real term = ldexp(d[0], -(k + 1));
      S += term;
      if (abs(term) <= eps * max(Real(1), abs(S))) {
        if (++small >= 3) {
          done = true;
          break;
        }
      } else {
        small = 0;
      }
      for (long j = 0; j + k < K; ++j) d[j] -= d[j + 1];
    }
    if (done) {
      PrecisionScope back(out);
      return round_to(S, out);
    }
  }
  throw TermLimitExceeded("euler transform did not settle");
}

}  // namespace zf::detail
