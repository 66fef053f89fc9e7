#pragma once

// Exact rational machinery: harmonic numbers, binomials, Bernoulli numbers and
// the finite binomial/harmonic identities.

#include <gmpxx.h>

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace zf {

using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_q(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline Rational frac(const BigInt& p, const BigInt& q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return BigInt(0);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), (unsigned long)n, (unsigned long)k);
  return r;
}

inline Rational pow_q(const Rational& x, long e) {
  if (e < 0) return pow_q(Rational(1) / x, -e);
  Rational r(1), b(x);
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

// Table of H_n^{(r)} for 1 <= n <= n_max, 1 <= r <= r_max.
class HarmonicTable {
 public:
  HarmonicTable(long n_max, int r_max) : n_max_(n_max), r_max_(r_max) {
    rows_.assign(size_t(r_max) + 1, std::vector<Rational>(size_t(n_max) + 1));
    for (int r = 1; r <= r_max; ++r) {
      Rational h(0);
      rows_[r][0] = 0;
      for (long n = 1; n <= n_max; ++n) {
        BigInt d;
        mpz_ui_pow_ui(d.get_mpz_t(), (unsigned long)n, (unsigned long)r);
        h += Rational(1, d);
        rows_[r][n] = h;
      }
    }
  }
  long n_max() const { return n_max_; }
  int r_max() const { return r_max_; }
  const Rational& at(long n, int r) const { return rows_.at(r).at(n); }

 private:
  long n_max_;
  int r_max_;
  std::vector<std::vector<Rational>> rows_;
};

inline const HarmonicTable& default_harmonic_table() {
  static const HarmonicTable t(64, 6);
  return t;
}

inline Rational harmonic(long n, int r = 1) {
  if (n < 0 || r < 1) throw std::invalid_argument("harmonic: bad arguments");
  const auto& t = default_harmonic_table();
  if (n <= t.n_max() && r <= t.r_max()) return t.at(n, r);
  Rational h(0);
  for (long k = 1; k <= n; ++k) {
    BigInt d;
    mpz_ui_pow_ui(d.get_mpz_t(), (unsigned long)k, (unsigned long)r);
    h += Rational(1, d);
  }
  return h;
}

namespace detail {

// Even Bernoulli numbers from tangent numbers (integer-only recurrence).
class BernoulliStore {
 public:
  Rational get(long n) {
    if (n == 0) return Rational(1);
    if (n == 1) return make_q(-1, 2);
    if (n % 2) return Rational(0);
    long k = n / 2;
    {
      std::shared_lock lk(mu_);
      if (k < long(b2_.size())) return b2_[k];
    }
    std::unique_lock lk(mu_);
    if (k >= long(b2_.size())) fill(std::max(2 * k, 64L));
    return b2_[k];
  }

 private:
  void fill(long kmax) {
    std::vector<BigInt> T(size_t(kmax) + 1);
    T[1] = 1;
    for (long k = 2; k <= kmax; ++k) T[k] = (k - 1) * T[k - 1];
    for (long k = 2; k <= kmax; ++k)
      for (long j = k; j <= kmax; ++j)
        T[j] = (j - k) * T[j - 1] + (j - k + 2) * T[j];
    std::vector<Rational> b(size_t(kmax) + 1);
    b[0] = 1;
    for (long k = 1; k <= kmax; ++k) {
      BigInt p4;
      mpz_ui_pow_ui(p4.get_mpz_t(), 2, (unsigned long)(2 * k));
      Rational v(BigInt(2 * k) * T[k], p4 * (p4 - 1));
      v.canonicalize();
      b[k] = (k % 2) ? v : Rational(-v);
    }
    b2_ = std::move(b);
  }
  std::shared_mutex mu_;
  std::vector<Rational> b2_;
};

inline BernoulliStore& bernoulli_store() {
  static BernoulliStore s;
  return s;
}

}  // namespace detail

inline Rational bernoulli(long n) {
  if (n < 0) throw std::invalid_argument("bernoulli: negative index");
  return detail::bernoulli_store().get(n);
}

inline Rational bernoulli_poly(long n, const Rational& x) {
  Rational s(0), xp(1);
  // Horner-free form: sum C(n,k) B_k x^{n-k}, accumulated from k=n down
  for (long k = n; k >= 0; --k) {
    s += Rational(binomial(n, k)) * bernoulli(k) * xp;
    xp *= x;
  }
  return s;
}

// sum_{k=0}^n C(n,k) (-1)^k / (k+1)^p
inline Rational alt_binomial_sum(long n, int p) {
  Rational s(0);
  for (long k = 0; k <= n; ++k) {
    BigInt d;
    mpz_ui_pow_ui(d.get_mpz_t(), (unsigned long)(k + 1), (unsigned long)p);
    Rational t(binomial(n, k), d);
    t.canonicalize();
    if (k % 2) s -= t; else s += t;
  }
  return s;
}

// closed forms for p = 1, 2, 3
inline Rational alt_binomial_closed(long n, int p) {
  Rational inv = make_q(1, n + 1);
  switch (p) {
    case 1: return inv;
    case 2: return harmonic(n + 1) * inv;
    case 3: {
      Rational h = harmonic(n + 1);
      return (h * h + harmonic(n + 1, 2)) * inv / 2;
    }
  }
  throw std::invalid_argument("alt_binomial_closed: p must be 1..3");
}

// sum_{k=0}^n C(n,k)/(k+1) = (2^{n+1}-1)/(n+1)
inline Rational plain_binomial_reciprocal_sum(long n) {
  Rational s(0);
  for (long k = 0; k <= n; ++k) s += frac(binomial(n, k), k + 1);
  s.canonicalize();
  return s;
}
inline Rational plain_binomial_reciprocal_closed(long n) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, (unsigned long)(n + 1));
  return frac(p - 1, n + 1);
}

inline Rational larcombe_prefactor(long m, long n, int p) {
  static const long pre[5] = {0, 1, 1, 2, 6};
  return Rational(BigInt(pre[p] * m) * binomial(m + n, n));
}

// prefactor * m C(m+n,n) sum_k C(n,k)(-1)^k/(m+k)^p, prefactors 1,1,2,6
inline Rational larcombe_sum(long m, long n, int p) {
  if (m < 1 || p < 1 || p > 4)
    throw std::invalid_argument("larcombe_sum: need m>=1 and 1<=p<=4");
  Rational s(0);
  for (long k = 0; k <= n; ++k) {
    BigInt d;
    mpz_ui_pow_ui(d.get_mpz_t(), (unsigned long)(m + k), (unsigned long)p);
    Rational t(binomial(n, k), d);
    t.canonicalize();
    if (k % 2) s -= t; else s += t;
  }
  return larcombe_prefactor(m, n, p) * s;
}

inline Rational larcombe_closed(long m, long n, int p) {
  Rational s1(0), s2(0), s3(0);
  for (long k = m; k <= m + n; ++k) {
    s1 += make_q(1, k);
    s2 += Rational(1, BigInt(k) * k);
    s3 += Rational(1, BigInt(k) * k * k);
  }
  switch (p) {
    case 1: return Rational(1);
    case 2: return s1;
    case 3: return s1 * s1 + s2;
    case 4: return s1 * s1 * s1 + 3 * s1 * s2 + 2 * s3;
  }
  throw std::invalid_argument("larcombe_closed: p must be 1..4");
}

inline Rational reciprocal_binomial_sum(long n) {
  Rational s(0);
  for (long k = 0; k <= n; ++k) s += Rational(BigInt(1), binomial(n, k));
  s.canonicalize();
  return s;
}

// (n+1)/2^{n+1} sum_{k=1}^{n+1} 2^k/k
inline Rational reciprocal_binomial_closed(long n) {
  Rational s(0);
  for (long k = 1; k <= n + 1; ++k) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, (unsigned long)k);
    s += frac(p, k);
  }
  BigInt d;
  mpz_ui_pow_ui(d.get_mpz_t(), 2, (unsigned long)(n + 1));
  Rational r = s * frac(BigInt(n + 1), d);
  r.canonicalize();
  return r;
}

// the variant carrying an extra C(n+1,k) inside the sum
inline Rational reciprocal_binomial_weighted_form(long n) {
  Rational s(0);
  for (long k = 1; k <= n + 1; ++k) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, (unsigned long)k);
    s += frac(binomial(n + 1, k) * p, k);
  }
  BigInt d;
  mpz_ui_pow_ui(d.get_mpz_t(), 2, (unsigned long)(n + 1));
  Rational r = s * frac(BigInt(n + 1), d);
  r.canonicalize();
  return r;
}

// b_n = sum_k (-1)^k C(n,k) a_k
inline std::vector<Rational> binomial_inversion(const std::vector<Rational>& a) {
  std::vector<Rational> b(a.size());
  for (size_t n = 0; n < a.size(); ++n) {
    Rational s(0);
    for (size_t k = 0; k <= n; ++k) {
      Rational t = Rational(binomial(long(n), long(k))) * a[k];
      if (k % 2) s -= t; else s += t;
    }
    b[n] = s;
  }
  return b;
}

enum class AdamchikForm { i, ii, iii };

inline std::pair<Rational, Rational> adamchik_partial(long n, AdamchikForm w) {
  Rational h1(0), h2(0), h3(0), lhs(0);
  for (long k = 1; k <= n; ++k) {
    Rational ik = make_q(1, k);
    h1 += ik;
    h2 += ik * ik;
    h3 += ik * ik * ik;
    switch (w) {
      case AdamchikForm::i: lhs += h1 * ik; break;
      case AdamchikForm::ii: lhs += h2 * ik + h1 * ik * ik; break;
      case AdamchikForm::iii: lhs += (h1 * h1 + h2) * ik; break;
    }
  }
  Rational rhs;
  switch (w) {
    case AdamchikForm::i: rhs = (h1 * h1 + h2) / 2; break;
    case AdamchikForm::ii: rhs = h3 + h1 * h2; break;
    case AdamchikForm::iii: rhs = (h1 * h1 * h1 + 3 * h1 * h2 + 2 * h3) / 3; break;
  }
  return {lhs, rhs};
}

// sum_{k<=n} 1/k sum_{j<=k} 1/j sum_{l<=j} 1/l
inline Rational triple_nested_sum(long n) {
  Rational inner(0), mid(0), outer(0);
  for (long k = 1; k <= n; ++k) {
    Rational ik = make_q(1, k);
    inner += ik;
    mid += ik * inner;
    outer += ik * mid;
  }
  return outer;
}

inline Rational triple_nested_closed(long n) {
  Rational h1 = harmonic(n, 1), h2 = harmonic(n, 2), h3 = harmonic(n, 3);
  return (h1 * h1 * h1 + 3 * h1 * h2 + 2 * h3) / 6;
}

// sum_{k=1}^n C(n,k)/k and sum_{k=1}^n (2^k - 1)/k
inline std::pair<Rational, Rational> binomial_over_k(long n) {
  Rational a(0), b(0);
  for (long k = 1; k <= n; ++k) {
    a += frac(binomial(n, k), k);
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, (unsigned long)k);
    b += frac(p - 1, k);
  }
  a.canonicalize();
  b.canonicalize();
  return {a, b};
}

}  // namespace zf
