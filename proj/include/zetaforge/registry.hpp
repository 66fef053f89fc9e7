#pragma once

// Identity catalog and verifier. Every entry evaluates both sides of an
// equality; exact entries compare rationals, numeric entries compare at the
// working precision of the supplied context.

#include <zetaforge/combinatoric.hpp>
#include <zetaforge/mpcore.hpp>
#include <zetaforge/quad.hpp>
#include <zetaforge/real.hpp>
#include <zetaforge/series.hpp>
#include <zetaforge/specfun.hpp>

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace zf {

enum class IdentityKind { ExactRational, Numeric };
enum class TolClass { Tight, Quad, Stated, Advisory };
enum class Status { Pass, Fail, Advisory };

inline const char* to_string(IdentityKind k) {
  return k == IdentityKind::ExactRational ? "exact" : "numeric";
}
inline const char* to_string(TolClass t) {
  switch (t) {
    case TolClass::Tight: return "tight";
    case TolClass::Quad: return "quad";
    case TolClass::Stated: return "stated";
    case TolClass::Advisory: return "advisory";
  }
  return "?";
}
inline const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Advisory: return "advisory";
  }
  return "?";
}

struct ExactCheck {
  bool equal = true;
  Rational worst = 0;  // largest |lhs - rhs| seen
  std::string note;
};

// lhs/rhs of the worst sample; a non-empty `failure` fails the entry
// regardless of the residual (used for side conditions)
struct NumericCheck {
  Real lhs, rhs;
  std::string failure;
  std::string note;
};

struct Identity {
  std::string id;
  std::string eq;
  std::string description;
  IdentityKind kind = IdentityKind::Numeric;
  TolClass tol_class = TolClass::Tight;
  double stated_tol = 0;  // absolute bound for Stated and Advisory
  std::vector<std::string> tags;
  std::function<ExactCheck()> exact;
  std::function<NumericCheck()> numeric;

  bool has_tag(const std::string& t) const {
    return std::find(tags.begin(), tags.end(), t) != tags.end();
  }
};

struct ReportEntry {
  std::string id;
  std::string eq;
  Status status = Status::Pass;
  std::string residual;  // decimal
  bool exact_equal = false;
  long precision_bits = 0;
  double seconds = 0;
  std::string note;
};

struct VerificationReport {
  long precision_bits = 0;
  long guard_bits = 0;
  std::vector<ReportEntry> results;
  int pass = 0, fail = 0, advisory = 0;

  bool ok() const { return fail == 0; }
};

struct VerifyOptions {
  std::optional<Real> tol;  // replaces the class bound for numeric entries
  bool ladder = false;      // re-check lhs at doubled precision
};

using TagFilter = std::function<bool(const Identity&)>;

inline TagFilter all_identities() {
  return [](const Identity&) { return true; };
}
// matches entries carrying any of the tags; an empty list matches everything
inline TagFilter any_tag(std::vector<std::string> tags) {
  return [tags = std::move(tags)](const Identity& id) {
    if (tags.empty()) return true;
    for (const auto& t : tags)
      if (id.has_tag(t)) return true;
    return false;
  };
}

namespace detail {

inline Real q(long p, long r = 1) { return Real(p) / r; }

struct ExactAcc {
  ExactCheck c;
  long count = 0;
  void add(const Rational& lhs, const Rational& rhs, const std::string& where) {
    ++count;
    Rational d = abs(Rational(lhs - rhs));
    if (d != 0) {
      if (c.equal) c.note = "first mismatch at " + where;
      c.equal = false;
      if (d > c.worst) c.worst = d;
    }
  }
  ExactCheck done() {
    if (c.equal) c.note = std::to_string(count) + " cases";
    return c;
  }
};

// keeps the sample with the largest |lhs - rhs|
struct Worst {
  std::optional<NumericCheck> best;
  Real gap;
  void add(const Real& lhs, const Real& rhs) {
    Real d = abs(lhs - rhs);
    if (!best || d > gap) {
      best = NumericCheck{lhs, rhs, {}, {}};
      gap = d;
    }
  }
  NumericCheck done() { return *best; }
};

inline NumericCheck pair(const Real& lhs, const Real& rhs) {
  return NumericCheck{lhs, rhs, {}, {}};
}

inline Real d1(long s, const Real& a) {
  return hurwitz_zeta_deriv(Real(s), a, 1);
}

inline Real pi() { return K::pi(); }

// sum_{n>=1} x^n/n^q sum_{k<=n} y^k/k^p for |x| < 1, |y| <= 1
inline Real nested_power(const Real& x, long q, const Real& y, long p) {
  PrecisionScope ps(wp() + 16);
  Real eps = pow2(-(wp() + 4));
  Real inner(0), xp(1), yp(1), S(0);
  for (long n = 1;; ++n) {
    charge_terms(n);
    xp *= x;
    yp *= y;
    inner += yp / pow(Real(n), p);
    Real t = xp / pow(Real(n), q) * inner;
    S += t;
    if (abs(xp) < eps) break;
  }
  return S;
}

// (1/(e^t - 1) - 1/t + 1/2)/t with the cancellation near 0 handled
inline Real binet_kernel(const Real& t) {
  // four series terms leave an error near t^8
  if (t < pow2(-(wp() / 8 + 2))) {
    Real t2 = sqr(t);
    return Real(1) / 12 - t2 / 720 + sqr(t2) / 30240 - t2 * sqr(t2) / 1209600;
  }
  long extra = std::max<long>(0, -2 * t.exponent()) + 16;
  PrecisionScope ps(wp() + extra);
  return (1 / expm1(t) - 1 / t + ldexp(Real(1), -1)) / t;
}

inline std::vector<Identity> build_catalog() {
  using K::zeta;
  std::vector<Identity> v;

  auto exact = [&](std::string id, std::string eq, std::string desc,
                   std::vector<std::string> tags, std::function<ExactCheck()> f) {
    Identity e;
    e.id = std::move(id);
    e.eq = std::move(eq);
    e.description = std::move(desc);
    e.kind = IdentityKind::ExactRational;
    e.tags = std::move(tags);
    e.tags.push_back("exact");
    e.exact = std::move(f);
    v.push_back(std::move(e));
  };
  auto num = [&](std::string id, std::string eq, std::string desc,
                 std::vector<std::string> tags, TolClass tc,
                 std::function<NumericCheck()> f, double stated = 0) {
    Identity e;
    e.id = std::move(id);
    e.eq = std::move(eq);
    e.description = std::move(desc);
    e.tags = std::move(tags);
    e.tol_class = tc;
    e.stated_tol = stated;
    if (tc == TolClass::Advisory) e.tags.push_back("advisory");
    e.numeric = std::move(f);
    v.push_back(std::move(e));
  };
  const auto T = TolClass::Tight;
  const auto Q = TolClass::Quad;

  // ---------------- finite identities ----------------
  const std::vector<std::string> comb{"combinatoric"};
  exact("EQ-4.4.123", "4.4.123", "sum C(n,k)(-1)^k/(k+1) = 1/(n+1), n <= 30", comb,
        [] {
          ExactAcc a;
          for (long n = 0; n <= 30; ++n)
            a.add(alt_binomial_sum(n, 1), make_q(1, n + 1), "n=" + std::to_string(n));
          return a.done();
        });
  exact("EQ-4.4.123a", "4.4.123a", "sum C(n,k)/(k+1) = (2^{n+1}-1)/(n+1), n <= 30",
        comb, [] {
          ExactAcc a;
          for (long n = 0; n <= 30; ++n)
            a.add(plain_binomial_reciprocal_sum(n), plain_binomial_reciprocal_closed(n),
                  "n=" + std::to_string(n));
          return a.done();
        });
  exact("EQ-4.4.127", "4.4.127", "sum C(n,k)(-1)^k/(k+1)^2 = H_{n+1}/(n+1), n <= 30",
        comb, [] {
          ExactAcc a;
          for (long n = 0; n <= 30; ++n)
            a.add(alt_binomial_sum(n, 2), harmonic(n + 1) / (n + 1),
                  "n=" + std::to_string(n));
          return a.done();
        });
  exact("EQ-4.4.130", "4.4.130",
        "sum C(n,k)(-1)^k/(k+1)^3 in both printed forms, n <= 30", comb, [] {
          ExactAcc a;
          for (long n = 0; n <= 30; ++n) {
            Rational lhs = alt_binomial_sum(n, 3);
            Rational s(0);
            for (long k = 1; k <= n + 1; ++k) s += harmonic(k) / k;
            a.add(lhs, s / (n + 1), "first form n=" + std::to_string(n));
            Rational h = harmonic(n + 1);
            a.add(lhs, (h * h + harmonic(n + 1, 2)) / (2 * (n + 1)),
                  "second form n=" + std::to_string(n));
          }
          return a.done();
        });
  auto larcombe = [](int p) {
    return [p] {
      ExactAcc a;
      for (long m = 1; m <= 6; ++m)
        for (long n = 0; n <= 8; ++n)
          a.add(larcombe_sum(m, n, p), larcombe_closed(m, n, p),
                "m=" + std::to_string(m) + " n=" + std::to_string(n));
      return a.done();
    };
  };
  exact("EQ-4.4.135-p1", "4.4.135", "Larcombe sum, power 1, m <= 6, n <= 8", comb,
        larcombe(1));
  exact("EQ-4.4.135-p2", "4.4.135", "Larcombe sum, power 2, m <= 6, n <= 8", comb,
        larcombe(2));
  exact("EQ-4.4.135-p3", "4.4.135", "Larcombe sum, power 3, m <= 6, n <= 8", comb,
        larcombe(3));
  exact("EQ-4.4.136", "4.4.136", "Larcombe sum, power 4, m <= 6, n <= 8", comb,
        larcombe(4));
  exact("EQ-4.4.155ziv", "4.4.155ziv",
        "sum 1/C(n,k) = (n+1)/2^{n+1} sum 2^k/k, n <= 20", comb, [] {
          ExactAcc a;
          for (long n = 0; n <= 20; ++n)
            a.add(reciprocal_binomial_sum(n), reciprocal_binomial_closed(n),
                  "n=" + std::to_string(n));
          return a.done();
        });
  exact("NEG-4.4.155ziii", "4.4.155ziii",
        "the printed middle form with C(n+1,k) differs from sum 1/C(n,k) for 1 <= n <= 20",
        {"combinatoric", "negative"}, [] {
          ExactCheck c;
          long differ = 0;
          for (long n = 1; n <= 20; ++n)
            if (reciprocal_binomial_weighted_form(n) != reciprocal_binomial_sum(n))
              ++differ;
          c.equal = differ == 20;
          c.note = std::to_string(differ) + " of 20 differ";
          if (!c.equal) c.worst = 1;
          return c;
        });
  auto adamchik = [](AdamchikForm w) {
    return [w] {
      ExactAcc a;
      for (long n = 1; n <= 30; ++n) {
        auto [l, r] = adamchik_partial(n, w);
        a.add(l, r, "n=" + std::to_string(n));
      }
      return a.done();
    };
  };
  exact("EQ-4.4.169", "4.4.169", "sum H_k/k = (H_n^2 + H_n^(2))/2, n <= 30", comb,
        adamchik(AdamchikForm::i));
  exact("EQ-4.4.171", "4.4.171", "sum H_k^(2)/k + sum H_k/k^2 = H^(3) + H H^(2), n <= 30",
        comb, adamchik(AdamchikForm::ii));
  exact("EQ-4.4.172", "4.4.172", "sum (H_k^2 + H_k^(2))/k cubic form, n <= 30", comb,
        adamchik(AdamchikForm::iii));
  exact("EQ-4.4.172b", "4.4.172b", "triple nested harmonic sum, n <= 30", comb, [] {
    ExactAcc a;
    for (long n = 1; n <= 30; ++n)
      a.add(triple_nested_sum(n), triple_nested_closed(n), "n=" + std::to_string(n));
    return a.done();
  });
  exact("EQ-4.4.174", "4.4.174", "sum C(n,k)/k = sum (2^k-1)/k, n <= 30", comb, [] {
    ExactAcc a;
    for (long n = 1; n <= 30; ++n) {
      auto [l, r] = binomial_over_k(n);
      a.add(l, r, "n=" + std::to_string(n));
    }
    return a.done();
  });
  exact("EQ-4.4.242-inv", "4.4.242",
        "binomial inversion is an involution on 100 random length-12 sequences", comb,
        [] {
          std::mt19937_64 rng(20240611);
          std::uniform_int_distribution<long> num(-60, 60), den(1, 24);
          ExactAcc a;
          for (int t = 0; t < 100; ++t) {
            std::vector<Rational> s(12);
            for (auto& x : s) x = frac(BigInt(num(rng)), BigInt(den(rng)));
            auto back = binomial_inversion(binomial_inversion(s));
            for (size_t i = 0; i < s.size(); ++i)
              a.add(back[i], s[i], "sequence " + std::to_string(t));
          }
          return a.done();
        });
  exact("EQ-4.4.221", "4.4.221", "B_2(x) = x^2 - x + 1/6 at rational points", comb, [] {
    ExactAcc a;
    for (long p = -6; p <= 12; ++p) {
      Rational x = frac(BigInt(p), BigInt(5));
      a.add(bernoulli_poly(2, x), x * x - x + make_q(1, 6), "x=" + x.get_str());
    }
    return a.done();
  });

  // ---------------- Euler sums ----------------
  const std::vector<std::string> eu{"euler"};
  auto es = [](std::vector<int> ps, long qv) {
    return euler_sum_product(ps, Real(qv));
  };
  num("EQ-4.4.163", "4.4.163", "sum H_n/n^2 = 2 zeta(3)", eu, T,
      [=] { return pair(es({1}, 2), 2 * zeta(3)); });
  num("EQ-4.4.167u", "4.4.167u", "sum H_n/n^3 = pi^4/72", eu, T,
      [=] { return pair(es({1}, 3), pow(pi(), 4L) / 72); });
  num("EQ-4.4.168", "4.4.168", "sum H_n^2/n^2 = (17/4) zeta(4)", eu, T,
      [=] { return pair(es({1, 1}, 2), q(17, 4) * zeta(4)); });
  num("EQ-4.4.167s", "4.4.167s", "sum H_n^(2)/n^2 = (7/4) zeta(4)", eu, T,
      [=] { return pair(es({2}, 2), q(7, 4) * zeta(4)); });
  num("EQ-4.4.168p", "4.4.168p", "sum H_n^(3)/n^2 = (11/2) zeta(5) - 2 zeta(2) zeta(3)",
      eu, T, [=] {
        return pair(es({3}, 2), q(11, 2) * zeta(5) - 2 * zeta(2) * zeta(3));
      });
  num("EQ-4.4.233", "4.4.233", "sum H_n^(3)/n^3 = (zeta(3)^2 + zeta(6))/2", eu, T,
      [=] { return pair(es({3}, 3), (sqr(zeta(3)) + zeta(6)) / 2); });
  for (auto [p, qq] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {3, 4}}) {
    num("EQ-4.4.232a-" + std::to_string(p) + std::to_string(qq), "4.4.232a",
        "symmetric relation for (p,q) = (" + std::to_string(p) + "," +
            std::to_string(qq) + ")",
        eu, T, [=, p = p, qq = qq] {
          Real lhs = es({p}, qq) + es({qq}, p);
          return pair(lhs, zeta(p) * zeta(qq) + zeta(p + qq));
        });
  }
  num("EQ-4.4.167t", "4.4.167t", "sum H_n^(r)/n^r = (zeta(r)^2 + zeta(2r))/2, r = 2..5",
      eu, T, [=] {
        Worst w;
        for (int r = 2; r <= 5; ++r)
          w.add(es({r}, r), (sqr(zeta(r)) + zeta(2 * r)) / 2);
        return w.done();
      });
  num("EQ-4.4.230", "4.4.230", "Euler sum as zeta(r) zeta(q) minus a log-moment integral",
      eu, Q, [=] {
        Worst w;
        for (auto [r, qq] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
          Real I = integrate01([r = r, qq = qq](const Real& x, const Real& xc) {
                     return pow(log_c(x, xc), long(r - 1)) * polylog_c(qq, x, xc) / xc;
                   }).value;
          Real f(1);
          for (int i = 2; i < r; ++i) f *= i;
          Real sgn = (r - 1) % 2 ? Real(-1) : Real(1);
          w.add(es({r}, qq), zeta(r) * zeta(qq) - sgn / f * I);
        }
        return w.done();
      });
  num("EQ-4.4.231", "4.4.231", "int log^{r-1} x/(1-x) = (-1)^{r-1} zeta(r) Gamma(r)", eu, Q,
      [=] {
        Worst w;
        Real f(1);
        for (int r = 2; r <= 5; ++r) {
          f *= r - 1;
          Real I = integrate01([r](const Real& x, const Real& xc) {
                     return pow(log_c(x, xc), long(r - 1)) / xc;
                   }).value;
          w.add(I, ((r - 1) % 2 ? -f : f) * zeta(r));
        }
        return w.done();
      });
  num("EQ-4.4.233a", "4.4.233a",
      "(zeta(p)^2 - zeta(2p))/2 as a log-moment integral, p = 2, 3", eu, Q, [=] {
        Worst w;
        Real f(1);
        for (int p = 2; p <= 3; ++p) {
          f *= p - 1;
          Real I = integrate01([p](const Real& x, const Real& xc) {
                     return pow(log_c(x, xc), long(p - 1)) * polylog_c(p, x, xc) / xc;
                   }).value;
          Real sgn = (p - 1) % 2 ? Real(-1) : Real(1);
          w.add((sqr(zeta(p)) - zeta(2 * p)) / 2, sgn / f * I);
        }
        return w.done();
      });
  const std::vector<std::string> kn{"euler", "knuth"};
  num("EQ-4.4.167h", "4.4.167h", "Knuth integral vs direct sum, s = 2, x = 1/2", kn, Q,
      [] { return pair(knuth_hsum(2, q(1, 2)), knuth_hsum_direct(2, q(1, 2))); });
  num("EQ-4.4.167i", "4.4.167i", "Knuth integral vs direct sum, s = 3, x = -1/2", kn, Q,
      [] { return pair(knuth_hsum(3, q(-1, 2)), knuth_hsum_direct(3, q(-1, 2))); });
  num("EQ-4.4.167j", "4.4.167j", "int (zeta(3) - Li_3(y))/(1-y) = pi^4/72", kn, Q,
      [] { return pair(knuth_hsum(3, Real(1)), pow(pi(), 4L) / 72); });
  num("EQ-4.4.167k", "4.4.167k", "alternating sum H_n/n^3 by the integral and in closed form",
      kn, Q, [=] {
        Real l2 = K::log2();
        Real closed = -q(11, 4) * zeta(4) + q(7, 4) * zeta(3) * l2 -
                      sqr(pi()) / 12 * sqr(l2) + pow(l2, 4L) / 12 + 2 * K::li_half(4);
        Worst w;
        w.add(knuth_hsum(3, Real(-1)), closed);
        w.add(knuth_hsum_direct(3, Real(-1)), closed);
        return w.done();
      });
  num("EQ-4.4.233x", "4.4.233x", "log n (zeta(2) - H_n^(2)) < 1e-2 at n = 1e4",
      {"euler", "property"}, TolClass::Stated,
      [] { return pair(limit_law(10000), Real(0)); }, 1e-2);

  // ---------------- weighted and binomial-transform sums ----------------
  const std::vector<std::string> wt{"weighted"};
  const std::vector<std::pair<std::string, std::string>> wfam{
      {"W1", "4.4.167"},  {"W2", "4.4.168i"}, {"W3", "4.4.168l"}, {"W4", "4.4.234"},
      {"W5", "4.4.240"},  {"W6", "4.4.241"},  {"W7", "4.4.239"},  {"W8", "4.4.242"},
      {"W9", "4.4.168ii"}, {"W10", "4.4.155li"}};
  for (const auto& [fam, eq] : wfam) {
    num("EQ-" + eq, eq, fam + " against its printed closed form", wt, T,
        [fam = fam] { return pair(weighted_euler_sum(fam), weighted_closed(fam)); });
    if (weighted_has_correction(fam))
      num("FIX-" + eq, eq, fam + " against the corrected closed form", wt, T,
          [fam = fam] { return pair(weighted_euler_sum(fam), weighted_corrected(fam)); });
  }
  num("EQ-4.4.168ii-tail", "4.4.168ii",
      "sum H^(3)/(n 2^n) = zeta(3) log 2 - W9 + Li_4(1/2)", wt, T, [=] {
        return pair(weighted_euler_sum("W2"),
                    zeta(3) * K::log2() - weighted_euler_sum("W9") + K::li_half(4));
      });
  num("EQ-4.4.173", "4.4.173", "P_s(1) = 2 zeta(s) by the binomial transform, s = 2, 3", wt,
      T, [=] {
        Worst w;
        for (long s = 2; s <= 3; ++s) {
          BinomialTransformSpec b;
          b.f = [s](long k) { return 1 / pow(Real(k), s); };
          b.k0 = 1;
          b.scale_shift = 0;
          b.alternating = false;
          b.f_tail = [s](long Kc) { return hurwitz_value(Real(s), Real(Kc + 1)); };
          w.add(binomial_transform_sum(b), 2 * zeta(s));
        }
        return w.done();
      });
  num("NEG-4.4.176", "4.4.176", "P_1(1) is reported divergent",
      {"weighted", "negative", "property"}, T, [] {
        BinomialTransformSpec b;
        b.f = [](long k) { return 1 / Real(k); };
        b.k0 = 1;
        b.scale_shift = 0;
        b.alternating = false;
        NumericCheck c = pair(Real(0), Real(0));
        try {
          Real s = binomial_transform_sum(b);
          c.failure = "returned " + to_string(s, 12) + " instead of flagging divergence";
        } catch (const DivergentSeries& e) {
          c.note = e.what();
        }
        return c;
      });
  num("EQ-4.4.24a", "4.4.24a", "binomial transform of the alternating Hurwitz zeta", wt, T,
      [] {
        Worst w;
        for (auto [s, u] : std::vector<std::pair<long, Real>>{
                 {2, Real(1)}, {3, q(1, 2)}, {2, q(3, 2)}, {4, q(1, 3)}}) {
          BinomialTransformSpec b;
          b.f = [s = s, u = u](long k) {
            Real t = 1 / pow(u + k, s);
            return k % 2 ? -t : t;
          };
          w.add(binomial_transform_sum(b), hurwitz_zeta_alt(Real(s), u));
        }
        return w.done();
      });
  num("EQ-4.4.138c", "4.4.138c",
      "sum 2^{-n-1}(H_{m+n} - H_{m-1})/(m C(m+n,n)) = sum (-1)^k/(k+m)^2, m = 1..4", wt, T,
      [] {
        Worst w;
        for (long m = 1; m <= 4; ++m) {
          PrecisionScope ps(wp() + 16);
          Real eps = pow2(-(wp() + 4));
          Real S(0), h(0), c(1);  // h = H_{m+n} - H_{m-1}, c = C(m+n,n)
          Real pw = ldexp(Real(1), -1);
          for (long n = 0;; ++n) {
            charge_terms(n);
            h += 1 / Real(m + n);
            if (n > 0) c = c * (m + n) / n;
            Real t = pw * h / (m * c);
            S += t;
            if (t < eps) break;
            pw = ldexp(pw, -1);
          }
          w.add(S, hurwitz_zeta_alt(Real(2), Real(m)));
        }
        return w.done();
      });
  num("EQ-4.4.138d", "4.4.138d",
      "sum 2^{-n-1}(H_{n+2} - 1)/((n+1)(n+2)) = 1 - zeta_a(2)", wt, T, [=] {
        PrecisionScope ps(wp() + 16);
        Real eps = pow2(-(wp() + 4));
        Real S(0), h(1);
        Real pw = ldexp(Real(1), -1);
        h += Real(1) / 2;
        for (long n = 0;; ++n) {
          charge_terms(n);
          if (n > 0) h += 1 / Real(n + 2);
          Real t = pw * (h - 1) / ((n + 1) * (n + 2));
          S += t;
          if (t < eps) break;
          pw = ldexp(pw, -1);
        }
        return pair(S, 1 - zeta_alt(Real(2)));
      });
  num("EQ-4.4.138d-knopp", "4.4.138d",
      "sum (-1)^n/((n+1)...(n+p+1)) = (1/p!) sum 1/((p+n+1) 2^{n+1}), p = 1..3", wt, T,
      [] {
        Worst w;
        Real pf(1);
        for (long p = 1; p <= 3; ++p) {
          pf *= p;
          Real lhs = euler_transform([p](long n) {
            Real d(1);
            for (long j = 1; j <= p + 1; ++j) d *= n + j;
            return 1 / d;
          });
          PrecisionScope ps(wp() + 16);
          Real eps = pow2(-(wp() + 4));
          Real S(0), pw(1);
          for (long n = 0;; ++n) {
            pw = ldexp(pw, -1);
            Real t = pw / (p + n + 1);
            S += t;
            if (t < eps) break;
          }
          w.add(lhs, S / pf);
        }
        return w.done();
      });
  num("EQ-4.4.138d-S21", "4.4.138d", "S(2,1) = sum (-1)^n/((n+1)(n+2)) = 2 log 2 - 1", wt,
      T, [] {
        Real lhs = euler_transform([](long n) { return 1 / (Real(n + 1) * (n + 2)); });
        return pair(lhs, 2 * K::log2() - 1);
      });

  // ---------------- generating functions ----------------
  const std::vector<std::string> gf{"genfun"};
  auto gen = [&](std::string id, std::string eq, std::string fam, std::vector<Real> xs,
                 std::string desc) {
    num(std::move(id), std::move(eq), std::move(desc), gf, T, [fam, xs] {
      Worst w;
      for (const auto& x : xs) w.add(gen_series(fam, x), gen_closed(fam, x));
      return w.done();
    });
  };
  gen("EQ-4.4.155l-G1", "4.4.155l", "G1",
      {q(1, 2), q(1, 3), q(-1, 2), Real(-1)},
      "sum H_n x^n/n = -Li_2(-x/(1-x)) at x = 1/2, 1/3, -1/2, -1");
  gen("EQ-4.4.156a", "4.4.156a", "G2", {q(1, 4), q(1, 2), q(9, 10)},
      "sum H_n^(2) x^n/n at x = 1/4, 1/2, 9/10");
  gen("EQ-4.4.155l", "4.4.155l", "G3", {q(1, 2), q(-1, 2), q(-9, 10)},
      "sum (H^(2) + H^2) x^n/n = -2 Li_3(-x/(1-x)) at x = 1/2, -1/2, -9/10");
  gen("EQ-4.4.155u", "4.4.155u", "G4", {q(1, 3), q(1, 2), Real(-1)},
      "cubic harmonic generating function = -6 Li_4(-x/(1-x)) at x = 1/3, 1/2, -1");
  gen("EQ-4.4.168k", "4.4.168k", "G5", {q(1, 2), q(1, 4), q(3, 2)},
      "sum H_n^(3)(1-t)^n/n at t = 1/2, 1/4, 3/2");
  gen("EQ-4.4.168-G6", "4.4.168", "G6", {q(1, 2), q(1, 3), Real(1)},
      "sum H_n^2 x^n/n^2 at x = 1/2, 1/3, 1");
  const std::vector<Real> g7x{q(-1, 2), q(1, 3), q(1, 2)};
  auto g7 = [&](std::string eq, int p, int qq) {
    num("EQ-" + eq, eq,
        "Li_{p+q} relation with (p,q) = (" + std::to_string(p) + "," +
            std::to_string(qq) + ") at x = -1/2, 1/3, 1/2",
        gf, T, [=] {
          Worst w;
          for (const auto& x : g7x)
            w.add(gen_series("G7", x, GenArgs{p, qq}), gen_closed("G7", x, GenArgs{p, qq}));
          return w.done();
        });
  };
  g7("4.4.247a", 3, 3);
  g7("4.4.247b", 2, 1);
  g7("4.4.247ci", 2, 2);
  g7("4.4.247cii", 3, 1);
  g7("4.4.247di", 2, 3);
  g7("4.4.247dii", 3, 2);
  g7("4.4.247diii", 4, 1);
  num("EQ-4.4.247ciii", "4.4.247ciii",
      "the (2,2) and (3,1) left sides agree at x = -1/2, 1/3, 1/2", gf, T, [=] {
        Worst w;
        for (const auto& x : g7x)
          w.add(gen_series("G7", x, GenArgs{2, 2}), gen_series("G7", x, GenArgs{3, 1}));
        return w.done();
      });
  num("EQ-4.4.247e", "4.4.247e", "the relation with x replaced by -x, x = 1/3, 1/2", gf, T,
      [] {
        Worst w;
        for (const auto& x : {q(1, 3), q(1, 2)})
          w.add(gen_series("G7", -x, GenArgs{2, 3}), polylog(5, -x));
        return w.done();
      });
  num("EQ-4.4.247f", "4.4.247f",
      "two-variable relation at (x,y) = (1/2,1/3), (-1/2,2/3), (1/3,-3/4)", gf, T, [] {
        Worst w;
        for (auto [x, y, p, qq] : std::vector<std::tuple<Real, Real, long, long>>{
                 {q(1, 2), q(1, 3), 2, 3}, {q(-1, 2), q(2, 3), 2, 2}, {q(1, 3), q(-3, 4), 3, 2}}) {
          Real lhs = nested_power(x, qq, y, p) - polylog(p, y) * polylog(qq, x) +
                     nested_power(y, p, x, qq);
          w.add(lhs, polylog(p + qq, x * y));
        }
        return w.done();
      });
  num("EQ-4.4.247fi", "4.4.247fi", "the y = -1 case with an alternating outer sum", gf, T,
      [=] {
        Worst w;
        for (auto [x, p, qq] : std::vector<std::tuple<Real, long, long>>{
                 {q(1, 2), 2, 2}, {q(1, 3), 3, 1}, {q(-1, 2), 2, 3}}) {
          Real a = nested_power(x, qq, Real(-1), p);
          // sum_{n>=1} (-1)^n/n^p sum_{k<=n} x^k/k^q
          auto inner = std::make_shared<std::vector<Real>>();
          Real c = -euler_transform_impl(
              [x = x, p = p, qq = qq, inner](long m) {
                long n = m + 1;
                while (long(inner->size()) < n) {
                  long k = long(inner->size()) + 1;
                  Real prev = inner->empty() ? Real(0) : inner->back();
                  inner->push_back(prev + pow(x, k) / pow(Real(k), qq));
                }
                return (*inner)[size_t(n - 1)] / pow(Real(n), p);
              },
              false);
          w.add(a + zeta_alt(Real(p)) * polylog(qq, x) + c, polylog(p + qq, -x));
        }
        return w.done();
      });
  num("ADV-4.4.168k-limit", "4.4.168k",
      "zeta(3) log t + sum H_n^(3)(1-t)^n/n -> -zeta(4)/4 as t -> 0 (extrapolated)",
      {"genfun"}, TolClass::Advisory, [=] {
        // fit L + a t log t + b t through three points
        std::vector<Real> ts{q(1, 1000), q(1, 2000), q(1, 10000)};
        std::vector<Real> f;
        for (const auto& t : ts) f.push_back(zeta(3) * log(t) + gen_series("G5", t));
        auto row = [](const Real& t) { return std::vector<Real>{Real(1), t * log(t), t}; };
        std::vector<std::vector<Real>> A{row(ts[0]), row(ts[1]), row(ts[2])};
        // Gaussian elimination on the 3x3 system
        for (int i = 0; i < 3; ++i) A[i].push_back(f[i]);
        for (int c = 0; c < 3; ++c)
          for (int r = c + 1; r < 3; ++r) {
            Real m = A[r][c] / A[c][c];
            for (int k = c; k < 4; ++k) A[r][k] -= m * A[c][k];
          }
        Real x[3];
        for (int r = 2; r >= 0; --r) {
          Real s = A[r][3];
          for (int k = r + 1; k < 3; ++k) s -= A[r][k] * x[k];
          x[r] = s / A[r][r];
        }
        return pair(x[0], -zeta(4) / 4);
      },
      1e-4);

  // ---------------- named integrals ----------------
  for (const auto& ni : named_integrals()) {
    bool ifam = ni.id.size() > 1 && ni.id[0] == 'I';
    if (!ifam) continue;
    num("INT-" + ni.id, ni.eq, ni.description + " (printed closed form)", {"integral"}, Q,
        [&ni] {
          return pair(named_integral_quad(ni, ni.default_param), ni.closed(ni.default_param));
        });
    if (ni.corrected)
      num("FIX-INT-" + ni.id, ni.eq, ni.description + " (corrected closed form)",
          {"integral"}, Q, [&ni] {
            return pair(named_integral_quad(ni, ni.default_param),
                        ni.corrected(ni.default_param));
          });
  }
  auto named_multi = [&](std::string id, std::string nid, std::vector<long> params,
                         std::vector<std::string> tags, std::string desc) {
    const NamedIntegral& ni = find_named_integral(nid);
    num(std::move(id), ni.eq, std::move(desc), std::move(tags), Q, [&ni, params] {
      Worst w;
      for (long p : params) w.add(named_integral_quad(ni, p), ni.closed(p));
      return w.done();
    });
  };
  named_multi("EQ-4.4.229f", "F-SIN", {1, 2, 3}, {"fourier"},
              "int log Gamma(t) sin(2 n pi t) = (log(2 pi n) + gamma)/(2 pi n), n = 1..3");
  named_multi("EQ-4.4.229h", "F-COS", {1, 2, 3}, {"fourier"},
              "int log Gamma(t) cos(2 n pi t) = 1/(4n), n = 1..3");
  named_multi("EQ-4.4.229hi", "F-ZSIN", {1, 2, 3}, {"fourier", "hurwitz"},
              "int zeta'(-1,t) sin(2 n pi t) = 1/(8 pi n^2), n = 1..3");
  named_multi("EQ-4.4.213a", "B-LG", {1, 2}, {"fourier"},
              "int B_{2n}(x) log Gamma(x), n = 1, 2");
  named_multi("EQ-4.4.213e", "E-LS", {0}, {"fourier"}, "int (x - 1/2) log sin(pi x) = 0");
  named_multi("EQ-4.4.167q", "Q-LL", {0}, {"euler"}, "int log x log^2(1-x)/x = -zeta(4)/2");
  num("NEG-4.4.229ni", "4.4.229t",
      "the cot-integral equals -zeta(3)/(8 pi^3) + pi/24 and differs from pi/48 by > 1e-3",
      {"negative", "hurwitz"}, Q, [] {
        const NamedIntegral& ni = find_named_integral("I19");
        Real v = named_integral_quad(ni, 0);
        NumericCheck c = pair(v, -zeta(3) / (8 * pow(pi(), 3L)) + pi() / 24);
        Real gap = abs(v - pi() / 48);
        c.note = "distance from pi/48: " + to_string(gap, 6);
        if (!(gap > Real("1e-3"))) c.failure = "within 1e-3 of pi/48";
        return c;
      });

  // ---------------- Hurwitz zeta derivatives ----------------
  const std::vector<std::string> hz{"hurwitz"};
  num("EQ-4.4.202", "4.4.202", "zeta'(-1,1/2) = -log 2/24 - zeta'(-1)/2", hz, T, [] {
    return pair(d1(-1, q(1, 2)), -K::log2() / 24 - K::zeta_prime_m1() / 2);
  });
  num("EQ-4.4.201", "4.4.201", "zeta'(1-2k,1/2) in terms of zeta'(1-2k), k = 1..3", hz, T,
      [] {
        Worst w;
        for (long k = 1; k <= 3; ++k) {
          Real p4 = pow(Real(4), k);
          Real pk = pow(Real(2), 2 * k - 1);
          Real rhs = -bernoulli_real(2 * k) * K::log2() / (p4 * k) -
                     (pk - 1) * zeta_deriv(Real(1 - 2 * k), 1) / pk;
          w.add(d1(1 - 2 * k, q(1, 2)), rhs);
        }
        return w.done();
      });
  num("EQ-4.4.229i-quarter", "4.4.229i", "zeta'(-1,1/4) = G/(4 pi) - zeta'(-1)/8", hz, T,
      [] {
        return pair(d1(-1, q(1, 4)), K::catalan() / (4 * pi()) - K::zeta_prime_m1() / 8);
      });
  num("EQ-4.4.229k-half", "4.4.229k", "zeta'(-2,1/2) = 3 zeta(3)/(16 pi^2)", hz, T, [] {
    return pair(d1(-2, q(1, 2)), 3 * zeta(3) / (16 * sqr(pi())));
  });
  const std::vector<Real> tgrid{q(1, 8), q(1, 6), q(1, 4), q(1, 3), q(1, 2)};
  num("EQ-4.4.229iv", "4.4.229iv",
      "zeta'(-1,t) - zeta'(-1,1-t) = Cl_2(2 pi t)/(2 pi) on t = 1/8, 1/6, 1/4, 1/3, 1/2",
      {"hurwitz", "clausen"}, T, [tgrid] {
        Worst w;
        for (const auto& t : tgrid)
          w.add(d1(-1, t) - d1(-1, 1 - t), clausen(2, 2 * pi() * t) / (2 * pi()));
        return w.done();
      });
  num("EQ-4.4.229l", "4.4.229l",
      "zeta'(-2,t) + zeta'(-2,1-t) = -Cl_3(2 pi t)/(2 pi^2) on the same grid",
      {"hurwitz", "clausen"}, T, [tgrid] {
        Worst w;
        for (const auto& t : tgrid)
          w.add(d1(-2, t) + d1(-2, 1 - t), -clausen(3, 2 * pi() * t) / (2 * sqr(pi())));
        return w.done();
      });
  num("EQ-4.4.229l-quarter", "4.4.229l", "zeta'(-2,1/4) + zeta'(-2,3/4) = 3 zeta(3)/(64 pi^2)",
      hz, T, [] {
        return pair(d1(-2, q(1, 4)) + d1(-2, q(3, 4)), 3 * zeta(3) / (64 * sqr(pi())));
      });
  num("EQ-4.4.228ti", "4.4.228ti",
      "log G(1/2) = 1/8 + log 2/24 - (3/2) log A - log(pi)/4", {"hurwitz", "constants"}, T,
      [] {
        return pair(barnes_log_g(q(1, 2)), q(1, 8) + K::log2() / 24 -
                                                q(3, 2) * K::log_glaisher() - log(pi()) / 4);
      });
  num("EQ-4.4.228ti-3half", "4.4.228ti", "log G(3/2) = log Gamma(1/2) + log G(1/2)",
      {"hurwitz", "constants"}, T, [] {
        return pair(barnes_log_g(q(3, 2)), log_gamma(q(1, 2)) + barnes_log_g(q(1, 2)));
      });
  num("EQ-4.4.196", "4.4.196",
      "int_0^q log Gamma = q(1-q)/2 + (q/2) log 2pi - zeta'(-1) + zeta'(-1,q), q = 1/4, 1/3, 2/3",
      {"hurwitz", "constants"}, Q, [] {
        Worst w;
        for (const auto& qq : {q(1, 4), q(1, 3), q(2, 3)}) {
          Real I = integrate01([qq](const Real& u, const Real&) {
                     return log_gamma(qq * u);
                   }).value * qq;
          Real rhs = qq * (1 - qq) / 2 + qq / 2 * log(2 * pi()) - K::zeta_prime_m1() +
                     d1(-1, qq);
          w.add(I, rhs);
        }
        return w.done();
      });
  num("EQ-4.4.204", "4.4.204",
      "int_0^{1/2} log Gamma = 1/8 + log(2 pi)/4 - log 2/24 - (3/2) zeta'(-1)",
      {"hurwitz", "constants"}, Q, [] {
        Real I = integrate01([](const Real& u, const Real&) {
                   return log_gamma(ldexp(u, -1));
                 }).value / 2;
        return pair(I, q(1, 8) + log(2 * pi()) / 4 - K::log2() / 24 -
                           q(3, 2) * K::zeta_prime_m1());
      });

  // ---------------- Clausen values ----------------
  const std::vector<std::string> cl{"clausen"};
  num("EQ-4.4.228r-catalan", "4.4.228r",
      "Cl_2(pi/2) = G = beta(2) = -Cl_2(3 pi/2)", cl, T, [] {
        Worst w;
        Real G = K::catalan();
        w.add(clausen(2, pi() / 2), G);
        w.add(-clausen(2, 3 * pi() / 2), G);
        w.add(dirichlet_beta(Real(2)), G);
        return w.done();
      });
  num("EQ-4.4.228r-dup", "4.4.228r", "Cl_2(2x)/2 = Cl_2(x) - Cl_2(pi - x)", cl, T, [] {
    Worst w;
    for (const auto& x : {q(1, 3), Real(1), pi() / 5, q(5, 2)})
      w.add(clausen(2, 2 * x) / 2, clausen(2, x) - clausen(2, pi() - x));
    return w.done();
  });
  num("EQ-4.4.228r-thirds", "4.4.228r",
      "Cl_2(2pi/3) = (2/3) Cl_2(pi/3) = psi'(1/3)/(3 sqrt 3) - 2 pi^2/(9 sqrt 3)", cl, T,
      [] {
        Worst w;
        Real c = clausen(2, 2 * pi() / 3);
        Real r3 = sqrt(Real(3));
        w.add(c, q(2, 3) * clausen(2, pi() / 3));
        w.add(c, polygamma(1, q(1, 3)) / (3 * r3) - 2 * sqr(pi()) / (9 * r3));
        return w.done();
      });
  auto lewin = [&](std::string tag, std::string desc, Real num_, Real den_,
                   std::function<Real(long)> rhs) {
    num("EQ-4.4.228r-" + tag, "4.4.228r", std::move(desc), cl, T,
        [num_, den_, rhs] {
          Worst w;
          for (long n = 1; n <= 3; ++n)
            w.add(clausen(2 * n + 1, pi() * num_ / den_), rhs(n));
          return w.done();
        });
  };
  auto pm = [](long n) { return pow2(-2 * n); };
  lewin("pi2", "Cl_{2n+1}(pi/2) = -2^{-2n-1}(1 - 2^{-2n}) zeta(2n+1), n = 1..3", Real(1),
        Real(2), [pm](long n) { return -pow2(-2 * n - 1) * (1 - pm(n)) * zeta(2 * n + 1); });
  lewin("pi3", "Cl_{2n+1}(pi/3) = (1 - 2^{-2n})(1 - 3^{-2n}) zeta(2n+1)/2, n = 1..3",
        Real(1), Real(3), [pm](long n) {
          return (1 - pm(n)) * (1 - pow(Real(3), -2 * n)) * zeta(2 * n + 1) / 2;
        });
  lewin("2pi3", "Cl_{2n+1}(2pi/3) = -(1 - 3^{-2n}) zeta(2n+1)/2, n = 1..3", Real(2),
        Real(3), [](long n) { return -(1 - pow(Real(3), -2 * n)) * zeta(2 * n + 1) / 2; });
  lewin("pi", "Cl_{2n+1}(pi) = (2^{-2n} - 1) zeta(2n+1), n = 1..3", Real(1), Real(1),
        [pm](long n) { return (pm(n) - 1) * zeta(2 * n + 1); });
  lewin("2pi", "Cl_{2n+1}(2pi) = zeta(2n+1), n = 1..3", Real(2), Real(1),
        [](long n) { return zeta(2 * n + 1); });
  num("EQ-4.4.228r-even", "4.4.228r", "Cl_{2n}(pi) = Cl_{2n}(2pi) = 0, n = 1..3", cl, T, [] {
    Worst w;
    for (long n = 1; n <= 3; ++n) {
      w.add(clausen(2 * n, pi()), Real(0));
      w.add(clausen(2 * n, 2 * pi()), Real(0));
    }
    return w.done();
  });
  num("PROP-cl2-derivative", "4.4.228r",
      "d/dtheta Cl_2 = -log|2 sin(theta/2)| against central differences at 10 points",
      {"clausen", "property"}, Q, [] {
        Worst w;
        long hb = wp() / 5;
        Real h = pow2(-hb);
        for (int i = 1; i <= 10; ++i) {
          Real th = q(6 * i, 11);
          // fourth-order central stencil
          Real fd = (8 * (clausen(2, th + h) - clausen(2, th - h)) -
                     (clausen(2, th + 2 * h) - clausen(2, th - 2 * h))) /
                    (12 * h);
          w.add(fd, -log(abs(2 * sin(th / 2))));
        }
        return w.done();
      });

  // ---------------- constants ----------------
  const std::vector<std::string> ct{"constants"};
  // zeta'(2) from the alternating series, independent of the jet route
  auto zp2_alt = [] {
    Real za = euler_transform_impl(
        [](long n) {
          Real m(n + 1);
          return log(m) / sqr(m);
        },
        false);
    // za = sum (-1)^n log(n+1)/(n+1)^2 = -zeta_a'(2)
    return -2 * za - zeta(2) * K::log2();
  };
  num("EQ-4.4.205", "4.4.205", "zeta'(-1) = (1 - gamma - log 2pi)/12 + zeta'(2)/(2 pi^2)",
      ct, T, [] {
        Real rhs = (1 - K::euler() - log(2 * pi())) / 12 +
                   K::zeta_prime_2() / (2 * sqr(pi()));
        return pair(K::zeta_prime_m1(), rhs);
      });
  num("EQ-4.4.224", "4.4.224",
      "zeta'(-1) with zeta'(2) from the jet route agrees with 1/12 - log A with zeta'(2) from the alternating series",
      ct, T, [zp2_alt] {
        Real a = (1 - K::euler() - log(2 * pi())) / 12 +
                 K::zeta_prime_2() / (2 * sqr(pi()));
        Real logA = K::euler() / 12 + log(2 * pi()) / 12 - zp2_alt() / (2 * sqr(pi()));
        return pair(a, q(1, 12) - logA);
      });
  num("EQ-4.4.212", "4.4.212", "zeta'(2)/2 + zeta(2) log 2/2 = -sum (-1)^{n+1} log n/n^2",
      ct, T, [] {
        Real za = euler_transform_impl(
            [](long n) {
              Real m(n + 1);
              return log(m) / sqr(m);
            },
            false);
        return pair(K::zeta_prime_2() / 2 + zeta(2) * K::log2() / 2, -za);
      });
  num("EQ-4.4.228ci", "4.4.228ci",
      "zeta_a'(2) = pi^2 [(gamma + log 2pi + log 2)/12 - log A]", ct, T, [] {
        Real lhs = K::zeta_prime_2() / 2 + zeta(2) * K::log2() / 2;
        Real rhs = sqr(pi()) * ((K::euler() + log(2 * pi()) + K::log2()) / 12 -
                                K::log_glaisher());
        return pair(lhs, rhs);
      });
  num("EQ-4.4.220", "4.4.220", "zeta'(-2) = -zeta(3)/(4 pi^2)", ct, T,
      [] { return pair(K::zeta_prime_m2(), -zeta(3) / (4 * sqr(pi()))); });
  num("EQ-4.4.219", "4.4.219",
      "zeta'(-2n) = (-1)^n (2n)! zeta(2n+1)/(2 (2 pi)^{2n}), n = 1..4", ct, T, [] {
        Worst w;
        Real f(1);
        for (long n = 1; n <= 4; ++n) {
          f *= Real(2 * n - 1) * (2 * n);
          Real rhs = f * zeta(2 * n + 1) / (2 * pow(2 * pi(), 2 * n));
          w.add(zeta_deriv(Real(-2 * n), 1), n % 2 ? -rhs : rhs);
        }
        return w.done();
      });
  num("EQ-4.4.206", "4.4.206",
      "the two closed forms of int_0^{1/2} log Gamma agree (sum log n/n^2 = -zeta'(2))", ct,
      T, [zp2_alt] {
        Real a = q(1, 8) + log(2 * pi()) / 4 - K::log2() / 24 - q(3, 2) * K::zeta_prime_m1();
        Real b = K::euler() / 8 + q(3, 8) * log(2 * pi()) - K::log2() / 24 -
                 3 / (4 * sqr(pi())) * zp2_alt();
        return pair(a, b);
      });
  num("EQ-4.4.229n-Si", "4.4.229n", "sum Si(2 n pi)/n^3 = pi^3/18", {"constants", "series"}, T,
      [] { return pair(si_zeta_sum(), pow(pi(), 3L) / 18); });
  num("ADV-4.4.226", "4.4.226",
      "log A from the n = 1e4 limit expression with the 1/(720 n^2) correction", ct,
      TolClass::Advisory, [] {
        const long n = 10000;
        PrecisionScope ps(wp() + 16);
        Real s(0);
        for (long k = 2; k <= n; ++k) s += Real(k) * log(Real(k));
        Real nn(n);
        Real e = s - (sqr(nn) / 2 + nn / 2 + q(1, 12)) * log(nn) + sqr(nn) / 4 -
                 1 / (720 * sqr(nn));
        return pair(e, q(1, 12) - K::zeta_prime_m1());
      },
      1e-6);
  num("ADV-4.4.252a", "4.4.252a",
      "consecutive partial sums of the gamma series bracket gamma, N = 1..8", ct,
      TolClass::Advisory, [] {
        Real g = K::euler();
        Real worst(0);
        Real prev_gap;
        std::string gaps = "monotone gaps";
        for (long N = 1; N <= 8; ++N) {
          Real a = gamma_series_partial(N), b = gamma_series_partial(N + 1);
          Real lo = min(a, b), hi = max(a, b);
          Real miss = g < lo ? lo - g : (g > hi ? g - hi : Real(0));
          if (miss > worst) worst = miss;
          Real gap = hi - lo;
          if (N > 1 && gap > prev_gap) gaps = "gap grows at N = " + std::to_string(N);
          prev_gap = gap;
        }
        NumericCheck c = pair(worst, Real(0));
        c.note = "distance of gamma outside the bracket; " + gaps;
        return c;
      },
      1e-30);
  num("ADV-4.4.210", "4.4.210",
      "Kummer partial sums with N = 2^16 terms within 10 log N/N of log Gamma at t = 1/5, 1/3, 2/3",
      {"constants", "fourier"}, TolClass::Advisory, [] {
        const long N = 1L << 16;
        Worst w;
        for (const auto& t : {q(1, 5), q(1, 3), q(2, 3)})
          w.add(kummer_partial(t, N), log_gamma(t));
        NumericCheck c = w.done();
        c.note = "bound 10 log N/N";
        return c;
      },
      10 * std::log(65536.0) / 65536.0);

  // ---------------- Mellin log-moments ----------------
  const std::vector<std::string> me{"mellin"};
  num("EQ-4.4.195", "4.4.195",
      "int u^{x-1} e^{-ku} log^n u by quadrature vs Gamma derivatives on the 3x3x5 grid", me,
      Q, [] {
        Worst w;
        for (const auto& x : {q(1, 2), Real(1), q(3, 2)})
          for (const auto& k : {Real(1), Real(2), K::e()})
            for (long n = 0; n <= 4; ++n)
              w.add(mellin_quad(x, k, n), mellin_closed(x, k, n));
        return w.done();
      });
  num("EQ-4.4.192", "4.4.192",
      "second log-moment = Gamma(x)/k^x [(psi(x) - log k)^2 + zeta(2,x)]", me, Q, [] {
        Worst w;
        for (const auto& x : {q(1, 2), q(3, 2)})
          for (const auto& k : {Real(2), Real(3)}) {
            Real lk = log(k);
            Real rhs = exp(log_gamma(x)) / pow(k, x) *
                       (sqr(digamma(x) - lk) + hurwitz_value(Real(2), x));
            w.add(mellin_quad(x, k, 2), rhs);
          }
        return w.done();
      });
  num("EQ-4.4.190", "4.4.190", "Gamma''(x) = Gamma(x)[psi(x)^2 + zeta(2,x)] by quadrature",
      me, Q, [] {
        Worst w;
        for (const auto& x : {q(1, 2), Real(1), q(5, 2)})
          w.add(mellin_quad(x, Real(1), 2),
                exp(log_gamma(x)) * (sqr(digamma(x)) + hurwitz_value(Real(2), x)));
        return w.done();
      });
  num("EQ-4.4.194", "4.4.194", "Gamma'''(1) = -gamma^3 - gamma pi^2/2 - 2 zeta(3)", me, T,
      [] {
        Real g = K::euler();
        return pair(gamma_deriv(3, Real(1)),
                    -pow(g, 3L) - g * sqr(pi()) / 2 - 2 * zeta(3));
      });
  num("EQ-4.4.194-quad", "4.4.194", "int e^{-u} log^3 u = -gamma^3 - gamma pi^2/2 - 2 zeta(3)",
      me, Q, [] {
        Real g = K::euler();
        return pair(mellin_quad(Real(1), Real(1), 3),
                    -pow(g, 3L) - g * sqr(pi()) / 2 - 2 * zeta(3));
      });
  num("EQ-4.4.180", "4.4.180", "B_{2n} = 4n(-1)^{n+1} int t^{2n-1}/(e^{2 pi t} - 1), n = 1..3",
      me, Q, [] {
        Worst w;
        for (long n = 1; n <= 3; ++n) {
          Real I = integrate0inf([n](const Real& t) {
                     return pow(t, 2 * n - 1) / expm1(2 * pi() * t);
                   }).value;
          Real rhs = 4 * n * I;
          w.add(bernoulli_real(2 * n), n % 2 ? rhs : -rhs);
        }
        return w.done();
      });
  num("EQ-4.4.248a", "4.4.248a", "Binet's integral for log Gamma(x+1), x = 1/2, 1, 3", me, Q,
      [] {
        Worst w;
        for (const auto& x : {q(1, 2), Real(1), Real(3)}) {
          Real I = integrate0inf([x](const Real& t) {
                     return binet_kernel(t) * exp(-x * t);
                   }).value;
          Real rhs = (x + q(1, 2)) * log(x) - x + log(2 * pi()) / 2 + I;
          w.add(log_gamma(x + 1), rhs);
        }
        return w.done();
      });

  std::sort(v.begin(), v.end(),
            [](const Identity& a, const Identity& b) { return a.id < b.id; });
  return v;
}

inline Real class_tolerance(const Identity& e, const PrecisionContext& ctx) {
  long P = ctx.target_bits;
  switch (e.tol_class) {
    case TolClass::Tight: return pow2(-(P - 8));
    case TolClass::Quad: return Real("1e-25") * pow2(128 - P);
    case TolClass::Stated:
    case TolClass::Advisory: return Real(std::to_string(e.stated_tol));
  }
  return Real(0);
}

inline std::string decimal(const Rational& r) {
  if (r == 0) return "0";
  PrecisionScope ps(128);
  return to_string(Real(r), 6);
}

}  // namespace detail

inline const std::vector<Identity>& catalog() {
  static const std::vector<Identity> c = detail::build_catalog();
  return c;
}

inline const Identity* find_identity(const std::string& id) {
  for (const auto& e : catalog())
    if (e.id == id) return &e;
  return nullptr;
}

// tags that the coverage audit accepts without a catalog entry
inline const std::vector<std::pair<std::string, std::string>>& coverage_skips() {
  static const std::vector<std::pair<std::string, std::string>> s{
      {"4.4.118", "special cases of the finite families in EQ-4.4.123 and EQ-4.4.127"},
      {"4.4.134", "intermediate step between EQ-4.4.130 and the Larcombe entries"},
      {"4.4.138a", "proof step; its conclusion is checked by EQ-4.4.135-p1..p3"},
      {"4.4.138b", "proof step; its conclusion is checked by EQ-4.4.136"},
      {"4.4.139", "log-moment representation of harmonic numbers, exercised by the INT entries"},
      {"4.4.155h", "finite moment formula; the summed version is EQ-4.4.155l"},
      {"4.4.155zi", "finite log-moment formula; summed forms are in the euler tag"},
      {"4.4.156f", "same statement as EQ-4.4.168i"},
      {"4.4.167r", "antiderivative of the EQ-4.4.167q integrand"},
      {"4.4.168e", "folded into the INT entries"},
      {"4.4.187", "general Gamma log-moment formula; instances are EQ-4.4.190, EQ-4.4.192, EQ-4.4.194 and INT-I22"},
      {"4.4.229a", "derivation of the log Gamma Fourier coefficients; results are EQ-4.4.229f and EQ-4.4.229h"},
      {"4.4.229hii", "Fourier coefficients of zeta'(-1,t); the sine part is EQ-4.4.229hi"},
      {"4.4.233l", "log-moment integrals covered by INT-I1..I5"},
      {"4.4.233t", "log-moment integrals covered by INT-I1..I5"},
      {"4.4.238b", "folded into INT-I25"},
      {"4.4.244", "folded into INT-I7"},
      {"4.4.246d", "theorem statement; its instances are INT-I27"},
      {"4.4.210a", "variant of ADV-4.4.210 with the same slow convergence"},
      {"4.4.225", "definition of log A, used by EQ-4.4.228ci and EQ-4.4.228ti"},
      {"4.4.79", "quoted binomial-transform formula, same as EQ-4.4.24a"},
      {"4.4.248", "exponentiated form of EQ-4.4.248a"},
      {"4.4.249", "asymptotic series used inside log_gamma itself"},
      {"4.3.126", "Barnes G relation implemented by barnes_log_g, checked by EQ-4.4.228ti"},
  };
  return s;
}

// tags named individually in the scope statement (range endpoints included)
inline const std::vector<std::string>& in_scope_tags() {
  static const std::vector<std::string> t{
      "4.4.118", "4.4.134", "4.4.135", "4.4.136", "4.4.138a", "4.4.138b", "4.4.155ziii", "4.4.155ziv", "4.4.169", "4.4.172b", "4.4.242",
      "4.4.139", "4.4.155zi", "4.4.155h", "4.4.155q", "4.4.155y", "4.4.233l", "4.4.233t", "4.4.235", "4.4.238a", "4.4.246",
      "4.4.156a", "4.4.156f", "4.4.163", "4.4.167", "4.4.168p", "4.4.230", "4.4.233a", "4.4.234", "4.4.246d", "4.4.247a", "4.4.247fi", "4.4.167h", "4.4.167k",
      "4.4.167q", "4.4.167r", "4.4.168c", "4.4.168e", "4.4.238b", "4.4.239a", "4.4.244", "4.4.245n", "4.4.195", "4.4.192", "4.4.194", "4.4.187",
      "4.4.196", "4.4.201", "4.4.206", "4.4.210", "4.4.210a", "4.4.229a", "4.4.229hii", "4.4.229i", "4.4.229iv", "4.4.229l", "4.4.229t", "4.4.229y", "4.4.228r", "4.4.219", "4.4.225", "4.4.228ci", "4.3.126", "4.4.228ti", "4.4.228d", "4.4.223", "4.4.213a", "4.4.213e",
      "4.4.138d", "4.4.24a", "4.4.79",
      "4.4.248", "4.4.249", "4.4.252a",
      "4.4.229n",
  };
  return t;
}

// in-scope tags with neither a catalog entry nor a skip reason
inline std::vector<std::string> coverage_gaps() {
  std::set<std::string> have;
  for (const auto& e : catalog()) have.insert(e.eq);
  for (const auto& [tag, why] : coverage_skips()) have.insert(tag);
  std::vector<std::string> gaps;
  for (const auto& t : in_scope_tags())
    if (!have.count(t)) gaps.push_back(t);
  return gaps;
}

inline ReportEntry verify_entry(const PrecisionContext& ctx, const Identity& e,
                                const VerifyOptions& opt = {}) {
  ReportEntry r;
  r.id = e.id;
  r.eq = e.eq;
  r.precision_bits = ctx.target_bits;
  auto t0 = std::chrono::steady_clock::now();
  auto soft_fail = [&] {
    return e.tol_class == TolClass::Advisory ? Status::Advisory : Status::Fail;
  };
  try {
    if (e.kind == IdentityKind::ExactRational) {
      ExactCheck c = e.exact();
      r.exact_equal = c.equal;
      r.residual = detail::decimal(c.worst);
      r.status = c.equal ? Status::Pass : Status::Fail;
      r.note = c.note;
    } else {
      ContextScope cs(ctx);
      NumericCheck c = e.numeric();
      Real res = abs(c.lhs - c.rhs);
      Real tol = opt.tol ? *opt.tol : detail::class_tolerance(e, ctx);
      Real bound = tol * max(Real(1), abs(c.rhs));
      r.residual = to_string(res, 6);
      bool ok = res < bound && c.failure.empty();
      r.note = c.failure.empty() ? c.note : c.failure;
      if (ok && opt.ladder) {
        PrecisionContext hi = ctx;
        hi.target_bits = 2 * ctx.target_bits;
        ContextScope cs2(hi);
        NumericCheck c2 = e.numeric();
        if (abs(c2.lhs - c.lhs) >= bound) {
          ok = false;
          r.note = "precision ladder rungs disagree";
        }
      }
      r.status = ok ? Status::Pass : soft_fail();
    }
  } catch (const std::exception& ex) {
    r.status = soft_fail();
    r.residual = "nan";
    r.note = std::string("error: ") + ex.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline ReportEntry verify(const PrecisionContext& ctx, const std::string& id,
                          const VerifyOptions& opt = {}) {
  const Identity* e = find_identity(id);
  if (!e) throw DomainError("unknown identity id: " + id);
  return verify_entry(ctx, *e, opt);
}

inline void tally(VerificationReport& rep) {
  rep.pass = rep.fail = rep.advisory = 0;
  for (const auto& r : rep.results) {
    if (r.status == Status::Pass) ++rep.pass;
    else if (r.status == Status::Fail) ++rep.fail;
    else ++rep.advisory;
  }
}

inline VerificationReport verify_ids(const PrecisionContext& ctx,
                                     const std::vector<std::string>& ids,
                                     const VerifyOptions& opt = {}) {
  VerificationReport rep;
  rep.precision_bits = ctx.target_bits;
  rep.guard_bits = ctx.guard_bits;
  std::vector<std::string> sorted(ids);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const auto& id : sorted) rep.results.push_back(verify(ctx, id, opt));
  tally(rep);
  return rep;
}

// catalog order is id order, so the report is ordered by id
inline VerificationReport verify_all(const PrecisionContext& ctx,
                                     const TagFilter& filter = all_identities(),
                                     const VerifyOptions& opt = {}) {
  VerificationReport rep;
  rep.precision_bits = ctx.target_bits;
  rep.guard_bits = ctx.guard_bits;
  for (const auto& e : catalog())
    if (filter(e)) rep.results.push_back(verify_entry(ctx, e, opt));
  tally(rep);
  return rep;
}

inline nlohmann::json to_json(const VerificationReport& rep) {
  nlohmann::json j;
  j["run"] = {{"precision_bits", rep.precision_bits}, {"guard_bits", rep.guard_bits}};
  j["results"] = nlohmann::json::array();
  for (const auto& r : rep.results)
    j["results"].push_back({{"id", r.id},
                            {"eq", r.eq},
                            {"status", to_string(r.status)},
                            {"residual", r.residual},
                            {"seconds", r.seconds}});
  j["summary"] = {{"pass", rep.pass}, {"fail", rep.fail}, {"advisory", rep.advisory}};
  return j;
}

inline std::string to_text(const VerificationReport& rep) {
  std::string out;
  for (const auto& r : rep.results) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, r.seconds, std::chars_format::fixed, 3);
    out += r.id + "  " + to_string(r.status) + "  residual=" + r.residual + "  " +
           std::string(buf, res.ptr) + "s";
    if (!r.note.empty()) out += "  (" + r.note + ")";
    out += "\n";
  }
  out += "precision " + std::to_string(rep.precision_bits) + " bits, guard " +
         std::to_string(rep.guard_bits) + ": " + std::to_string(rep.pass) + " pass, " +
         std::to_string(rep.fail) + " fail, " + std::to_string(rep.advisory) +
         " advisory\n";
  return out;
}

// catalog metadata for documentation tooling
inline nlohmann::json catalog_json() {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& e : catalog())
    j.push_back({{"id", e.id},
                 {"eq", e.eq},
                 {"description", e.description},
                 {"kind", to_string(e.kind)},
                 {"tol_class", to_string(e.tol_class)},
                 {"tags", e.tags}});
  return j;
}

}  // namespace zf
