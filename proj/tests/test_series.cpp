#include <zetaforge/mpcore.hpp>
#include <zetaforge/series.hpp>
#include <zetaforge/specfun.hpp>

#include "oracle.hpp"

using namespace zf;
using oracle::near;
using oracle::ref;

namespace {

const PrecisionContext c128 = ctx_new(128);

Real q(long p, long r) { return Real(p) / r; }
Real Z(long s) { return oracle::zeta(Real(s)); }

struct Wide {
  PrecisionScope ps{320};
};

}  // namespace

TEST(SumSeries, PositiveWithTailBound) {
  Wide w;
  SeriesSpec s;
  s.term = [](long n) { return 1 / sqr(Real(n)); };
  // sum_{k>n} 1/k^2 < 1/n, too slow; use the integral estimate as a correction
  s.tail_bound = [](long n, const Real&) { return 1 / pow(Real(n), 3L); };
  s.tail_estimate = [](long n) { return 1 / Real(n) - 1 / (2 * sqr(Real(n))); };
  auto c = ctx_new(24);
  EXPECT_TRUE(near(sum_series(c, s), sqr(oracle::pi()) / 6, 16));

  SeriesSpec g;
  g.term = [](long n) { return pow2(-n); };
  g.tail_bound = [](long n, const Real&) { return pow2(-n); };
  EXPECT_TRUE(near(sum_series(c128, g), Real(1), 126));
}

TEST(SumSeries, AlternatingAndTermLimit) {
  Wide w;
  SeriesSpec a;
  a.kind = SeriesKind::Alternating;
  a.start = 0;
  a.term = [](long n) {
    Real t = pow2(-2 * n) / (2 * n + 1);
    return n % 2 ? -t : t;
  };
  // atan(1/2)
  EXPECT_TRUE(near(sum_series(c128, a) / 2, atan(Real(1) / 2), 124));

  SeriesSpec slow;
  slow.term = [](long n) { return 1 / Real(n); };
  slow.tail_bound = [](long, const Real&) { return Real(1); };
  auto c = ctx_new(64);
  c.max_terms = 1000;
  EXPECT_THROW(sum_series(c, slow), TermLimitExceeded);
  SeriesSpec none;
  EXPECT_THROW(sum_series(c, none), DomainError);
}

TEST(Acceleration, EulerTransform) {
  Wide w;
  // sum (-1)^n/(n+1) = log 2, sum (-1)^n/(2n+1) = pi/4
  EXPECT_TRUE(near(euler_transform(c128, [](long n) { return 1 / Real(n + 1); }),
                   log(Real(2)), 124));
  EXPECT_TRUE(near(euler_transform(c128, [](long n) { return 1 / Real(2 * n + 1); }),
                   oracle::pi() / 4, 124));
  EXPECT_TRUE(near(euler_transform(c128, [](long n) { return 1 / sqr(Real(2 * n + 1)); }),
                   oracle::catalan(), 124));
}

TEST(Acceleration, BinomialTransformHurwitzAlt) {
  Wide w;
  BinomialTransformSpec b;
  b.f = [](long k) {
    Real t = 1 / sqr(Real(k + 1));
    return k % 2 ? -t : t;
  };
  EXPECT_TRUE(near(binomial_transform_sum(c128, b), sqr(oracle::pi()) / 12, 122));
}

TEST(Acceleration, DivergenceDetected) {
  BinomialTransformSpec b;
  b.f = [](long k) { return 1 / Real(k); };
  b.k0 = 1;
  b.scale_shift = 0;
  b.alternating = false;
  EXPECT_THROW(binomial_transform_sum(c128, b), DivergentSeries);
}

TEST(EulerSums, ClassicalValues) {
  Wide w;
  Real pi = oracle::pi();
  EXPECT_TRUE(near(euler_sum(c128, 1, Real(2)), 2 * Z(3), 122));
  EXPECT_TRUE(near(euler_sum(c128, 1, Real(3)), pow(pi, 4L) / 72, 122));
  EXPECT_TRUE(near(euler_sum(c128, 2, Real(2)), Real(7) / 4 * Z(4), 122));
  EXPECT_TRUE(near(euler_sum(c128, 3, Real(2)), Real(11) / 2 * Z(5) - 2 * Z(2) * Z(3), 122));
  EXPECT_TRUE(near(euler_sum_product(c128, {1, 1}, Real(2)), Real(17) / 4 * Z(4), 122));
  // Euler's formula for sum H_n/n^q at q = 4
  EXPECT_TRUE(near(euler_sum(c128, 1, Real(4)), 3 * Z(5) - Z(2) * Z(3), 122));
  EXPECT_THROW(euler_sum(c128, 1, Real(1)), DivergentSeries);
}

TEST(EulerSums, SymmetricRelation) {
  Wide w;
  for (auto [p, r] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {3, 4}}) {
    auto [lhs, rhs] = euler_sum_symmetric_check(c128, p, r);
    EXPECT_TRUE(near(lhs, rhs, 120));
    EXPECT_TRUE(near(lhs, Z(p) * Z(r) + Z(p + r), 120));
  }
}

TEST(EulerSums, NonIntegerWeight) {
  // sum H_n/n^q by brute force with a Hurwitz tail at q = 5/2, 96 bits
  auto c = ctx_new(64);
  Real got = euler_sum(c, 1, q(5, 2));
  PrecisionScope ps(200);
  Real s(0), h(0);
  const long N = 200000;
  for (long n = 1; n <= N; ++n) {
    h += 1 / Real(n);
    s += h / pow(Real(n), q(5, 2));
  }
  // tail sum_{n>N} H_n n^{-5/2} ~ (log N + gamma) * 2/(3 N^{3/2}) + ...
  Real tail = (log(Real(N)) + oracle::euler()) * 2 / (3 * pow(Real(N), q(3, 2))) +
              4 / (9 * pow(Real(N), q(3, 2)));
  EXPECT_TRUE(oracle::near_tol(got, s + tail, "1e-11"));
}

TEST(Weighted, AgainstDirectSummation) {
  Wide w;
  EXPECT_TRUE(near(weighted_euler_sum(c128, "W1"),
                   ref("0.751285564474746428374836350944656244228116433"), 124));
  EXPECT_TRUE(near(weighted_euler_sum(c128, "W2"),
                   ref("0.720344856853789020715798957837110906341730711"), 124));
  EXPECT_TRUE(near(weighted_euler_sum(c128, "W3"),
                   ref("-0.394630252139782643273508948369100930721459794"), 124));
  EXPECT_TRUE(near(weighted_euler_sum(c128, "W4"), sqr(Z(3)) + Z(6), 120));
  EXPECT_TRUE(near(weighted_euler_sum(c128, "W5"), Real(7) / 4 * Z(4), 120));
  EXPECT_TRUE(near(weighted_euler_sum(c128, "W6"),
                   ref("1.26573815274672368610011163539872295998959026"), 120));
  EXPECT_TRUE(near(weighted_euler_sum(c128, "W7"), sqr(Z(3)) - Z(6) / 3, 120));
  EXPECT_TRUE(near(weighted_euler_sum(c128, "W8"), Real(2) / 3 * sqr(Z(3)), 120));
  EXPECT_TRUE(near(weighted_euler_sum(c128, "W9"),
                   ref("0.630336558117802359060721733723312143174982637"), 124));
  EXPECT_TRUE(near(weighted_euler_sum(c128, "W10"),
                   ref("0.901542677369695714049803621133587493073739719"), 124));
  EXPECT_THROW(weighted_euler_sum(c128, "W11"), DomainError);
}

TEST(Weighted, PrintedFormsThatHold) {
  ContextScope cs(c128);
  for (const char* f : {"W1", "W4", "W5", "W7", "W10"})
    EXPECT_TRUE(near(detail::weighted_euler_sum(f), detail::weighted_closed(f), 118)) << f;
  for (const char* f : {"W2", "W3", "W6", "W8", "W9"}) {
    EXPECT_TRUE(detail::weighted_has_correction(f));
    EXPECT_TRUE(near(detail::weighted_euler_sum(f), detail::weighted_corrected(f), 118)) << f;
    EXPECT_GT(abs(detail::weighted_euler_sum(f) - detail::weighted_closed(f)).to_double(), 1e-3)
        << f;
  }
}

TEST(GeneratingFunctions, SeriesMatchClosedForms) {
  Wide w;
  EXPECT_TRUE(near(gen_function(c128, "G1", q(1, 2)),
                   ref("0.822467033424113218236207583323012594609474951"), 124));
  EXPECT_TRUE(near(gen_function(c128, "G6", q(1, 3)),
                   ref("0.414188377041604928583400638043855177402006089"), 124));
  for (const char* fam : {"G1", "G2", "G3", "G4", "G6"})
    for (auto [a, b] : std::vector<std::pair<long, long>>{{1, 3}, {1, 2}, {2, 3}}) {
      Real x = q(a, b);
      EXPECT_TRUE(near(gen_function(c128, fam, x), gen_function_closed(c128, fam, x), 118))
          << fam << " " << a << "/" << b;
    }
  for (auto [p, r] : std::vector<std::pair<int, int>>{{2, 2}, {3, 1}, {2, 3}, {4, 1}}) {
    detail::GenArgs g{p, r};
    Real x = q(-1, 2);
    EXPECT_TRUE(near(gen_function(c128, "G7", x, g), gen_function_closed(c128, "G7", x, g), 118));
  }
  EXPECT_THROW(gen_function(c128, "G7", Real(1), detail::GenArgs{2, 2}), DomainError);
  EXPECT_THROW(gen_function(c128, "G9", q(1, 2)), DomainError);
}

TEST(GeneratingFunctions, G1AtHalfIsZeta2Over2) {
  // -Li_2(-1) = pi^2/12
  Wide w;
  EXPECT_TRUE(near(gen_function(c128, "G1", q(1, 2)), sqr(oracle::pi()) / 12, 124));
}

TEST(Knuth, IntegralMatchesDirectSum) {
  Wide w;
  EXPECT_TRUE(near(knuth_hsum(c128, 2, q(1, 2)),
                   ref("0.631966197838167906662448232015275318156671372"), 118));
  EXPECT_TRUE(near(knuth_hsum(c128, 3, Real(1)), pow(oracle::pi(), 4L) / 72, 118));
}

TEST(Gamma, BracketAndSiSum) {
  Wide w;
  auto [a, b] = gamma_euler_bracket(c128, 3);
  EXPECT_EQ(a.prec(), 128);
  EXPECT_TRUE(a.is_finite() && b.is_finite());
  EXPECT_THROW(gamma_euler_bracket(c128, 0), DomainError);
  EXPECT_TRUE(near(si_zeta_sum(c128), pow(oracle::pi(), 3L) / 18, 122));
}

TEST(Limits, LogTimesTailVanishesSlowly) {
  ContextScope cs(ctx_new(64));
  Real a = detail::limit_law(100), b = detail::limit_law(10000);
  EXPECT_LT(b, a);
  EXPECT_LT(b.to_double(), 1e-2);
}
