#include <zetaforge/mpcore.hpp>
#include <zetaforge/specfun.hpp>

#include "oracle.hpp"

#include <random>

using namespace zf;
using oracle::near;
using oracle::ref;

namespace {

const PrecisionContext c128 = ctx_new(128);

Real q(long p, long r) { return Real(p) / r; }

struct Wide {
  PrecisionScope ps{320};
};

}  // namespace

TEST(Zeta, AgainstMpfr) {
  Wide w;
  for (const char* s : {"2", "3", "4.5", "0.5", "-0.5", "-2.5", "1.0001", "30", "-11.25"}) {
    Real x(std::string{s});
    EXPECT_TRUE(near(zeta(c128, x), oracle::zeta(x), 124)) << s;
  }
}

TEST(Zeta, ExactAtNegativeIntegers) {
  Wide w;
  EXPECT_EQ(zeta(c128, Real(0)), q(-1, 2));
  EXPECT_TRUE(near(zeta(c128, Real(-1)), q(-1, 12), 127));
  EXPECT_TRUE(near(zeta(c128, Real(-3)), q(1, 120), 127));
  EXPECT_TRUE(zeta(c128, Real(-2)).is_zero());
  EXPECT_TRUE(zeta(c128, Real(-40)).is_zero());
  EXPECT_THROW(zeta(c128, Real(1)), DomainError);
}

TEST(Zeta, FunctionalEquation) {
  // zeta(1-s) = 2 (2 pi)^{-s} cos(pi s/2) Gamma(s) zeta(s)
  Wide w;
  Real pi = oracle::pi();
  for (const char* s : {"0.3", "2.5", "3.7", "-1.5", "6.2"}) {
    Real x(std::string{s});
    Real rhs = 2 * pow(2 * pi, -x) * cos(pi * x / 2) * oracle::gamma(x) * zeta(c128, x);
    EXPECT_TRUE(near(zeta(c128, 1 - x), rhs, 120)) << s;
  }
}

TEST(Zeta, AlternatingAndBeta) {
  Wide w;
  EXPECT_TRUE(near(zeta_alt(c128, Real(3)),
                   ref("0.90154267736969571404980362113358749307373971925537"), 124));
  EXPECT_TRUE(near(zeta_alt(c128, q(1, 2)),
                   ref("0.60489864342163037024726591423595549975976254513025"), 124));
  EXPECT_TRUE(near(zeta_alt(c128, Real(1)), log(Real(2)), 124));
  EXPECT_TRUE(near(dirichlet_beta(c128, Real(2)), oracle::catalan(), 124));
  EXPECT_TRUE(near(dirichlet_beta(c128, Real(3)), pow(oracle::pi(), 3L) / 32, 124));
  EXPECT_TRUE(near(dirichlet_beta(c128, Real(1)), oracle::pi() / 4, 124));
}

TEST(Hurwitz, ValuesAndShift) {
  Wide w;
  EXPECT_TRUE(near(hurwitz_zeta(c128, Real(2), q(1, 3)),
                   ref("10.095597125427094081792004099892516360518904119281"), 122));
  // zeta(s,a) = zeta(s,a+1) + a^{-s}
  for (const char* s : {"2.5", "0.5", "-1.5", "7"})
    for (const char* a : {"0.2", "1.7", "13.25"}) {
      Real S(std::string{s}), A(std::string{a});
      EXPECT_TRUE(near(hurwitz_zeta(c128, S, A),
                       hurwitz_zeta(c128, S, A + 1) + pow(A, -S), 118))
          << s << " " << a;
    }
  EXPECT_THROW(hurwitz_zeta(c128, Real(2), Real(0)), DomainError);
}

TEST(Hurwitz, NegativeIntegersMatchBernoulliPolynomials) {
  // zeta(-n, a) = -B_{n+1}(a)/(n+1); the oracle is the rational polynomial
  Wide w;
  for (long n = 0; n <= 6; ++n)
    for (long p : {1L, 2L, 5L, 7L}) {
      Rational a = make_q(p, 3);
      Rational want = -bernoulli_poly(n + 1, a) / (n + 1);
      EXPECT_TRUE(near(hurwitz_zeta(c128, Real(-n), Real(a)), Real(want), 126))
          << n << " " << a.get_str();
    }
}

TEST(Hurwitz, Derivatives) {
  Wide w;
  EXPECT_TRUE(near(hurwitz_zeta_sderiv(c128, Real(-1), q(1, 2)),
                   ref("0.05382943932689441004790849172729963104553901790259"), 122));
  EXPECT_TRUE(near(hurwitz_zeta_sderiv(c128, Real(-1), q(1, 3)),
                   ref("0.093726201760779427484200899133192867368837286938738"), 122));
  EXPECT_TRUE(near(hurwitz_zeta_sderiv(c128, Real(-2), q(1, 4)),
                   ref("-0.010934576444802394900193374894689198726877194212678"), 122));
  EXPECT_TRUE(near(hurwitz_zeta_sderiv(c128, Real(std::string("0.5")), Real(std::string("0.3"))),
                   ref("-1.8328796367758224103031215686869125680319648246205"), 122));
  EXPECT_TRUE(near(zeta_prime(c128, Real(2)),
                   ref("-0.93754825431584375370257409456786497789786028861483"), 122));
  EXPECT_THROW(zeta_prime(c128, Real(1)), DomainError);
}

TEST(Hurwitz, ReflectionGrids) {
  // zeta'(-1,t) - zeta'(-1,1-t) = Cl_2(2 pi t)/(2 pi)
  // zeta'(-2,t) + zeta'(-2,1-t) = -Cl_3(2 pi t)/(2 pi^2)
  Wide w;
  Real pi = oracle::pi();
  for (auto [a, b] : std::vector<std::pair<long, long>>{{1, 8}, {1, 6}, {1, 4}, {1, 3}, {2, 5}}) {
    Real t = q(a, b);
    Real l1 = hurwitz_zeta_sderiv(c128, Real(-1), t) - hurwitz_zeta_sderiv(c128, Real(-1), 1 - t);
    EXPECT_TRUE(near(l1, clausen(c128, 2, 2 * pi * t) / (2 * pi), 120));
    Real l2 = hurwitz_zeta_sderiv(c128, Real(-2), t) + hurwitz_zeta_sderiv(c128, Real(-2), 1 - t);
    EXPECT_TRUE(near(l2, -clausen(c128, 3, 2 * pi * t) / (2 * sqr(pi)), 120));
  }
}

TEST(Gamma, LogGammaAgainstMpfr) {
  Wide w;
  for (const char* s : {"0.001", "0.5", "1", "2", "3.25", "50.5", "1000.125", "1e-10"}) {
    Real x(std::string{s});
    EXPECT_TRUE(near(log_gamma(c128, x), oracle::lngamma(x), 122)) << s;
  }
  EXPECT_TRUE(log_gamma(c128, Real(1)).is_zero() ||
              abs(log_gamma(c128, Real(1))) < pow2(-125));
  EXPECT_THROW(log_gamma(c128, Real(0)), DomainError);
  EXPECT_THROW(log_gamma(c128, Real(-1)), DomainError);
}

TEST(Gamma, DigammaRecurrenceOnRandomPoints) {
  // psi(x+1) = psi(x) + 1/x at 100 random x, and agreement with MPFR
  Wide w;
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.01, 40.0);
  for (int i = 0; i < 100; ++i) {
    Real x(u(rng));
    Real a = polygamma(c128, 0, x + 1);
    Real b = polygamma(c128, 0, x) + 1 / x;
    EXPECT_TRUE(near(a, b, 116)) << x.to_double();
    EXPECT_TRUE(near(polygamma(c128, 0, x), oracle::digamma(x), 116)) << x.to_double();
  }
}

TEST(Gamma, Polygamma) {
  Wide w;
  Real pi = oracle::pi();
  EXPECT_TRUE(near(polygamma(c128, 0, Real(1)), -oracle::euler(), 124));
  EXPECT_TRUE(near(polygamma(c128, 1, Real(1)), sqr(pi) / 6, 124));
  EXPECT_TRUE(near(polygamma(c128, 0, q(1, 3)),
                   ref("-3.1320337800208063229964190742872688541554282967204"), 122));
  EXPECT_TRUE(near(polygamma(c128, 3, Real(std::string("2.5"))),
                   ref("0.22390584881725205125514750351992606454240048750024"), 120));
  // psi^(k)(x) = (-1)^{k+1} k! zeta(k+1, x)
  for (long k = 1; k <= 5; ++k) {
    Real x = q(7, 4);
    Real f(1);
    for (long i = 2; i <= k; ++i) f *= i;
    Real z = f * hurwitz_zeta(c128, Real(k + 1), x);
    EXPECT_TRUE(near(polygamma(c128, k, x), k % 2 ? z : -z, 118)) << k;
  }
}

TEST(Gamma, DerivativesAgainstFiniteDifferences) {
  // Richardson-extrapolated central differences of MPFR's Gamma at 512 bits
  auto fd = [](long j, const Real& x) {
    PrecisionScope ps(512);
    auto D = [&](const Real& h) {
      Real s(0);
      for (long i = 0; i <= j; ++i) {
        Real c = Real(binomial(j, i));
        Real arg = x + (Real(j) / 2 - i) * h;
        Real t = c * oracle::gamma(arg);
        s += i % 2 ? -t : t;
      }
      return s / pow(h, j);
    };
    Real h = pow2(-30);
    Real d1 = D(h), d2 = D(h / 2);
    return (4 * d2 - d1) / 3;
  };
  for (long j = 1; j <= 4; ++j)
    for (const char* xs : {"1", "2.5", "0.75"}) {
      Real x(std::string{xs});
      Real g = gamma_deriv(ctx_new(256), j, x);
      PrecisionScope ps(512);
      EXPECT_TRUE(near(g, fd(j, x), 80)) << j << " " << xs;
    }
  Wide w;
  EXPECT_TRUE(near(gamma_deriv(c128, 3, Real(1)),
                   ref("-5.4448744564853177340993610041376506895716686944354"), 120));
  EXPECT_TRUE(near(gamma_deriv(c128, 2, Real(std::string("2.5"))),
                   ref("1.3091171559626735323478526378720096441093994678523"), 120));
}

TEST(Polylog, Values) {
  Wide w;
  for (const char* s : {"0.5", "-0.5", "0.99", "-1", "1", "-3", "0.3"}) {
    Real x(std::string{s});
    EXPECT_TRUE(near(polylog(c128, 2, x), oracle::li2(x), 122)) << s;
  }
  EXPECT_TRUE(near(polylog(c128, 3, Real(-3)),
                   ref("-2.3487905545840765578058706698067987781137248428126"), 122));
  EXPECT_TRUE(near(polylog(c128, 5, Real(std::string("0.9"))),
                   ref("0.92926719644600578824247903901073076913222282369983"), 122));
  EXPECT_TRUE(near(polylog(c128, 4, Real(1)), pow(oracle::pi(), 4L) / 90, 124));
  EXPECT_TRUE(near(polylog(c128, 1, q(1, 2)), log(Real(2)), 124));
}

TEST(Clausen, Values) {
  Wide w;
  Real pi = oracle::pi();
  EXPECT_TRUE(near(clausen(c128, 2, pi / 2), oracle::catalan(), 124));
  EXPECT_TRUE(near(clausen(c128, 2, Real(1)),
                   ref("1.0139591323607685042945743388859146875611792800777"), 122));
  EXPECT_TRUE(near(clausen(c128, 3, Real(1)),
                   ref("0.44857300728001739775020824743177665656501447360503"), 122));
  EXPECT_TRUE(near(clausen(c128, 4, Real(2)),
                   ref("0.86142591693444435673393248999401143673941573757123"), 122));
  // odd in theta for sine type, periodic
  EXPECT_TRUE(near(clausen(c128, 2, -Real(1)), -clausen(c128, 2, Real(1)), 122));
  EXPECT_TRUE(near(clausen(c128, 3, Real(1) + 2 * pi), clausen(c128, 3, Real(1)), 120));
  EXPECT_TRUE(near(clausen(c128, 3, Real(0)), oracle::zeta(Real(3)), 124));
}

TEST(SinIntegral, Values) {
  Wide w;
  EXPECT_TRUE(near(sin_integral(c128, Real(10)),
                   ref("1.6583475942188740493309718793896724806302543483096"), 122));
  EXPECT_TRUE(near(sin_integral(c128, Real(100)),
                   ref("1.5622254668890562933523451388045026772278249805411"), 120));
  EXPECT_TRUE(sin_integral(c128, Real(0)).is_zero());
  EXPECT_THROW(sin_integral(c128, Real(-1)), DomainError);
}

TEST(Barnes, ValuesAndRecurrence) {
  Wide w;
  EXPECT_TRUE(abs(barnes_log_g(c128, Real(1))) < pow2(-124));
  EXPECT_TRUE(abs(barnes_log_g(c128, Real(2))) < pow2(-124));
  EXPECT_TRUE(near(barnes_log_g(c128, q(1, 2)),
                   ref("-0.50543305448969538279768498980834495172139910146662"), 122));
  EXPECT_TRUE(near(barnes_log_g(c128, Real(std::string("1.7"))),
                   ref("0.046277349456604052421032296866486827974609351240473"), 122));
  // G(x+1) = Gamma(x) G(x)
  for (const char* s : {"0.3", "0.5", "0.9"}) {
    Real x(std::string{s});
    EXPECT_TRUE(near(barnes_log_g(c128, x + 1), log_gamma(c128, x) + barnes_log_g(c128, x), 120));
  }
  EXPECT_THROW(barnes_log_g(c128, Real(3)), DomainError);
}

TEST(Kummer, PartialSumsApproachLogGamma) {
  Wide w;
  Real t = q(1, 3);
  Real lg = log_gamma(c128, t);
  Real e1 = abs(kummer_partial(c128, t, 1000) - lg);
  Real e2 = abs(kummer_partial(c128, t, 16000) - lg);
  EXPECT_LT(e2, e1);
  EXPECT_LT(e2.to_double(), 1e-3);
}

TEST(Precision, ResultsRoundedToTarget) {
  auto c = ctx_new(80);
  EXPECT_EQ(zeta(c, Real(3)).prec(), 80);
  EXPECT_EQ(log_gamma(c, q(1, 2)).prec(), 80);
  EXPECT_EQ(clausen(c, 2, Real(1)).prec(), 80);
}
