#pragma once

// Real: a value-semantic wrapper over mpfr_t.  New values are created at the
// thread's current working precision, which PrecisionScope/ContextScope set.

#include <mpfr.h>
#include <gmpxx.h>

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

namespace zf {

struct ZfError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : ZfError {
  using ZfError::ZfError;
};
struct PrecisionUnstable : ZfError {
  using ZfError::ZfError;
};
struct TermLimitExceeded : ZfError {
  using ZfError::ZfError;
};

struct PrecisionContext {
  long target_bits = 128;
  long guard_bits = 32;
  long max_terms = 10000000;

  long work_bits() const { return target_bits + guard_bits; }
  bool operator==(const PrecisionContext&) const = default;
};

inline PrecisionContext ctx_new(long target_bits) {
  if (target_bits < 16)
    throw DomainError("precision must be at least 16 bits");
  return PrecisionContext{target_bits, 32, 10000000};
}

namespace detail {
inline thread_local mpfr_prec_t tl_prec = 160;
inline thread_local PrecisionContext tl_ctx{};
}  // namespace detail

inline mpfr_prec_t wp() { return detail::tl_prec; }
inline const PrecisionContext& current_ctx() { return detail::tl_ctx; }

class PrecisionScope {
 public:
  explicit PrecisionScope(long bits) : saved_(detail::tl_prec) {
    detail::tl_prec = bits;
  }
  ~PrecisionScope() { detail::tl_prec = saved_; }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  mpfr_prec_t saved_;
};

// Installs a context for the duration of a public call.
class ContextScope {
 public:
  explicit ContextScope(const PrecisionContext& c)
      : saved_ctx_(detail::tl_ctx), saved_prec_(detail::tl_prec) {
    if (c.target_bits < 16 || c.guard_bits < 8)
      throw DomainError("invalid precision context");
    detail::tl_ctx = c;
    detail::tl_prec = c.work_bits();
  }
  ~ContextScope() {
    detail::tl_ctx = saved_ctx_;
    detail::tl_prec = saved_prec_;
  }
  ContextScope(const ContextScope&) = delete;
  ContextScope& operator=(const ContextScope&) = delete;

 private:
  PrecisionContext saved_ctx_;
  mpfr_prec_t saved_prec_;
};

inline void charge_terms(long n) {
  if (n > detail::tl_ctx.max_terms)
    throw TermLimitExceeded("series exceeded max_terms=" +
                            std::to_string(detail::tl_ctx.max_terms));
}

class Real {
 public:
  Real() {
    mpfr_init2(v_, wp());
    mpfr_set_zero(v_, 1);
  }
  Real(int x) : Real(long(x)) {}
  Real(long x) {
    mpfr_init2(v_, wp());
    mpfr_set_si(v_, x, MPFR_RNDN);
  }
  Real(unsigned long x) {
    mpfr_init2(v_, wp());
    mpfr_set_ui(v_, x, MPFR_RNDN);
  }
  Real(long long x) : Real(long(x)) {}
  explicit Real(double x) {
    mpfr_init2(v_, wp());
    mpfr_set_d(v_, x, MPFR_RNDN);
  }
  Real(const mpz_class& z) {
    mpfr_init2(v_, wp());
    mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
  }
  Real(const mpq_class& q) {
    mpfr_init2(v_, wp());
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  explicit Real(const std::string& s) {
    mpfr_init2(v_, wp());
    char* end = nullptr;
    mpfr_strtofr(v_, s.c_str(), &end, 10, MPFR_RNDN);
    if (s.empty() || *end != '\0' || !mpfr_number_p(v_)) {
      mpfr_clear(v_);
      throw DomainError("not a decimal number: " + s);
    }
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  long prec() const { return long(mpfr_get_prec(v_)); }

  // raises storage to the working precision before in-place arithmetic
  void widen() {
    if (mpfr_get_prec(v_) < wp()) mpfr_prec_round(v_, wp(), MPFR_RNDN);
  }

  Real& operator+=(const Real& o) {
    widen();
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator-=(const Real& o) {
    widen();
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator*=(const Real& o) {
    widen();
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator/=(const Real& o) {
    widen();
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator*=(long k) {
    widen();
    mpfr_mul_si(v_, v_, k, MPFR_RNDN);
    return *this;
  }
  Real& operator/=(long k) {
    widen();
    mpfr_div_si(v_, v_, k, MPFR_RNDN);
    return *this;
  }
  Real& operator*=(int k) { return *this *= long(k); }
  Real& operator/=(int k) { return *this /= long(k); }

  Real operator-() const {
    Real r;
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  friend Real operator+(const Real& a, const Real& b) {
    Real r;
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a, const Real& b) {
    Real r;
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, const Real& b) {
    Real r;
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(const Real& a, const Real& b) {
    Real r;
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, long k) {
    Real r;
    mpfr_mul_si(r.v_, a.v_, k, MPFR_RNDN);
    return r;
  }
  friend Real operator*(long k, const Real& a) { return a * k; }
  friend Real operator*(const Real& a, int k) { return a * long(k); }
  friend Real operator*(int k, const Real& a) { return a * long(k); }
  friend Real operator/(const Real& a, long k) {
    Real r;
    mpfr_div_si(r.v_, a.v_, k, MPFR_RNDN);
    return r;
  }
  friend Real operator/(const Real& a, int k) { return a / long(k); }
  friend Real operator/(long k, const Real& a) {
    Real r;
    mpfr_si_div(r.v_, k, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(int k, const Real& a) { return long(k) / a; }
  friend Real operator+(const Real& a, long k) {
    Real r;
    mpfr_add_si(r.v_, a.v_, k, MPFR_RNDN);
    return r;
  }
  friend Real operator+(long k, const Real& a) { return a + k; }
  friend Real operator+(const Real& a, int k) { return a + long(k); }
  friend Real operator+(int k, const Real& a) { return a + long(k); }
  friend Real operator-(const Real& a, long k) {
    Real r;
    mpfr_sub_si(r.v_, a.v_, k, MPFR_RNDN);
    return r;
  }
  friend Real operator-(long k, const Real& a) {
    Real r;
    mpfr_si_sub(r.v_, k, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a, int k) { return a - long(k); }
  friend Real operator-(int k, const Real& a) { return long(k) - a; }

  // doubles would silently decay to long in the overloads above
  friend Real operator+(const Real&, double) = delete;
  friend Real operator+(double, const Real&) = delete;
  friend Real operator-(const Real&, double) = delete;
  friend Real operator-(double, const Real&) = delete;
  friend Real operator*(const Real&, double) = delete;
  friend Real operator*(double, const Real&) = delete;
  friend Real operator/(const Real&, double) = delete;
  friend Real operator/(double, const Real&) = delete;

  friend bool operator<(const Real& a, const Real& b) {
    return mpfr_less_p(a.v_, b.v_);
  }
  friend bool operator>(const Real& a, const Real& b) {
    return mpfr_greater_p(a.v_, b.v_);
  }
  friend bool operator<=(const Real& a, const Real& b) {
    return mpfr_lessequal_p(a.v_, b.v_);
  }
  friend bool operator>=(const Real& a, const Real& b) {
    return mpfr_greaterequal_p(a.v_, b.v_);
  }
  friend bool operator==(const Real& a, const Real& b) {
    return mpfr_equal_p(a.v_, b.v_);
  }
  friend bool operator!=(const Real& a, const Real& b) {
    return !mpfr_equal_p(a.v_, b.v_);
  }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_); }
  bool is_finite() const { return mpfr_number_p(v_); }
  bool is_integer() const { return mpfr_integer_p(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  // binary exponent e with 2^(e-1) <= |x| < 2^e; very negative for zero
  long exponent() const {
    return mpfr_zero_p(v_) ? -(1L << 40) : long(mpfr_get_exp(v_));
  }

 private:
  mpfr_t v_;
};

// ---- elementary functions at the working precision ----

#define ZF_UNARY(name, fn)             \
  inline Real name(const Real& x) {    \
    Real r;                            \
    fn(r.raw(), x.raw(), MPFR_RNDN);   \
    return r;                          \
  }
ZF_UNARY(log, mpfr_log)
ZF_UNARY(log1p, mpfr_log1p)
ZF_UNARY(exp, mpfr_exp)
ZF_UNARY(expm1, mpfr_expm1)
ZF_UNARY(sqrt, mpfr_sqrt)
ZF_UNARY(sin, mpfr_sin)
ZF_UNARY(cos, mpfr_cos)
ZF_UNARY(tan, mpfr_tan)
ZF_UNARY(cot, mpfr_cot)
ZF_UNARY(sinh, mpfr_sinh)
ZF_UNARY(cosh, mpfr_cosh)
ZF_UNARY(tanh, mpfr_tanh)
ZF_UNARY(atan, mpfr_atan)
ZF_UNARY(abs, mpfr_abs)
#undef ZF_UNARY

inline Real floor(const Real& x) {
  Real r;
  mpfr_floor(r.raw(), x.raw());
  return r;
}
inline Real pow(const Real& x, const Real& y) {
  Real r;
  mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}
inline Real pow(const Real& x, long k) {
  Real r;
  mpfr_pow_si(r.raw(), x.raw(), k, MPFR_RNDN);
  return r;
}
inline Real ldexp(const Real& x, long e) {
  Real r;
  mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}
inline Real sqr(const Real& x) {
  Real r;
  mpfr_sqr(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
inline Real min(const Real& a, const Real& b) { return a < b ? a : b; }
inline Real max(const Real& a, const Real& b) { return a < b ? b : a; }

// 2^e exactly
inline Real pow2(long e) {
  Real r(1);
  mpfr_mul_2si(r.raw(), r.raw(), e, MPFR_RNDN);
  return r;
}

// copy rounded to the given number of bits (round to nearest)
inline Real round_to(const Real& x, long bits) {
  Real r(x);
  mpfr_prec_round(r.raw(), bits, MPFR_RNDN);
  return r;
}

// Decimal rendering with `digits` significant digits, '.' as decimal point,
// independent of the C locale.
inline std::string to_string(const Real& x, int digits) {
  if (!x.is_finite()) return mpfr_nan_p(x.raw()) ? "nan" : "inf";
  if (x.is_zero()) return "0";
  if (digits < 1) digits = 1;
  mpfr_exp_t e10 = 0;
  char* s = mpfr_get_str(nullptr, &e10, 10, size_t(digits), x.raw(), MPFR_RNDN);
  std::string m(s);
  mpfr_free_str(s);
  bool neg = false;
  if (!m.empty() && m[0] == '-') {
    neg = true;
    m.erase(0, 1);
  }
  // value = 0.m * 10^e10
  std::string out;
  long e = long(e10);
  if (e > -5 && e <= 21) {
    if (e <= 0) {
      out = "0." + std::string(size_t(-e), '0') + m;
    } else if (size_t(e) >= m.size()) {
      out = m + std::string(size_t(e) - m.size(), '0');
    } else {
      out = m.substr(0, size_t(e)) + "." + m.substr(size_t(e));
    }
  } else {
    out = m.substr(0, 1);
    if (m.size() > 1) out += "." + m.substr(1);
    out += "e" + std::to_string(e - 1);
  }
  return neg ? "-" + out : out;
}

// number of decimal digits that `bits` binary digits support, minus two
inline int display_digits(long bits) {
  int d = int(std::floor(double(bits) * 0.30102999566398120)) - 2;
  return d < 1 ? 1 : d;
}

}  // namespace zf
