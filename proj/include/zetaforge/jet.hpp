#pragma once

// Truncated Taylor series in one variable with Real coefficients.

#include <zetaforge/real.hpp>

#include <vector>

namespace zf {

class Jet {
 public:
  explicit Jet(int n) : c_(size_t(n)) {}
  Jet(int n, const Real& c0) : c_(size_t(n)) { c_[0] = c0; }
  // c0 + eps
  static Jet variable(int n, const Real& c0) {
    Jet j(n, c0);
    if (n > 1) j.c_[1] = Real(1);
    return j;
  }

  int size() const { return int(c_.size()); }
  Real& operator[](int i) { return c_[size_t(i)]; }
  const Real& operator[](int i) const { return c_[size_t(i)]; }

  Jet& operator+=(const Jet& o) {
    for (int i = 0; i < size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    for (int i = 0; i < size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Jet& operator*=(const Real& k) {
    for (auto& x : c_) x *= k;
    return *this;
  }
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, const Real& k) { return a *= k; }
  friend Jet operator*(const Jet& a, const Jet& b) {
    int n = a.size();
    Jet r(n);
    for (int i = 0; i < n; ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; i + j < n; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
  }
  friend Jet operator/(const Jet& a, const Jet& b) {
    if (b[0].is_zero()) throw DomainError("jet division by zero");
    int n = a.size();
    Jet q(n);
    for (int i = 0; i < n; ++i) {
      Real t = a[i];
      for (int j = 1; j <= i; ++j) t -= b[j] * q[i - j];
      q[i] = t / b[0];
    }
    return q;
  }

  Real max_abs() const {
    Real m(0);
    for (const auto& x : c_) {
      Real ax = abs(x);
      if (ax > m) m = ax;
    }
    return m;
  }

 private:
  std::vector<Real> c_;
};

// exp of a jet: b' = a' b
inline Jet exp(const Jet& a) {
  int n = a.size();
  Jet b(n);
  b[0] = exp(a[0]);
  for (int k = 1; k < n; ++k) {
    Real s(0);
    for (int i = 1; i <= k; ++i) s += a[i] * b[k - i] * long(i);
    b[k] = s / long(k);
  }
  return b;
}

}  // namespace zf
