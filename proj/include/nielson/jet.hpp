#pragma once

// Second-order forward-mode jets.
//
// A Jet<N> carries a value together with its gradient and Hessian with
// respect to N seed variables. The basis functions are written once as
// templates over their scalar type; instantiating them with Jet<1> or Jet<2>
// yields exact first and second derivatives of the closed-form expressions.

#include <cmath>

#include <Eigen/Core>

namespace nielson {

template <int N>
struct Jet {
  using Gradient = Eigen::Matrix<double, N, 1>;
  using Hessian = Eigen::Matrix<double, N, N>;

  double v = 0.0;
  Gradient d = Gradient::Zero();
  Hessian h = Hessian::Zero();

  Jet() = default;
  Jet(double value) : v(value) {}  // NOLINT: implicit constants are intended
  Jet(double value, const Gradient& grad) : v(value), d(grad) {}
  Jet(double value, const Gradient& grad, const Hessian& hess) : v(value), d(grad), h(hess) {}

  /// Independent variable number `index` with the given value.
  static Jet variable(double value, int index) {
    Jet j(value);
    j.d(index) = 1.0;
    return j;
  }

  Jet& operator+=(const Jet& o) {
    v += o.v;
    d += o.d;
    h += o.h;
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    v -= o.v;
    d -= o.d;
    h -= o.h;
    return *this;
  }
  Jet& operator*=(const Jet& o) {
    *this = *this * o;
    return *this;
  }
  Jet& operator/=(const Jet& o) {
    *this = *this / o;
    return *this;
  }

  friend Jet operator-(const Jet& a) { return Jet(-a.v, -a.d, -a.h); }
  friend Jet operator+(const Jet& a, const Jet& b) { return Jet(a.v + b.v, a.d + b.d, a.h + b.h); }
  friend Jet operator-(const Jet& a, const Jet& b) { return Jet(a.v - b.v, a.d - b.d, a.h - b.h); }
  friend Jet operator*(const Jet& a, const Jet& b) {
    return Jet(a.v * b.v, a.d * b.v + b.d * a.v,
               a.h * b.v + b.h * a.v + a.d * b.d.transpose() + b.d * a.d.transpose());
  }
  friend Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }

  friend Jet operator+(const Jet& a, double s) { return Jet(a.v + s, a.d, a.h); }
  friend Jet operator+(double s, const Jet& a) { return Jet(a.v + s, a.d, a.h); }
  friend Jet operator-(const Jet& a, double s) { return Jet(a.v - s, a.d, a.h); }
  friend Jet operator-(double s, const Jet& a) { return Jet(s - a.v, -a.d, -a.h); }
  friend Jet operator*(const Jet& a, double s) { return Jet(a.v * s, a.d * s, a.h * s); }
  friend Jet operator*(double s, const Jet& a) { return Jet(a.v * s, a.d * s, a.h * s); }
  friend Jet operator/(const Jet& a, double s) { return Jet(a.v / s, a.d / s, a.h / s); }
  friend Jet operator/(double s, const Jet& a) { return s * reciprocal(a); }

  /// f(a) given f, f', f'' at a.v.
  friend Jet chain(const Jet& a, double f0, double f1, double f2) {
    return Jet(f0, f1 * a.d, f1 * a.h + f2 * a.d * a.d.transpose());
  }

  friend Jet reciprocal(const Jet& a) {
    const double r = 1.0 / a.v;
    return chain(a, r, -r * r, 2.0 * r * r * r);
  }
  friend Jet sin(const Jet& a) {
    const double s = std::sin(a.v);
    return chain(a, s, std::cos(a.v), -s);
  }
  friend Jet cos(const Jet& a) {
    const double c = std::cos(a.v);
    return chain(a, c, -std::sin(a.v), -c);
  }
  friend Jet sinh(const Jet& a) {
    const double s = std::sinh(a.v);
    return chain(a, s, std::cosh(a.v), s);
  }
  friend Jet cosh(const Jet& a) {
    const double c = std::cosh(a.v);
    return chain(a, c, std::sinh(a.v), c);
  }
};

/// Integer power by repeated multiplication; works for double and jets.
template <class T>
T ipow(const T& x, int n) {
  T result(1.0);
  for (int i = 0; i < n; ++i) result = result * x;
  return result;
}

inline double value_of(double x) { return x; }
template <int N>
double value_of(const Jet<N>& x) {
  return x.v;
}

}  // namespace nielson
