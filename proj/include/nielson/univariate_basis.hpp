#pragma once

#include <array>
#include <cmath>

#include <Eigen/Core>

#include "nielson/basis_family.hpp"
#include "nielson/jet.hpp"

namespace nielson {

/// Values and derivatives of the four curve basis functions at one point:
/// row k is B_{3,k}, column r is the r-th derivative (r = 0, 1, 2).
using BasisJet = Eigen::Matrix<double, 4, 3>;

/// The four non-negative, normalized, symmetric functions B_{3,0..3} on
/// [0, beta] that weight the control points of every boundary arc.
///
/// Immutable after construction.
class UnivariateBasis {
 public:
  static constexpr int max_derivative_order = 2;

  explicit UnivariateBasis(BasisFamily family);

  const BasisFamily& family() const { return family_; }
  FamilyKind kind() const { return family_.kind; }
  double beta() const { return family_.beta; }

  /// d^r B_{3,k} / dx^r at x. Throws DomainError outside [0, beta] or for r > 2.
  double eval(int k, double x, int r = 0) const;

  /// All four functions with derivatives up to order two.
  BasisJet eval_all(double x) const;

  /// The four function values for any scalar type supporting the jet operations.
  template <class T>
  std::array<T, 4> values(const T& x) const;

  /// Normalizing coefficients c_{4,r}, r = 0..4, of the degree-4 trigonometric or
  /// hyperbolic B-basis (unused by the other families).
  const std::array<double, 5>& normalizing_coefficients() const { return coeff_; }

 private:
  double clamp_to_domain(double x) const;

  BasisFamily family_;
  std::array<double, 5> coeff_{};
  double at_scale_ = 0.0;   // sin(beta) / ((2 sin b - b - b cos b)(b - sin b))
  double at_outer_ = 0.0;   // 1 / (beta - sin beta)
};

/// Throws OutOfRangeBeta when the family's beta is not admissible.
UnivariateBasis make_basis(BasisFamily family);

namespace detail {

template <class T>
T sine_like(const T& x, bool hyperbolic) {
  using std::sin;
  using std::sinh;
  return hyperbolic ? sinh(x) : sin(x);
}

template <class T>
T cosine_like(const T& x, bool hyperbolic) {
  using std::cos;
  using std::cosh;
  return hyperbolic ? cosh(x) : cos(x);
}

}  // namespace detail

template <class T>
std::array<T, 4> UnivariateBasis::values(const T& x) const {
  using std::cos;
  using std::sin;
  const double beta = family_.beta;
  switch (family_.kind) {
    case FamilyKind::CubicBernstein: {
      const T s = 1.0 - x;
      return {s * s * s, 3.0 * x * s * s, 3.0 * x * x * s, x * x * x};
    }
    case FamilyKind::QuarticBernsteinBlended: {
      const T s = 1.0 - x;
      const T half_mid = 3.0 * x * x * s * s;
      return {ipow(s, 4), 4.0 * x * s * s * s + half_mid, half_mid + 4.0 * x * x * x * s, ipow(x, 4)};
    }
    case FamilyKind::Trigonometric:
    case FamilyKind::Hyperbolic: {
      const bool hyp = family_.kind == FamilyKind::Hyperbolic;
      const T a = detail::sine_like(T(0.5 * (beta - x)), hyp);
      const T b = detail::sine_like(T(0.5 * x), hyp);
      const T half_mid = 0.5 * coeff_[2] * a * a * b * b;
      return {coeff_[0] * ipow(a, 4), coeff_[1] * a * a * a * b + half_mid,
              half_mid + coeff_[3] * a * b * b * b, coeff_[4] * ipow(b, 4)};
    }
    case FamilyKind::AlgebraicTrigonometric: {
      const T y = beta - x;
      const double sb = std::sin(beta);
      const double cb = std::cos(beta);
      // B_{3,2}(t) with t the distance from the left end.
      auto b32 = [&](const T& t, const T& rest) {
        return at_scale_ * (rest + sin(rest) + sin(t) - sb + t * cb - beta * cos(t));
      };
      return {at_outer_ * (y - sin(y)), b32(y, x), b32(x, y), at_outer_ * (x - sin(x))};
    }
  }
  return {};
}

}  // namespace nielson
