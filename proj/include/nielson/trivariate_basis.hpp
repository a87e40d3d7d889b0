#pragma once

#include <array>
#include <utility>

#include <Eigen/Core>

#include "nielson/basis_family.hpp"
#include "nielson/jet.hpp"

namespace nielson {

/// Point of the triangle Omega_beta = {u, v, w >= 0, u + v + w = beta}.
struct BarycentricPoint {
  double u = 0.0;
  double v = 0.0;
  double w = 0.0;
};

/// Index (r, s) of T_{r,s,3-r-s}; flat order is (0,0),(0,1),(0,2),(0,3),(1,0),...,(3,0).
using TriIndex = std::pair<int, int>;

constexpr int kTriCount = 10;

constexpr int tri_flat(int r, int s) {
  constexpr int offset[4] = {0, 4, 7, 9};
  return offset[r] + s;
}

constexpr TriIndex tri_index(int flat) {
  constexpr int rs[kTriCount][2] = {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 0},
                                    {1, 1}, {1, 2}, {2, 0}, {2, 1}, {3, 0}};
  return {rs[flat][0], rs[flat][1]};
}

constexpr int kTri111 = tri_flat(1, 1);

/// Values and chart derivatives of all ten functions at one point. Columns:
/// value, d/dx, d/dy, d2/dx2, d2/dxdy, d2/dy2, where x = u, y = v, w = beta - x - y.
using TriJet = Eigen::Matrix<double, kTriCount, 6>;

/// Column of TriJet holding d^g / dx^z dy^(g-z).
int tri_jet_column(int z, int g_minus_z);

/// Constrained trivariate system on Omega_beta whose boundary traces reproduce
/// the matching univariate basis. Immutable after construction.
class TrivariateBasis {
 public:
  explicit TrivariateBasis(BasisFamily family);

  const BasisFamily& family() const { return family_; }
  double beta() const { return family_.beta; }

  /// T_{r,s,3-r-s}(p). Throws DomainError when p is outside Omega_beta.
  double eval(TriIndex idx, const BarycentricPoint& p) const;

  /// All ten values at p.
  std::array<double, kTriCount> eval_all(const BarycentricPoint& p) const;

  /// d^(dx+dy) T / dx^dx dy^dy at chart point (x, y); dx + dy <= 2.
  double eval_partial(TriIndex idx, double x, double y, int dx, int dy) const;

  /// Values and all chart derivatives up to order two.
  TriJet chart_jets(double x, double y) const;

  /// Ten function values in flat order for any jet-compatible scalar.
  template <class T>
  std::array<T, kTriCount> values(const T& u, const T& v, const T& w) const;

 private:
  void check_domain(double u, double v, double w) const;

  template <class T>
  std::array<T, kTriCount> sine_system(const T& u, const T& v, const T& w) const;
  template <class T>
  std::array<T, kTriCount> algtrig_system(const T& u, const T& v, const T& w) const;

  BasisFamily family_;
  // Sine-type families: coefficients of R_{4,4,0}, R_{4,3,0}, R_{4,2,0}, R_{4,3,1}, R_{4,2,1}, R_{4,2,2}.
  std::array<double, 6> k_{};
  // Algebraic-trigonometric: 1/(beta - sin beta), sin(beta)/D, c3, c4.
  double at_outer_ = 0.0, at_scale_ = 0.0, at_c3_ = 0.0, at_c4_ = 0.0;
};

TrivariateBasis make_trivariate(BasisFamily family);

template <class T>
std::array<T, kTriCount> TrivariateBasis::values(const T& u, const T& v, const T& w) const {
  switch (family_.kind) {
    case FamilyKind::CubicBernstein:
      return {ipow(w, 3),       3.0 * v * w * w, 3.0 * v * v * w, ipow(v, 3),      3.0 * u * w * w,
              6.0 * u * v * w,  3.0 * u * v * v, 3.0 * u * u * w, 3.0 * u * u * v, ipow(u, 3)};
    case FamilyKind::QuarticBernsteinBlended: {
      const T u2 = u * u, v2 = v * v, w2 = w * w;
      const T b022 = 6.0 * v2 * w2, b202 = 6.0 * u2 * w2, b220 = 6.0 * u2 * v2;
      return {w2 * w2,
              4.0 * v * w2 * w + 0.5 * b022,
              0.5 * b022 + 4.0 * v2 * v * w,
              v2 * v2,
              4.0 * u * w2 * w + 0.5 * b202,
              12.0 * u * v * w * (u + v + w),
              4.0 * u * v2 * v + 0.5 * b220,
              0.5 * b202 + 4.0 * u2 * u * w,
              0.5 * b220 + 4.0 * u2 * u * v,
              u2 * u2};
    }
    case FamilyKind::Trigonometric:
    case FamilyKind::Hyperbolic:
      return sine_system(u, v, w);
    case FamilyKind::AlgebraicTrigonometric:
      return algtrig_system(u, v, w);
  }
  return {};
}

template <class T>
std::array<T, kTriCount> TrivariateBasis::sine_system(const T& u, const T& v, const T& w) const {
  const bool hyp = family_.kind == FamilyKind::Hyperbolic;
  auto S = [hyp](const T& a) {
    using std::sin;
    using std::sinh;
    return hyp ? sinh(a) : sin(a);
  };
  auto C = [hyp](const T& a) {
    using std::cos;
    using std::cosh;
    return hyp ? cosh(a) : cos(a);
  };
  const T su = S(0.5 * u), sv = S(0.5 * v), sw = S(0.5 * w);
  const T cu = C(0.5 * u), cv = C(0.5 * v), cw = C(0.5 * w);
  const T su2 = su * su, sv2 = sv * sv, sw2 = sw * sw;

  // Red group (apex u), green = red(w,u,v), blue = red(v,w,u).
  const T r440 = k_[0] * su2 * su2;
  const T r430 = k_[1] * su2 * su * sw * cv;
  const T r420 = k_[2] * su2 * sw2 * cv * cv;
  const T r410 = k_[1] * sw2 * sw * su * cv;
  const T g440 = k_[0] * sw2 * sw2;
  const T g430 = k_[1] * sw2 * sw * sv * cu;
  const T g420 = k_[2] * sw2 * sv2 * cu * cu;
  const T g410 = k_[1] * sv2 * sv * sw * cu;
  const T b440 = k_[0] * sv2 * sv2;
  const T b430 = k_[1] * sv2 * sv * su * cw;
  const T b420 = k_[2] * sv2 * su2 * cw * cw;
  const T b410 = k_[1] * su2 * su * sv * cw;

  const T suvw = su * sv * sw;
  const T interior = k_[3] * suvw * (su2 + sv2 + sw2) +
                     k_[4] * suvw * (su * sw * cv + sw * sv * cu + sv * su * cw) +
                     k_[5] * suvw * suvw;

  return {g440,
          g430 + 0.5 * g420,
          0.5 * g420 + g410,
          b440,
          0.5 * r420 + r410,
          interior,
          b430 + 0.5 * b420,
          r430 + 0.5 * r420,
          0.5 * b420 + b410,
          r440};
}

template <class T>
std::array<T, kTriCount> TrivariateBasis::algtrig_system(const T& u, const T& v, const T& w) const {
  using std::cos;
  using std::sin;
  const double beta = family_.beta;
  auto t300 = [&](const T& a) { return at_outer_ * (a - sin(a)); };
  // T_{2,1,0}(a, b, c) as printed; beta - c is kept literally.
  auto t210 = [&](const T& a, const T& b, const T& c) {
    const T bc = beta - c;
    return at_scale_ * (b + sin(b) + sin(a) - sin(bc) + a * cos(bc) - bc * cos(a));
  };
  const T su = sin(0.5 * u), sv = sin(0.5 * v), sw = sin(0.5 * w);
  const T t111 = at_c3_ * su * sv * sw -
                 at_c4_ * (u * cos(0.5 * u) * sv * sw + v * su * cos(0.5 * v) * sw +
                           w * su * sv * cos(0.5 * w));
  // Cyclic images: T201 = T210(u,w,v), T120 = T210(v,u,w), T102 = T201(w,v,u) = T210(w,u,v),
  // T021 = T120(w,v,u) = T210(v,w,u), T012 = T021(u,w,v) = T210(w,v,u).
  return {t300(w),       t210(w, v, u), t210(v, w, u), t300(v),       t210(w, u, v),
          t111,          t210(v, u, w), t210(u, w, v), t210(u, v, w), t300(u)};
}

}  // namespace nielson
