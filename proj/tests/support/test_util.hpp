#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "nielson/basis_family.hpp"
#include "nielson/halfedge_mesh.hpp"

namespace nielson::testing {

inline const std::vector<double>& shape_values() {
  static const std::vector<double> v{0.5, 1.0, std::numbers::pi / 2.0, 3.0 * std::numbers::pi / 4.0, 3.0};
  return v;
}

inline const std::vector<FamilyKind>& all_kinds() {
  static const std::vector<FamilyKind> k{FamilyKind::CubicBernstein, FamilyKind::QuarticBernsteinBlended,
                                         FamilyKind::Trigonometric, FamilyKind::Hyperbolic,
                                         FamilyKind::AlgebraicTrigonometric};
  return k;
}

/// Every (family, beta) pair from the standard shape values that the family admits.
inline std::vector<BasisFamily> admissible_families() {
  std::vector<BasisFamily> out;
  for (FamilyKind k : all_kinds()) {
    for (double b : shape_values()) {
      try {
        out.push_back(make_family(k, b));
      } catch (...) {
      }
    }
  }
  return out;
}

/// One representative per family at its default shape parameter.
inline std::vector<BasisFamily> default_families() {
  std::vector<BasisFamily> out;
  for (FamilyKind k : all_kinds()) out.push_back(make_family(k, default_beta(k)));
  return out;
}

inline Vec3 random_vec(std::mt19937& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> d(-scale, scale);
  const double x = d(rng), y = d(rng), z = d(rng);
  return {x, y, z};
}

inline Vec3 random_unit(std::mt19937& rng) {
  for (;;) {
    const Vec3 v = random_vec(rng);
    if (v.norm() > 0.1 && v.norm() <= 1.0) return v.normalized();
  }
}

inline double angle(const Vec3& a, const Vec3& b) { return std::atan2(a.cross(b).norm(), a.dot(b)); }

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

}  // namespace nielson::testing
