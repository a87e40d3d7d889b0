#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "nielson/basis_family.hpp"
#include "nielson/trivariate_basis.hpp"
#include "nielson/univariate_basis.hpp"

namespace nielson {

/// phi^r_{k,l} = integral over [0, beta] of B_{3,k}^(r) B_{3,l}^(r); symmetric 4x4.
struct PhiTable {
  BasisFamily family;
  int r = 1;
  Eigen::Matrix4d phi = Eigen::Matrix4d::Zero();
};

/// Weighted combination sum_r theta_r phi^r.
using CombinedPhi = Eigen::Matrix4d;

/// tau^{z,g-z}_{r,s,3-r-s} for one order g: column z (0..g) holds the ten entries in flat order.
using TauColumn = Eigen::Matrix<double, kTriCount, 1>;

struct TauTable {
  BasisFamily family;
  int g = 1;
  std::vector<TauColumn> column;  // indexed by z
  /// Entries printed in closed form; false where the closed table is silent.
  std::vector<Eigen::Matrix<bool, kTriCount, 1>> printed;

  double at(int z, int flat) const { return column.at(z)(flat); }
};

/// Non-negative weights with at least one positive entry.
struct EnergyWeights {
  std::vector<double> w;
};

/// Throws ZeroWeights for an empty, negative or all-zero weight vector.
void validate_weights(const EnergyWeights& weights, const char* what);

PhiTable phi_closed(const BasisFamily& family, int r);
PhiTable phi_quadrature(const UnivariateBasis& basis, int r, double tol = 1e-13);

CombinedPhi combine_phi(const PhiTable& r1, const PhiTable& r2, const EnergyWeights& theta);

/// Closed tables for r = 1..theta.size() (at most 2), combined with theta.
CombinedPhi combined_phi(const BasisFamily& family, const EnergyWeights& theta);

/// Closed tables; omitted entries are filled from quadrature when they are not negligible.
/// Throws UnsupportedFamily for the hyperbolic system.
TauTable tau_closed(const BasisFamily& family, int g);

/// Columns tau^{z,g-z} for z = 0..g by triangle quadrature.
TauTable tau_quadrature(const TrivariateBasis& basis, int g, double tol = 1e-12);

/// Closed table when the family has one, quadrature otherwise.
TauTable tau_table(const TrivariateBasis& basis, int g);

/// Full Gram matrix of chart partials d^g/dx^z dy^(g-z) over Omega_beta (all index pairs).
Eigen::Matrix<double, kTriCount, kTriCount> tau_gram(const TrivariateBasis& basis, int z, int g_minus_z,
                                                      double tol = 1e-12);

/// "phi^r_{k,l}" and "tau^{z,g-z}_{r,s,t}" labels used in reports.
std::string phi_symbol(int r, int k, int l);
std::string tau_symbol(int z, int g_minus_z, int flat);

}  // namespace nielson
