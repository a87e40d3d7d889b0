#pragma once

#include <array>
#include <vector>

#include <Eigen/Core>

#include "nielson/curve_network.hpp"
#include "nielson/halfedge_mesh.hpp"
#include "nielson/integral_tables.hpp"
#include "nielson/trivariate_basis.hpp"

namespace nielson {

/// Ten control points of the patch over face (i, j, k), in flat (r, s) order.
/// Rows of the boundary: (i -> j) on v = 0, (j -> k) on u = 0, (k -> i) on w = 0.
struct ControlNet {
  Face face{};
  std::array<Vec3, kTriCount> p{};
  bool interior_solved = false;

  Vec3& at(int r, int s) { return p[tri_flat(r, s)]; }
  const Vec3& at(int r, int s) const { return p[tri_flat(r, s)]; }
};

/// Nine boundary points from the arcs of the face's three edges; p_{1,1,1} is left zero.
/// Throws MissingEdgeSolution when an edge of the face has no arc.
ControlNet assemble_boundary_net(const CurveNetwork& network, int face);

/// tau tables for orders g = 1 .. epsilon.size() (at most two).
std::vector<TauTable> thin_plate_tables(const TrivariateBasis& basis, const EnergyWeights& epsilon);

/// Critical point of the thin-plate energy in p_{1,1,1}. Throws ZeroDenominator.
Vec3 solve_interior_point(const ControlNet& net, const std::vector<TauTable>& tau, const EnergyWeights& epsilon);

/// Boundary net plus solved interior point for every face (in parallel).
std::vector<ControlNet> build_c0_patches(const CurveNetwork& network, const std::vector<TauTable>& tau,
                                         const EnergyWeights& epsilon, unsigned threads = 0);

/// Full Gram matrices of the chart partials: gram[g - 1][z] for d^g / dx^z dy^(g-z).
using ThinPlateGram = std::vector<std::vector<Eigen::Matrix<double, kTriCount, kTriCount>>>;
ThinPlateGram thin_plate_gram(const TrivariateBasis& basis, int gamma, double tol = 1e-12);

/// sum_g eps_g sum_z C(g, z) integral |d^g s / dx^z dy^(g-z)|^2, from the Gram matrices.
double thin_plate_energy(const ControlNet& net, const ThinPlateGram& gram, const EnergyWeights& epsilon);

Vec3 eval_patch(const ControlNet& net, const TrivariateBasis& basis, const BarycentricPoint& p);

/// Unit normal oriented with the face's counterclockwise order. Throws DegenerateNormal.
Vec3 patch_normal(const ControlNet& net, const TrivariateBasis& basis, const BarycentricPoint& p);

/// Domain point of the arc along side s of a face at arc parameter t: side 0 runs from
/// corner 0 to corner 1, side 1 from corner 1 to 2, side 2 from corner 2 to 0.
BarycentricPoint side_point(int side, double t, double beta);

}  // namespace nielson
