#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "nielson/halfedge_mesh.hpp"
#include "nielson/integral_tables.hpp"
#include "nielson/univariate_basis.hpp"

namespace nielson {

/// Optimal tangent scaling pair of one edge and the determinant of its 2x2 system.
struct EdgeSolution {
  double lambda_ij = 0.0;
  double lambda_ji = 0.0;
  double delta = 0.0;
};

/// Minimizes sum_kl phi_kl <P_k, P_l> over (lambda_ij, lambda_ji) for the control polygon
/// p_i, p_i + lambda_ij t_ij, p_j + lambda_ji t_ji, p_j. Throws NonPositiveDeterminant.
EdgeSolution solve_edge(const Vec3& p_i, const Vec3& p_j, const Vec3& t_ij, const Vec3& t_ji,
                        const CombinedPhi& phi);

/// Control polygon of the arc from a to b.
std::array<Vec3, 4> arc_polygon(const Vec3& a, const Vec3& b, const Vec3& t_ab, const Vec3& t_ba,
                                double lambda_ab, double lambda_ba);

/// Energy sum_kl phi_kl <P_k, P_l> of an arc with the given control polygon.
double curve_energy(const std::array<Vec3, 4>& polygon, const CombinedPhi& phi);

/// One solved arc per undirected edge. Keeps references to the mesh and frames,
/// which must outlive it. Immutable after construction; safe for concurrent reads.
class CurveNetwork {
 public:
  CurveNetwork(const HalfEdgeMesh& mesh, const VertexFrame& frames, UnivariateBasis basis, CombinedPhi phi,
               std::vector<EdgeSolution> solutions);

  const HalfEdgeMesh& mesh() const { return *mesh_; }
  const VertexFrame& frames() const { return *frames_; }
  const UnivariateBasis& basis() const { return basis_; }
  const CombinedPhi& phi() const { return phi_; }

  /// Solution of undirected edge e, stored from its lower to its higher vertex.
  const EdgeSolution& solution(int e) const { return solutions_.at(e); }
  /// lambda_{i,j}; throws MissingEdgeSolution when {i, j} is not an edge.
  double lambda(int i, int j) const;
  /// p_i, p_i + lambda_ij t_ij, p_j + lambda_ji t_ji, p_j.
  std::array<Vec3, 4> polygon(int i, int j) const;
  /// r-th derivative of c_{i,j} at x in [0, beta].
  Vec3 eval(int i, int j, double x, int r = 0) const;

 private:
  int checked_edge(int i, int j) const;

  const HalfEdgeMesh* mesh_;
  const VertexFrame* frames_;
  UnivariateBasis basis_;
  CombinedPhi phi_;
  std::vector<EdgeSolution> solutions_;
};

/// Solves every undirected edge independently (in parallel). Errors name the edge.
CurveNetwork build_network(const HalfEdgeMesh& mesh, const VertexFrame& frames, const UnivariateBasis& basis,
                           const CombinedPhi& phi, unsigned threads = 0);

inline Vec3 eval_curve(const CurveNetwork& network, int i, int j, double x, int r = 0) {
  return network.eval(i, j, x, r);
}

/// Strain energy of edge {i, j} for an arbitrary scaling pair.
double edge_energy(const CurveNetwork& network, int i, int j, double lambda_ij, double lambda_ji);

/// Every arc sampled at `samples` + 1 uniform parameters as OBJ `v` / `l` records.
void write_curves_obj(std::ostream& out, const CurveNetwork& network, int samples);

}  // namespace nielson
