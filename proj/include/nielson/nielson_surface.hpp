#pragma once

#include <array>
#include <vector>

#include <Eigen/Core>

#include "nielson/c0_patch.hpp"
#include "nielson/curve_network.hpp"
#include "nielson/trivariate_basis.hpp"

namespace nielson {

enum class NormalProvenance { Averaged, Inherited };

/// Unit normal fields along every arc: the normalized sum of the two incident C0 patch
/// normals on interior edges, the single patch normal on border edges. Each field is
/// parametrized along its edge from the lower to the higher vertex index; the reverse
/// direction is read at beta - u. Keeps references to its inputs.
class NormalField {
 public:
  NormalField(const CurveNetwork& network, const std::vector<ControlNet>& nets, const TrivariateBasis& basis);

  /// n~ along c_{p,q} at arc parameter u. Throws OpposingNormals.
  Vec3 eval(int p, int q, double u) const;
  /// Field of undirected edge e at parameter u measured from its lower vertex.
  Vec3 eval_edge(int e, double u) const;
  NormalProvenance provenance(int e) const;

 private:
  Vec3 face_normal(int face, int lo, int hi, double u) const;

  const CurveNetwork* network_;
  const std::vector<ControlNet>* nets_;
  const TrivariateBasis* basis_;
};

enum class BlendKind { RationalDeg2, RationalDeg1 };

/// Frames and scaling factors of the arc joining a vertex to a point of the opposite arc.
struct SideVertexSample {
  Vec3 apex = Vec3::Zero();
  Vec3 curve_point = Vec3::Zero();
  Vec3 t = Vec3::Zero();        // at the apex
  Vec3 t_tilde = Vec3::Zero();  // at the curve point
  double lambda = 0.0;
  double lambda_tilde = 0.0;
  double delta = 0.0;
};

/// Blend weights (omega_i, omega_j, omega_k) at normalized barycentric b.
/// Throws CornerSingularity when two coordinates are below 1e-14.
std::array<double, 3> blend_weights(BlendKind kind, const Eigen::Vector3d& b);

/// G1 surface over all faces. b = (b0, b1, b2) are normalized barycentric coordinates
/// with respect to the face corners (i, j, k). Keeps references to its inputs.
class NielsonSurface {
 public:
  NielsonSurface(const CurveNetwork& network, const NormalField& field, BlendKind kind,
                 double corner_eps = 1e-7);

  const CurveNetwork& network() const { return *network_; }
  const NormalField& field() const { return *field_; }
  BlendKind blend() const { return kind_; }
  double corner_eps() const { return corner_eps_; }

  /// Side s has apex corner s and opposite arc from corner s+1 to corner s+2, read at u.
  SideVertexSample side_vertex_sample(int face, int side, double u) const;
  /// Side-vertex interpolant of side s at b. Throws DegenerateChord.
  Vec3 side_vertex_point(int face, int side, const Eigen::Vector3d& b) const;
  /// Blended point; corners within corner_eps return the mesh vertex.
  Vec3 eval(int face, const Eigen::Vector3d& b) const;
  /// Unit normal from central differences of step h in (b1, b2). Throws DegenerateNormal.
  Vec3 normal(int face, const Eigen::Vector3d& b, double h = 1e-6) const;

 private:
  const CurveNetwork* network_;
  const NormalField* field_;
  BlendKind kind_;
  double corner_eps_;
};

/// Largest angle (radians) between the FD normals of the two sides of any interior edge,
/// and between each side and the prescribed field, sampled `samples` times per edge at
/// inward offset `offset`, skipping parameters within 5 corner_eps of an end.
struct G1Defect {
  double across = 0.0;
  double to_field = 0.0;
  int edges = 0;
};
G1Defect measure_g1(const NielsonSurface& surface, int samples = 20, double offset = 1e-6, unsigned threads = 0);

}  // namespace nielson
