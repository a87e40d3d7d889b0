#pragma once

#include <functional>
#include <iosfwd>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "nielson/c0_patch.hpp"
#include "nielson/halfedge_mesh.hpp"
#include "nielson/nielson_surface.hpp"

namespace nielson {

/// Welded triangle mesh with one normal per vertex.
struct SurfaceMesh {
  std::vector<Vec3> positions;
  std::vector<Vec3> normals;
  std::vector<Face> triangles;
};

/// Position and unit normal of one tessellation vertex.
using SurfaceSample = std::pair<Vec3, Vec3>;

/// Where the tessellator reads the surface: mesh corners, arc points (u measured from the
/// edge's lower vertex), and face-interior points in normalized barycentric coordinates.
struct SurfaceSampler {
  std::function<SurfaceSample(int vertex)> corner;
  std::function<SurfaceSample(int edge, double u)> edge;
  std::function<SurfaceSample(int face, const Eigen::Vector3d& b)> interior;
};

/// Lattice (a, b, c) / n per face: (n+1)(n+2)/2 points and n^2 triangles, oriented like the
/// face. Corners and edge points are shared between faces. Faces are sampled in parallel;
/// the output order depends only on the mesh.
SurfaceMesh tessellate(const HalfEdgeMesh& mesh, int n, double beta, const SurfaceSampler& sampler,
                       unsigned threads = 0);

/// Samplers for the blended G1 surface and for the C0 patches. Arc points take their normal
/// from the averaged field, corners from the mesh vertex normals.
SurfaceSampler nielson_sampler(const NielsonSurface& surface, double fd_step = 1e-6);
SurfaceSampler c0_sampler(const CurveNetwork& network, const std::vector<ControlNet>& nets,
                          const TrivariateBasis& basis, const NormalField& field);

/// `v`, `vn` and `f a//a b//b c//c` records with 17 significant digits.
void write_surface_obj(std::ostream& out, const SurfaceMesh& mesh);

}  // namespace nielson
