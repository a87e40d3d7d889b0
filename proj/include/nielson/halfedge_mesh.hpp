#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace nielson {

using Vec3 = Eigen::Vector3d;
using Face = std::array<int, 3>;

struct HalfEdge {
  int origin = -1;
  int face = -1;
  int next = -1;
  int twin = -1;  // -1 on the boundary
};

/// Oriented triangle mesh with half-edge connectivity. Half-edge 3f + c leaves
/// corner c of face f. Undirected edges are numbered in order of first appearance
/// and stored with the lower vertex index first.
class HalfEdgeMesh {
 public:
  /// Throws EmptyMesh, IndexOutOfRange, DegenerateFace (repeated corner) or NonManifoldEdge.
  HalfEdgeMesh(std::vector<Vec3> vertices, std::vector<Face> faces);

  const std::vector<Vec3>& vertices() const { return vertices_; }
  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<HalfEdge>& halfedges() const { return halfedges_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_faces() const { return static_cast<int>(faces_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_boundary_edges() const;

  /// Half-edge from a to b, or -1.
  int halfedge(int a, int b) const;
  /// Undirected edge id of {a, b}, or -1.
  int edge_index(int a, int b) const;
  /// Directed edge id 2e + (a > b); valid for boundary edges in both directions.
  int directed_index(int a, int b) const;
  /// Faces on either side of edge e (second is -1 on the boundary).
  std::pair<int, int> edge_faces(int e) const { return edge_faces_[e]; }
  bool is_boundary_edge(int e) const { return edge_faces_[e].second < 0; }

  /// Squared diagonal of the axis-aligned bounding box.
  double bbox_diagonal_squared() const;

 private:
  static long long key(int a, int b) { return static_cast<long long>(a) << 32 | static_cast<unsigned>(b); }

  std::vector<Vec3> vertices_;
  std::vector<Face> faces_;
  std::vector<HalfEdge> halfedges_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::pair<int, int>> edge_faces_;
  std::unordered_map<long long, int> directed_;
  std::unordered_map<long long, int> undirected_;
};

/// Wavefront OBJ: `v x y z` and triangular `f` records (1-based or negative indices,
/// slash attributes ignored). Throws NonTriangleFace, IndexOutOfRange, EmptyMesh, NonManifoldEdge.
HalfEdgeMesh load_obj(std::istream& in);
HalfEdgeMesh load_obj_file(const std::string& path);

/// Per-vertex unit normals: angle-weighted sum of unit face normals. Vertices that
/// belong to no face get a zero vector. Throws DegenerateFace, ZeroNormal.
std::vector<Vec3> angle_weighted_normals(const HalfEdgeMesh& mesh);

/// Vertex normals and unit tangents t_{i,j} for both directions of every edge.
struct VertexFrame {
  std::vector<Vec3> normal;
  std::vector<Vec3> tangent;  // by HalfEdgeMesh::directed_index

  const Vec3& t(const HalfEdgeMesh& mesh, int i, int j) const { return tangent[mesh.directed_index(i, j)]; }
};

/// f_i = -n_i, b_{i,j} = unit((p_j - p_i) x f_i), t_{i,j} = f_i x b_{i,j}.
/// Throws ParallelEdgeNormal when an edge is parallel to its vertex normal.
VertexFrame edge_tangents(const HalfEdgeMesh& mesh, const std::vector<Vec3>& normals);

struct MeshStats {
  int vertices = 0;
  int faces = 0;
  int edges = 0;
  int boundary_edges = 0;
};

MeshStats mesh_stats(const HalfEdgeMesh& mesh);
std::string format_stats(const MeshStats& stats);

}  // namespace nielson
