#include "nielson/halfedge_mesh.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <Eigen/Geometry>

#include "nielson/error.hpp"

namespace nielson {

HalfEdgeMesh::HalfEdgeMesh(std::vector<Vec3> vertices, std::vector<Face> faces)
    : vertices_(std::move(vertices)), faces_(std::move(faces)) {
  if (vertices_.empty() || faces_.empty()) throw Error(ErrorCode::EmptyMesh, "mesh needs vertices and faces");
  const int nv = num_vertices();
  halfedges_.resize(3 * faces_.size());
  for (int f = 0; f < num_faces(); ++f) {
    const Face& t = faces_[f];
    for (int c = 0; c < 3; ++c) {
      if (t[c] < 0 || t[c] >= nv) {
        throw Error(ErrorCode::IndexOutOfRange, "face " + std::to_string(f) + " references vertex " +
                                                    std::to_string(t[c]));
      }
    }
    if (t[0] == t[1] || t[1] == t[2] || t[2] == t[0]) {
      throw Error(ErrorCode::DegenerateFace, "face " + std::to_string(f) + " repeats a vertex");
    }
    for (int c = 0; c < 3; ++c) {
      const int h = 3 * f + c;
      const int a = t[c], b = t[(c + 1) % 3];
      halfedges_[h] = {a, f, 3 * f + (c + 1) % 3, -1};
      if (!directed_.emplace(key(a, b), h).second) {
        throw Error(ErrorCode::NonManifoldEdge, "edge (" + std::to_string(a) + ", " + std::to_string(b) +
                                                    ") used twice in the same direction");
      }
      const int lo = std::min(a, b), hi = std::max(a, b);
      auto [it, inserted] = undirected_.emplace(key(lo, hi), num_edges());
      if (inserted) {
        edges_.emplace_back(lo, hi);
        edge_faces_.emplace_back(f, -1);
      } else {
        edge_faces_[it->second].second = f;
      }
    }
  }
  for (auto& he : halfedges_) {
    const int b = halfedges_[he.next].origin;
    const auto it = directed_.find(key(b, he.origin));
    if (it != directed_.end()) he.twin = it->second;
  }
}

int HalfEdgeMesh::num_boundary_edges() const {
  int n = 0;
  for (const auto& ef : edge_faces_) n += ef.second < 0;
  return n;
}

int HalfEdgeMesh::halfedge(int a, int b) const {
  const auto it = directed_.find(key(a, b));
  return it == directed_.end() ? -1 : it->second;
}

int HalfEdgeMesh::edge_index(int a, int b) const {
  const auto it = undirected_.find(key(std::min(a, b), std::max(a, b)));
  return it == undirected_.end() ? -1 : it->second;
}

int HalfEdgeMesh::directed_index(int a, int b) const {
  const int e = edge_index(a, b);
  if (e < 0) {
    throw Error(ErrorCode::IndexOutOfRange, "no edge between " + std::to_string(a) + " and " + std::to_string(b));
  }
  return 2 * e + (a > b ? 1 : 0);
}

double HalfEdgeMesh::bbox_diagonal_squared() const {
  Vec3 lo = vertices_.front(), hi = vertices_.front();
  for (const Vec3& p : vertices_) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  return (hi - lo).squaredNorm();
}

namespace {

int parse_index(const std::string& token, int nv, int line) {
  const std::string head = token.substr(0, token.find('/'));
  int idx = 0;
  try {
    std::size_t used = 0;
    idx = std::stoi(head, &used);
    if (used != head.size()) throw std::invalid_argument(head);
  } catch (const std::exception&) {
    throw Error(ErrorCode::IndexOutOfRange, "line " + std::to_string(line) + ": bad index '" + token + "'");
  }
  const int zero_based = idx > 0 ? idx - 1 : nv + idx;
  if (idx == 0 || zero_based < 0 || zero_based >= nv) {
    throw Error(ErrorCode::IndexOutOfRange, "line " + std::to_string(line) + ": index " + head + " out of range");
  }
  return zero_based;
}

}  // namespace

HalfEdgeMesh load_obj(std::istream& in) {
  std::vector<Vec3> vertices;
  std::vector<Face> faces;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "v") {
      Vec3 p;
      if (!(ls >> p.x() >> p.y() >> p.z())) {
        throw Error(ErrorCode::IoError, "line " + std::to_string(lineno) + ": malformed vertex");
      }
      vertices.push_back(p);
    } else if (tag == "f") {
      std::vector<int> idx;
      std::string tok;
      while (ls >> tok) idx.push_back(parse_index(tok, static_cast<int>(vertices.size()), lineno));
      if (idx.size() != 3) {
        throw Error(ErrorCode::NonTriangleFace,
                    "line " + std::to_string(lineno) + ": face with " + std::to_string(idx.size()) + " corners");
      }
      faces.push_back({idx[0], idx[1], idx[2]});
    }
  }
  return HalfEdgeMesh(std::move(vertices), std::move(faces));
}

HalfEdgeMesh load_obj_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  return load_obj(in);
}

std::vector<Vec3> angle_weighted_normals(const HalfEdgeMesh& mesh) {
  const auto& p = mesh.vertices();
  const double min_area2 = 2e-14 * mesh.bbox_diagonal_squared();
  std::vector<Vec3> sum(p.size(), Vec3::Zero());
  std::vector<char> used(p.size(), 0);
  for (int f = 0; f < mesh.num_faces(); ++f) {
    const Face& t = mesh.faces()[f];
    const Vec3 n = (p[t[1]] - p[t[0]]).cross(p[t[2]] - p[t[0]]);
    if (n.norm() <= min_area2) {
      throw Error(ErrorCode::DegenerateFace, "face " + std::to_string(f) + " has (near) zero area");
    }
    const Vec3 unit = n.normalized();
    for (int c = 0; c < 3; ++c) {
      const Vec3 e1 = p[t[(c + 1) % 3]] - p[t[c]];
      const Vec3 e2 = p[t[(c + 2) % 3]] - p[t[c]];
      const double angle = std::atan2(e1.cross(e2).norm(), e1.dot(e2));
      sum[t[c]] += angle * unit;
      used[t[c]] = 1;
    }
  }
  for (std::size_t i = 0; i < sum.size(); ++i) {
    if (!used[i]) continue;
    const double len = sum[i].norm();
    if (len < 1e-12) throw Error(ErrorCode::ZeroNormal, "vertex " + std::to_string(i) + " normal vanishes");
    sum[i] /= len;
  }
  return sum;
}

VertexFrame edge_tangents(const HalfEdgeMesh& mesh, const std::vector<Vec3>& normals) {
  VertexFrame frame;
  frame.normal = normals;
  frame.tangent.assign(2 * mesh.num_edges(), Vec3::Zero());
  const auto& p = mesh.vertices();
  for (int e = 0; e < mesh.num_edges(); ++e) {
    const auto [lo, hi] = mesh.edges()[e];
    for (int dir = 0; dir < 2; ++dir) {
      const int i = dir == 0 ? lo : hi;
      const int j = dir == 0 ? hi : lo;
      const Vec3 f = -normals[i];
      const Vec3 chord = p[j] - p[i];
      const Vec3 b = chord.cross(f);
      if (b.norm() < 1e-12 * chord.norm() || chord.norm() == 0.0) {
        throw Error(ErrorCode::ParallelEdgeNormal,
                    "edge (" + std::to_string(i) + ", " + std::to_string(j) + ") is parallel to the vertex normal");
      }
      frame.tangent[2 * e + dir] = f.cross(b.normalized());
    }
  }
  return frame;
}

MeshStats mesh_stats(const HalfEdgeMesh& mesh) {
  return {mesh.num_vertices(), mesh.num_faces(), mesh.num_edges(), mesh.num_boundary_edges()};
}

std::string format_stats(const MeshStats& s) {
  std::ostringstream os;
  os << "n_v " << s.vertices << "\nn_f " << s.faces << "\nn_e " << s.edges << "\nboundary_edges "
     << s.boundary_edges << "\n";
  return os.str();
}

}  // namespace nielson
