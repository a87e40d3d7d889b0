#include "nielson/tessellation.hpp"

#include <ostream>

#include "nielson/error.hpp"
#include "nielson/format.hpp"
#include "nielson/parallel.hpp"

namespace nielson {

SurfaceMesh tessellate(const HalfEdgeMesh& mesh, int n, double beta, const SurfaceSampler& sampler,
                       unsigned threads) {
  if (n < 1) throw Error(ErrorCode::ConfigError, "tessellation level must be at least 1");
  const int per_edge = n - 1;
  const int per_face = (n - 1) * (n - 2) / 2;

  std::vector<int> corner_id(mesh.num_vertices(), -1);
  int next = 0;
  for (const Face& f : mesh.faces())
    for (int v : f) corner_id[v] = 0;
  std::vector<int> used;
  for (int v = 0; v < mesh.num_vertices(); ++v) {
    if (corner_id[v] == 0) {
      corner_id[v] = next++;
      used.push_back(v);
    }
  }
  const int edge_base = next;
  const int face_base = edge_base + per_edge * mesh.num_edges();
  const int total = face_base + per_face * mesh.num_faces();

  SurfaceMesh out;
  out.positions.resize(total);
  out.normals.resize(total);
  auto store = [&](int id, const SurfaceSample& s) {
    out.positions[id] = s.first;
    out.normals[id] = s.second;
  };

  parallel_for(used.size(), [&](std::size_t k) { store(static_cast<int>(k), sampler.corner(used[k])); }, threads);
  parallel_for(
      mesh.num_edges(),
      [&](std::size_t e) {
        for (int m = 1; m < n; ++m) {
          store(edge_base + static_cast<int>(e) * per_edge + m - 1, sampler.edge(static_cast<int>(e), beta * m / n));
        }
      },
      threads);

  // Vertex id of lattice point (a, b, c) of face f, a + b + c = n, weights of corners (i, j, k).
  auto lattice_id = [&](int f, int b, int c) -> int {
    const int a = n - b - c;
    const Face& face = mesh.faces()[f];
    const int w[3] = {a, b, c};
    for (int s = 0; s < 3; ++s)
      if (w[s] == n) return corner_id[face[s]];
    for (int s = 0; s < 3; ++s) {
      if (w[(s + 2) % 3] != 0) continue;
      // On the side from corner s to corner s+1; w[s+1] steps away from corner s.
      const int p = face[s], q = face[(s + 1) % 3];
      const int e = mesh.edge_index(p, q);
      const int m = p < q ? w[(s + 1) % 3] : w[s];
      return edge_base + e * per_edge + m - 1;
    }
    // Interior: row-major over b then c, both >= 1.
    int idx = 0;
    for (int bb = 1; bb < b; ++bb) idx += n - 1 - bb;
    idx += c - 1;
    return face_base + f * per_face + idx;
  };

  out.triangles.resize(static_cast<std::size_t>(n) * n * mesh.num_faces());
  parallel_for(
      mesh.num_faces(),
      [&](std::size_t fi) {
        const int f = static_cast<int>(fi);
        for (int b = 1; b < n; ++b) {
          for (int c = 1; b + c < n; ++c) {
            const Eigen::Vector3d bary(double(n - b - c) / n, double(b) / n, double(c) / n);
            store(lattice_id(f, b, c), sampler.interior(f, bary));
          }
        }
        std::size_t t = fi * n * n;
        for (int b = 0; b < n; ++b) {
          for (int c = 0; b + c < n; ++c) {
            out.triangles[t++] = {lattice_id(f, b, c), lattice_id(f, b + 1, c), lattice_id(f, b, c + 1)};
            if (b + c + 2 <= n) {
              out.triangles[t++] = {lattice_id(f, b + 1, c), lattice_id(f, b + 1, c + 1), lattice_id(f, b, c + 1)};
            }
          }
        }
      },
      threads);
  return out;
}

SurfaceSampler nielson_sampler(const NielsonSurface& surface, double fd_step) {
  const CurveNetwork& net = surface.network();
  SurfaceSampler s;
  s.corner = [&net](int v) { return SurfaceSample{net.mesh().vertices()[v], net.frames().normal[v]}; };
  s.edge = [&net, &surface](int e, double u) {
    const auto [lo, hi] = net.mesh().edges()[e];
    return SurfaceSample{net.eval(lo, hi, u), surface.field().eval_edge(e, u)};
  };
  s.interior = [&surface, fd_step](int f, const Eigen::Vector3d& b) {
    return SurfaceSample{surface.eval(f, b), surface.normal(f, b, fd_step)};
  };
  return s;
}

SurfaceSampler c0_sampler(const CurveNetwork& network, const std::vector<ControlNet>& nets,
                          const TrivariateBasis& basis, const NormalField& field) {
  SurfaceSampler s;
  s.corner = [&network](int v) {
    return SurfaceSample{network.mesh().vertices()[v], network.frames().normal[v]};
  };
  s.edge = [&network, &field](int e, double u) {
    const auto [lo, hi] = network.mesh().edges()[e];
    return SurfaceSample{network.eval(lo, hi, u), field.eval_edge(e, u)};
  };
  s.interior = [&nets, &basis](int f, const Eigen::Vector3d& b) {
    // Corner i sits at u = beta, corner j at w = beta, corner k at v = beta.
    const double beta = basis.beta();
    const BarycentricPoint p{beta * b[0], beta * b[2], beta * b[1]};
    return SurfaceSample{eval_patch(nets[f], basis, p), patch_normal(nets[f], basis, p)};
  };
  return s;
}

void write_surface_obj(std::ostream& out, const SurfaceMesh& mesh) {
  for (const Vec3& p : mesh.positions) out << "v " << format_point(p) << '\n';
  for (const Vec3& n : mesh.normals) out << "vn " << format_point(n) << '\n';
  for (const Face& t : mesh.triangles) {
    out << 'f';
    for (int v : t) out << ' ' << v + 1 << "//" << v + 1;
    out << '\n';
  }
}

}  // namespace nielson
