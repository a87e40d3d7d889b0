#include "nielson/nielson_surface.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Geometry>

#include "nielson/error.hpp"
#include "nielson/parallel.hpp"

namespace nielson {
namespace {

double angle_between(const Vec3& a, const Vec3& b) { return std::atan2(a.cross(b).norm(), a.dot(b)); }

// Side of `face` whose corners (s, s+1) are {a, b} in either order, or -1.
int find_side(const Face& face, int a, int b) {
  for (int s = 0; s < 3; ++s) {
    const int p = face[s], q = face[(s + 1) % 3];
    if ((p == a && q == b) || (p == b && q == a)) return s;
  }
  return -1;
}

Vec3 unit_or_throw(const Vec3& v, double scale, const char* what) {
  const double n = v.norm();
  if (!(n > 1e-12 * scale) || n == 0.0) throw Error(ErrorCode::DegenerateChord, what);
  return v / n;
}

}  // namespace

NormalField::NormalField(const CurveNetwork& network, const std::vector<ControlNet>& nets,
                         const TrivariateBasis& basis)
    : network_(&network), nets_(&nets), basis_(&basis) {
  if (static_cast<int>(nets.size()) != network.mesh().num_faces()) {
    throw Error(ErrorCode::MissingEdgeSolution, "normal field needs one patch per face");
  }
}

Vec3 NormalField::face_normal(int face, int lo, int hi, double u) const {
  const Face& f = network_->mesh().faces()[face];
  const int s = find_side(f, lo, hi);
  const double beta = basis_->beta();
  const double t = f[s] == lo ? u : beta - u;
  return patch_normal((*nets_)[face], *basis_, side_point(s, t, beta));
}

Vec3 NormalField::eval_edge(int e, double u) const {
  const auto [lo, hi] = network_->mesh().edges()[e];
  const auto [f1, f2] = network_->mesh().edge_faces(e);
  Vec3 n = face_normal(f1, lo, hi, u);
  if (f2 >= 0) n += face_normal(f2, lo, hi, u);
  if (!(n.norm() >= 1e-9)) {
    throw Error(ErrorCode::OpposingNormals, "patch normals cancel on edge (" + std::to_string(lo) + ", " +
                                                std::to_string(hi) + ")");
  }
  return n.normalized();
}

Vec3 NormalField::eval(int p, int q, double u) const {
  const int e = network_->mesh().edge_index(p, q);
  if (e < 0) throw Error(ErrorCode::MissingEdgeSolution, "no edge between the given vertices");
  return eval_edge(e, p < q ? u : basis_->beta() - u);
}

NormalProvenance NormalField::provenance(int e) const {
  return network_->mesh().is_boundary_edge(e) ? NormalProvenance::Inherited : NormalProvenance::Averaged;
}

std::array<double, 3> blend_weights(BlendKind kind, const Eigen::Vector3d& b) {
  const int tiny = (std::abs(b[0]) < 1e-14) + (std::abs(b[1]) < 1e-14) + (std::abs(b[2]) < 1e-14);
  if (tiny >= 2) throw Error(ErrorCode::CornerSingularity, "blend weights are undefined at a corner");
  Eigen::Vector3d q = b;
  if (kind == BlendKind::RationalDeg2) q = b.cwiseProduct(b);
  const double w0 = q[1] * q[2], w1 = q[0] * q[2], w2 = q[0] * q[1];
  const double sum = w0 + w1 + w2;
  return {w0 / sum, w1 / sum, w2 / sum};
}

NielsonSurface::NielsonSurface(const CurveNetwork& network, const NormalField& field, BlendKind kind,
                               double corner_eps)
    : network_(&network), field_(&field), kind_(kind), corner_eps_(corner_eps) {
  if (!(corner_eps > 0.0 && corner_eps < 1.0 / 3.0)) {
    throw Error(ErrorCode::ConfigError, "corner epsilon must lie in (0, 1/3)");
  }
}

SideVertexSample NielsonSurface::side_vertex_sample(int face, int side, double u) const {
  const HalfEdgeMesh& mesh = network_->mesh();
  const Face& f = mesh.faces().at(face);
  const int a = f[side], q = f[(side + 1) % 3], r = f[(side + 2) % 3];
  SideVertexSample s;
  s.apex = mesh.vertices()[a];
  s.curve_point = network_->eval(q, r, u);
  const Vec3 chord = s.curve_point - s.apex;
  const double len = chord.norm();
  const Vec3 f_apex = -network_->frames().normal[a];
  const Vec3 f_curve = -field_->eval(q, r, u);
  const Vec3 b_apex = unit_or_throw(chord.cross(f_apex), len, "chord parallel to the apex normal");
  const Vec3 b_curve = unit_or_throw((-chord).cross(f_curve), len, "chord parallel to the boundary normal");
  s.t = f_apex.cross(b_apex);
  s.t_tilde = f_curve.cross(b_curve);
  const EdgeSolution sol = solve_edge(s.apex, s.curve_point, s.t, s.t_tilde, network_->phi());
  s.lambda = sol.lambda_ij;
  s.lambda_tilde = sol.lambda_ji;
  s.delta = sol.delta;
  return s;
}

Vec3 NielsonSurface::side_vertex_point(int face, int side, const Eigen::Vector3d& b) const {
  const double rest = 1.0 - b[side];
  if (rest < corner_eps_) return network_->mesh().vertices()[network_->mesh().faces().at(face)[side]];
  const double beta = network_->basis().beta();
  const double u = std::clamp(beta * b[(side + 2) % 3] / rest, 0.0, beta);
  const double x = std::clamp(beta * rest, 0.0, beta);
  const SideVertexSample s = side_vertex_sample(face, side, u);
  const auto poly = arc_polygon(s.apex, s.curve_point, s.t, s.t_tilde, s.lambda, s.lambda_tilde);
  const BasisJet B = network_->basis().eval_all(x);
  Vec3 out = Vec3::Zero();
  for (int k = 0; k < 4; ++k) out += B(k, 0) * poly[k];
  return out;
}

Vec3 NielsonSurface::eval(int face, const Eigen::Vector3d& b) const {
  for (int s = 0; s < 3; ++s) {
    if (b[s] > 1.0 - corner_eps_) return network_->mesh().vertices()[network_->mesh().faces().at(face)[s]];
  }
  const auto w = blend_weights(kind_, b);
  Vec3 out = Vec3::Zero();
  for (int s = 0; s < 3; ++s) {
    if (w[s] != 0.0) out += w[s] * side_vertex_point(face, s, b);
  }
  return out;
}

Vec3 NielsonSurface::normal(int face, const Eigen::Vector3d& b, double h) const {
  auto at = [&](double b1, double b2) { return eval(face, Eigen::Vector3d(1.0 - b1 - b2, b1, b2)); };
  const Vec3 d1 = (at(b[1] + h, b[2]) - at(b[1] - h, b[2])) / (2.0 * h);
  const Vec3 d2 = (at(b[1], b[2] + h) - at(b[1], b[2] - h)) / (2.0 * h);
  const Vec3 n = d1.cross(d2);
  if (!(n.norm() > 1e-12 * d1.norm() * d2.norm()) || n.norm() == 0.0) {
    throw Error(ErrorCode::DegenerateNormal, "surface partials are parallel");
  }
  return n.normalized();
}

G1Defect measure_g1(const NielsonSurface& surface, int samples, double offset, unsigned threads) {
  const HalfEdgeMesh& mesh = surface.network().mesh();
  const double beta = surface.network().basis().beta();
  const double cap = 5.0 * surface.corner_eps();
  std::vector<std::array<double, 2>> per_edge(mesh.num_edges(), {0.0, 0.0});
  parallel_for(
      per_edge.size(),
      [&](std::size_t e) {
        const auto [f1, f2] = mesh.edge_faces(static_cast<int>(e));
        if (f2 < 0) return;
        const auto [lo, hi] = mesh.edges()[e];
        for (int m = 0; m < samples; ++m) {
          const double t_norm = cap + (1.0 - 2.0 * cap) * (m + 0.5) / samples;
          const double u = beta * t_norm;
          const Vec3 field = surface.field().eval_edge(static_cast<int>(e), u);
          Vec3 n[2];
          const int faces[2] = {f1, f2};
          for (int side = 0; side < 2; ++side) {
            const Face& f = mesh.faces()[faces[side]];
            const int s = find_side(f, lo, hi);
            // Along corner s -> s+1 the arc parameter is beta * b_{s+1}.
            const double t = f[s] == lo ? t_norm : 1.0 - t_norm;
            Eigen::Vector3d b;
            b[(s + 2) % 3] = offset;
            b[(s + 1) % 3] = (1.0 - offset) * t;
            b[s] = (1.0 - offset) * (1.0 - t);
            n[side] = surface.normal(faces[side], b, 0.5 * offset);
          }
          auto& d = per_edge[e];
          d[0] = std::max(d[0], angle_between(n[0], n[1]));
          d[1] = std::max({d[1], angle_between(n[0], field), angle_between(n[1], field)});
        }
      },
      threads);
  G1Defect out;
  for (int e = 0; e < mesh.num_edges(); ++e) {
    if (mesh.is_boundary_edge(e)) continue;
    ++out.edges;
    out.across = std::max(out.across, per_edge[e][0]);
    out.to_field = std::max(out.to_field, per_edge[e][1]);
  }
  return out;
}

}  // namespace nielson
