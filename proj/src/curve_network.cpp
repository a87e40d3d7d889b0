#include "nielson/curve_network.hpp"

#include <ostream>
#include <string>

#include "nielson/error.hpp"
#include "nielson/format.hpp"
#include "nielson/parallel.hpp"

namespace nielson {

EdgeSolution solve_edge(const Vec3& p_i, const Vec3& p_j, const Vec3& t_ij, const Vec3& t_ji,
                        const CombinedPhi& phi) {
  const double c = t_ij.dot(t_ji);
  const double delta = phi(1, 1) * phi(2, 2) - c * c * phi(1, 2) * phi(1, 2);
  if (!(delta > 1e-14)) {
    throw Error(ErrorCode::NonPositiveDeterminant, "strain system determinant " + std::to_string(delta));
  }
  const double r1 = (p_i * (phi(0, 1) + phi(1, 1)) + p_j * (phi(1, 2) + phi(1, 3))).dot(t_ij);
  const double r2 = (p_i * (phi(0, 2) + phi(1, 2)) + p_j * (phi(2, 2) + phi(2, 3))).dot(t_ji);
  EdgeSolution s;
  s.delta = delta;
  s.lambda_ij = -(phi(2, 2) * r1 - c * phi(1, 2) * r2) / delta;
  s.lambda_ji = -(-c * phi(1, 2) * r1 + phi(1, 1) * r2) / delta;
  return s;
}

std::array<Vec3, 4> arc_polygon(const Vec3& a, const Vec3& b, const Vec3& t_ab, const Vec3& t_ba,
                                double lambda_ab, double lambda_ba) {
  return {a, a + lambda_ab * t_ab, b + lambda_ba * t_ba, b};
}

double curve_energy(const std::array<Vec3, 4>& polygon, const CombinedPhi& phi) {
  double e = 0.0;
  for (int k = 0; k < 4; ++k) {
    for (int l = 0; l < 4; ++l) e += phi(k, l) * polygon[k].dot(polygon[l]);
  }
  return e;
}

CurveNetwork::CurveNetwork(const HalfEdgeMesh& mesh, const VertexFrame& frames, UnivariateBasis basis,
                           CombinedPhi phi, std::vector<EdgeSolution> solutions)
    : mesh_(&mesh), frames_(&frames), basis_(std::move(basis)), phi_(phi), solutions_(std::move(solutions)) {
  if (static_cast<int>(solutions_.size()) != mesh.num_edges()) {
    throw Error(ErrorCode::MissingEdgeSolution, "curve network needs one solution per edge");
  }
}

int CurveNetwork::checked_edge(int i, int j) const {
  const int e = mesh_->edge_index(i, j);
  if (e < 0) {
    throw Error(ErrorCode::MissingEdgeSolution,
                "no solved arc between " + std::to_string(i) + " and " + std::to_string(j));
  }
  return e;
}

double CurveNetwork::lambda(int i, int j) const {
  const EdgeSolution& s = solutions_[checked_edge(i, j)];
  return i < j ? s.lambda_ij : s.lambda_ji;
}

std::array<Vec3, 4> CurveNetwork::polygon(int i, int j) const {
  const EdgeSolution& s = solutions_[checked_edge(i, j)];
  const auto& p = mesh_->vertices();
  const double lij = i < j ? s.lambda_ij : s.lambda_ji;
  const double lji = i < j ? s.lambda_ji : s.lambda_ij;
  return arc_polygon(p[i], p[j], frames_->t(*mesh_, i, j), frames_->t(*mesh_, j, i), lij, lji);
}

Vec3 CurveNetwork::eval(int i, int j, double x, int r) const {
  const auto poly = polygon(i, j);
  Vec3 out = Vec3::Zero();
  for (int k = 0; k < 4; ++k) out += basis_.eval(k, x, r) * poly[k];
  return out;
}

CurveNetwork build_network(const HalfEdgeMesh& mesh, const VertexFrame& frames, const UnivariateBasis& basis,
                           const CombinedPhi& phi, unsigned threads) {
  std::vector<EdgeSolution> solutions(mesh.num_edges());
  const auto& p = mesh.vertices();
  parallel_for(
      solutions.size(),
      [&](std::size_t e) {
        const auto [lo, hi] = mesh.edges()[e];
        try {
          solutions[e] = solve_edge(p[lo], p[hi], frames.t(mesh, lo, hi), frames.t(mesh, hi, lo), phi);
        } catch (const Error& err) {
          throw Error(err.code(), "edge (" + std::to_string(lo) + ", " + std::to_string(hi) + "): " + err.what());
        }
      },
      threads);
  return CurveNetwork(mesh, frames, basis, phi, std::move(solutions));
}

double edge_energy(const CurveNetwork& network, int i, int j, double lambda_ij, double lambda_ji) {
  const auto& mesh = network.mesh();
  const auto& f = network.frames();
  const auto& p = mesh.vertices();
  return curve_energy(arc_polygon(p[i], p[j], f.t(mesh, i, j), f.t(mesh, j, i), lambda_ij, lambda_ji),
                      network.phi());
}

void write_curves_obj(std::ostream& out, const CurveNetwork& network, int samples) {
  if (samples < 1) throw Error(ErrorCode::ConfigError, "curve sampling needs at least one segment");
  const double beta = network.basis().beta();
  const auto& edges = network.mesh().edges();
  for (const auto& [lo, hi] : edges) {
    for (int s = 0; s <= samples; ++s) {
      const double x = s == samples ? beta : beta * s / samples;
      out << "v " << format_point(network.eval(lo, hi, x)) << '\n';
    }
  }
  long long base = 1;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    out << 'l';
    for (int s = 0; s <= samples; ++s) out << ' ' << base + s;
    out << '\n';
    base += samples + 1;
  }
}

}  // namespace nielson
