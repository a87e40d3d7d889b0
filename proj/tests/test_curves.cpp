#include <doctest.h>

#include <cmath>
#include <random>

#include <Eigen/Geometry>
#include <Eigen/LU>
#include <sstream>

#include "meshes.hpp"
#include "nielson/curve_network.hpp"
#include "nielson/error.hpp"
#include "nielson/quadrature.hpp"
#include "test_util.hpp"

using namespace nielson;
using namespace nielson::testing;

namespace {

const BasisFamily kCubic = make_family(FamilyKind::CubicBernstein, 1.0);

// Direct quadrature of sum_r theta_r |c^(r)|^2.
double strain_by_quadrature(const UnivariateBasis& b, const std::array<Vec3, 4>& P, const EnergyWeights& theta) {
  return integrate_scalar(
      [&](double x) {
        const BasisJet j = b.eval_all(x);
        double e = 0.0;
        for (std::size_t r = 1; r <= theta.w.size(); ++r) {
          Vec3 d = Vec3::Zero();
          for (int k = 0; k < 4; ++k) d += j(k, r) * P[k];
          e += theta.w[r - 1] * d.squaredNorm();
        }
        return e;
      },
      0.0, b.beta(), {1e-13, 40});
}

}  // namespace

TEST_CASE("straight segment") {
  const CombinedPhi phi = combined_phi(kCubic, {{1.0}});
  const Vec3 pi(0, 0, 0), pj(1, 0, 0), t(1, 0, 0);
  const EdgeSolution s = solve_edge(pi, pj, t, -t, phi);
  CHECK(s.lambda_ij == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(s.lambda_ji == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(s.delta > 0.0);
  CHECK(curve_energy(arc_polygon(pi, pj, t, -t, s.lambda_ij, s.lambda_ji), phi) == doctest::Approx(1.0));
}

TEST_CASE("orthogonal tangents decouple the system") {
  const CombinedPhi phi = combined_phi(kCubic, {{1.0}});
  const Vec3 pi(0.2, -0.1, 0.4), pj(1.3, 0.5, -0.2);
  const Vec3 tij = Vec3(1, 1, 0).normalized(), tji = Vec3(0, 0, 1);
  const EdgeSolution s = solve_edge(pi, pj, tij, tji, phi);
  CHECK(s.lambda_ij == doctest::Approx(0.25 * (pj - pi).dot(tij)).epsilon(1e-14));
}

TEST_CASE("coincident end points give a collapsed arc") {
  const CombinedPhi phi = combined_phi(kCubic, {{1.0, 1.0}});
  const Vec3 p(1, 2, 3), t(0, 1, 0);
  const EdgeSolution s = solve_edge(p, p, t, -t, phi);
  CHECK(std::abs(s.lambda_ij) <= 1e-15);
  CHECK(std::abs(s.lambda_ji) <= 1e-15);
}

TEST_CASE("degenerate tables are rejected") {
  CombinedPhi phi = CombinedPhi::Zero();
  CHECK_THROWS_AS(solve_edge(Vec3::Zero(), Vec3::UnitX(), Vec3::UnitX(), -Vec3::UnitX(), phi), Error);
}

TEST_CASE("energy expansion matches quadrature and is minimal at the solution") {
  std::mt19937 rng(3);
  for (const BasisFamily& f : default_families()) {
    CAPTURE(short_name(f.kind));
    const UnivariateBasis b = make_basis(f);
    for (const EnergyWeights& theta : {EnergyWeights{{1.0}}, EnergyWeights{{1.0, 1.0}}, EnergyWeights{{0.3, 2.0}}}) {
      const CombinedPhi phi = combined_phi(f, theta);
      const Vec3 pi = random_vec(rng), pj = random_vec(rng), tij = random_unit(rng), tji = random_unit(rng);
      const EdgeSolution s = solve_edge(pi, pj, tij, tji, phi);
      const auto P = arc_polygon(pi, pj, tij, tji, s.lambda_ij, s.lambda_ji);
      const double e = curve_energy(P, phi);
      CHECK(e == doctest::Approx(strain_by_quadrature(b, P, theta)).epsilon(1e-8));
      for (double d : {-1e-2, -1e-3, 1e-3, 1e-2}) {
        CHECK(curve_energy(arc_polygon(pi, pj, tij, tji, s.lambda_ij + d, s.lambda_ji), phi) >= e);
        CHECK(curve_energy(arc_polygon(pi, pj, tij, tji, s.lambda_ij, s.lambda_ji + d), phi) >= e);
      }
    }
  }
}

TEST_CASE("closed solution agrees with a generic solve on quadrature tables") {
  std::mt19937 rng(4);
  for (const BasisFamily& f : default_families()) {
    const UnivariateBasis b = make_basis(f);
    const CombinedPhi q = phi_quadrature(b, 1).phi + phi_quadrature(b, 2).phi;
    const Vec3 pi = random_vec(rng), pj = random_vec(rng), tij = random_unit(rng), tji = random_unit(rng);
    Eigen::Matrix2d A;
    A << q(1, 1), tij.dot(tji) * q(1, 2), tij.dot(tji) * q(1, 2), q(2, 2);
    const Eigen::Vector2d rhs(-(pi * (q(0, 1) + q(1, 1)) + pj * (q(1, 2) + q(1, 3))).dot(tij),
                              -(pi * (q(0, 2) + q(1, 2)) + pj * (q(2, 2) + q(2, 3))).dot(tji));
    const Eigen::Vector2d x = A.lu().solve(rhs);
    const EdgeSolution s = solve_edge(pi, pj, tij, tji, combined_phi(f, {{1.0, 1.0}}));
    CHECK(rel_diff(s.lambda_ij, x(0)) <= 1e-9);
    CHECK(rel_diff(s.lambda_ji, x(1)) <= 1e-9);
  }
}

TEST_CASE("network over a mesh") {
  const HalfEdgeMesh m = perturbed(cube(), 0.05, 1).build();
  const VertexFrame frames = edge_tangents(m, angle_weighted_normals(m));
  const UnivariateBasis b = make_basis(make_family(FamilyKind::Trigonometric, 1.2));
  const CurveNetwork net = build_network(m, frames, b, combined_phi(b.family(), {{1.0, 1.0}}));
  CHECK(m.num_edges() == 18);
  for (int e = 0; e < m.num_edges(); ++e) CHECK(net.solution(e).delta > 0.0);
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> u(0.0, b.beta());
  for (const auto& [i, j] : m.edges()) {
    CHECK(net.eval(i, j, 0.0).isApprox(m.vertices()[i], 1e-15));
    CHECK(net.eval(i, j, b.beta()).isApprox(m.vertices()[j], 1e-14));
    const auto poly = net.polygon(i, j);
    CHECK(poly[1].isApprox(m.vertices()[i] + net.lambda(i, j) * frames.t(m, i, j)));
    CHECK(poly[2].isApprox(m.vertices()[j] + net.lambda(j, i) * frames.t(m, j, i)));
    for (int n = 0; n < 20; ++n) {
      const double x = u(rng);
      CHECK((net.eval(i, j, x) - net.eval(j, i, b.beta() - x)).norm() <= 1e-13);
    }
    const Vec3 d = net.eval(i, j, 0.0, 1);
    CHECK(d.cross(frames.t(m, i, j)).norm() <= 1e-12 * d.norm());
  }
  CHECK_THROWS_AS(net.lambda(0, 7), Error);
}

TEST_CASE("network scales with the mesh") {
  RawMesh raw = perturbed(icosphere(1), 0.02, 5);
  RawMesh big = raw;
  for (Vec3& p : big.vertices) p *= 4.5;
  const HalfEdgeMesh a = raw.build(), c = big.build();
  const VertexFrame fa = edge_tangents(a, angle_weighted_normals(a)), fc = edge_tangents(c, angle_weighted_normals(c));
  const UnivariateBasis b = make_basis(kCubic);
  const CurveNetwork na = build_network(a, fa, b, combined_phi(kCubic, {{1.0}}));
  const CurveNetwork nc = build_network(c, fc, b, combined_phi(kCubic, {{1.0}}));
  for (int e = 0; e < a.num_edges(); ++e) {
    CHECK(rel_diff(4.5 * na.solution(e).lambda_ij, nc.solution(e).lambda_ij) <= 1e-12);
  }
}

TEST_CASE("polyline export") {
  const HalfEdgeMesh m = cube().build();
  const VertexFrame frames = edge_tangents(m, angle_weighted_normals(m));
  const CurveNetwork net = build_network(m, frames, make_basis(kCubic), combined_phi(kCubic, {{1.0}}));
  std::ostringstream os;
  write_curves_obj(os, net, 4);
  std::istringstream in(os.str());
  std::string line;
  int v = 0, l = 0;
  while (std::getline(in, line)) {
    v += line.rfind("v ", 0) == 0;
    l += line.rfind("l ", 0) == 0;
  }
  CHECK(v == 18 * 5);
  CHECK(l == 18);
  CHECK(os.str().find("v -1 -1 -1\n") != std::string::npos);
}
