#include "nielson/c0_patch.hpp"

#include <cmath>
#include <string>

#include <Eigen/Geometry>

#include "nielson/error.hpp"
#include "nielson/parallel.hpp"

namespace nielson {
namespace {

constexpr double binomial(int g, int z) { return g == 2 && z == 1 ? 2.0 : 1.0; }

void check_gamma(const EnergyWeights& epsilon) {
  validate_weights(epsilon, "surface");
  if (epsilon.w.size() > 2) throw Error(ErrorCode::ConfigError, "surface energy supports at most two orders");
}

}  // namespace

ControlNet assemble_boundary_net(const CurveNetwork& network, int face) {
  ControlNet net;
  net.face = network.mesh().faces().at(face);
  const auto [i, j, k] = net.face;
  const auto ij = network.polygon(i, j);
  const auto jk = network.polygon(j, k);
  const auto ki = network.polygon(k, i);
  net.at(3, 0) = ij[0];
  net.at(2, 0) = ij[1];
  net.at(1, 0) = ij[2];
  net.at(0, 0) = ij[3];
  net.at(0, 1) = jk[1];
  net.at(0, 2) = jk[2];
  net.at(0, 3) = jk[3];
  net.at(1, 2) = ki[1];
  net.at(2, 1) = ki[2];
  net.at(1, 1) = Vec3::Zero();
  return net;
}

std::vector<TauTable> thin_plate_tables(const TrivariateBasis& basis, const EnergyWeights& epsilon) {
  check_gamma(epsilon);
  std::vector<TauTable> tau;
  for (int g = 1; g <= static_cast<int>(epsilon.w.size()); ++g) tau.push_back(tau_table(basis, g));
  return tau;
}

Vec3 solve_interior_point(const ControlNet& net, const std::vector<TauTable>& tau, const EnergyWeights& epsilon) {
  check_gamma(epsilon);
  if (tau.size() < epsilon.w.size()) throw Error(ErrorCode::ConfigError, "missing tau table for surface order");
  Vec3 num = Vec3::Zero();
  double den = 0.0;
  for (int g = 1; g <= static_cast<int>(epsilon.w.size()); ++g) {
    const double eps = epsilon.w[g - 1];
    if (eps == 0.0) continue;
    for (int z = 0; z <= g; ++z) {
      const double c = eps * binomial(g, z);
      const TauColumn& col = tau[g - 1].column.at(z);
      den += c * col(kTri111);
      for (int f = 0; f < kTriCount; ++f) {
        if (f != kTri111) num += c * col(f) * net.p[f];
      }
    }
  }
  if (!(std::abs(den) > 1e-300) || !std::isfinite(den)) {
    throw Error(ErrorCode::ZeroDenominator, "thin-plate denominator vanishes");
  }
  return -num / den;
}

std::vector<ControlNet> build_c0_patches(const CurveNetwork& network, const std::vector<TauTable>& tau,
                                         const EnergyWeights& epsilon, unsigned threads) {
  std::vector<ControlNet> nets(network.mesh().num_faces());
  parallel_for(
      nets.size(),
      [&](std::size_t f) {
        try {
          ControlNet net = assemble_boundary_net(network, static_cast<int>(f));
          net.at(1, 1) = solve_interior_point(net, tau, epsilon);
          net.interior_solved = true;
          nets[f] = net;
        } catch (const Error& err) {
          throw Error(err.code(), "face " + std::to_string(f) + ": " + err.what());
        }
      },
      threads);
  return nets;
}

ThinPlateGram thin_plate_gram(const TrivariateBasis& basis, int gamma, double tol) {
  ThinPlateGram gram(gamma);
  for (int g = 1; g <= gamma; ++g) {
    for (int z = 0; z <= g; ++z) gram[g - 1].push_back(tau_gram(basis, z, g - z, tol));
  }
  return gram;
}

double thin_plate_energy(const ControlNet& net, const ThinPlateGram& gram, const EnergyWeights& epsilon) {
  Eigen::Matrix<double, kTriCount, kTriCount> dots;
  for (int a = 0; a < kTriCount; ++a)
    for (int b = 0; b < kTriCount; ++b) dots(a, b) = net.p[a].dot(net.p[b]);
  double e = 0.0;
  for (int g = 1; g <= static_cast<int>(epsilon.w.size()); ++g) {
    if (epsilon.w[g - 1] == 0.0) continue;
    for (int z = 0; z <= g; ++z) {
      e += epsilon.w[g - 1] * binomial(g, z) * gram.at(g - 1).at(z).cwiseProduct(dots).sum();
    }
  }
  return e;
}

Vec3 eval_patch(const ControlNet& net, const TrivariateBasis& basis, const BarycentricPoint& p) {
  const auto t = basis.eval_all(p);
  Vec3 out = Vec3::Zero();
  for (int f = 0; f < kTriCount; ++f) out += t[f] * net.p[f];
  return out;
}

Vec3 patch_normal(const ControlNet& net, const TrivariateBasis& basis, const BarycentricPoint& p) {
  const TriJet j = basis.chart_jets(p.u, p.v);
  Vec3 dx = Vec3::Zero(), dy = Vec3::Zero();
  for (int f = 0; f < kTriCount; ++f) {
    dx += j(f, 1) * net.p[f];
    dy += j(f, 2) * net.p[f];
  }
  const Vec3 n = dy.cross(dx);
  if (!(n.norm() > 1e-12 * dx.norm() * dy.norm()) || n.norm() == 0.0) {
    throw Error(ErrorCode::DegenerateNormal, "patch chart partials are parallel");
  }
  return n.normalized();
}

BarycentricPoint side_point(int side, double t, double beta) {
  switch (side) {
    case 0:
      return {beta - t, 0.0, t};
    case 1:
      return {0.0, t, beta - t};
    case 2:
      return {t, beta - t, 0.0};
  }
  throw Error(ErrorCode::IndexOutOfRange, "side index must be 0, 1 or 2");
}

}  // namespace nielson
