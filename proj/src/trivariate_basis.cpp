#include "nielson/trivariate_basis.hpp"

#include <cmath>
#include <sstream>

#include "nielson/error.hpp"

namespace nielson {

int tri_jet_column(int z, int g_minus_z) {
  const int g = z + g_minus_z;
  if (z < 0 || g_minus_z < 0 || g > 2) {
    throw Error(ErrorCode::DomainError, "chart derivative order must not exceed 2");
  }
  if (g == 0) return 0;
  if (g == 1) return z == 1 ? 1 : 2;
  return z == 2 ? 3 : (z == 1 ? 4 : 5);
}

TrivariateBasis::TrivariateBasis(BasisFamily family)
    : family_(make_family(family.kind, family.beta)) {
  const double beta = family_.beta;
  switch (family_.kind) {
    case FamilyKind::Trigonometric:
    case FamilyKind::Hyperbolic: {
      const bool hyp = family_.kind == FamilyKind::Hyperbolic;
      const double s = hyp ? std::sinh(0.5 * beta) : std::sin(0.5 * beta);
      const double c = hyp ? std::cosh(0.5 * beta) : std::cos(0.5 * beta);
      const double s4 = std::pow(s, 4), s5 = s4 * s;
      k_ = {1.0 / s4,
            4.0 * c / s4,
            (2.0 + 4.0 * c * c) / s4,
            (4.0 + 8.0 * c * c) / s5,
            (16.0 * c + 8.0 * c * c * c) / s5,
            // The hyperbolic system needs the opposite sign here to stay normalized.
            (hyp ? -1.0 : 1.0) * (10.0 + 20.0 * c * c) / s4};
      break;
    }
    case FamilyKind::AlgebraicTrigonometric: {
      const double sb = std::sin(beta), cb = std::cos(beta);
      const double d = (2.0 * sb - beta - beta * cb) * (beta - sb);
      at_outer_ = 1.0 / (beta - sb);
      at_scale_ = sb / d;
      at_c3_ = 4.0 * (3.0 * beta + 4.0 * sb - beta * cb) * std::cos(0.5 * beta) / d;
      at_c4_ = 4.0 * sb * std::cos(0.5 * beta) / d;
      break;
    }
    default:
      break;
  }
}

TrivariateBasis make_trivariate(BasisFamily family) { return TrivariateBasis(family); }

void TrivariateBasis::check_domain(double u, double v, double w) const {
  const double beta = family_.beta;
  const double slack = 1e-12 * std::max(1.0, beta);
  const bool inside = u >= -slack && v >= -slack && w >= -slack && u <= beta + slack &&
                      v <= beta + slack && w <= beta + slack &&
                      std::abs(u + v + w - beta) <= slack;
  if (!inside) {
    std::ostringstream os;
    os.precision(17);
    os << "(" << u << ", " << v << ", " << w << ") outside Omega_" << beta;
    throw Error(ErrorCode::DomainError, os.str());
  }
}

double TrivariateBasis::eval(TriIndex idx, const BarycentricPoint& p) const {
  const auto [r, s] = idx;
  if (r < 0 || s < 0 || r + s > 3) throw Error(ErrorCode::DomainError, "index outside 0 <= r + s <= 3");
  return eval_all(p)[tri_flat(r, s)];
}

std::array<double, kTriCount> TrivariateBasis::eval_all(const BarycentricPoint& p) const {
  check_domain(p.u, p.v, p.w);
  return values(p.u, p.v, p.w);
}

double TrivariateBasis::eval_partial(TriIndex idx, double x, double y, int dx, int dy) const {
  const auto [r, s] = idx;
  if (r < 0 || s < 0 || r + s > 3) throw Error(ErrorCode::DomainError, "index outside 0 <= r + s <= 3");
  const int col = tri_jet_column(dx, dy);
  return chart_jets(x, y)(tri_flat(r, s), col);
}

TriJet TrivariateBasis::chart_jets(double x, double y) const {
  const double w = family_.beta - x - y;
  check_domain(x, y, w);
  using J = Jet<2>;
  const J jx = J::variable(x, 0);
  const J jy = J::variable(y, 1);
  const auto t = values(jx, jy, family_.beta - jx - jy);
  TriJet out;
  for (int i = 0; i < kTriCount; ++i) {
    out(i, 0) = t[i].v;
    out(i, 1) = t[i].d(0);
    out(i, 2) = t[i].d(1);
    out(i, 3) = t[i].h(0, 0);
    out(i, 4) = t[i].h(0, 1);
    out(i, 5) = t[i].h(1, 1);
  }
  return out;
}

}  // namespace nielson
