#include "nielson/quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "nielson/error.hpp"

namespace nielson {

namespace {

constexpr int kPoints = 15;

struct Rule {
  std::array<double, kPoints> x{};
  std::array<double, kPoints> w{};
};

// Gauss-Legendre nodes on [-1, 1] by Newton iteration on P_n.
Rule make_rule() {
  Rule rule;
  const int n = kPoints;
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.x[i] = x;
    rule.w[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

const Rule& rule() {
  static const Rule r = make_rule();
  return r;
}

// Panel integral together with the integral of |f|, which sets the roundoff floor.
struct Panel {
  Eigen::VectorXd value;
  Eigen::VectorXd magnitude;
};

Panel panel(const VectorIntegrand& f, double a, double b) {
  const Rule& r = rule();
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  const Eigen::VectorXd f0 = f(mid + half * r.x[0]);
  Panel p{r.w[0] * f0, r.w[0] * f0.cwiseAbs()};
  for (int i = 1; i < kPoints; ++i) {
    const Eigen::VectorXd fi = f(mid + half * r.x[i]);
    p.value += r.w[i] * fi;
    p.magnitude += r.w[i] * fi.cwiseAbs();
  }
  p.value *= half;
  p.magnitude *= std::abs(half);
  return p;
}

Eigen::VectorXd refine(const VectorIntegrand& f, double a, double b, const Panel& whole, double tol,
                       int depth, int max_depth) {
  const double m = 0.5 * (a + b);
  const Panel left = panel(f, a, m);
  const Panel right = panel(f, m, b);
  const Eigen::VectorXd both = left.value + right.value;
  const double err = (both - whole.value).cwiseAbs().maxCoeff();
  const double floor = 512.0 * std::numeric_limits<double>::epsilon() *
                       (left.magnitude + right.magnitude).maxCoeff();
  if (err <= std::max(tol, floor)) return both;
  if (depth >= max_depth) {
    throw Error(ErrorCode::QuadratureNonConvergence, "subdivision limit reached");
  }
  return refine(f, a, m, left, 0.5 * tol, depth + 1, max_depth) +
         refine(f, m, b, right, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace

Eigen::VectorXd integrate(const VectorIntegrand& f, double a, double b, const QuadratureOptions& opt) {
  if (a == b) return Eigen::VectorXd::Zero(f(a).size());
  return refine(f, a, b, panel(f, a, b), opt.tol, 0, opt.max_depth);
}

double integrate_scalar(const std::function<double(double)>& f, double a, double b,
                        const QuadratureOptions& opt) {
  const VectorIntegrand g = [&](double x) { return Eigen::VectorXd::Constant(1, f(x)); };
  return integrate(g, a, b, opt)(0);
}

Eigen::VectorXd integrate_triangle(const VectorIntegrand2& f, double beta, const QuadratureOptions& opt) {
  QuadratureOptions inner = opt;
  inner.tol = 0.5 * opt.tol / std::max(1.0, beta);
  QuadratureOptions outer = opt;
  outer.tol = 0.5 * opt.tol;
  const VectorIntegrand column = [&](double x) {
    const VectorIntegrand g = [&](double y) { return f(x, y); };
    return integrate(g, 0.0, beta - x, inner);
  };
  return integrate(column, 0.0, beta, outer);
}

}  // namespace nielson
