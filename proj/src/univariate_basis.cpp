#include "nielson/univariate_basis.hpp"

#include <sstream>

#include "nielson/error.hpp"

namespace nielson {

namespace {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double result = 1.0;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

// c_{2mu,r} = sum_l C(mu, r-l) C(r-l, l) (2 cos(beta/2))^(r-2l) / sin^(2mu)(beta/2),
// symmetric in r <-> 2mu - r.
std::array<double, 5> degree4_coefficients(double beta, bool hyperbolic) {
  constexpr int mu = 2;
  const double s = detail::sine_like(0.5 * beta, hyperbolic);
  const double c = detail::cosine_like(0.5 * beta, hyperbolic);
  std::array<double, 5> coeff{};
  for (int r = 0; r <= mu; ++r) {
    double sum = 0.0;
    for (int l = 0; l <= r / 2; ++l) {
      sum += binomial(mu, r - l) * binomial(r - l, l) * std::pow(2.0 * c, r - 2 * l);
    }
    coeff[r] = sum / std::pow(s, 2 * mu);
    coeff[2 * mu - r] = coeff[r];
  }
  return coeff;
}

}  // namespace

UnivariateBasis::UnivariateBasis(BasisFamily family)
    : family_(make_family(family.kind, family.beta)) {
  const double beta = family_.beta;
  switch (family_.kind) {
    case FamilyKind::Trigonometric:
      coeff_ = degree4_coefficients(beta, false);
      break;
    case FamilyKind::Hyperbolic:
      coeff_ = degree4_coefficients(beta, true);
      break;
    case FamilyKind::AlgebraicTrigonometric: {
      const double sb = std::sin(beta);
      const double cb = std::cos(beta);
      at_outer_ = 1.0 / (beta - sb);
      at_scale_ = sb / ((2.0 * sb - beta - beta * cb) * (beta - sb));
      break;
    }
    default:
      break;
  }
}

UnivariateBasis make_basis(BasisFamily family) { return UnivariateBasis(family); }

double UnivariateBasis::clamp_to_domain(double x) const {
  const double beta = family_.beta;
  const double slack = 1e-12 * std::max(1.0, beta);
  if (!(x >= -slack && x <= beta + slack)) {
    std::ostringstream os;
    os.precision(17);
    os << "x = " << x << " outside [0, " << beta << "]";
    throw Error(ErrorCode::DomainError, os.str());
  }
  return std::clamp(x, 0.0, beta);
}

double UnivariateBasis::eval(int k, double x, int r) const {
  if (k < 0 || k > 3) throw Error(ErrorCode::DomainError, "basis index must be in 0..3");
  if (r < 0 || r > max_derivative_order) {
    throw Error(ErrorCode::DomainError, "derivative order must be in 0..2");
  }
  return eval_all(x)(k, r);
}

BasisJet UnivariateBasis::eval_all(double x) const {
  const auto jets = values(Jet<1>::variable(clamp_to_domain(x), 0));
  BasisJet out;
  for (int k = 0; k < 4; ++k) {
    out(k, 0) = jets[k].v;
    out(k, 1) = jets[k].d(0);
    out(k, 2) = jets[k].h(0, 0);
  }
  return out;
}

}  // namespace nielson
