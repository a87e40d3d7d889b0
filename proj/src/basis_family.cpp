#include "nielson/basis_family.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "nielson/error.hpp"

namespace nielson {

namespace {

bool beta_admissible(FamilyKind kind, double beta) {
  if (!std::isfinite(beta)) return false;
  switch (kind) {
    case FamilyKind::CubicBernstein:
    case FamilyKind::QuarticBernsteinBlended:
      return beta == 1.0;
    case FamilyKind::Trigonometric:
      return beta > 0.0 && beta < std::numbers::pi;
    case FamilyKind::Hyperbolic:
      return beta > 0.0;
    case FamilyKind::AlgebraicTrigonometric:
      return beta > 0.0 && beta < 2.0 * std::numbers::pi;
  }
  return false;
}

}  // namespace

BasisFamily make_family(FamilyKind kind, double beta) {
  if (!beta_admissible(kind, beta)) {
    std::ostringstream os;
    os.precision(17);
    os << "beta = " << beta << " is not admissible for family " << short_name(kind);
    throw Error(ErrorCode::OutOfRangeBeta, os.str());
  }
  return BasisFamily{kind, beta};
}

double default_beta(FamilyKind kind) {
  return is_polynomial(kind) ? 1.0 : std::numbers::pi / 2.0;
}

std::string_view short_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::CubicBernstein: return "cubic";
    case FamilyKind::QuarticBernsteinBlended: return "quartic";
    case FamilyKind::Trigonometric: return "trig";
    case FamilyKind::Hyperbolic: return "hyperbolic";
    case FamilyKind::AlgebraicTrigonometric: return "algtrig";
  }
  return "?";
}

std::optional<FamilyKind> parse_family_kind(std::string_view name) {
  for (FamilyKind k : {FamilyKind::CubicBernstein, FamilyKind::QuarticBernsteinBlended,
                       FamilyKind::Trigonometric, FamilyKind::Hyperbolic,
                       FamilyKind::AlgebraicTrigonometric}) {
    if (short_name(k) == name) return k;
  }
  return std::nullopt;
}

bool is_polynomial(FamilyKind kind) {
  return kind == FamilyKind::CubicBernstein || kind == FamilyKind::QuarticBernsteinBlended;
}

}  // namespace nielson
