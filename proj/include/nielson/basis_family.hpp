#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace nielson {

enum class FamilyKind {
  CubicBernstein,
  QuarticBernsteinBlended,
  Trigonometric,
  Hyperbolic,
  AlgebraicTrigonometric,
};

/// A basis family together with its shape parameter (the domain length).
struct BasisFamily {
  FamilyKind kind = FamilyKind::CubicBernstein;
  double beta = 1.0;
};

/// Validates beta against the family's admissible interval; throws
/// Error(OutOfRangeBeta). The checks are strict with no tolerance band.
BasisFamily make_family(FamilyKind kind, double beta);

/// Default shape parameter for a family (1 for polynomial families, pi/2 otherwise).
double default_beta(FamilyKind kind);

/// Short CLI name: cubic, quartic, trig, hyperbolic, algtrig.
std::string_view short_name(FamilyKind kind);
std::optional<FamilyKind> parse_family_kind(std::string_view name);

bool is_polynomial(FamilyKind kind);

}  // namespace nielson
