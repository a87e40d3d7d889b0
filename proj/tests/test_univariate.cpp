#include <doctest.h>

#include <cmath>
#include <numbers>

#include "nielson/error.hpp"
#include "nielson/univariate_basis.hpp"
#include "test_util.hpp"

using namespace nielson;
using namespace nielson::testing;

TEST_CASE("family parameters are range checked") {
  CHECK_THROWS_AS(make_family(FamilyKind::Trigonometric, std::numbers::pi), Error);
  CHECK_THROWS_AS(make_family(FamilyKind::AlgebraicTrigonometric, 2.0 * std::numbers::pi), Error);
  CHECK_THROWS_AS(make_family(FamilyKind::Hyperbolic, 0.0), Error);
  CHECK_THROWS_AS(make_family(FamilyKind::CubicBernstein, 2.0), Error);
  try {
    make_family(FamilyKind::Trigonometric, 4.0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfRangeBeta);
  }
  CHECK(make_family(FamilyKind::Hyperbolic, 50.0).beta == 50.0);
  CHECK(parse_family_kind("algtrig") == FamilyKind::AlgebraicTrigonometric);
  CHECK_FALSE(parse_family_kind("bezier").has_value());
}

TEST_CASE("basis is a non-negative symmetric partition of unity") {
  for (const BasisFamily& f : admissible_families()) {
    CAPTURE(short_name(f.kind));
    CAPTURE(f.beta);
    const UnivariateBasis b = make_basis(f);
    for (int n = 0; n <= 40; ++n) {
      const double x = f.beta * n / 40.0;
      double sum = 0.0;
      for (int k = 0; k < 4; ++k) {
        const double v = b.eval(k, x);
        CHECK(v >= -1e-15);
        CHECK(std::abs(v - b.eval(3 - k, f.beta - x)) <= 1e-12);
        sum += v;
      }
      CHECK(std::abs(sum - 1.0) <= 1e-12);
      // Derivatives of a partition of unity sum to zero.
      const BasisJet j = b.eval_all(x);
      CHECK(std::abs(j.col(1).sum()) <= 1e-11 * std::max(1.0, j.col(1).cwiseAbs().maxCoeff()));
      CHECK(std::abs(j.col(2).sum()) <= 1e-10 * std::max(1.0, j.col(2).cwiseAbs().maxCoeff()));
    }
    CHECK(b.eval(0, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(b.eval(3, f.beta) == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("cubic Bernstein values") {
  const UnivariateBasis b = make_basis(make_family(FamilyKind::CubicBernstein, 1.0));
  CHECK(b.eval(1, 0.25) == doctest::Approx(3 * 0.25 * 0.75 * 0.75));
  CHECK(b.eval(2, 0.25, 1) == doctest::Approx(6 * 0.25 * 0.75 - 3 * 0.0625));
  CHECK(b.eval(3, 0.5, 2) == doctest::Approx(3.0));
}

TEST_CASE("jet derivatives match central differences") {
  for (const BasisFamily& f : admissible_families()) {
    CAPTURE(short_name(f.kind));
    CAPTURE(f.beta);
    const UnivariateBasis b = make_basis(f);
    const double h = 1e-5 * f.beta;
    for (double t : {0.2, 0.5, 0.77}) {
      const double x = t * f.beta;
      for (int k = 0; k < 4; ++k) {
        const double d1 = (b.eval(k, x + h) - b.eval(k, x - h)) / (2 * h);
        const double d2 = (b.eval(k, x + h, 1) - b.eval(k, x - h, 1)) / (2 * h);
        const double s1 = std::max(1.0, 1.0 / f.beta), s2 = s1 * s1;
        CHECK(std::abs(b.eval(k, x, 1) - d1) <= 1e-6 * s1);
        CHECK(std::abs(b.eval(k, x, 2) - d2) <= 1e-5 * s2);
      }
    }
  }
}

TEST_CASE("evaluation outside the domain is rejected") {
  const UnivariateBasis b = make_basis(make_family(FamilyKind::Trigonometric, 1.0));
  CHECK_THROWS_AS(b.eval(0, -0.1), Error);
  CHECK_THROWS_AS(b.eval(0, 1.1), Error);
  CHECK_THROWS_AS(b.eval(0, 0.5, 3), Error);
  CHECK_NOTHROW(b.eval(0, 1.0 + 1e-14));
}
