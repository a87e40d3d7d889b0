#include <doctest.h>

#include <cmath>

#include "nielson/error.hpp"
#include "nielson/trivariate_basis.hpp"
#include "nielson/univariate_basis.hpp"
#include "test_util.hpp"

using namespace nielson;
using namespace nielson::testing;

TEST_CASE("flat index layout") {
  CHECK(tri_flat(0, 0) == 0);
  CHECK(tri_flat(1, 1) == 5);
  CHECK(tri_flat(3, 0) == 9);
  for (int f = 0; f < kTriCount; ++f) CHECK(tri_flat(tri_index(f).first, tri_index(f).second) == f);
  CHECK(tri_jet_column(1, 0) == 1);
  CHECK(tri_jet_column(0, 1) == 2);
  CHECK(tri_jet_column(2, 0) == 3);
  CHECK(tri_jet_column(1, 1) == 4);
  CHECK(tri_jet_column(0, 2) == 5);
}

TEST_CASE("trivariate systems are non-negative partitions of unity") {
  for (const BasisFamily& f : admissible_families()) {
    CAPTURE(short_name(f.kind));
    CAPTURE(f.beta);
    const TrivariateBasis t = make_trivariate(f);
    const int n = 16;
    double lowest = 1.0;
    for (int a = 0; a <= n; ++a) {
      for (int b = 0; a + b <= n; ++b) {
        const BarycentricPoint p{f.beta * a / n, f.beta * b / n, f.beta * (n - a - b) / n};
        const auto v = t.eval_all(p);
        double sum = 0.0;
        for (double x : v) {
          sum += x;
          lowest = std::min(lowest, x);
        }
        CHECK(std::abs(sum - 1.0) <= 1e-12);
      }
    }
    CHECK(lowest >= -1e-13);
  }
}

TEST_CASE("boundary traces reproduce the curve basis") {
  for (const BasisFamily& f : admissible_families()) {
    CAPTURE(short_name(f.kind));
    CAPTURE(f.beta);
    const TrivariateBasis t = make_trivariate(f);
    const UnivariateBasis b = make_basis(f);
    for (int m = 0; m <= 10; ++m) {
      const double x = f.beta * m / 10.0;
      for (int r = 0; r <= 3; ++r) {
        CHECK(std::abs(t.eval({r, 0}, {x, 0.0, f.beta - x}) - b.eval(r, x)) <= 1e-13);
        CHECK(std::abs(t.eval({r, 3 - r}, {x, f.beta - x, 0.0}) - b.eval(r, x)) <= 1e-13);
        CHECK(std::abs(t.eval({0, r}, {0.0, x, f.beta - x}) - b.eval(r, x)) <= 1e-13);
      }
      // Functions that do not belong to an edge vanish on it.
      CHECK(std::abs(t.eval({1, 1}, {x, 0.0, f.beta - x})) <= 1e-14);
      CHECK(std::abs(t.eval({1, 1}, {0.0, x, f.beta - x})) <= 1e-14);
    }
  }
}

TEST_CASE("chart jets match central differences") {
  for (const BasisFamily& f : default_families()) {
    CAPTURE(short_name(f.kind));
    const TrivariateBasis t = make_trivariate(f);
    const double x = 0.3 * f.beta, y = 0.45 * f.beta, h = 1e-5 * f.beta;
    const TriJet j = t.chart_jets(x, y);
    const TriJet jx = t.chart_jets(x + h, y) - t.chart_jets(x - h, y);
    const TriJet jy = t.chart_jets(x, y + h) - t.chart_jets(x, y - h);
    for (int a = 0; a < kTriCount; ++a) {
      CHECK(j(a, 1) == doctest::Approx(jx(a, 0) / (2 * h)).epsilon(1e-6));
      CHECK(j(a, 2) == doctest::Approx(jy(a, 0) / (2 * h)).epsilon(1e-6));
      CHECK(j(a, 3) == doctest::Approx(jx(a, 1) / (2 * h)).epsilon(1e-5));
      CHECK(j(a, 4) == doctest::Approx(jy(a, 1) / (2 * h)).epsilon(1e-5));
      CHECK(j(a, 5) == doctest::Approx(jy(a, 2) / (2 * h)).epsilon(1e-5));
      CHECK(t.eval_partial(tri_index(a), x, y, 1, 1) == doctest::Approx(j(a, 4)));
    }
  }
}

TEST_CASE("points outside the triangle are rejected") {
  const TrivariateBasis t = make_trivariate(make_family(FamilyKind::QuarticBernsteinBlended, 1.0));
  CHECK_THROWS_AS(t.eval({1, 1}, {0.5, 0.6, 0.0}), Error);
  CHECK_THROWS_AS(t.eval({1, 1}, {-0.1, 0.6, 0.5}), Error);
}
