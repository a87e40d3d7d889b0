#include <doctest.h>

#include <sstream>
#include <string>

#include "meshes.hpp"
#include "nielson/error.hpp"
#include "nielson/pipeline.hpp"

using namespace nielson;
using namespace nielson::testing;

namespace {

int count_prefix(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) n += line.rfind(prefix, 0) == 0;
  return n;
}

HalfEdgeMesh mesh_of(const RawMesh& raw) {
  std::istringstream in(to_obj(raw));
  return load_obj(in);
}

}  // namespace

TEST_CASE("json configuration") {
  PipelineConfig c;
  apply_json(c, nlohmann::json::parse(R"({"family": "trig", "beta": 2.0, "theta": [1, 0.5], "epsilon": 2,
                                          "blend": "deg1", "samples": 5, "corner_eps": 1e-6, "threads": 2})"));
  CHECK(c.family == FamilyKind::Trigonometric);
  CHECK(*c.beta == 2.0);
  CHECK(c.theta.w == std::vector<double>{1.0, 0.5});
  CHECK(c.epsilon.w == std::vector<double>{2.0});
  CHECK(c.blend == BlendKind::RationalDeg1);
  CHECK(c.samples == 5);
  CHECK(c.corner_eps == 1e-6);
  CHECK(c.threads == 2u);
  CHECK_NOTHROW(validate_config(c));

  PipelineConfig d;
  CHECK_THROWS_AS(apply_json(d, nlohmann::json::parse(R"({"famly": "trig"})")), Error);
  CHECK_THROWS_AS(apply_json(d, nlohmann::json::parse(R"({"family": "spline"})")), Error);
  CHECK_THROWS_AS(apply_json(d, nlohmann::json::parse(R"({"blend": "deg3"})")), Error);
  CHECK_THROWS_AS(apply_json(d, nlohmann::json::parse(R"([1, 2])")), Error);
}

TEST_CASE("validation reports the right code") {
  auto code_of = [](const PipelineConfig& c) {
    try {
      validate_config(c);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ConfigError;
  };
  PipelineConfig c;
  c.family = FamilyKind::Trigonometric;
  c.beta = 3.5;
  CHECK(code_of(c) == ErrorCode::OutOfRangeBeta);
  c.beta = 1.0;
  CHECK_NOTHROW(validate_config(c));
  c.theta.w = {0.0, 0.0};
  CHECK(code_of(c) == ErrorCode::ZeroWeights);
  c.theta.w = {1.0};
  c.samples = 0;
  CHECK_THROWS_AS(validate_config(c), Error);
  c.samples = 2;
  c.corner_eps = 0.5;
  CHECK_THROWS_AS(validate_config(c), Error);

  CHECK(parse_weights("1, 0.25").w == std::vector<double>{1.0, 0.25});
  CHECK_THROWS_AS(parse_weights("1,x"), Error);
  CHECK_THROWS_AS(parse_weights(""), Error);
}

TEST_CASE("surface output is deterministic and has the expected size") {
  const HalfEdgeMesh mesh = mesh_of(perturbed(cube(), 0.05, 4));
  for (int n : {1, 2, 5}) {
    PipelineConfig c;
    c.samples = n;
    std::ostringstream a, b;
    const PipelineResult r1 = run_pipeline(c, Stage::Surface, mesh, a);
    c.threads = 1;
    const PipelineResult r2 = run_pipeline(c, Stage::Surface, mesh, b);
    CHECK(a.str() == b.str());
    CHECK(r1.report == r2.report);
    const int nv = 8, ne = 18, nf = 12;
    CHECK(count_prefix(a.str(), "v ") == nv + (n - 1) * ne + nf * (n - 1) * (n - 2) / 2);
    CHECK(count_prefix(a.str(), "vn ") == count_prefix(a.str(), "v "));
    CHECK(count_prefix(a.str(), "f ") == n * n * nf);
    REQUIRE(r1.g1);
    CHECK(r1.g1->edges == 18);
    CHECK(count_prefix(r1.report, "edge ") == 18);
    CHECK(count_prefix(r1.report, "face ") == 12);
    CHECK(count_prefix(r1.report, "g1_max_angle ") == 1);
  }
}

TEST_CASE("intermediate stages") {
  const HalfEdgeMesh mesh = mesh_of(cube());
  PipelineConfig c;
  std::ostringstream normals, curves, patches;
  run_pipeline(c, Stage::Normals, mesh, normals);
  CHECK(count_prefix(normals.str(), "normal ") == 8);
  const PipelineResult r = run_pipeline(c, Stage::Curves, mesh, curves);
  CHECK(count_prefix(curves.str(), "l ") == 18);
  CHECK(!r.g1);
  CHECK(count_prefix(r.report, "face ") == 0);
  run_pipeline(c, Stage::Patches, mesh, patches);
  CHECK(count_prefix(patches.str(), "f ") == 12 * 64);
}

TEST_CASE("errors carry the stage name") {
  // Two copies of one triangle with opposite orientation: every vertex normal cancels.
  const HalfEdgeMesh mesh({Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0)}, {Face{0, 1, 2}, Face{0, 2, 1}});
  PipelineConfig c;
  std::ostringstream out;
  try {
    run_pipeline(c, Stage::Surface, mesh, out);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroNormal);
    CHECK(e.message().rfind("normals: ", 0) == 0);
  }
}

TEST_CASE("table verification") {
  std::ostringstream out;
  const TableCheck t = verify_tables(make_family(FamilyKind::Trigonometric, 1.5708), out);
  CHECK(t.entries > 0);
  CHECK(t.max_phi_diff <= 1e-9);
  CHECK(t.max_tau_diff <= 1e-8);
  CHECK(count_prefix(out.str(), "trig ") == t.entries);
}
