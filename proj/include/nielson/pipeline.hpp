#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "nielson/basis_family.hpp"
#include "nielson/halfedge_mesh.hpp"
#include "nielson/integral_tables.hpp"
#include "nielson/nielson_surface.hpp"

namespace nielson {

struct PipelineConfig {
  FamilyKind family = FamilyKind::CubicBernstein;
  std::optional<double> beta;  // family default when unset
  EnergyWeights theta{{1.0}};
  EnergyWeights epsilon{{1.0}};
  BlendKind blend = BlendKind::RationalDeg2;
  int samples = 8;
  double corner_eps = 1e-7;
  std::string input;
  std::string output;
  std::string report;
  unsigned threads = 0;

  /// Family with the effective beta; throws OutOfRangeBeta.
  BasisFamily basis_family() const;
};

/// Overrides fields present in a flat JSON object. Throws ConfigError on unknown keys or bad values.
void apply_json(PipelineConfig& config, const nlohmann::json& j);
/// Throws IoError or ConfigError.
PipelineConfig load_config(const std::string& path);
/// Checks every field before any computation: OutOfRangeBeta, ZeroWeights, ConfigError.
void validate_config(const PipelineConfig& config);

std::optional<BlendKind> parse_blend_kind(const std::string& name);
/// Comma-separated non-negative weights, e.g. "1,1".
EnergyWeights parse_weights(const std::string& text);

enum class Stage { Normals, Curves, Patches, Surface };

struct PipelineResult {
  MeshStats stats;
  std::string report;
  std::optional<G1Defect> g1;
};

/// Runs the stages up to `stage` on `mesh` and writes that stage's artifact: normals as text,
/// arcs as OBJ polylines, C0 patches or the final surface as OBJ. Errors carry the stage name.
PipelineResult run_pipeline(const PipelineConfig& config, Stage stage, const HalfEdgeMesh& mesh,
                            std::ostream& artifact);

/// Reads config.input, writes the artifact to config.output (or `fallback` when empty) and the
/// report to config.report when set.
PipelineResult run_pipeline_files(const PipelineConfig& config, Stage stage, std::ostream& fallback);

/// Closed-form phi and tau entries against quadrature, one line per entry:
/// family beta symbol closed quadrature |diff|.
struct TableCheck {
  double max_phi_diff = 0.0;
  double max_tau_diff = 0.0;
  int entries = 0;
};
TableCheck verify_tables(const BasisFamily& family, std::ostream& out);

}  // namespace nielson
