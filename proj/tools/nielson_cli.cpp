#include <cmath>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "nielson/error.hpp"
#include "nielson/format.hpp"
#include "nielson/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitMesh = 3;
constexpr int kExitNumeric = 4;

int exit_code(nielson::ErrorCode code) {
  switch (nielson::category_of(code)) {
    case nielson::ErrorCategory::Config: return kExitConfig;
    case nielson::ErrorCategory::Mesh: return kExitMesh;
    case nielson::ErrorCategory::Numeric: return kExitNumeric;
  }
  return kExitNumeric;
}

// Flag values; unset flags leave the config file (or the defaults) alone.
struct Flags {
  std::optional<std::string> config, input, output, family, theta, epsilon, blend, report;
  std::optional<double> beta, corner_eps;
  std::optional<int> samples;
  std::optional<unsigned> threads;
};

nielson::PipelineConfig resolve(const Flags& f) {
  nielson::PipelineConfig c = f.config ? nielson::load_config(*f.config) : nielson::PipelineConfig{};
  if (f.input) c.input = *f.input;
  if (f.output) c.output = *f.output;
  if (f.report) c.report = *f.report;
  if (f.family) {
    const auto k = nielson::parse_family_kind(*f.family);
    if (!k) throw nielson::Error(nielson::ErrorCode::ConfigError, "unknown family '" + *f.family + "'");
    c.family = *k;
  }
  if (f.beta) c.beta = *f.beta;
  if (f.theta) c.theta = nielson::parse_weights(*f.theta);
  if (f.epsilon) c.epsilon = nielson::parse_weights(*f.epsilon);
  if (f.blend) {
    const auto b = nielson::parse_blend_kind(*f.blend);
    if (!b) throw nielson::Error(nielson::ErrorCode::ConfigError, "blend must be deg1 or deg2");
    c.blend = *b;
  }
  if (f.samples) c.samples = *f.samples;
  if (f.corner_eps) c.corner_eps = *f.corner_eps;
  if (f.threads) c.threads = *f.threads;
  return c;
}

void add_common(CLI::App* cmd, Flags& f, bool mesh_flags) {
  cmd->add_option("--config", f.config, "JSON config file; flags override its values");
  cmd->add_option("--family", f.family, "cubic | quartic | trig | hyperbolic | algtrig");
  cmd->add_option("--beta", f.beta, "shape parameter (domain length)");
  if (!mesh_flags) return;
  cmd->add_option("--input", f.input, "input triangle mesh (OBJ)");
  cmd->add_option("--output", f.output, "artifact path (stdout when omitted)");
  cmd->add_option("--report", f.report, "plain-text report path");
  cmd->add_option("--theta", f.theta, "curve energy weights t1[,t2]");
  cmd->add_option("--epsilon", f.epsilon, "surface energy weights e1[,e2]");
  cmd->add_option("--blend", f.blend, "deg1 | deg2");
  cmd->add_option("--samples", f.samples, "tessellation level / curve samples per edge");
  cmd->add_option("--corner-eps", f.corner_eps, "corner snap radius in barycentric units");
  cmd->add_option("--threads", f.threads, "worker threads (0 = all cores)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal curve networks and G1 transfinite triangular surfaces from triangle meshes"};
  app.require_subcommand(1);
  Flags flags;
  auto* verify = app.add_subcommand("verify-tables", "closed-form integral tables against quadrature");
  add_common(verify, flags, false);
  struct Named {
    const char* name;
    const char* help;
    nielson::Stage stage;
  };
  const Named stages[] = {
      {"normals", "mesh statistics and vertex normals", nielson::Stage::Normals},
      {"curves", "optimal boundary arcs as OBJ polylines", nielson::Stage::Curves},
      {"patches", "C0 triangular patches as OBJ", nielson::Stage::Patches},
      {"surface", "G1 blended surface as OBJ", nielson::Stage::Surface},
  };
  std::vector<CLI::App*> stage_cmds;
  for (const auto& s : stages) {
    stage_cmds.push_back(app.add_subcommand(s.name, s.help));
    add_common(stage_cmds.back(), flags, true);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    const nielson::PipelineConfig config = resolve(flags);
    if (verify->parsed()) {
      const nielson::BasisFamily family = config.basis_family();
      const nielson::TableCheck check = nielson::verify_tables(family, std::cout);
      std::cerr << "entries " << check.entries << " max_phi_diff " << nielson::format_real(check.max_phi_diff)
                << " max_tau_diff " << nielson::format_real(check.max_tau_diff) << '\n';
      return check.max_phi_diff <= 1e-9 && check.max_tau_diff <= 1e-8 ? kExitOk : kExitNumeric;
    }
    for (std::size_t i = 0; i < stage_cmds.size(); ++i) {
      if (!stage_cmds[i]->parsed()) continue;
      const nielson::PipelineResult r = nielson::run_pipeline_files(config, stages[i].stage, std::cout);
      if (r.g1) {
        std::cerr << "g1 max angle " << nielson::format_real(r.g1->across) << " rad over " << r.g1->edges
                  << " edges\n";
      }
    }
    return kExitOk;
  } catch (const nielson::Error& e) {
    std::cerr << "error [" << nielson::to_string(e.code()) << "]: " << e.message() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
}
