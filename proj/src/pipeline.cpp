#include "nielson/pipeline.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nielson/c0_patch.hpp"
#include "nielson/curve_network.hpp"
#include "nielson/error.hpp"
#include "nielson/format.hpp"
#include "nielson/tessellation.hpp"
#include "nielson/trivariate_basis.hpp"
#include "nielson/univariate_basis.hpp"

namespace nielson {
namespace {

template <class F>
auto staged(const char* label, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.code(), std::string(label) + ": " + e.message());
  }
}

std::string weights_text(const EnergyWeights& w) {
  std::string s;
  for (std::size_t i = 0; i < w.w.size(); ++i) s += (i ? "," : "") + format_real(w.w[i]);
  return s;
}

EnergyWeights weights_from_json(const nlohmann::json& v, const char* key) {
  EnergyWeights w;
  if (v.is_number()) {
    w.w.push_back(v.get<double>());
  } else if (v.is_array()) {
    for (const auto& x : v) {
      if (!x.is_number()) throw Error(ErrorCode::ConfigError, std::string(key) + " entries must be numbers");
      w.w.push_back(x.get<double>());
    }
  } else if (v.is_string()) {
    w = parse_weights(v.get<std::string>());
  } else {
    throw Error(ErrorCode::ConfigError, std::string(key) + " must be a number or an array");
  }
  return w;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path);
}

}  // namespace

BasisFamily PipelineConfig::basis_family() const { return make_family(family, beta.value_or(default_beta(family))); }

std::optional<BlendKind> parse_blend_kind(const std::string& name) {
  if (name == "deg2") return BlendKind::RationalDeg2;
  if (name == "deg1") return BlendKind::RationalDeg1;
  return std::nullopt;
}

EnergyWeights parse_weights(const std::string& text) {
  EnergyWeights w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      w.w.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ConfigError, "bad weight list '" + text + "'");
    }
  }
  if (w.w.empty()) throw Error(ErrorCode::ConfigError, "empty weight list");
  return w;
}

void apply_json(PipelineConfig& c, const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ConfigError, "config must be a JSON object");
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "family") {
        const auto k = parse_family_kind(v.get<std::string>());
        if (!k) throw Error(ErrorCode::ConfigError, "unknown family '" + v.get<std::string>() + "'");
        c.family = *k;
      } else if (key == "beta") {
        c.beta = v.get<double>();
      } else if (key == "theta") {
        c.theta = weights_from_json(v, "theta");
      } else if (key == "epsilon") {
        c.epsilon = weights_from_json(v, "epsilon");
      } else if (key == "blend") {
        const auto b = parse_blend_kind(v.get<std::string>());
        if (!b) throw Error(ErrorCode::ConfigError, "blend must be deg1 or deg2");
        c.blend = *b;
      } else if (key == "samples") {
        c.samples = v.get<int>();
      } else if (key == "corner_eps") {
        c.corner_eps = v.get<double>();
      } else if (key == "input") {
        c.input = v.get<std::string>();
      } else if (key == "output") {
        c.output = v.get<std::string>();
      } else if (key == "report") {
        c.report = v.get<std::string>();
      } else if (key == "threads") {
        c.threads = v.get<unsigned>();
      } else {
        throw Error(ErrorCode::ConfigError, "unknown config key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ConfigError, std::string("config value: ") + e.what());
  }
}

PipelineConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ConfigError, path + ": " + e.what());
  }
  PipelineConfig c;
  apply_json(c, j);
  return c;
}

void validate_config(const PipelineConfig& c) {
  c.basis_family();
  validate_weights(c.theta, "curve");
  validate_weights(c.epsilon, "surface");
  if (c.theta.w.size() > 2) throw Error(ErrorCode::ConfigError, "theta has at most two entries");
  if (c.epsilon.w.size() > 2) throw Error(ErrorCode::ConfigError, "epsilon has at most two entries");
  if (c.samples < 1) throw Error(ErrorCode::ConfigError, "samples must be at least 1");
  if (!(c.corner_eps > 0.0 && c.corner_eps < 1.0 / 3.0)) {
    throw Error(ErrorCode::ConfigError, "corner_eps must lie in (0, 1/3)");
  }
}

PipelineResult run_pipeline(const PipelineConfig& config, Stage stage, const HalfEdgeMesh& mesh,
                            std::ostream& artifact) {
  validate_config(config);
  const BasisFamily family = config.basis_family();
  PipelineResult result;
  result.stats = mesh_stats(mesh);
  std::ostringstream rep;
  rep << "family " << short_name(family.kind) << "\nbeta " << format_real(family.beta) << "\ntheta "
      << weights_text(config.theta) << "\nepsilon " << weights_text(config.epsilon) << "\nblend "
      << (config.blend == BlendKind::RationalDeg2 ? "deg2" : "deg1") << "\nsamples " << config.samples << "\n"
      << format_stats(result.stats);

  const VertexFrame frames = staged("normals", [&] { return edge_tangents(mesh, angle_weighted_normals(mesh)); });
  if (stage == Stage::Normals) {
    artifact << format_stats(result.stats);
    for (int v = 0; v < mesh.num_vertices(); ++v) {
      artifact << "normal " << v << ' ' << format_point(frames.normal[v]) << '\n';
    }
    result.report = rep.str();
    return result;
  }

  const UnivariateBasis basis = staged("curves", [&] { return make_basis(family); });
  const CurveNetwork network = staged("curves", [&] {
    return build_network(mesh, frames, basis, combined_phi(family, config.theta), config.threads);
  });
  for (int e = 0; e < mesh.num_edges(); ++e) {
    const auto [lo, hi] = mesh.edges()[e];
    const EdgeSolution& s = network.solution(e);
    rep << "edge " << lo << ' ' << hi << " lambda " << format_real(s.lambda_ij) << ' ' << format_real(s.lambda_ji)
        << " delta " << format_real(s.delta) << " energy "
        << format_real(edge_energy(network, lo, hi, s.lambda_ij, s.lambda_ji)) << '\n';
  }
  if (stage == Stage::Curves) {
    write_curves_obj(artifact, network, config.samples);
    result.report = rep.str();
    return result;
  }

  const TrivariateBasis tri = staged("patches", [&] { return make_trivariate(family); });
  const std::vector<ControlNet> nets = staged("patches", [&] {
    return build_c0_patches(network, thin_plate_tables(tri, config.epsilon), config.epsilon, config.threads);
  });
  const ThinPlateGram gram =
      staged("patches", [&] { return thin_plate_gram(tri, static_cast<int>(config.epsilon.w.size()), 1e-10); });
  for (int f = 0; f < mesh.num_faces(); ++f) {
    const Face& t = nets[f].face;
    rep << "face " << t[0] << ' ' << t[1] << ' ' << t[2] << " p111 " << format_point(nets[f].at(1, 1))
        << " energy " << format_real(thin_plate_energy(nets[f], gram, config.epsilon)) << '\n';
  }
  const NormalField field(network, nets, tri);
  if (stage == Stage::Patches) {
    const SurfaceMesh out = staged("patches", [&] {
      return tessellate(mesh, config.samples, family.beta, c0_sampler(network, nets, tri, field), config.threads);
    });
    write_surface_obj(artifact, out);
    result.report = rep.str();
    return result;
  }

  const NielsonSurface surface(network, field, config.blend, config.corner_eps);
  const SurfaceMesh out = staged("surface", [&] {
    return tessellate(mesh, config.samples, family.beta, nielson_sampler(surface), config.threads);
  });
  write_surface_obj(artifact, out);
  result.g1 = staged("surface", [&] { return measure_g1(surface, 20, 1e-6, config.threads); });
  rep << "g1_edges " << result.g1->edges << "\ng1_max_angle " << format_real(result.g1->across)
      << "\ng1_max_angle_to_field " << format_real(result.g1->to_field) << '\n';
  result.report = rep.str();
  return result;
}

PipelineResult run_pipeline_files(const PipelineConfig& config, Stage stage, std::ostream& fallback) {
  validate_config(config);
  if (config.input.empty()) throw Error(ErrorCode::ConfigError, "no input mesh given");
  const HalfEdgeMesh mesh = staged("input", [&] { return load_obj_file(config.input); });
  std::ostringstream artifact;
  PipelineResult r = run_pipeline(config, stage, mesh, artifact);
  if (config.output.empty()) {
    fallback << artifact.str();
  } else {
    write_text_file(config.output, artifact.str());
  }
  if (!config.report.empty()) write_text_file(config.report, r.report);
  return r;
}

TableCheck verify_tables(const BasisFamily& family_in, std::ostream& out) {
  const BasisFamily family = make_family(family_in.kind, family_in.beta);
  const std::string head = std::string(short_name(family.kind)) + ' ' + format_real(family.beta) + ' ';
  TableCheck check;
  const UnivariateBasis basis = make_basis(family);
  for (int r = 1; r <= 2; ++r) {
    const PhiTable closed = phi_closed(family, r);
    const PhiTable quad = phi_quadrature(basis, r);
    for (int k = 0; k < 4; ++k) {
      for (int l = k; l < 4; ++l) {
        const double d = std::abs(closed.phi(k, l) - quad.phi(k, l));
        check.max_phi_diff = std::max(check.max_phi_diff, d);
        ++check.entries;
        out << head << phi_symbol(r, k, l) << ' ' << format_real(closed.phi(k, l)) << ' '
            << format_real(quad.phi(k, l)) << ' ' << format_real(d) << '\n';
      }
    }
  }
  if (family.kind != FamilyKind::Hyperbolic) {
    const TrivariateBasis tri = make_trivariate(family);
    for (int g = 1; g <= 2; ++g) {
      const TauTable closed = tau_closed(family, g);
      const TauTable quad = tau_quadrature(tri, g);
      for (int z = 0; z <= g; ++z) {
        for (int f = 0; f < kTriCount; ++f) {
          const double d = std::abs(closed.at(z, f) - quad.at(z, f));
          check.max_tau_diff = std::max(check.max_tau_diff, d);
          ++check.entries;
          out << head << tau_symbol(z, g - z, f) << ' ' << format_real(closed.at(z, f)) << ' '
              << format_real(quad.at(z, f)) << ' ' << format_real(d) << '\n';
        }
      }
    }
  }
  return check;
}

}  // namespace nielson
