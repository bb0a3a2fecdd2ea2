#pragma once

/**
 * End-to-end experiment runs: complex + weight + initial state + observables,
 * written to an output directory.
 *
 * Output files:
 *   config.json        the resolved configuration
 *   probability.csv    m,i,j,k,mu at every snapshot step (nonzero rows)
 *   variance.csv       n,Vn,Vn_over_n2 for n = 0..steps
 *   timeavg.csv        T,label,mu_bar for T = 1..steps and every target
 *   heatmap_<m>.svg    one per snapshot step
 */

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "swalk/complex.hpp"
#include "swalk/io.hpp"
#include "swalk/measure.hpp"
#include "swalk/walk.hpp"
#include "swalk/weight.hpp"

namespace swalk {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ComplexConfig {
  /// grid | cylinder | cylinder_tetra | moebius | two_triangles | example | triangle
  std::string kind = "grid";
  int R = 0;  // columns (ignored by grid)
  int N = 8;
  std::optional<std::pair<int, int>> attach;  // cylinder_tetra; defaults to the start square
};

struct WeightConfig {
  /// uniform | lower_upper | grover | moebius | custom_file
  std::string scheme = "uniform";
  double p = 1.0 / 3.0;
  std::string file;  // custom_file
};

struct InitialConfig {
  /// symmetric | single | pair_cyclic | pair_swap
  std::string kind = "symmetric";
  std::optional<TriangleLabel> label;  // defaults to the centre lower triangle
};

struct ExperimentConfig {
  ComplexConfig complex;
  WeightConfig weight;
  InitialConfig initial;
  std::string permutation = "bca";
  std::size_t steps = 0;
  /// Snapshot cadence for probability.csv and heatmaps; 0 = first and last step only.
  std::size_t snapshots = 0;
  std::set<std::string> observables{"probability"};
  VarianceMode variance_mode = VarianceMode::standard;
  std::vector<TriangleLabel> targets;  // timeavg; defaults to the start triangle
  bool heatmaps = true;
  /// Stop when amplitude reaches a boundary triangle; defaults to true on grid patches.
  std::optional<bool> boundary_guard;
  std::uint64_t seed = 0;
};

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

inline nlohmann::json label_json(const TriangleLabel& l) { return nlohmann::json::array({l.i, l.j, l.k}); }

inline TriangleLabel label_from_json(const nlohmann::json& j) {
  if (j.is_string()) return io::parse_label(j.get<std::string>());
  if (j.is_array() && j.size() == 3) return {j[0].get<int>(), j[1].get<int>(), j[2].get<int>()};
  throw ConfigError("triangle label must be \"i:j:k\" or [i, j, k]");
}

inline nlohmann::json to_json(const ExperimentConfig& c) {
  nlohmann::json j;
  j["complex"] = {{"kind", c.complex.kind}, {"R", c.complex.R}, {"N", c.complex.N}};
  if (c.complex.attach) j["complex"]["attach"] = {c.complex.attach->first, c.complex.attach->second};
  j["weight"] = {{"scheme", c.weight.scheme}, {"p", c.weight.p}};
  if (!c.weight.file.empty()) j["weight"]["file"] = c.weight.file;
  j["initial"] = {{"kind", c.initial.kind}};
  if (c.initial.label) j["initial"]["label"] = label_json(*c.initial.label);
  j["permutation"] = c.permutation;
  j["steps"] = c.steps;
  j["snapshots"] = c.snapshots;
  j["observables"] = c.observables;
  j["variance_mode"] = to_string(c.variance_mode);
  auto targets = nlohmann::json::array();
  for (const auto& t : c.targets) targets.push_back(label_json(t));
  j["targets"] = std::move(targets);
  j["heatmaps"] = c.heatmaps;
  if (c.boundary_guard) j["boundary_guard"] = *c.boundary_guard;
  j["seed"] = c.seed;
  return j;
}

inline ExperimentConfig config_from_json(const nlohmann::json& j) {
  static const std::set<std::string> known{"complex", "weight", "initial", "permutation", "steps",
                                           "snapshots", "observables", "variance_mode", "targets",
                                           "heatmaps", "boundary_guard", "seed"};
  ExperimentConfig c;
  try {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    for (const auto& [key, _] : j.items()) {
      if (!known.count(key)) throw ConfigError("unknown config field '" + key + "'");
    }
    if (j.contains("complex")) {
      const auto& x = j["complex"];
      c.complex.kind = x.value("kind", c.complex.kind);
      c.complex.R = x.value("R", c.complex.R);
      c.complex.N = x.value("N", c.complex.N);
      if (x.contains("attach")) c.complex.attach = {x["attach"].at(0).get<int>(), x["attach"].at(1).get<int>()};
    }
    if (j.contains("weight")) {
      const auto& x = j["weight"];
      c.weight.scheme = x.value("scheme", c.weight.scheme);
      c.weight.p = x.value("p", c.weight.p);
      c.weight.file = x.value("file", c.weight.file);
    }
    if (j.contains("initial")) {
      const auto& x = j["initial"];
      c.initial.kind = x.value("kind", c.initial.kind);
      if (x.contains("label")) c.initial.label = label_from_json(x["label"]);
    }
    c.permutation = j.value("permutation", c.permutation);
    if (j.contains("steps")) {
      if (!j["steps"].is_number_integer() || j["steps"].get<long long>() < 0)
        throw ConfigError("steps must be a non-negative integer");
      c.steps = j["steps"].get<std::size_t>();
    }
    c.snapshots = j.value("snapshots", c.snapshots);
    if (j.contains("observables")) c.observables = j["observables"].get<std::set<std::string>>();
    if (j.contains("variance_mode")) c.variance_mode = parse_variance_mode(j["variance_mode"].get<std::string>());
    if (j.contains("targets")) {
      for (const auto& t : j["targets"]) c.targets.push_back(label_from_json(t));
    }
    c.heatmaps = j.value("heatmaps", c.heatmaps);
    if (j.contains("boundary_guard")) c.boundary_guard = j["boundary_guard"].get<bool>();
    c.seed = j.value("seed", c.seed);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return c;
}

inline ExperimentConfig load_config(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot read config file " + path);
  try {
    return config_from_json(nlohmann::json::parse(is));
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Resolution
// ---------------------------------------------------------------------------

/// Centre lower triangle of a labeled strip or patch.
inline TriangleLabel default_start(const ComplexConfig& c) {
  if (c.kind == "grid") return {c.N / 2, c.N / 2, 0};
  return {c.R / 2, c.N / 2, 0};
}

inline SimplicialComplex2D build_complex(const ComplexConfig& c) {
  if (c.kind == "grid") return build_grid_patch(c.N);
  if (c.kind == "cylinder") return build_cylinder(c.R, c.N);
  if (c.kind == "moebius") return build_moebius(c.R, c.N);
  if (c.kind == "cylinder_tetra") {
    const auto s = default_start(c);
    return build_cylinder_with_tetrahedron(c.R, c.N, c.attach.value_or(std::pair{s.i, s.j}));
  }
  if (c.kind == "two_triangles") return build_two_triangles();
  if (c.kind == "example") return build_tether_example();
  if (c.kind == "triangle") return build_single_triangle();
  throw ConfigError("unknown complex kind '" + c.kind + "'");
}

inline WeightAssignment build_weight(const SimplicialComplex2D& k, const WeightConfig& w) {
  if (w.scheme == "uniform") return weight_uniform(k);
  if (w.scheme == "lower_upper") return weight_lower_upper(k, w.p);
  if (w.scheme == "moebius") return weight_lower_upper(k, 0.9 / 2.0);
  if (w.scheme == "grover") return weight_grover(k);
  if (w.scheme == "custom_file") {
    std::ifstream is(w.file);
    if (!is) throw ConfigError("cannot read weight file '" + w.file + "'");
    return weight_custom(k, io::read_weight_csv(is, k).values());
  }
  throw ConfigError("unknown weight scheme '" + w.scheme + "'");
}

inline TriangleId resolve_label(const SimplicialComplex2D& k, const TriangleLabel& l) {
  if (k.has_labels()) {
    auto t = k.triangle_by_label(l);
    if (!t) throw ConfigError("label " + l.to_string() + " does not exist in this complex");
    return *t;
  }
  // Unlabeled complexes: i is the triangle id.
  if (l.i < 0 || static_cast<std::size_t>(l.i) >= k.triangle_count() || l.j != 0 || l.k != 0)
    throw ConfigError("label " + l.to_string() + " does not exist in this complex");
  return static_cast<TriangleId>(l.i);
}

inline TriangleId start_triangle(const SimplicialComplex2D& k, const ExperimentConfig& c) {
  if (c.initial.label) return resolve_label(k, *c.initial.label);
  if (!k.has_labels()) return 0;
  return resolve_label(k, default_start(c.complex));
}

inline StateVector build_initial_state(const SimplicialComplex2D& k, const InitialConfig& init, TriangleId t) {
  if (init.kind == "symmetric") return initial_state_symmetric(k, t);
  if (init.kind == "single") return initial_state_single(k, t);
  if (init.kind == "pair_cyclic") return initial_state_pair_cyclic(k, t);
  if (init.kind == "pair_swap") return initial_state_pair_swap(k, t);
  throw ConfigError("unknown initial state '" + init.kind + "'");
}

inline void validate_config(const ExperimentConfig& c) {
  static const std::set<std::string> obs{"probability", "variance", "timeavg"};
  for (const auto& o : c.observables) {
    if (!obs.count(o)) throw ConfigError("unknown observable '" + o + "'");
  }
  try {
    (void)PermutationSpec::parse(c.permutation);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

// ---------------------------------------------------------------------------
// Run
// ---------------------------------------------------------------------------

struct RunSummary {
  std::size_t steps_completed = 0;
  double final_total_probability = 0.0;
  double max_probability_drift = 0.0;  // max_m |Σ μ_m − 1|
  std::vector<std::string> files;
};

/// Runs `c`, writing into `out_dir` (created if needed).  Throws ConfigError
/// for invalid configurations and BoundaryReached when the guard trips.
inline RunSummary run_experiment(const ExperimentConfig& c, const std::filesystem::path& out_dir) {
  validate_config(c);
  const auto k = [&] {
    try {
      return build_complex(c.complex);
    } catch (const ComplexError& e) {
      throw ConfigError(e.what());
    }
  }();
  const auto w = [&] {
    try {
      return build_weight(k, c.weight);
    } catch (const ConfigError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }();
  const TriangleId start = start_triangle(k, c);
  std::vector<TriangleId> targets;
  for (const auto& l : c.targets) targets.push_back(resolve_label(k, l));
  if (targets.empty()) targets.push_back(start);

  const bool want_prob = c.observables.count("probability") > 0;
  const bool want_var = c.observables.count("variance") > 0;
  const bool want_avg = c.observables.count("timeavg") > 0;
  if ((want_var || c.heatmaps) && !k.has_geometry()) throw ConfigError("complex has no embedding");

  const auto u = build_walk_operator(k, w, PermutationSpec::parse(c.permutation));
  const bool guard_on = c.boundary_guard.value_or(c.complex.kind == "grid");
  std::optional<BoundaryGuard> guard;
  if (guard_on) guard = BoundaryGuard::for_complex(k);

  std::filesystem::create_directories(out_dir);
  RunSummary summary;
  auto path = [&](const std::string& name) {
    summary.files.push_back(name);
    return (out_dir / name).string();
  };

  {
    auto os = io::open_output(path("config.json"));
    os << to_json(c).dump(2) << '\n';
  }

  std::ofstream prob_os, var_os, avg_os;
  if (want_prob) {
    prob_os = io::open_output(path("probability.csv"));
    io::write_probability_header(prob_os);
  }
  std::vector<VarianceSample> variance;
  std::vector<TimeAverageSample> averages;
  const RadialFrame frame = want_var ? radial_frame(k, start) : RadialFrame{};
  TimeAverager avg(targets);

  const std::size_t cadence = c.snapshots;
  auto is_snapshot = [&](std::size_t m) {
    return m == 0 || m == c.steps || (cadence > 0 && m % cadence == 0);
  };

  Evolution ev(u, build_initial_state(k, c.initial, start), guard);
  for (std::size_t m = 0;; ++m) {
    const auto p = finding_probability(ev.state(), m);
    summary.max_probability_drift = std::max(summary.max_probability_drift, std::abs(p.total() - 1.0));
    summary.final_total_probability = p.total();
    if (want_prob && is_snapshot(m)) io::write_probability_rows(prob_os, k, p);
    if (c.heatmaps && is_snapshot(m)) {
      auto os = io::open_output(path("heatmap_" + std::to_string(m) + ".svg"));
      io::write_heatmap_svg(os, k, p);
    }
    if (want_var) {
      const double v = radial_variance(frame, p, c.variance_mode);
      variance.push_back({m, v, m == 0 ? 0.0 : v / (static_cast<double>(m) * static_cast<double>(m))});
    }
    if (m == c.steps) break;
    if (want_avg) {
      avg.add(p);
      const auto mean = avg.mean();
      for (std::size_t i = 0; i < targets.size(); ++i) averages.push_back({avg.count(), targets[i], mean[i]});
    }
    ev.step();
    summary.steps_completed = m + 1;
  }

  if (want_var) {
    auto os = io::open_output(path("variance.csv"));
    io::write_variance_csv(os, variance);
  }
  if (want_avg) {
    auto os = io::open_output(path("timeavg.csv"));
    io::write_timeavg_csv(os, k, averages);
  }
  return summary;
}

}  // namespace swalk
