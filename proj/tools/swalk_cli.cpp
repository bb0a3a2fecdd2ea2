// swalk: command-line front end for the simplicial quantum walk library.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "swalk/swalk.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitBoundary = 3;

// Options shared by every subcommand; unset options leave the config alone.
struct CommonOptions {
  std::string config_path;
  std::string complex_kind;
  int R = 0;
  int N = 0;
  std::string attach;
  std::string weight;
  double p = 0.0;
  std::string weight_file;
  std::string permutation;
  std::string label;

  CLI::Option* o_complex = nullptr;
  CLI::Option* o_R = nullptr;
  CLI::Option* o_N = nullptr;
  CLI::Option* o_attach = nullptr;
  CLI::Option* o_weight = nullptr;
  CLI::Option* o_p = nullptr;
  CLI::Option* o_weight_file = nullptr;
  CLI::Option* o_permutation = nullptr;
  CLI::Option* o_label = nullptr;

  void add_complex(CLI::App* app) {
    app->add_option("--config", config_path, "JSON experiment config; flags override its fields")
        ->check(CLI::ExistingFile);
    o_complex = app->add_option("--complex", complex_kind,
                                "grid | cylinder | cylinder_tetra | moebius | two_triangles | example | triangle");
    o_R = app->add_option("--R", R, "columns of the strip (cylinder, cylinder_tetra, moebius)");
    o_N = app->add_option("--N", N, "rows of the strip, or side of the grid patch");
    o_attach = app->add_option("--attach", attach, "grid square i,j of the tetrahedron base (cylinder_tetra)");
  }
  void add_weight(CLI::App* app) {
    o_weight = app->add_option("--weight", weight, "uniform | lower_upper | grover | moebius | custom_file");
    o_p = app->add_option("--p", p, "lower-triangle share p of the lower_upper weight");
    o_weight_file = app->add_option("--weight-file", weight_file, "CSV i,j,k,l,re,im for custom_file");
  }
  void add_permutation(CLI::App* app) {
    o_permutation = app->add_option("--permutation", permutation, "image of [abc], e.g. bca (cyclic) or acb");
  }
  void add_label(CLI::App* app, const std::string& what) {
    o_label = app->add_option("--label", label, what + " as i:j:k (triangle id for unlabeled complexes)");
  }

  swalk::ExperimentConfig resolve() const {
    swalk::ExperimentConfig c = config_path.empty() ? swalk::ExperimentConfig{} : swalk::load_config(config_path);
    if (o_complex && o_complex->count()) c.complex.kind = complex_kind;
    if (o_R && o_R->count()) c.complex.R = R;
    if (o_N && o_N->count()) c.complex.N = N;
    if (o_attach && o_attach->count()) {
      const auto l = swalk::io::parse_label(attach + ",0");
      c.complex.attach = {l.i, l.j};
    }
    if (o_weight && o_weight->count()) c.weight.scheme = weight;
    if (o_p && o_p->count()) c.weight.p = p;
    if (o_weight_file && o_weight_file->count()) c.weight.file = weight_file;
    if (o_permutation && o_permutation->count()) c.permutation = permutation;
    if (o_label && o_label->count()) c.initial.label = swalk::io::parse_label(label);
    return c;
  }
};

int cmd_build(const CommonOptions& opt, const std::string& emit) {
  const auto c = opt.resolve();
  const auto k = swalk::build_complex(c.complex);
  const auto j = swalk::io::complex_to_json(k).dump();
  if (emit == "-") {
    std::cout << j << '\n';
  } else {
    auto os = swalk::io::open_output(emit);
    os << j << '\n';
  }
  std::cerr << "vertices=" << k.vertex_count() << " edges=" << k.edge_count() << " triangles=" << k.triangle_count()
            << " basis=" << k.basis_size() << '\n';
  return 0;
}

int cmd_homology(const CommonOptions& opt) {
  const auto k = swalk::build_complex(opt.resolve().complex);
  const auto b = swalk::betti_numbers(k);
  std::cout << "b0=" << b.b0 << ",b1=" << b.b1 << ",b2=" << b.b2 << ",chi=" << swalk::euler_characteristic(k)
            << '\n';
  return 0;
}

int cmd_validate_weight(const CommonOptions& opt) {
  const auto c = opt.resolve();
  const auto k = swalk::build_complex(c.complex);
  swalk::WeightReport report;
  if (c.weight.scheme == "uniform") {
    report = swalk::validate_weight(k, swalk::uniform_weight_values(k));
  } else {
    try {
      report = swalk::validate_weight(k, swalk::build_weight(k, c.weight));
    } catch (const swalk::WeightError& e) {
      report = e.report();
    } catch (const swalk::ConfigError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      std::cout << "invalid: " << e.what() << '\n';
      return kExitFailure;
    }
  }
  if (report.ok()) {
    std::cout << "ok\n";
    return 0;
  }
  // Group by undirected facet: both directions of an edge carry the same cofaces.
  std::map<swalk::EdgeId, std::vector<double>> facets;
  std::vector<std::string> zeros;
  for (const auto& v : report.violations) {
    if (v.kind == swalk::WeightViolation::Kind::unit_sum) {
      facets[v.facet / 2].push_back(v.sum);
    } else {
      zeros.push_back(v.describe(k));
    }
  }
  std::cout << "invalid: " << facets.size() << " facet(s) violate the unit-sum rule, " << zeros.size()
            << " zero weight(s)\n";
  for (const auto& [e, sums] : facets) {
    const auto& ev = k.edge(e).vertices;
    std::cout << "facet |" << ev[0] << ' ' << ev[1] << "| degree=" << k.coface_degree(e)
              << " sum=" << swalk::io::fmt(sums.front()) << " directions=" << sums.size() << '\n';
  }
  for (const auto& z : zeros) std::cout << z << '\n';
  return kExitFailure;
}

int cmd_classify(const CommonOptions& opt, int rotation, std::size_t m_max, std::size_t probes) {
  auto c = opt.resolve();
  if (!(opt.o_weight && opt.o_weight->count())) c.weight.scheme = "grover";
  const auto k = swalk::build_complex(c.complex);
  const auto pi = swalk::PermutationSpec::parse(c.permutation);
  if (rotation < 0 || rotation > 5) throw swalk::ConfigError("--rotation must be in 0..5");
  const auto start = swalk::start_triangle(k, c);
  const swalk::BasisIndex sigma0 = swalk::DirectedBasis{start, rotation}.flat();
  const std::size_t horizon = m_max > 0 ? m_max : swalk::default_tether_horizon(k);
  const auto res = swalk::tethered_check(k, pi, sigma0, horizon);

  const auto s = k.directed(sigma0);
  nlohmann::json line{{"check", "tethered"},
                      {"permutation", pi.word()},
                      {"start", {s.vertices[0], s.vertices[1], s.vertices[2]}},
                      {"verdict", swalk::to_string(res.verdict)},
                      {"anchors", res.anchors},
                      {"steps", res.steps},
                      {"reached", res.reached.size()}};
  std::cout << line.dump() << '\n';

  nlohmann::json inter{{"check", "noninteractive"}, {"weight", c.weight.scheme}};
  try {
    const auto w = swalk::build_weight(k, c.weight);
    const auto u = swalk::build_walk_operator(k, w, pi);
    inter["value"] = swalk::is_noninteractive(u);
  } catch (const std::invalid_argument& e) {
    inter["error"] = e.what();
  }
  std::cout << inter.dump() << '\n';

  if (probes > 0) {
    // Numeric corroboration: random valid weights must stay inside the generic reach.
    std::vector<char> allowed(k.basis_size(), 0);
    for (auto b : res.reached) allowed[b] = 1;
    std::mt19937_64 rng(c.seed);
    std::size_t inside = 0;
    for (std::size_t i = 0; i < probes; ++i) {
      const auto u = swalk::build_walk_operator(k, swalk::weight_random(k, rng), pi);
      bool ok = true;
      for (const auto& supp : swalk::numeric_tether_probe(u, sigma0, std::min<std::size_t>(horizon, 200))) {
        for (auto b : supp) ok = ok && allowed[b];
      }
      inside += ok;
    }
    std::cout << nlohmann::json{{"check", "numeric_probe"}, {"probes", probes}, {"within_generic_reach", inside}}.dump()
              << '\n';
  }
  return 0;
}

int cmd_run(const CommonOptions& opt, swalk::ExperimentConfig overrides, const std::vector<CLI::Option*>& given,
            const std::string& out_dir) {
  auto c = opt.resolve();
  // given: initial, steps, snapshots, observables, variance_mode, targets, heatmaps, guard
  if (given[0]->count()) c.initial.kind = overrides.initial.kind;
  if (given[1]->count()) c.steps = overrides.steps;
  if (given[2]->count()) c.snapshots = overrides.snapshots;
  if (given[3]->count()) c.observables = overrides.observables;
  if (given[4]->count()) c.variance_mode = overrides.variance_mode;
  if (given[5]->count()) c.targets = overrides.targets;
  if (given[6]->count()) c.heatmaps = false;
  if (given[7]->count()) c.boundary_guard = overrides.boundary_guard;
  if (given[8]->count()) c.seed = overrides.seed;
  const auto summary = swalk::run_experiment(c, out_dir);
  std::cout << "steps=" << summary.steps_completed << " total_probability=" << swalk::io::fmt(summary.final_total_probability)
            << " max_drift=" << swalk::io::fmt(summary.max_probability_drift) << " files=" << summary.files.size()
            << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simplicial quantum walks on 2-dimensional simplicial complexes"};
  app.require_subcommand(1);

  CommonOptions build_opt, run_opt, hom_opt, cls_opt, val_opt;

  auto* build = app.add_subcommand("build", "build a complex and export it as JSON");
  build_opt.add_complex(build);
  std::string emit = "-";
  build->add_option("--emit", emit, "output path for the complex JSON ('-' for stdout)");

  auto* run = app.add_subcommand("run", "evolve a walk and write CSV/SVG artifacts");
  run_opt.add_complex(run);
  run_opt.add_weight(run);
  run_opt.add_permutation(run);
  run_opt.add_label(run, "start triangle");
  swalk::ExperimentConfig ov;
  std::string variance_mode = "standard";
  std::vector<std::string> observables, targets;
  bool no_heatmaps = false;
  bool guard = true;
  std::string out_dir = "out";
  std::vector<CLI::Option*> given;
  given.push_back(run->add_option("--initial", ov.initial.kind, "symmetric | single | pair_cyclic | pair_swap"));
  given.push_back(run->add_option("--steps", ov.steps, "number of steps m"));
  given.push_back(run->add_option("--snapshots", ov.snapshots, "snapshot cadence (0: first and last step only)"));
  given.push_back(
      run->add_option("--observables", observables, "any of probability, variance, timeavg")->delimiter(','));
  given.push_back(run->add_option("--variance-mode", variance_mode, "standard | literal"));
  given.push_back(run->add_option("--targets", targets, "time-average targets i:j:k (comma separated)")
                      ->delimiter(','));
  given.push_back(run->add_flag("--no-heatmaps", no_heatmaps, "skip heatmap_<m>.svg files"));
  given.push_back(run->add_option("--boundary-guard", guard, "stop with exit code 3 when amplitude reaches the boundary"));
  given.push_back(run->add_option("--seed", ov.seed, "seed recorded in config.json"));
  run->add_option("--out-dir", out_dir, "output directory");

  auto* hom = app.add_subcommand("homology", "Betti numbers and Euler characteristic");
  hom_opt.add_complex(hom);

  auto* cls = app.add_subcommand("classify", "tethered/movable and interactivity verdicts as JSON lines");
  cls_opt.add_complex(cls);
  cls_opt.add_weight(cls);
  cls_opt.add_permutation(cls);
  cls_opt.add_label(cls, "start triangle");
  int rotation = 0;
  std::size_t m_max = 0, probes = 0;
  cls->add_option("--rotation", rotation, "rotation index l of the start simplex (0..5)");
  cls->add_option("--m-max", m_max, "step budget (default 4 x dual diameter, capped at 10^4)");
  cls->add_option("--probes", probes, "number of random valid weights for the numeric probe");

  auto* val = app.add_subcommand("validate-weight", "check the nonzero and unit-sum rules");
  val_opt.add_complex(val);
  val_opt.add_weight(val);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*build) return cmd_build(build_opt, emit);
    if (*hom) return cmd_homology(hom_opt);
    if (*val) return cmd_validate_weight(val_opt);
    if (*cls) return cmd_classify(cls_opt, rotation, m_max, probes);
    if (*run) {
      ov.variance_mode = swalk::parse_variance_mode(variance_mode);
      ov.observables = {observables.begin(), observables.end()};
      for (const auto& t : targets) ov.targets.push_back(swalk::io::parse_label(t));
      ov.boundary_guard = guard;
      return cmd_run(run_opt, ov, given, out_dir);
    }
  } catch (const swalk::BoundaryReached& e) {
    std::cerr << "boundary reached: " << e.what() << '\n';
    return kExitBoundary;
  } catch (const swalk::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const swalk::ComplexError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return 0;
}
