// Copyright 2026 The horofilter Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// horofilter: generate graphs, compute Busemann fields and boundary
// weights, apply the filter, certify operator norms, run verification
// sweeps, and benchmark apply().
//
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "horofilter/horofilter.hpp"

namespace hf = horofilter;
using hf::json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    hf::write_file(out_path, text);
  }
}

hf::Graph load_graph(const std::string& path) {
  return hf::load_edge_list(path == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {})
                                        : hf::read_file(path));
}

// ---------------------------------------------------------------------------
// Shared anchor flags

struct AnchorFlags {
  std::optional<hf::vertex_t> base;
  std::optional<hf::vertex_t> target;
  std::string strategy = "diameter";
  std::string anchors_path;

  void add(CLI::App* app, bool allow_multi = true) {
    app->add_option("--base", base, "Base vertex o");
    app->add_option("--target", target, "Target vertex z standing in for the boundary point");
    app->add_option("--strategy", strategy,
                    "Anchor selection when --target is absent: diameter | eccentric")
        ->capture_default_str();
    if (allow_multi) {
      app->add_option("--anchors", anchors_path, "Multi-anchor config JSON");
    }
  }

  bool multi() const { return !anchors_path.empty(); }

  hf::Anchor resolve(const hf::Graph& g) const {
    if (multi()) throw UsageError("--anchors is not valid here");
    if (target) {
      const hf::Anchor a{base.value_or(0), *target};
      if (a.base == a.target) throw UsageError("--base and --target must differ");
      return hf::suggest_anchor(g, hf::AnchorStrategy::kExplicit, a);
    }
    const auto s = hf::parse_anchor_strategy(strategy);
    if (s == hf::AnchorStrategy::kExplicit) throw UsageError("explicit strategy needs --target");
    return hf::suggest_anchor(g, s, hf::Anchor{base.value_or(0), 0});
  }

  void check_usage() const {
    if (multi() && (base || target)) {
      throw UsageError("--anchors cannot be combined with --base/--target");
    }
    if (base && target && *base == *target) throw UsageError("--base and --target must differ");
  }
};

struct WeightsBundle {
  hf::EdgeWeights weights;
  hf::FilterConfig config;
  json anchor_json;
};

WeightsBundle compute_weights(const hf::Graph& g, const AnchorFlags& flags, double alpha,
                              hf::Normalize normalize) {
  WeightsBundle b;
  b.config.normalize = normalize;
  if (flags.multi()) {
    const auto cfg = hf::multi_anchor_from_json(hf::read_file(flags.anchors_path));
    const auto fields = hf::busemann_fields(g, cfg);
    b.weights = hf::edge_weights_multi(g, fields, cfg);
    b.config.multi = cfg;
    b.anchor_json = hf::to_json(cfg);
  } else {
    const hf::Anchor a = flags.resolve(g);
    b.weights = hf::edge_weights_single(g, hf::busemann_field(g, a), alpha);
    b.config.alpha = alpha;
    b.anchor_json = {{"base", a.base}, {"target", a.target}};
  }
  return b;
}

// ---------------------------------------------------------------------------
// gen

struct GenArgs {
  std::string family;
  std::int64_t n = 0, leaves = 0, branching = 0, depth = 0, rows = 0, cols = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::string out;
};

void add_gen(CLI::App& app, GenArgs& a) {
  auto* cmd = app.add_subcommand("gen", "Generate a graph family as an edge list");
  cmd->add_option("--family", a.family,
                  "path | cycle | star | balanced-tree | grid | random-tree | erdos-renyi")
      ->required();
  cmd->add_option("--n", a.n, "Vertex count (path, cycle, random-tree, erdos-renyi)");
  cmd->add_option("--leaves,--m", a.leaves, "Leaf count (star)");
  cmd->add_option("--branching", a.branching, "Branching factor (balanced-tree)");
  cmd->add_option("--depth", a.depth, "Depth (balanced-tree)");
  cmd->add_option("--rows", a.rows, "Rows (grid)");
  cmd->add_option("--cols", a.cols, "Columns (grid)");
  cmd->add_option("--p", a.p, "Edge probability (erdos-renyi)");
  cmd->add_option("--seed", a.seed, "Seed for random families");
  cmd->add_option("--out", a.out, "Output path (default stdout)");
  cmd->callback([&a] {
    hf::GenSpec spec{.family = hf::parse_family(a.family),
                     .n = a.n,
                     .leaves = a.leaves,
                     .branching = a.branching,
                     .depth = a.depth,
                     .rows = a.rows,
                     .cols = a.cols,
                     .p = a.p,
                     .seed = a.seed};
    if (spec.family == hf::Family::kStar && spec.leaves == 0 && a.n > 0) spec.leaves = a.n - 1;
    emit(hf::save_edge_list(hf::generate(spec)), a.out);
  });
}

// ---------------------------------------------------------------------------
// analyze

struct AnalyzeArgs {
  std::string graph;
  bool exact = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 1;
  std::string out;
};

void add_analyze(CLI::App& app, AnalyzeArgs& a) {
  auto* cmd = app.add_subcommand("analyze", "Report size, degree, diameter, and four-point delta");
  cmd->add_option("graph", a.graph, "Edge-list file ('-' for stdin)")->required();
  auto* exact = cmd->add_flag("--exact-delta", a.exact, "Exhaustive four-point delta");
  auto* sample = cmd->add_option("--sample", a.samples, "Sampled four-point delta over N quadruples");
  exact->excludes(sample);
  cmd->add_option("--seed", a.seed, "Seed for --sample")->capture_default_str();
  cmd->add_option("--out", a.out, "Output path (default stdout)");
  cmd->callback([&a] {
    const hf::Graph g = load_graph(a.graph);
    json j = {{"n", g.vertex_count()}, {"edges", g.edge_count()}, {"max_degree", g.max_degree()}};
    const bool use_exact = a.exact || (a.samples == 0 && g.vertex_count() <= 200);
    if (g.vertex_count() <= hf::kDefaultAllPairsCap) {
      const auto d = hf::all_pairs_distances(g);
      hf::hop_t diameter = 0;
      for (std::size_t i = 0; i < d.size(); ++i) {
        for (hf::hop_t x : d.row(i)) diameter = std::max(diameter, x);
      }
      j["diameter"] = diameter;
    } else {
      // Double sweep: a lower bound on the diameter.
      const auto far = hf::eccentric_anchor(g, 0);
      const auto back = hf::eccentric_anchor(g, far.target);
      j["diameter"] = hf::bfs_distances(g, back.base).dist[back.target];
      j["diameter_is_lower_bound"] = true;
    }
    j["hyperbolicity"] = hf::to_json(
        use_exact ? hf::delta_exact(g)
                  : hf::delta_sampled(g, a.samples ? a.samples : 10000, a.seed));
    emit(j.dump(2) + "\n", a.out);
  });
}

// ---------------------------------------------------------------------------
// busemann

struct BusemannArgs {
  std::string graph;
  AnchorFlags anchor;
  std::optional<hf::vertex_t> compare_target;
  std::string out;
};

void add_busemann(CLI::App& app, BusemannArgs& a) {
  auto* cmd = app.add_subcommand("busemann", "Write the Busemann field as CSV");
  cmd->add_option("graph", a.graph, "Edge-list file")->required();
  a.anchor.add(cmd);
  cmd->add_option("--compare-target", a.compare_target,
                  "Second target with the same base; writes both fields and their difference");
  cmd->add_option("--out", a.out, "Output path, or directory for --anchors (default stdout)");
  cmd->callback([&a] {
    a.anchor.check_usage();
    const hf::Graph g = load_graph(a.graph);
    if (a.anchor.multi()) {
      const auto cfg = hf::multi_anchor_from_json(hf::read_file(a.anchor.anchors_path));
      const auto fields = hf::busemann_fields(g, cfg);
      if (!a.out.empty() && a.out != "-") std::filesystem::create_directories(a.out);
      for (const auto& f : fields) {
        const std::string name = "field_" + std::to_string(f.anchor().target) + ".csv";
        if (a.out.empty() || a.out == "-") {
          std::cout << "# base=" << f.anchor().base << " target=" << f.anchor().target << "\n"
                    << hf::field_to_csv(f);
        } else {
          hf::write_file((std::filesystem::path(a.out) / name).string(), hf::field_to_csv(f));
        }
      }
      return;
    }
    const hf::Anchor anchor = a.anchor.resolve(g);
    const auto field = hf::busemann_field(g, anchor);
    if (!a.compare_target) {
      emit(hf::field_to_csv(field), a.out);
      return;
    }
    if (*a.compare_target == anchor.base) throw UsageError("--compare-target equals the base");
    const auto alt = hf::busemann_field(g, {anchor.base, *a.compare_target});
    std::string csv = "vertex,beta,beta_alt,diff\n";
    for (std::size_t v = 0; v < field.size(); ++v) {
      csv += std::to_string(v) + "," + std::to_string(field[v]) + "," + std::to_string(alt[v]) +
             "," + std::to_string(alt[v] - field[v]) + "\n";
    }
    emit(csv, a.out);
  });
}

// ---------------------------------------------------------------------------
// weights

struct WeightsArgs {
  std::string graph;
  AnchorFlags anchor;
  double alpha = 1.0;
  std::string out;
};

void add_weights(CLI::App& app, WeightsArgs& a) {
  auto* cmd = app.add_subcommand("weights", "Dump per-edge gaps and boundary weights as CSV");
  cmd->add_option("graph", a.graph, "Edge-list file")->required();
  a.anchor.add(cmd);
  cmd->add_option("--alpha", a.alpha, "Scale alpha > 0 (single anchor)")->capture_default_str();
  cmd->add_option("--out", a.out, "Output path (default stdout)");
  cmd->callback([&a] {
    a.anchor.check_usage();
    const hf::Graph g = load_graph(a.graph);
    const auto b = compute_weights(g, a.anchor, a.alpha, hf::Normalize::kNone);
    emit(hf::weights_to_csv(g, b.weights), a.out);
  });
}

// ---------------------------------------------------------------------------
// filter

struct FilterArgs {
  std::string graph;
  std::string signal;
  AnchorFlags anchor;
  double alpha = 1.0;
  std::string normalize = "none";
  std::size_t layers = 1;
  std::string mixing;
  bool enforce = false;
  bool rescale = false;
  std::string out;
};

hf::MixingMatrix load_mixing(const std::string& path, std::size_t d, bool enforce, bool rescale) {
  if (path.empty()) return hf::MixingMatrix::identity(d);
  const auto policy = enforce   ? hf::NormPolicy::kEnforce
                      : rescale ? hf::NormPolicy::kRescale
                                : hf::NormPolicy::kAccept;
  return hf::MixingMatrix::from_dense(hf::mixing_from_text(hf::read_file(path)), policy);
}

void add_filter(CLI::App& app, FilterArgs& a) {
  auto* cmd = app.add_subcommand("filter", "Apply the boundary-weighted layer to a signal");
  cmd->add_option("graph", a.graph, "Edge-list file")->required();
  cmd->add_option("--signal", a.signal, "Signal CSV (vertex,c0,...)")->required();
  a.anchor.add(cmd);
  cmd->add_option("--alpha", a.alpha, "Scale alpha > 0")->capture_default_str();
  cmd->add_option("--normalize", a.normalize, "none | row")->capture_default_str();
  cmd->add_option("--layers", a.layers, "Number of stacked applications")->capture_default_str();
  cmd->add_option("--mixing", a.mixing, "Mixing matrix file (default identity)");
  auto* enforce = cmd->add_flag("--enforce-unit-norm", a.enforce, "Reject ||A||_2 > 1");
  auto* rescale = cmd->add_flag("--rescale-mixing", a.rescale, "Divide A by ||A||_2 if > 1");
  enforce->excludes(rescale);
  cmd->add_option("--out", a.out, "Output path (default stdout)");
  cmd->callback([&a] {
    a.anchor.check_usage();
    const auto normalize = hf::parse_normalize(a.normalize);
    const hf::Graph g = load_graph(a.graph);
    const hf::Signal f = hf::signal_from_csv(hf::read_file(a.signal));
    if (f.vertices() != g.vertex_count()) {
      throw hf::Error("signal has " + std::to_string(f.vertices()) + " rows, graph has " +
                      std::to_string(g.vertex_count()) + " vertices");
    }
    auto mixing = load_mixing(a.mixing, f.channels(), a.enforce, a.rescale);
    const auto b = compute_weights(g, a.anchor, a.alpha, normalize);
    const auto op = hf::build_operator(g, b.weights, std::move(mixing), normalize);
    emit(hf::signal_to_csv(hf::apply_stacked(op, f, a.layers)), a.out);
  });
}

// ---------------------------------------------------------------------------
// spectrum

struct SpectrumArgs {
  std::string graph;
  AnchorFlags anchor;
  double alpha = 1.0;
  std::string normalize = "none";
  std::string method = "auto";
  std::size_t k_max = 5;
  bool with_delta = false;
  std::string mixing;
  std::uint64_t seed = hf::PowerOptions{}.seed;
  std::string out;
};

void add_spectrum(CLI::App& app, SpectrumArgs& a) {
  auto* cmd = app.add_subcommand("spectrum", "Operator norms and contraction certificates as JSON");
  cmd->add_option("graph", a.graph, "Edge-list file")->required();
  a.anchor.add(cmd);
  cmd->add_option("--alpha", a.alpha, "Scale alpha > 0")->capture_default_str();
  cmd->add_option("--normalize", a.normalize, "none | row")->capture_default_str();
  cmd->add_option("--method", a.method, "auto | dense | power")->capture_default_str();
  cmd->add_option("--k-max", a.k_max, "Largest stacked power to certify")->capture_default_str();
  cmd->add_flag("--with-delta", a.with_delta, "Also report the exact four-point delta bound");
  cmd->add_option("--mixing", a.mixing, "Mixing matrix file, used for the block-operator norm");
  cmd->add_option("--seed", a.seed, "Power-iteration seed");
  cmd->add_option("--out", a.out, "Output path (default stdout)");
  cmd->callback([&a] {
    a.anchor.check_usage();
    const auto normalize = hf::parse_normalize(a.normalize);
    hf::NormMethod method;
    if (a.method == "auto") method = hf::NormMethod::kAuto;
    else if (a.method == "dense") method = hf::NormMethod::kDenseExact;
    else if (a.method == "power") method = hf::NormMethod::kPowerIteration;
    else throw UsageError("--method must be auto, dense, or power");

    const hf::Graph g = load_graph(a.graph);
    const auto b = compute_weights(g, a.anchor, a.alpha, normalize);
    auto mixing = a.mixing.empty()
                      ? hf::MixingMatrix::identity(1)
                      : hf::MixingMatrix::from_dense(hf::mixing_from_text(hf::read_file(a.mixing)),
                                                     hf::NormPolicy::kAccept);
    const auto op = hf::build_operator(g, b.weights, std::move(mixing), normalize);
    hf::PowerOptions power;
    power.seed = a.seed;
    const auto report = hf::spectral_report(op, method, power);
    std::optional<double> delta;
    if (a.with_delta) delta = hf::delta_exact(g).delta();
    const auto cert =
        hf::evaluate_certificates(g, b.config, b.weights, op, report, a.k_max, delta, method, power);
    json j = {{"graph", {{"n", g.vertex_count()}, {"edges", g.edge_count()}}},
              {"anchor", b.anchor_json},
              {"alpha", b.config.effective_alpha()},
              {"normalize", hf::to_string(normalize)},
              {"weights", {{"min", b.weights.min_weight}, {"max", b.weights.max_weight}}},
              {"spectral", hf::to_json(report)},
              {"certificates", hf::to_json(cert)}};
    emit(j.dump(2) + "\n", a.out);
  });
}

// ---------------------------------------------------------------------------
// verify / replay

hf::SweepPlan plan_from_json(const json& j) {
  hf::SweepPlan plan;
  try {
    for (const auto& g : j.at("graphs")) {
      hf::GenSpec s;
      s.family = hf::parse_family(g.at("family").get<std::string>());
      s.n = g.value("n", std::int64_t{0});
      s.leaves = g.value("leaves", std::int64_t{0});
      s.branching = g.value("branching", std::int64_t{0});
      s.depth = g.value("depth", std::int64_t{0});
      s.rows = g.value("rows", std::int64_t{0});
      s.cols = g.value("cols", std::int64_t{0});
      s.p = g.value("p", 0.0);
      s.seed = g.value("seed", std::uint64_t{0});
      plan.graphs.push_back(s);
    }
    plan.alphas = j.at("alphas").get<std::vector<double>>();
    if (j.contains("strategies")) {
      plan.strategies.clear();
      for (const auto& s : j.at("strategies")) {
        plan.strategies.push_back(hf::parse_anchor_strategy(s.get<std::string>()));
      }
    }
    if (j.contains("normalize")) {
      plan.normalizations.clear();
      for (const auto& s : j.at("normalize")) {
        plan.normalizations.push_back(hf::parse_normalize(s.get<std::string>()));
      }
    }
    plan.k_max = j.value("k_max", plan.k_max);
    plan.signals = j.value("signals", plan.signals);
    plan.seed = j.value("seed", plan.seed);
  } catch (const json::exception& e) {
    throw hf::ParseError(std::string("sweep plan: ") + e.what(), 0);
  }
  return plan;
}

struct VerifyArgs {
  std::string plan;
  bool use_default = false;
  std::optional<std::uint64_t> seed;
  std::string out_dir = "verify_out";
  bool strict = false;
};

void add_verify(CLI::App& app, VerifyArgs& a) {
  auto* cmd = app.add_subcommand("verify", "Run a property sweep and write the verdict table");
  auto* plan = cmd->add_option("--plan", a.plan, "Sweep plan JSON");
  auto* def = cmd->add_flag("--default", a.use_default, "Use the built-in corpus");
  plan->excludes(def);
  cmd->add_option("--seed", a.seed, "Override the plan seed");
  cmd->add_option("--out-dir", a.out_dir, "Directory for verdicts.csv, verdicts.json, witnesses/")
      ->capture_default_str();
  cmd->add_flag("--strict", a.strict, "Exit 1 when any verdict is false");
  cmd->callback([&a] {
    if (a.plan.empty() && !a.use_default) throw UsageError("verify needs --plan or --default");
    hf::SweepPlan plan = a.use_default ? hf::default_plan()
                                       : plan_from_json(json::parse(hf::read_file(a.plan)));
    if (a.seed) plan.seed = *a.seed;
    const auto table = hf::run_sweep(plan);

    namespace fs = std::filesystem;
    const fs::path dir(a.out_dir);
    fs::create_directories(dir / "witnesses");
    hf::write_file((dir / "verdicts.csv").string(), hf::to_csv(table));
    hf::write_file((dir / "verdicts.json").string(), hf::to_json(table).dump(2) + "\n");
    for (std::size_t i = 0; i < table.witnesses.size(); ++i) {
      char name[32];
      std::snprintf(name, sizeof(name), "witness_%04zu.json", i);
      hf::write_file((dir / "witnesses" / name).string(), table.witnesses[i].dump(2) + "\n");
    }
    std::cout << "rows: " << table.rows.size() << ", witnesses: " << table.witnesses.size()
              << "\n";
    if (a.strict && !table.witnesses.empty()) throw hf::Error("sweep has false verdicts");
  });
}

struct ReplayArgs {
  std::string witness;
};

void add_replay(CLI::App& app, ReplayArgs& a) {
  auto* cmd = app.add_subcommand("replay", "Recompute a verdict row from a witness file");
  cmd->add_option("witness", a.witness, "Witness JSON")->required();
  cmd->callback([&a] {
    json w;
    try {
      w = json::parse(hf::read_file(a.witness));
    } catch (const json::exception& e) {
      throw hf::ParseError(std::string("witness: ") + e.what(), 0);
    }
    const auto result = hf::replay(w);
    json out = {{"matches", result.matches}, {"row", hf::to_json(result.row)}};
    if (!result.matches) out["first_difference"] = result.diff;
    std::cout << out.dump(2) << "\n";
    if (!result.matches) throw hf::Error("replayed row differs from the witness");
  });
}

// ---------------------------------------------------------------------------
// bench

struct BenchArgs {
  std::string family = "random-tree";
  std::vector<std::int64_t> sizes;
  std::vector<std::size_t> dims{16};
  double alpha = 1.0;
  std::size_t repeats = 9;
  bool dense_mixing = false;
  double p = 0.1;
  std::uint64_t seed = 1;
  std::string out;
  std::string hashes;
};

void add_bench(CLI::App& app, BenchArgs& a) {
  auto* cmd = app.add_subcommand("bench", "Time apply() across graph sizes and channel counts");
  cmd->add_option("--family", a.family, "Graph family")->capture_default_str();
  cmd->add_option("--sizes", a.sizes, "Increasing vertex counts")->required()->delimiter(',');
  cmd->add_option("--d", a.dims, "Channel counts")->delimiter(',')->capture_default_str();
  cmd->add_option("--alpha", a.alpha, "Scale alpha > 0")->capture_default_str();
  cmd->add_option("--repeats", a.repeats, "Timed repetitions per cell")->capture_default_str();
  cmd->add_flag("--dense-mixing", a.dense_mixing, "Random unit-norm A instead of the identity");
  cmd->add_option("--p", a.p, "Edge probability for erdos-renyi")->capture_default_str();
  cmd->add_option("--seed", a.seed, "Seed")->capture_default_str();
  cmd->add_option("--out", a.out, "Timing CSV path (default stdout)");
  cmd->add_option("--hashes", a.hashes, "Write per-cell output hashes (n,d,hash) here");
  cmd->callback([&a] {
    hf::BenchConfig cfg;
    cfg.family = hf::parse_family(a.family);
    cfg.sizes = a.sizes;
    cfg.dims = a.dims;
    cfg.alpha = a.alpha;
    cfg.repeats = a.repeats;
    cfg.dense_mixing = a.dense_mixing;
    cfg.p = a.p;
    cfg.seed = a.seed;
    const auto rows = hf::run_bench(cfg);
    emit(hf::bench_to_csv(rows), a.out);
    if (!a.hashes.empty()) {
      std::string text = "n,d,hash\n";
      for (const auto& r : rows) {
        text += std::to_string(r.n) + "," + std::to_string(r.d) + "," +
                std::to_string(r.output_hash) + "\n";
      }
      hf::write_file(a.hashes, text);
    }
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"horofilter: boundary-weighted graph filters and their spectral certificates"};
  app.require_subcommand(1);

  GenArgs gen;
  AnalyzeArgs analyze;
  BusemannArgs busemann;
  WeightsArgs weights;
  FilterArgs filter;
  SpectrumArgs spectrum;
  VerifyArgs verify;
  ReplayArgs replay;
  BenchArgs bench;
  add_gen(app, gen);
  add_analyze(app, analyze);
  add_busemann(app, busemann);
  add_weights(app, weights);
  add_filter(app, filter);
  add_spectrum(app, spectrum);
  add_verify(app, verify);
  add_replay(app, replay);
  add_bench(app, bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const hf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
