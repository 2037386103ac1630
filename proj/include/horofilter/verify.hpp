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

// Property sweeps over graph families x anchors x alpha x normalization.
//
// Each plan cell becomes one verdict row. A row with any false verdict (or
// an error) also yields a witness: a standalone JSON document holding the
// graph, anchor, and parameters, from which replay() recomputes the row.

#ifndef HOROFILTER_VERIFY_HPP_
#define HOROFILTER_VERIFY_HPP_

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "horofilter/boundary.hpp"
#include "horofilter/filter.hpp"
#include "horofilter/generators.hpp"
#include "horofilter/hyperbolicity.hpp"
#include "horofilter/io.hpp"
#include "horofilter/spectral.hpp"

namespace horofilter {

inline constexpr const char* kWitnessSchema = "horofilter.witness/1";
inline constexpr double kEngineAgreement = 1e-7;

struct SweepPlan {
  std::vector<GenSpec> graphs;
  std::vector<double> alphas;
  std::vector<AnchorStrategy> strategies{AnchorStrategy::kDiameterEndpoints,
                                         AnchorStrategy::kEccentricFrom};
  std::vector<Normalize> normalizations{Normalize::kNone, Normalize::kRowStochastic};
  std::size_t k_max = 5;
  std::size_t signals = 10;
  std::uint64_t seed = 1;

  void validate() const {
    if (graphs.empty()) throw Error("sweep plan has no graphs");
    if (alphas.empty()) throw Error("sweep plan has no alpha values");
    if (strategies.empty()) throw Error("sweep plan has no anchor strategies");
    if (normalizations.empty()) throw Error("sweep plan has no normalize modes");
    for (double a : alphas) {
      if (!(a > 0.0) || !std::isfinite(a)) {
        throw Error("sweep alpha " + format_double(a) + " is not positive");
      }
    }
    for (auto s : strategies) {
      if (s == AnchorStrategy::kExplicit) {
        throw Error("sweep plans support diameter_endpoints and eccentric_from only");
      }
    }
    for (const auto& g : graphs) g.validate();
  }
};

/// Graph families used by the default sweep: short paths, cycles and
/// stars, small balanced trees, grids up to 6x6, and seeded random trees and
/// Erdos-Renyi graphs with at most 60 vertices.
inline std::vector<GenSpec> default_corpus() {
  std::vector<GenSpec> out;
  for (int n = 2; n <= 10; ++n) out.push_back(GenSpec::path(n));
  for (int n = 3; n <= 10; ++n) out.push_back(GenSpec::cycle(n));
  for (int m = 2; m <= 8; ++m) out.push_back(GenSpec::star(m));
  for (int b : {2, 3}) {
    for (int h : {2, 3}) out.push_back(GenSpec::balanced_tree(b, h));
  }
  for (int r = 2; r <= 6; ++r) {
    for (int c = r; c <= 6; ++c) out.push_back(GenSpec::grid(r, c));
  }
  for (int i = 0; i < 20; ++i) out.push_back(GenSpec::random_tree(10 + 2 * i, 1000 + i));
  for (int i = 0; i < 20; ++i) out.push_back(GenSpec::erdos_renyi(20 + 2 * i, 0.2, 2000 + i));
  return out;
}

inline std::vector<double> default_alphas() {
  return {0.25, 0.5, std::numbers::ln2, 1.0, 2.0, 4.0};
}

inline SweepPlan default_plan() {
  SweepPlan plan;
  plan.graphs = default_corpus();
  plan.alphas = default_alphas();
  return plan;
}

// ---------------------------------------------------------------------------
// Verdict rows

/// A verdict that may not apply to the cell's normalization mode.
using Verdict = std::optional<bool>;

struct VerdictRow {
  std::string graph_id;
  std::size_t n = 0;
  std::size_t edges = 0;
  std::size_t max_degree = 0;
  std::string strategy;
  Anchor anchor;
  double alpha = 0.0;
  Normalize normalize = Normalize::kNone;
  std::optional<double> delta_four_point;
  std::int64_t lemma1_max_gap = 0;
  std::int64_t c_min = 0;
  double weight_min = 0.0;
  double weight_max = 0.0;
  double norm_1 = 0.0;
  double norm_inf = 0.0;
  double norm_2 = 0.0;
  double spectral_radius = 0.0;
  double rho_measured = 0.0;
  double engine_rel_diff = 0.0;
  bool gap_ok = true;
  bool eq3_ok = true;
  Verdict rho_measured_ok;
  Verdict row_sum_ok;
  Verdict bound_one_ok;
  Verdict radius_ok;
  bool stacked_ok = true;
  bool engines_agree = true;
  bool converged = true;
  std::string error;

  bool all_ok() const {
    auto ok = [](const Verdict& v) { return !v.has_value() || *v; };
    return error.empty() && gap_ok && eq3_ok && ok(rho_measured_ok) && ok(row_sum_ok) &&
           ok(bound_one_ok) && ok(radius_ok) && stacked_ok && engines_agree && converged;
  }
};

struct VerdictTable {
  std::vector<VerdictRow> rows;
  /// Witness documents for rows that are not all_ok(), in row order.
  std::vector<json> witnesses;
};

struct CellInput {
  std::string graph_id;
  Graph graph;
  AnchorStrategy strategy = AnchorStrategy::kDiameterEndpoints;
  Anchor anchor{};
  double alpha = 1.0;
  Normalize normalize = Normalize::kNone;
  std::size_t k_max = 5;
  std::size_t signals = 10;
  std::uint64_t seed = 1;
  std::optional<double> delta{};
};

/// Evaluates one cell. Never throws for numeric failures: they land in
/// row.error.
inline VerdictRow evaluate_cell(const CellInput& in) {
  VerdictRow row;
  row.graph_id = in.graph_id;
  row.n = in.graph.vertex_count();
  row.edges = in.graph.edge_count();
  row.max_degree = in.graph.max_degree();
  row.strategy = to_string(in.strategy);
  row.anchor = in.anchor;
  row.alpha = in.alpha;
  row.normalize = in.normalize;
  row.delta_four_point = in.delta;
  try {
    const Graph& g = in.graph;
    const BusemannField field = busemann_field(g, in.anchor);
    const EdgeGaps gaps = edge_gaps(g, field);
    row.lemma1_max_gap = gaps.max_gap;
    row.c_min = gaps.min_gap;
    row.gap_ok = gaps.max_gap <= 1;

    const EdgeWeights ew = edge_weights_single(g, field, in.alpha);
    row.weight_min = ew.min_weight;
    row.weight_max = ew.max_weight;

    const FilterOperator op = build_operator(g, ew, MixingMatrix::identity(1), in.normalize);
    PowerOptions power;
    power.seed = in.seed;
    const SpectralReport rep = spectral_report(op, NormMethod::kAuto, power);
    row.norm_1 = rep.norm_1;
    row.norm_inf = rep.norm_inf;
    row.norm_2 = rep.norm_2;
    row.spectral_radius = rep.spectral_radius;
    row.converged = rep.converged;
    row.engine_rel_diff = rep.cross_check_rel_diff.value_or(0.0);
    row.engines_agree = row.engine_rel_diff <= kEngineAgreement;

    FilterConfig cfg;
    cfg.alpha = in.alpha;
    cfg.normalize = in.normalize;
    const CertificateReport cert =
        evaluate_certificates(g, cfg, ew, op, rep, in.k_max, in.delta, NormMethod::kAuto, power);
    row.rho_measured = cert.rho_measured;
    row.eq3_ok = cert.interpolation_holds;
    row.rho_measured_ok = cert.bound_rho_holds;
    row.row_sum_ok = cert.row_sums_ok;
    row.bound_one_ok = cert.bound_one_holds;
    if (in.normalize == Normalize::kRowStochastic) {
      row.radius_ok = std::abs(rep.spectral_radius - 1.0) <= kCertificateSlack;
    }

    // Signal-level stacked decay: ||W^k x|| <= (||W||_2 + slack)^k ||x||.
    bool stacked = cert.stacked_holds;
    for (std::size_t s = 0; s < in.signals; ++s) {
      const Signal x = random_signal(g.vertex_count(), 1, in.seed + s);
      const double x_norm = x.norm();
      Signal y = x;
      for (std::size_t k = 1; k <= in.k_max; ++k) {
        y = apply(op, y, 1);
        const double bound =
            std::pow(rep.norm_2 + kCertificateSlack, static_cast<double>(k)) * x_norm;
        stacked = stacked && y.norm() <= bound;
      }
    }
    row.stacked_ok = stacked;
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

// ---------------------------------------------------------------------------
// Serialization

inline const std::vector<std::string>& verdict_columns() {
  static const std::vector<std::string> cols = {
      "graph_id",    "n",           "edges",          "max_degree",      "strategy",
      "base",        "target",      "alpha",          "normalize",       "delta_four_point",
      "lemma1_max_gap", "c_min",    "weight_min",     "weight_max",      "norm_1",
      "norm_inf",    "norm_2",      "spectral_radius", "rho_measured",   "engine_rel_diff",
      "gap_ok",   "eq3_ok",      "rho_measured_ok", "row_sum_ok",     "bound_one_ok",
      "radius_ok",   "stacked_ok",  "engines_agree",  "converged",       "error"};
  return cols;
}

inline json to_json(const VerdictRow& r) {
  auto verdict = [](const Verdict& v) { return v ? json(*v) : json(nullptr); };
  json j;
  j["graph_id"] = r.graph_id;
  j["n"] = r.n;
  j["edges"] = r.edges;
  j["max_degree"] = r.max_degree;
  j["strategy"] = r.strategy;
  j["base"] = r.anchor.base;
  j["target"] = r.anchor.target;
  j["alpha"] = r.alpha;
  j["normalize"] = to_string(r.normalize);
  j["delta_four_point"] = r.delta_four_point ? json(*r.delta_four_point) : json(nullptr);
  j["lemma1_max_gap"] = r.lemma1_max_gap;
  j["c_min"] = r.c_min;
  j["weight_min"] = r.weight_min;
  j["weight_max"] = r.weight_max;
  j["norm_1"] = r.norm_1;
  j["norm_inf"] = r.norm_inf;
  j["norm_2"] = r.norm_2;
  j["spectral_radius"] = r.spectral_radius;
  j["rho_measured"] = r.rho_measured;
  j["engine_rel_diff"] = r.engine_rel_diff;
  j["gap_ok"] = r.gap_ok;
  j["eq3_ok"] = r.eq3_ok;
  j["rho_measured_ok"] = verdict(r.rho_measured_ok);
  j["row_sum_ok"] = verdict(r.row_sum_ok);
  j["bound_one_ok"] = verdict(r.bound_one_ok);
  j["radius_ok"] = verdict(r.radius_ok);
  j["stacked_ok"] = r.stacked_ok;
  j["engines_agree"] = r.engines_agree;
  j["converged"] = r.converged;
  j["error"] = r.error;
  return j;
}

inline std::string to_csv(const VerdictTable& t) {
  std::string out;
  const auto& cols = verdict_columns();
  for (std::size_t c = 0; c < cols.size(); ++c) out += (c ? "," : "") + cols[c];
  out += '\n';
  auto cell = [](const json& v) -> std::string {
    if (v.is_null()) return "na";
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_float()) return format_double(v.get<double>());
    if (v.is_string()) {
      std::string s = v.get<std::string>();
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string quoted = "\"";
      for (char ch : s) {
        if (ch == '"') quoted += '"';
        quoted += ch == '\n' ? ' ' : ch;
      }
      return quoted + "\"";
    }
    return v.dump();
  };
  for (const auto& row : t.rows) {
    const json j = to_json(row);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (c) out += ',';
      out += cell(j.at(cols[c]));
    }
    out += '\n';
  }
  return out;
}

inline json to_json(const VerdictTable& t) {
  json rows = json::array();
  for (const auto& r : t.rows) rows.push_back(to_json(r));
  return {{"rows", rows}, {"witness_count", t.witnesses.size()}};
}

inline json make_witness(const CellInput& in, const VerdictRow& row) {
  json edges = json::array();
  for (const auto& e : in.graph.edges()) edges.push_back({e.u, e.v});
  return {{"schema", kWitnessSchema},
          {"graph_id", in.graph_id},
          {"n", in.graph.vertex_count()},
          {"edges", edges},
          {"strategy", to_string(in.strategy)},
          {"anchor", {{"base", in.anchor.base}, {"target", in.anchor.target}}},
          {"alpha", in.alpha},
          {"normalize", to_string(in.normalize)},
          {"k_max", in.k_max},
          {"signals", in.signals},
          {"seed", in.seed},
          {"delta_four_point", in.delta ? json(*in.delta) : json(nullptr)},
          {"row", to_json(row)}};
}

// ---------------------------------------------------------------------------
// Sweep and replay

inline VerdictTable run_sweep(const SweepPlan& plan, std::size_t threads = default_threads()) {
  plan.validate();

  struct GraphEntry {
    std::string id;
    std::optional<Graph> graph;
    std::optional<double> delta;
    std::string error;
  };
  std::vector<GraphEntry> graphs(plan.graphs.size());
  for (std::size_t i = 0; i < plan.graphs.size(); ++i) {
    graphs[i].id = plan.graphs[i].id();
    try {
      graphs[i].graph = generate(plan.graphs[i]);
      if (graphs[i].graph->vertex_count() <= kDenseLimit) {
        graphs[i].delta = delta_exact(*graphs[i].graph, 1).delta();
      }
    } catch (const std::exception& e) {
      graphs[i].error = e.what();
    }
  }

  std::vector<CellInput> cells;
  std::vector<std::string> cell_errors;
  for (const auto& entry : graphs) {
    for (auto strategy : plan.strategies) {
      std::optional<Anchor> anchor;
      std::string error = entry.error;
      if (entry.graph && error.empty()) {
        try {
          anchor = suggest_anchor(*entry.graph, strategy, Anchor{0, 0});
        } catch (const std::exception& e) {
          error = e.what();
        }
      }
      for (double alpha : plan.alphas) {
        for (auto mode : plan.normalizations) {
          CellInput in{entry.id,
                       entry.graph ? *entry.graph : Graph(1, {}),
                       strategy,
                       anchor.value_or(Anchor{0, 0}),
                       alpha,
                       mode,
                       plan.k_max,
                       plan.signals,
                       plan.seed,
                       entry.delta};
          cells.push_back(std::move(in));
          cell_errors.push_back(error);
        }
      }
    }
  }

  VerdictTable table;
  table.rows.resize(cells.size());
  parallel_for(cells.size(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      if (!cell_errors[i].empty()) {
        VerdictRow row;
        row.graph_id = cells[i].graph_id;
        row.strategy = to_string(cells[i].strategy);
        row.alpha = cells[i].alpha;
        row.normalize = cells[i].normalize;
        row.error = cell_errors[i];
        table.rows[i] = std::move(row);
      } else {
        table.rows[i] = evaluate_cell(cells[i]);
      }
    }
  });
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!table.rows[i].all_ok()) table.witnesses.push_back(make_witness(cells[i], table.rows[i]));
  }
  return table;
}

struct ReplayResult {
  VerdictRow row;
  /// True when the recomputed row serializes identically to the stored one.
  bool matches = false;
  std::string diff;  // first differing column, if any
};

inline ReplayResult replay(const json& witness) {
  CellInput in{"", Graph(1, {})};
  json stored;
  try {
    if (witness.at("schema").get<std::string>() != kWitnessSchema) {
      throw Error("unsupported witness schema \"" + witness.at("schema").get<std::string>() +
                  "\"");
    }
    std::vector<Edge> edges;
    for (const auto& e : witness.at("edges")) {
      edges.push_back({e.at(0).get<vertex_t>(), e.at(1).get<vertex_t>()});
    }
    in.graph_id = witness.at("graph_id").get<std::string>();
    in.graph = Graph(witness.at("n").get<std::size_t>(), std::move(edges));
    in.strategy = parse_anchor_strategy(witness.at("strategy").get<std::string>());
    in.anchor = {witness.at("anchor").at("base").get<vertex_t>(),
                 witness.at("anchor").at("target").get<vertex_t>()};
    in.alpha = witness.at("alpha").get<double>();
    in.normalize = parse_normalize(witness.at("normalize").get<std::string>());
    in.k_max = witness.at("k_max").get<std::size_t>();
    in.signals = witness.at("signals").get<std::size_t>();
    in.seed = witness.at("seed").get<std::uint64_t>();
    if (!witness.at("delta_four_point").is_null()) {
      in.delta = witness.at("delta_four_point").get<double>();
    }
    stored = witness.at("row");
  } catch (const json::exception& e) {
    throw ParseError(std::string("witness schema mismatch: ") + e.what(), 0);
  }

  ReplayResult result;
  result.row = evaluate_cell(in);
  const json fresh = to_json(result.row);
  result.matches = fresh.dump() == stored.dump();
  if (!result.matches) {
    for (const auto& col : verdict_columns()) {
      if (!stored.contains(col) || stored.at(col) != fresh.at(col)) {
        result.diff = col;
        break;
      }
    }
  }
  return result;
}

}  // namespace horofilter

#endif  // HOROFILTER_VERIFY_HPP_
