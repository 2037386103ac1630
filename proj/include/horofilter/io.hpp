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

// Text formats: signal / field / weight CSVs, the mixing-matrix file, the
// multi-anchor JSON config, and JSON forms of the analysis reports.
// Doubles are written in shortest round-trip form.

#ifndef HOROFILTER_IO_HPP_
#define HOROFILTER_IO_HPP_

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "horofilter/boundary.hpp"
#include "horofilter/filter.hpp"
#include "horofilter/hyperbolicity.hpp"
#include "horofilter/spectral.hpp"

namespace horofilter {

using json = nlohmann::ordered_json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write \"" + path + "\"");
  out << content;
  if (!out) throw Error("write to \"" + path + "\" failed");
}

namespace detail {

inline std::vector<std::string_view> content_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  for (auto line : split(text, '\n')) lines.push_back(trim(line));
  return lines;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Signal CSV: "vertex,c0,...,c{d-1}", one row per vertex in order.

inline std::string signal_to_csv(const Signal& s) {
  std::string out = "vertex";
  for (std::size_t c = 0; c < s.channels(); ++c) out += ",c" + std::to_string(c);
  out += '\n';
  for (std::size_t v = 0; v < s.vertices(); ++v) {
    out += std::to_string(v);
    for (double x : s.row(v)) {
      out += ',';
      out += format_double(x);
    }
    out += '\n';
  }
  return out;
}

inline Signal signal_from_csv(std::string_view text) {
  const auto lines = detail::content_lines(text);
  std::size_t i = 0;
  while (i < lines.size() && lines[i].empty()) ++i;
  if (i == lines.size()) throw ParseError("signal CSV is empty", 0);
  const auto header = split(lines[i], ',');
  if (header.size() < 2 || trim(header[0]) != "vertex") {
    throw ParseError("signal CSV header must be \"vertex,c0,...\"", i + 1);
  }
  for (std::size_t c = 1; c < header.size(); ++c) {
    if (trim(header[c]) != "c" + std::to_string(c - 1)) {
      throw ParseError("signal CSV column " + std::to_string(c) + " must be named c" +
                           std::to_string(c - 1),
                       i + 1);
    }
  }
  const std::size_t d = header.size() - 1;
  std::vector<double> values;
  std::size_t n = 0;
  for (++i; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto cells = split(lines[i], ',');
    if (cells.size() != d + 1) {
      throw ParseError("expected " + std::to_string(d + 1) + " cells", i + 1);
    }
    std::size_t vertex = 0;
    if (!parse_number(cells[0], vertex) || vertex != n) {
      throw ParseError("rows must list vertices 0..n-1 in order", i + 1);
    }
    for (std::size_t c = 1; c <= d; ++c) {
      double x = 0.0;
      if (!parse_number(cells[c], x) || !std::isfinite(x)) {
        throw ParseError("invalid value \"" + std::string(cells[c]) + "\"", i + 1);
      }
      values.push_back(x);
    }
    ++n;
  }
  return Signal(n, d, std::move(values));
}

// ---------------------------------------------------------------------------
// Mixing matrix file: "d=<k>" then k rows of k whitespace-separated floats.

inline Eigen::MatrixXd mixing_from_text(std::string_view text) {
  const auto lines = detail::content_lines(text);
  std::size_t i = 0;
  while (i < lines.size() && (lines[i].empty() || lines[i].front() == '#')) ++i;
  std::size_t d = 0;
  if (i == lines.size() || !lines[i].starts_with("d=") || !parse_number(lines[i].substr(2), d) ||
      d == 0) {
    throw ParseError("mixing file must start with \"d=<k>\"", i + 1);
  }
  Eigen::MatrixXd a(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  std::size_t row = 0;
  for (++i; i < lines.size(); ++i) {
    if (lines[i].empty() || lines[i].front() == '#') continue;
    if (row == d) throw ParseError("more than " + std::to_string(d) + " rows", i + 1);
    std::size_t col = 0;
    for (auto tok : split(lines[i], ' ')) {
      for (auto t : split(tok, '\t')) {
        if (t.empty()) continue;
        double x = 0.0;
        if (col == d || !parse_number(t, x)) {
          throw ParseError("expected " + std::to_string(d) + " numbers per row", i + 1);
        }
        a(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col++)) = x;
      }
    }
    if (col != d) throw ParseError("expected " + std::to_string(d) + " numbers per row", i + 1);
    ++row;
  }
  if (row != d) throw ParseError("expected " + std::to_string(d) + " rows", 0);
  return a;
}

inline std::string mixing_to_text(const Eigen::MatrixXd& a) {
  std::string out = "d=" + std::to_string(a.rows()) + "\n";
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      if (c) out += ' ';
      out += format_double(a(r, c));
    }
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Busemann field CSV: "vertex,beta".

inline std::string field_to_csv(const BusemannField& f) {
  std::string out = "vertex,beta\n";
  for (std::size_t v = 0; v < f.size(); ++v) {
    out += std::to_string(v) + "," + std::to_string(f[v]) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Weight dump CSV. Single: "u,v,gap,weight". Multi: "u,v,weight,gap0,...".

inline std::string weights_to_csv(const Graph& g, const EdgeWeights& ew) {
  std::string out;
  const auto edges = g.edges();
  if (ew.mode == WeightMode::kSingle) {
    out = "u,v,gap,weight\n";
    for (std::size_t e = 0; e < edges.size(); ++e) {
      out += std::to_string(edges[e].u) + "," + std::to_string(edges[e].v) + "," +
             std::to_string(ew.gaps[0][e]) + "," + format_double(ew.weight[e]) + "\n";
    }
    return out;
  }
  out = "u,v,weight";
  for (std::size_t m = 0; m < ew.gaps.size(); ++m) out += ",gap" + std::to_string(m);
  out += '\n';
  for (std::size_t e = 0; e < edges.size(); ++e) {
    out += std::to_string(edges[e].u) + "," + std::to_string(edges[e].v) + "," +
           format_double(ew.weight[e]);
    for (const auto& row : ew.gaps) out += "," + std::to_string(row[e]);
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Multi-anchor config JSON:
//   {"base": int, "anchors": [{"target": int, "alpha": float}, ...]}

inline MultiAnchorConfig multi_anchor_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("anchor config: ") + e.what(), 0);
  }
  MultiAnchorConfig cfg;
  try {
    cfg.base = j.at("base").get<vertex_t>();
    for (const auto& a : j.at("anchors")) {
      cfg.anchors.push_back({a.at("target").get<vertex_t>(), a.at("alpha").get<double>()});
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("anchor config: ") + e.what(), 0);
  }
  return cfg;
}

inline json to_json(const MultiAnchorConfig& cfg) {
  json anchors = json::array();
  for (const auto& a : cfg.anchors) anchors.push_back({{"target", a.target}, {"alpha", a.alpha}});
  return {{"base", cfg.base}, {"anchors", anchors}};
}

// ---------------------------------------------------------------------------
// Reports

inline json to_json(const HyperbolicityReport& r) {
  json j = {{"delta", r.delta()},
            {"mode", to_string(r.mode)},
            {"definition", "four-point"},
            {"witness", r.witness},
            {"quadruples_checked", r.quadruples_checked}};
  if (r.degenerate) j["degenerate"] = true;
  return j;
}

namespace detail {

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace detail

inline json to_json(const SpectralReport& r) {
  return {{"n", r.n},
          {"norm_1", r.norm_1},
          {"norm_inf", r.norm_inf},
          {"norm_2", r.norm_2},
          {"spectral_radius", r.spectral_radius},
          {"method", to_string(r.method)},
          {"iterations", r.iterations},
          {"residual", r.residual},
          {"converged", r.converged},
          {"cross_check_rel_diff", detail::optional_json(r.cross_check_rel_diff)},
          {"mixing_norm", r.mixing_norm},
          {"operator_norm", r.operator_norm}};
}

inline json to_json(const CertificateReport& c) {
  json stacked = json::array();
  for (const auto& s : c.stacked) {
    stacked.push_back({{"k", s.k},
                       {"power_norm", s.power_norm},
                       {"norm_2_pow", s.norm_2_pow},
                       {"holds", s.holds},
                       {"decay_bound", detail::optional_json(s.decay_bound)}});
  }
  return {{"max_degree", c.max_degree},
          {"alpha", c.alpha},
          {"c_min", c.c_min},
          {"c_max", c.c_max},
          {"rho_paper", c.rho_paper},
          {"rho_measured", c.rho_measured},
          {"interpolation_bound", c.interpolation_bound},
          {"interpolation_holds", c.interpolation_holds},
          {"bound_rho_holds", detail::optional_json(c.bound_rho_holds)},
          {"rho_paper_holds", detail::optional_json(c.rho_paper_holds)},
          {"bound_one_holds", detail::optional_json(c.bound_one_holds)},
          {"radius_bound_holds", c.radius_bound_holds},
          {"row_sums_ok", detail::optional_json(c.row_sums_ok)},
          {"conditional_applies", c.conditional_applies},
          {"conditional_bound", c.conditional_bound},
          {"conditional_holds", detail::optional_json(c.conditional_holds)},
          {"delta_four_point", detail::optional_json(c.delta_four_point)},
          {"abstract_bound", detail::optional_json(c.abstract_bound)},
          {"abstract_bound_holds", detail::optional_json(c.abstract_bound_holds)},
          {"stacked", stacked},
          {"stacked_holds", c.stacked_holds}};
}

}  // namespace horofilter

#endif  // HOROFILTER_IO_HPP_
