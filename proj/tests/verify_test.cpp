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

#include <gtest/gtest.h>

#include "horofilter/verify.hpp"

namespace horofilter {
namespace {

SweepPlan small_plan() {
  SweepPlan plan;
  plan.graphs = {GenSpec::path(5), GenSpec::star(4), GenSpec::cycle(6),
                 GenSpec::random_tree(20, 3), GenSpec::erdos_renyi(20, 0.2, 4)};
  plan.alphas = {0.5, 1.0, 2.0};
  plan.k_max = 3;
  plan.signals = 3;
  return plan;
}

TEST(SweepPlan, Validation) {
  SweepPlan plan = small_plan();
  EXPECT_NO_THROW(plan.validate());
  plan.alphas = {0.0};
  EXPECT_THROW(plan.validate(), Error);
  plan = small_plan();
  plan.strategies = {AnchorStrategy::kExplicit};
  EXPECT_THROW(plan.validate(), Error);
  plan = small_plan();
  plan.graphs.clear();
  EXPECT_THROW(plan.validate(), Error);
}

TEST(DefaultPlan, Shape) {
  const SweepPlan plan = default_plan();
  EXPECT_EQ(plan.graphs.size(), 9u + 8u + 7u + 4u + 15u + 20u + 20u);
  EXPECT_EQ(plan.alphas.size(), 6u);
  for (const auto& g : plan.graphs) EXPECT_LE(generate(g).vertex_count(), 60u);
}

TEST(Sweep, RowCountAndOrder) {
  const SweepPlan plan = small_plan();
  const auto t = run_sweep(plan, 2);
  ASSERT_EQ(t.rows.size(), 5u * 2u * 3u * 2u);
  EXPECT_EQ(t.rows[0].graph_id, GenSpec::path(5).id());
  EXPECT_EQ(t.rows[0].normalize, Normalize::kNone);
  EXPECT_EQ(t.rows[1].normalize, Normalize::kRowStochastic);
  EXPECT_EQ(t.rows[2].alpha, 1.0);
  EXPECT_EQ(t.rows[6].strategy, to_string(AnchorStrategy::kEccentricFrom));
}

TEST(Sweep, DeterministicAcrossThreadCounts) {
  const SweepPlan plan = small_plan();
  const auto a = run_sweep(plan, 1);
  const auto b = run_sweep(plan, 3);
  EXPECT_EQ(to_csv(a), to_csv(b));
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
  ASSERT_EQ(a.witnesses.size(), b.witnesses.size());
  for (std::size_t i = 0; i < a.witnesses.size(); ++i) {
    EXPECT_EQ(a.witnesses[i].dump(), b.witnesses[i].dump());
  }
}

TEST(Sweep, VerdictsOnSmallPlan) {
  const auto t = run_sweep(small_plan(), 2);
  for (const auto& r : t.rows) {
    EXPECT_TRUE(r.error.empty()) << r.error;
    EXPECT_TRUE(r.gap_ok);
    EXPECT_TRUE(r.eq3_ok);
    EXPECT_TRUE(r.stacked_ok);
    EXPECT_TRUE(r.engines_agree);
    if (r.normalize == Normalize::kNone) {
      EXPECT_TRUE(r.rho_measured_ok.value());
      EXPECT_FALSE(r.bound_one_ok.has_value());
    } else {
      EXPECT_TRUE(r.row_sum_ok.value());
      EXPECT_TRUE(r.radius_ok.value());
    }
  }
}

TEST(Sweep, StarRowModeProducesWitness) {
  const auto t = run_sweep(small_plan(), 2);
  bool found = false;
  for (const auto& w : t.witnesses) {
    if (w.at("graph_id") == GenSpec::star(4).id() && w.at("normalize") == "row") {
      found = true;
      EXPECT_NEAR(w.at("row").at("norm_2").get<double>(), 2.0, 1e-9);
      EXPECT_FALSE(w.at("row").at("bound_one_ok").get<bool>());
    }
  }
  EXPECT_TRUE(found);
  for (const auto& r : t.rows) {
    // Even cycles have gap 1 on every edge, so row normalization gives A/2.
    if (r.normalize == Normalize::kRowStochastic && r.graph_id.starts_with("cycle")) {
      EXPECT_TRUE(r.bound_one_ok.value());
    }
  }
}

TEST(Csv, HeaderAndNa) {
  const auto t = run_sweep(small_plan(), 1);
  const std::string csv = to_csv(t);
  const std::string header = csv.substr(0, csv.find('\n'));
  EXPECT_TRUE(header.starts_with("graph_id,n,edges,max_degree,strategy,base,target,alpha"));
  EXPECT_TRUE(header.ends_with("converged,error"));
  EXPECT_NE(csv.find(",na,"), std::string::npos);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), static_cast<long>(t.rows.size() + 1));
}

TEST(Replay, ReproducesEveryWitness) {
  const auto t = run_sweep(small_plan(), 2);
  ASSERT_FALSE(t.witnesses.empty());
  for (const auto& w : t.witnesses) {
    const auto r = replay(json::parse(w.dump()));
    EXPECT_TRUE(r.matches) << r.diff;
  }
}

TEST(Replay, DetectsTampering) {
  const auto t = run_sweep(small_plan(), 1);
  ASSERT_FALSE(t.witnesses.empty());
  json w = t.witnesses.front();
  w["alpha"] = w["alpha"].get<double>() * 1.5;
  const auto r = replay(w);
  EXPECT_FALSE(r.matches);
  EXPECT_EQ(r.diff, "alpha");

  json bad = t.witnesses.front();
  bad.erase("edges");
  EXPECT_THROW(replay(bad), ParseError);
  json other = t.witnesses.front();
  other["schema"] = "something/2";
  EXPECT_THROW(replay(other), Error);
}

TEST(EvaluateCell, BadAnchorLandsInError) {
  CellInput in{"p3", generate(GenSpec::path(3))};
  in.anchor = {0, 9};
  const auto row = evaluate_cell(in);
  EXPECT_FALSE(row.error.empty());
  EXPECT_FALSE(row.all_ok());
}

}  // namespace
}  // namespace horofilter
