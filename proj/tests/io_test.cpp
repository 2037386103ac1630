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

#include "horofilter/generators.hpp"
#include "horofilter/io.hpp"

namespace horofilter {
namespace {

TEST(SignalCsv, RoundTrip) {
  const Signal s = random_signal(7, 3, 11);
  const std::string text = signal_to_csv(s);
  EXPECT_TRUE(text.starts_with("vertex,c0,c1,c2\n0,"));
  EXPECT_EQ(signal_from_csv(text), s);
}

TEST(SignalCsv, Errors) {
  EXPECT_THROW(signal_from_csv(""), ParseError);
  EXPECT_THROW(signal_from_csv("v,c0\n0,1\n"), ParseError);
  EXPECT_THROW(signal_from_csv("vertex,c1\n0,1\n"), ParseError);
  try {
    signal_from_csv("vertex,c0\n0,1\n2,1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(signal_from_csv("vertex,c0\n0,abc\n"), ParseError);
  EXPECT_THROW(signal_from_csv("vertex,c0\n0,1,2\n"), ParseError);
}

TEST(MixingText, RoundTripAndErrors) {
  Eigen::MatrixXd a(2, 2);
  a << 0.5, -0.25, 1e-3, 0.1;
  EXPECT_EQ(mixing_from_text(mixing_to_text(a)), a);
  EXPECT_EQ(mixing_from_text("# comment\nd=2\n1 0\n0\t1\n"), Eigen::MatrixXd::Identity(2, 2));
  EXPECT_THROW(mixing_from_text("1 0\n0 1\n"), ParseError);
  EXPECT_THROW(mixing_from_text("d=2\n1 0\n"), ParseError);
  EXPECT_THROW(mixing_from_text("d=2\n1 0 0\n0 1\n"), ParseError);
  EXPECT_THROW(mixing_from_text("d=1\n1\n2\n"), ParseError);
}

TEST(FieldCsv, Path) {
  const Graph g = generate(GenSpec::path(3));
  EXPECT_EQ(field_to_csv(busemann_field(g, {0, 2})), "vertex,beta\n0,0\n1,-1\n2,-2\n");
}

TEST(WeightsCsv, SingleAndMulti) {
  const Graph g = generate(GenSpec::path(3));
  const auto single = edge_weights_single(g, busemann_field(g, {0, 2}), std::log(2.0));
  EXPECT_EQ(weights_to_csv(g, single), "u,v,gap,weight\n0,1,1,0.5\n1,2,1,0.5\n");
  const MultiAnchorConfig cfg{1, {{0, 0.5}, {2, 0.5}}};
  const auto multi = edge_weights_multi(g, busemann_fields(g, cfg), cfg);
  const std::string text = weights_to_csv(g, multi);
  EXPECT_TRUE(text.starts_with("u,v,weight,gap0,gap1\n0,1,"));
  EXPECT_TRUE(text.ends_with(",1,1\n"));
}

TEST(MultiAnchorJson, RoundTripAndErrors) {
  const MultiAnchorConfig cfg{3, {{0, 0.25}, {7, 0.75}}};
  const auto back = multi_anchor_from_json(to_json(cfg).dump());
  EXPECT_EQ(back.base, 3);
  ASSERT_EQ(back.anchors.size(), 2u);
  EXPECT_EQ(back.anchors[1].target, 7);
  EXPECT_EQ(back.anchors[1].alpha, 0.75);
  EXPECT_THROW(multi_anchor_from_json("{"), ParseError);
  EXPECT_THROW(multi_anchor_from_json(R"({"anchors": []})"), ParseError);
  EXPECT_THROW(multi_anchor_from_json(R"({"base": 0, "anchors": [{"target": 1}]})"), ParseError);
}

TEST(ReportJson, HyperbolicityFields) {
  const auto r = delta_exact(generate(GenSpec::cycle(4)));
  const json j = to_json(r);
  EXPECT_EQ(j.at("delta").get<double>(), 1.0);
  EXPECT_EQ(j.at("definition").get<std::string>(), "four-point");
  EXPECT_EQ(j.at("mode").get<std::string>(), "exact");
  EXPECT_FALSE(j.contains("degenerate"));
  EXPECT_TRUE(to_json(delta_exact(generate(GenSpec::path(3)))).at("degenerate").get<bool>());
}

TEST(ReportJson, SpectralAndCertificates) {
  const Graph g = generate(GenSpec::path(5));
  const auto ew = edge_weights_single(g, busemann_field(g, {0, 4}), 1.0);
  const auto op = build_operator(g, ew, MixingMatrix::identity(1));
  const auto rep = spectral_report(op);
  const json s = to_json(rep);
  EXPECT_EQ(s.at("method").get<std::string>(), to_string(NormMethod::kDenseExact));
  EXPECT_FALSE(s.at("cross_check_rel_diff").is_null());
  const json c = to_json(evaluate_certificates(g, {}, ew, op, rep, 3));
  EXPECT_EQ(c.at("stacked").size(), 3u);
  EXPECT_TRUE(c.at("bound_one_holds").is_null());
  EXPECT_TRUE(c.at("delta_four_point").is_null());
}

TEST(Files, ReadWrite) {
  const std::string path = ::testing::TempDir() + "horofilter_io_test.txt";
  write_file(path, "abc\n");
  EXPECT_EQ(read_file(path), "abc\n");
  EXPECT_THROW(read_file(path + ".missing"), Error);
}

}  // namespace
}  // namespace horofilter
