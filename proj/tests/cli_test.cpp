// Copyright 2026 The toruspenny Authors
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

#ifndef TORUSPENNY_NO_CLI

#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace toruspenny::cli {
namespace {

using nlohmann::json;

struct Outcome {
  int code;
  std::string out;
  std::string err;

  json report() const { return json::parse(out); }
};

Outcome invoke(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliTest, EmitThenVerifyExactK33) {
  const Outcome emitted = invoke({"catalog", "emit", "k33"});
  ASSERT_EQ(emitted.code, kExitOk);
  const Outcome verified = invoke({"verify", "-", "--expect", "k33", "--exact"}, emitted.out);
  ASSERT_EQ(verified.code, kExitOk) << verified.err;
  const json r = verified.report();
  EXPECT_EQ(r["schema_version"], 1);
  EXPECT_TRUE(r["pass"].get<bool>());
  EXPECT_EQ(r["analysis"]["diameter_squared"], "25/162");
  EXPECT_EQ(r["analysis"]["bipartite"], json::parse("[[1,3,5],[2,4,6]]"));
  EXPECT_EQ(r["analysis"]["planar"], false);
  EXPECT_EQ(r["analysis"]["regular"], 3);
}

TEST(CliTest, EmitThenVerifyExactK5) {
  const Outcome emitted = invoke({"catalog", "emit", "k5"});
  const Outcome verified = invoke({"verify", "-", "--expect", "K5", "--exact"}, emitted.out);
  ASSERT_EQ(verified.code, kExitOk);
  EXPECT_EQ(verified.report()["analysis"]["diameter_squared"], "1/5");
}

TEST(CliTest, VerificationFailureIsExitOneWithAReport) {
  const Outcome emitted = invoke({"catalog", "emit", "k5"});
  const Outcome verified = invoke({"verify", "-", "--expect", "k33"}, emitted.out);
  EXPECT_EQ(verified.code, kExitVerificationFailed);
  const json r = verified.report();
  EXPECT_FALSE(r["pass"].get<bool>());
  EXPECT_EQ(r["diagnostics"][0], "vertex counts 5 != 6");
}

TEST(CliTest, ExactFlagNeedsExactInput) {
  const Outcome emitted = invoke({"catalog", "emit", "octahedron"});
  EXPECT_EQ(invoke({"verify", "-", "--expect", "octahedron", "--exact"}, emitted.out).code,
            kExitUsage);
  EXPECT_EQ(invoke({"verify", "-", "--expect", "octahedron"}, emitted.out).code, kExitOk);
}

TEST(CliTest, GraphFilesAreAcceptedForExpect) {
  const auto path = std::filesystem::temp_directory_path() / "toruspenny_cli_k5.json";
  std::ofstream(path) << R"({"n": 5, "edges": [[0,1],[0,2],[0,3],[0,4],[1,2],[1,3],[1,4],
      [2,3],[2,4],[3,4]]})";
  const Outcome emitted = invoke({"catalog", "emit", "k5"});
  EXPECT_EQ(invoke({"verify", "-", "--expect", path.string()}, emitted.out).code, kExitOk);
  std::filesystem::remove(path);
}

TEST(CliTest, Bound) {
  const Outcome o = invoke({"bound", "--n", "11"});
  ASSERT_EQ(o.code, kExitOk);
  EXPECT_EQ(o.report()["bound"], 21);
  EXPECT_EQ(invoke({"bound", "--n", "0"}).code, kExitUsage);
}

TEST(CliTest, PlanarK5) {
  const Outcome o = invoke({"planar", "-"}, R"({"n": 5, "edges": [[0,1],[0,2],[0,3],[0,4],
      [1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]})");
  ASSERT_EQ(o.code, kExitOk);
  const json r = o.report();
  EXPECT_FALSE(r["planar"].get<bool>());
  EXPECT_EQ(r["witness"]["kind"], "K5");
  EXPECT_TRUE(invoke({"planar", "octahedron"}).report()["planar"].get<bool>());
}

TEST(CliTest, Analyze) {
  const Outcome emitted = invoke({"catalog", "emit", "octahedron"});
  const Outcome o = invoke({"analyze", "-"}, emitted.out);
  ASSERT_EQ(o.code, kExitOk);
  const json r = o.report();
  EXPECT_EQ(r["named_match"], "octahedron");
  EXPECT_EQ(r["contact_count"], 12);
  EXPECT_TRUE(r["planar"].get<bool>());
}

TEST(CliTest, OptimizeIsSeededAndDeterministic) {
  const Outcome a = invoke({"optimize", "--n", "4", "--restarts", "3", "--seed", "9"});
  const Outcome b = invoke({"optimize", "--n", "4", "--restarts", "3", "--seed", "9"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  json ra = a.report();
  json rb = b.report();
  ra.erase("seconds");
  rb.erase("seconds");
  EXPECT_EQ(ra, rb);
  EXPECT_EQ(ra["restart_diameters"].size(), 3u);
  EXPECT_EQ(invoke({"optimize", "--n", "1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"optimize", "--n", "4", "--restarts", "0"}).code, kExitUsage);
}

TEST(CliTest, Survey) {
  const Outcome o = invoke({"survey", "--target", "k33", "--trials", "10", "--seed", "0"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const json r = o.report();
  EXPECT_EQ(r["trials"], 10);
  EXPECT_GE(r["class_count"].get<int>(), 1);
  EXPECT_EQ(r["reference_class"], 0);
  EXPECT_TRUE(r.contains("failures"));
  EXPECT_EQ(o.out, invoke({"survey", "--target", "k33", "--trials", "10", "--seed", "0"}).out);
}

TEST(CliTest, CatalogListAndDrawings) {
  const json r = invoke({"catalog", "list"}).report();
  EXPECT_EQ(r["configurations"], json::parse(R"(["k5","k33","octahedron"])"));
  const Outcome k7 = invoke({"catalog", "emit", "k7"});
  ASSERT_EQ(k7.code, kExitOk);
  EXPECT_EQ(k7.report()["edges"].size(), 21u);
  EXPECT_EQ(invoke({"catalog", "emit", "k6-7"}).code, kExitUsage);
  EXPECT_EQ(invoke({"catalog", "emit", "dodecahedron"}).code, kExitUsage);
}

TEST(CliTest, RenderToStdoutAndFile) {
  const Outcome emitted = invoke({"catalog", "emit", "k5"});
  const Outcome svg = invoke({"render", "--input", "-", "--tiling", "3"}, emitted.out);
  ASSERT_EQ(svg.code, kExitOk);
  EXPECT_EQ(svg.out.rfind("<?xml", 0), 0u);

  const auto path = std::filesystem::temp_directory_path() / "toruspenny_cli_k5.svg";
  const Outcome file =
      invoke({"render", "--input", "-", "--tiling", "3", "--out", path.string()}, emitted.out);
  ASSERT_EQ(file.code, kExitOk);
  EXPECT_EQ(file.report()["circles"], 45);
  std::ifstream in(path);
  const std::string written{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  EXPECT_EQ(written, svg.out);
  std::filesystem::remove(path);

  const Outcome k7 = invoke({"catalog", "emit", "k7"});
  EXPECT_EQ(invoke({"render", "--input", "-"}, k7.out).code, kExitOk);
  EXPECT_EQ(invoke({"render", "--input", "-", "--tiling", "9"}, emitted.out).code, kExitUsage);
}

TEST(CliTest, UsageErrors) {
  const Outcome unknown = invoke({"frobnicate"});
  EXPECT_EQ(unknown.code, kExitUsage);
  EXPECT_FALSE(unknown.err.empty());
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"bound", "--n", "3", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "missing.json", "--expect", "k5"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "-", "--expect", "k5"}, "not json").code, kExitUsage);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

}  // namespace
}  // namespace toruspenny::cli

#endif  // TORUSPENNY_NO_CLI
