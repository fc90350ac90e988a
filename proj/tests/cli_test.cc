// Copyright 2026 The paraeval Authors.
//
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

// Black-box tests of the command-line binary.

#include <sstream>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "gtest/gtest.h"
#include "paraeval.hpp"

namespace paraeval {
namespace {

using testing::CliResult;
using testing::shell_quote;
using testing::ScratchDir;

const std::string kCli = PARAEVAL_CLI_PATH;
const std::string kData = PARAEVAL_DATA_DIR;

class CliTest : public ::testing::Test {
 protected:
  CliTest() : dir_("paraeval_cli_test") {}

  CliResult Run(const std::string& args) { return testing::run_cli(kCli, args, dir_); }
  std::string Path(const std::string& name) { return shell_quote(dir_ / name); }
  std::string Data(const std::string& name) { return shell_quote(kData + "/" + name); }
  void Write(const std::string& name, const std::string& text) { testing::write_file(dir_ / name, text); }
  std::string Read(const std::string& name) { return testing::read_file(dir_ / name); }

  ScratchDir dir_;
};

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(Run("").code, 2);
  EXPECT_EQ(Run("frobnicate").code, 2);
  EXPECT_EQ(Run("benchmark").code, 2);
  EXPECT_EQ(Run("evaluate " + Data("pairs.jsonl") + " --format xml").code, 2);
  EXPECT_EQ(Run("--help").code, 0);
}

TEST_F(CliTest, Benchmark) {
  const CliResult r = Run("benchmark " + Data("pairs.jsonl"));
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  const Benchmark lib = compute_benchmark(load_corpus(kData + "/pairs.jsonl"));
  EXPECT_EQ(j["bench_rouge_l"].get<double>(), lib.bench_rouge_l);
  EXPECT_EQ(j["mode"], "micro");
  EXPECT_EQ(j["corpus_id"], lib.corpus_id);
  EXPECT_EQ(j["pair_count"], lib.pair_count);

  const CliResult macro = Run("benchmark --mode macro " + Data("pairs.jsonl"));
  ASSERT_EQ(macro.code, 0);
  EXPECT_EQ(nlohmann::json::parse(macro.out)["mode"], "macro");
}

TEST_F(CliTest, BenchmarkErrors) {
  Write("parrots.tsv", "a b\ta b\nc d\tc d\n");
  EXPECT_EQ(Run("benchmark " + Path("parrots.tsv")).code, 3);
  Write("bad.jsonl", "{\"source\":\"a\",\"references\":[]}\n");
  const CliResult bad = Run("benchmark " + Path("bad.jsonl"));
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("line 1"), std::string::npos);
  EXPECT_EQ(Run("benchmark " + Path("missing.jsonl")).code, 2);
}

TEST_F(CliTest, EvaluateEqualsLibrary) {
  const CliResult r = Run("evaluate " + Data("pairs.jsonl"));
  ASSERT_EQ(r.code, 0) << r.err;
  const Corpus c = load_corpus(kData + "/pairs.jsonl");
  const EvaluationReport rep = evaluate_pairs(c, compute_benchmark(c));
  EXPECT_EQ(r.out, report_to_json(rep).dump(2) + "\n");
}

TEST_F(CliTest, EvaluateFormats) {
  const CliResult tsv = Run("evaluate --format tsv " + Data("pairs.jsonl"));
  ASSERT_EQ(tsv.code, 0);
  const auto lines = Lines(tsv.out);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0], "corpus\tBLEU\tTER\tsrcROUGE1\tsrcROUGEL\tstd\tPINC\tROUGEP");
  const CliResult table = Run("evaluate " + Data("pairs.jsonl") + " --format table");
  ASSERT_EQ(table.code, 0);
  EXPECT_EQ(Lines(table.out).size(), 3u);
}

TEST_F(CliTest, EvaluatePinnedBenchmark) {
  ASSERT_EQ(Run("benchmark " + Data("pairs.jsonl") + " -o " + Path("bench.json")).code, 0);
  EXPECT_EQ(Run("evaluate " + Data("pairs.jsonl") + " --benchmark " + Path("bench.json")).code, 0);
  EXPECT_EQ(Run("evaluate " + Data("pairs.tsv") + " --benchmark " + Path("bench.json")).code, 4);
  EXPECT_EQ(Run("evaluate " + Data("pairs.tsv") + " --benchmark " + Path("bench.json") + " --force").code, 0);
  Write("degenerate.json", R"({"bench_rouge_l": 1.0})");
  EXPECT_EQ(Run("evaluate " + Data("pairs.jsonl") + " --benchmark " + Path("degenerate.json")).code, 3);
  EXPECT_EQ(Run("evaluate " + Data("pairs.jsonl") + " --benchmark " + Path("nothing.json")).code, 2);
}

TEST_F(CliTest, EvaluateIsWorkerInvariant) {
  const std::string base = Run("evaluate " + Data("pairs.jsonl") + " --workers 1").out;
  for (const char* w : {"2", "4", "8"}) {
    EXPECT_EQ(Run("evaluate " + Data("pairs.jsonl") + " --workers " + w).out, base);
  }
  EXPECT_EQ(Run("--workers 0 evaluate " + Data("pairs.jsonl")).code, 2);
}

TEST_F(CliTest, PerturbRoundTripsThroughEvaluate) {
  ASSERT_EQ(Run("benchmark " + Data("pairs.jsonl") + " -o " + Path("bench.json")).code, 0);
  ASSERT_EQ(Run("perturb " + Data("pairs.jsonl") + " --kind parrot -o " + Path("parrot.jsonl")).code, 0);
  const CliResult r = Run("evaluate " + Path("parrot.jsonl") + " --benchmark " + Path("bench.json"));
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["target"], "candidates");
  EXPECT_EQ(j["rouge_p"].get<double>(), 0.0);
  EXPECT_EQ(j["pinc"].get<double>(), 0.0);
}

TEST_F(CliTest, PerturbKinds) {
  const Corpus c = load_corpus(kData + "/pairs.jsonl");
  const CliResult rev = Run("perturb " + Data("pairs.jsonl") + " --kind reverse");
  ASSERT_EQ(rev.code, 0);
  std::istringstream in(rev.out);
  const Corpus back = parse_corpus(in, CorpusFormat::kJsonl);
  ASSERT_EQ(back.size(), c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    EXPECT_EQ(back.records[i].candidates.at(0), perturb(c.records[i].source, Perturbation::reverse()));
  }

  const CliResult cut = Run("perturb " + Data("pairs.jsonl") + " --kind truncate --ratio 0.5");
  ASSERT_EQ(cut.code, 0);
  std::istringstream cin(cut.out);
  const Corpus halved = parse_corpus(cin, CorpusFormat::kJsonl);
  for (std::size_t i = 0; i < c.size(); ++i) {
    EXPECT_EQ(halved.records[i].candidates.at(0).length(), (c.records[i].source.length() + 1) / 2);
  }

  const std::string a = Run("--seed 3 perturb " + Data("pairs.jsonl") + " --kind shuffle").out;
  EXPECT_EQ(Run("perturb " + Data("pairs.jsonl") + " --kind shuffle --seed 3").out, a);
  EXPECT_NE(Run("perturb " + Data("pairs.jsonl") + " --kind shuffle --seed 4").out, a);
  EXPECT_EQ(Run("perturb " + Data("pairs.jsonl") + " --kind rotate").code, 2);
  EXPECT_EQ(Run("perturb " + Data("pairs.jsonl") + " --kind reverse --ratio 0.5").code, 2);
  EXPECT_EQ(Run("perturb " + Data("pairs.jsonl") + " --kind truncate --ratio 0").code, 2);
}

TEST_F(CliTest, Select) {
  const CliResult r3 = Run("select " + Data("candidates.jsonl") + " --w 3");
  ASSERT_EQ(r3.code, 0) << r3.err;
  std::istringstream in(r3.out);
  const Corpus chosen = parse_corpus(in, CorpusFormat::kJsonl);
  for (const auto& r : chosen.records) {
    ASSERT_TRUE(r.selected.has_value());
    EXPECT_NE(r.candidates[*r.selected], r.source);
  }
  const auto summary = nlohmann::json::parse(r3.err);
  EXPECT_EQ(summary["records"], 3);
  EXPECT_EQ(summary["fallbacks"], 0);

  const CliResult r15 = Run("select " + Data("candidates.jsonl") + " --w 1.5");
  ASSERT_EQ(r15.code, 0);
  EXPECT_LT(nlohmann::json::parse(r15.err)["mean_score"].get<double>(), summary["mean_score"].get<double>());
}

TEST_F(CliTest, SelectFallbackAndErrors) {
  Write("parrots.jsonl", R"({"id":"1","source":"a b c","references":["c b a"],"candidates":["a b c","a b c"]})" "\n");
  const CliResult r = Run("select " + Path("parrots.jsonl") + " -o " + Path("out.jsonl"));
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
  EXPECT_EQ(nlohmann::json::parse(r.out)["fallbacks"], 1);
  EXPECT_NE(Read("out.jsonl").find("\"selected\":0"), std::string::npos);

  Write("single.jsonl", R"({"id":"1","source":"a b c","references":["c b a"],"candidates":["b a"]})" "\n");
  const CliResult one = Run("select " + Path("single.jsonl"));
  EXPECT_NE(one.out.find("\"selected\":0"), std::string::npos);

  EXPECT_EQ(Run("select " + Data("pairs.jsonl")).code, 2);
}

TEST_F(CliTest, Sample) {
  const CliResult a = Run("sample " + Data("pairs.jsonl") + " --fraction 0.5 --seed 9");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(Lines(a.out).size(), 6u);
  EXPECT_EQ(Run("sample " + Data("pairs.jsonl") + " --fraction 0.5 --seed 9").out, a.out);
  EXPECT_EQ(Run("sample " + Data("pairs.jsonl") + " --fraction 0").code, 2);
}

TEST_F(CliTest, ConfigFileAndFlagPrecedence) {
  Write("cfg.json", R"({"output_format": "tsv", "workers": 2})");
  const CliResult tsv = Run("--config " + Path("cfg.json") + " evaluate " + Data("pairs.jsonl"));
  ASSERT_EQ(tsv.code, 0) << tsv.err;
  EXPECT_EQ(Lines(tsv.out).size(), 2u);
  const CliResult json = Run("--config " + Path("cfg.json") + " evaluate " + Data("pairs.jsonl") + " --format json");
  EXPECT_EQ(json.out, Run("evaluate " + Data("pairs.jsonl")).out);
  Write("bad.json", R"({"colour": "blue"})");
  EXPECT_EQ(Run("--config " + Path("bad.json") + " evaluate " + Data("pairs.jsonl")).code, 2);
}

TEST_F(CliTest, ContrastAndDiversity) {
  const CliResult con = Run("contrast " + Data("pairs.jsonl") + " --kinds parrot,reverse");
  ASSERT_EQ(con.code, 0) << con.err;
  const auto rows = nlohmann::json::parse(con.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0]["corpus"], "parrot");
  EXPECT_EQ(rows[0]["rouge_p"].get<double>(), 0.0);

  const CliResult div = Run("diversity " + Data("candidates.jsonl"));
  ASSERT_EQ(div.code, 0) << div.err;
  const auto j = nlohmann::json::parse(div.out);
  EXPECT_EQ(j["sample_size"], 3);
  EXPECT_GT(j["vocabulary_diversity"].get<double>(), 0.0);
  EXPECT_LE(j["vocabulary_diversity"].get<double>(), 1.0);
}

}  // namespace
}  // namespace paraeval
