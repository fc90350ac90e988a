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

#include "paraeval/rouge_p.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace paraeval {
namespace {

Sentence S(std::initializer_list<std::string> t) { return Sentence(t); }

ParaphraseRecord Rec(std::string id, Sentence src, std::vector<Sentence> refs) {
  ParaphraseRecord r;
  r.id = std::move(id);
  r.source = std::move(src);
  r.references = std::move(refs);
  return r;
}

Sentence Doubled(const Sentence& s) { return concat(s, s); }

TEST(RougePFactorsTest, NoveltyFactor) {
  EXPECT_DOUBLE_EQ(novelty_factor(0.3, 0.66), 1.0);
  EXPECT_DOUBLE_EQ(novelty_factor(0.66, 0.66), 1.0);
  EXPECT_DOUBLE_EQ(novelty_factor(1.0, 0.66), 0.0);
  EXPECT_NEAR(novelty_factor(0.66 + 0.1 * 0.34, 0.66), 0.99, 1e-12);
}

TEST(RougePFactorsTest, FluencyFactor) {
  EXPECT_DOUBLE_EQ(fluency_factor(0.9, 0.66), 1.0);
  EXPECT_DOUBLE_EQ(fluency_factor(0.0, 0.66), 0.0);
  EXPECT_NEAR(fluency_factor(0.33, 0.66), 0.9921875, 1e-12);
}

TEST(RougePFactorsTest, LengthPenalty) {
  EXPECT_DOUBLE_EQ(length_penalty(6, 6), 1.0);
  EXPECT_DOUBLE_EQ(length_penalty(3, 6), 1.0);
  EXPECT_NEAR(length_penalty(8, 6), 0.7165313105737893, 1e-15);
  EXPECT_THROW(length_penalty(3, 0), std::invalid_argument);
}

TEST(RougePSentenceTest, WorkedExample) {
  const Sentence src = S({"the", "cat", "sat", "on", "the", "mat"});
  const Sentence gen = S({"a", "cat", "rested", "on", "a", "rug"});
  const RougePBreakdown bd = rouge_p_sentence(gen, src, Benchmark::of(0.66));
  EXPECT_NEAR(bd.src_rouge_1, 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(bd.src_rouge_l, 1.0 / 3.0, 1e-15);
  EXPECT_DOUBLE_EQ(bd.nf, 1.0);
  // 1 - ((0.66 - 1/3) / 0.66)^7, evaluated independently.
  EXPECT_NEAR(bd.ff, 0.9927234386046859, 1e-12);
  EXPECT_DOUBLE_EQ(bd.lenpen, 1.0);
  EXPECT_NEAR(bd.score, 0.3309078128682286, 1e-12);
}

TEST(RougePSentenceTest, ParrotAndEmptyGeneration) {
  const Sentence src = S({"a", "b", "c"});
  const RougePBreakdown parrot = rouge_p_sentence(src, src, Benchmark::of(0.4));
  EXPECT_EQ(parrot.score, 0.0);
  EXPECT_EQ(parrot.nf, 0.0);
  EXPECT_EQ(parrot.lenpen, 1.0);
  EXPECT_EQ(rouge_p_sentence(Sentence(), src, Benchmark::of(0.4)).score, 0.0);
  EXPECT_THROW(rouge_p_sentence(src, Sentence(), Benchmark::of(0.4)), std::invalid_argument);
}

TEST(RougePSentenceTest, AtBenchmarkOnlyAdequacyAndLengthCount) {
  // LCS 2 of lengths 4 and 4 gives F = 0.5.
  const Sentence src = S({"a", "b", "c", "d"});
  const Sentence gen = S({"a", "x", "b", "y"});
  const RougePBreakdown bd = rouge_p_sentence(gen, src, Benchmark::of(0.5));
  EXPECT_DOUBLE_EQ(bd.src_rouge_l, 0.5);
  EXPECT_DOUBLE_EQ(bd.score, bd.src_rouge_1 * bd.lenpen);
}

TEST(BenchmarkTest, MicroAndMacro) {
  Corpus c;
  c.records.push_back(Rec("1", S({"a", "b", "c", "d"}), {S({"a", "b", "x", "y"})}));
  c.records.push_back(Rec("2", S({"a", "b"}), {S({"a", "b", "c", "d", "e", "f", "g", "h"})}));
  const Benchmark micro = compute_benchmark(c);
  // Pooled LCS 4, reference tokens 12, source tokens 6.
  EXPECT_NEAR(micro.bench_rouge_l, 4.0 / 9.0, 1e-15);
  EXPECT_EQ(micro.pair_count, 2u);
  EXPECT_EQ(micro.mode, BenchmarkMode::kMicro);
  const Benchmark macro = compute_benchmark(c, BenchmarkMode::kMacro);
  EXPECT_NEAR(macro.bench_rouge_l, (0.5 + 0.4) / 2.0, 1e-15);
  EXPECT_EQ(micro.corpus_id, macro.corpus_id);
}

TEST(BenchmarkTest, DegenerateCorporaAreRejected) {
  Corpus parrots;
  parrots.records.push_back(Rec("1", S({"a", "b"}), {S({"a", "b"})}));
  EXPECT_THROW(compute_benchmark(parrots), DegenerateCorpusError);
  EXPECT_THROW(compute_benchmark(parrots, BenchmarkMode::kMacro), DegenerateCorpusError);
  Corpus disjoint;
  disjoint.records.push_back(Rec("1", S({"a", "b"}), {S({"x", "y"})}));
  EXPECT_THROW(compute_benchmark(disjoint), DegenerateCorpusError);
  EXPECT_THROW(compute_benchmark(Corpus{}), InputError);
  EXPECT_THROW(Benchmark::of(0.0), DegenerateCorpusError);
  EXPECT_THROW(Benchmark::of(1.0), DegenerateCorpusError);
}

TEST(BenchmarkTest, InvariantUnderRecordPermutation) {
  std::mt19937 rng(8);
  Corpus c;
  for (int i = 0; i < 60; ++i) {
    c.records.push_back(Rec("r" + std::to_string(i), oracle::random_sentence(rng, 2, 12, 8),
                            {oracle::random_sentence(rng, 2, 12, 8), oracle::random_sentence(rng, 2, 12, 8)}));
  }
  const Benchmark a = compute_benchmark(c, BenchmarkMode::kMacro);
  const Benchmark m = compute_benchmark(c);
  std::shuffle(c.records.begin(), c.records.end(), rng);
  EXPECT_EQ(compute_benchmark(c, BenchmarkMode::kMacro).bench_rouge_l, a.bench_rouge_l);
  EXPECT_EQ(compute_benchmark(c).bench_rouge_l, m.bench_rouge_l);
  EXPECT_EQ(compute_benchmark(c).corpus_id, m.corpus_id);
}

TEST(BenchmarkTest, JsonRoundTrip) {
  Benchmark b = Benchmark::of(0.625);
  b.corpus_id = "fnv1a64:0000000000000001";
  b.pair_count = 7;
  b.mode = BenchmarkMode::kMacro;
  const Benchmark back = benchmark_from_json(nlohmann::json::parse(benchmark_to_json(b).dump()));
  EXPECT_EQ(back.bench_rouge_l, b.bench_rouge_l);
  EXPECT_EQ(back.mode, b.mode);
  EXPECT_EQ(back.corpus_id, b.corpus_id);
  EXPECT_EQ(back.pair_count, b.pair_count);

  EXPECT_THROW(benchmark_from_json(nlohmann::json::parse("{}")), InputError);
  EXPECT_THROW(benchmark_from_json(nlohmann::json::parse(R"({"bench_rouge_l":"x"})")), InputError);
  EXPECT_THROW(benchmark_from_json(nlohmann::json::parse(R"({"bench_rouge_l":0.5,"mode":"mean"})")), InputError);
  EXPECT_THROW(benchmark_from_json(nlohmann::json::parse(R"({"bench_rouge_l":1.0})")), DegenerateCorpusError);
}

TEST(RougePCorpusTest, MeanOfSentences) {
  Corpus c;
  c.records.push_back(Rec("1", S({"the", "cat", "sat", "on", "the", "mat"}), {S({"x"})}));
  c.records[0].candidates = {S({"a", "cat", "rested", "on", "a", "rug"})};
  const Benchmark bench = Benchmark::of(0.66);
  EXPECT_EQ(rouge_p_corpus(c, bench), rouge_p_sentence(c.records[0].candidates[0], c.records[0].source, bench).score);

  Corpus parrots;
  for (int i = 0; i < 5; ++i) {
    parrots.records.push_back(Rec(std::to_string(i), S({"a", "b", "c"}), {S({"c"})}));
    parrots.records.back().candidates = {parrots.records.back().source};
  }
  EXPECT_EQ(rouge_p_corpus(parrots, bench), 0.0);
  EXPECT_THROW(rouge_p_corpus(Corpus{}, bench), InputError);
}

TEST(RougePConfigTest, Validation) {
  RougePConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.beta = 0.0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.gamma = -1.0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(RougePProperties, FactorsAndBounds) {
  std::mt19937 rng(12);
  std::uniform_real_distribution<double> unit(0.01, 0.99);
  for (int trial = 0; trial < 2000; ++trial) {
    const Benchmark bench = Benchmark::of(unit(rng));
    const Sentence src = oracle::random_sentence(rng, 1, 12, 6);
    const Sentence gen = oracle::random_sentence(rng, 0, 14, 6);
    const RougePBreakdown bd = rouge_p_sentence(gen, src, bench);
    EXPECT_EQ(bd.score, bd.src_rouge_1 * bd.nf * bd.ff * bd.lenpen);
    EXPECT_GE(bd.score, 0.0);
    EXPECT_LE(bd.score, 1.0);
    EXPECT_LE(bd.score, bd.src_rouge_1);
    EXPECT_FALSE(bd.nf < 1.0 && bd.ff < 1.0);
    EXPECT_EQ(rouge_p_sentence(src, src, bench).score, 0.0);

    const double a = unit(rng), b = unit(rng);
    const double lo = std::min(a, b), hi = std::max(a, b);
    EXPECT_GE(novelty_factor(lo, bench), novelty_factor(hi, bench));
    EXPECT_LE(fluency_factor(lo, bench), fluency_factor(hi, bench));
  }
}

// With pairwise-distinct source tokens, self-concatenation keeps the
// clipped recall and can only lower the length penalty.
TEST(RougePProperties, DoublingNeverRaisesAdequacyTimesLength) {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 1000; ++trial) {
    const Sentence src = oracle::distinct_sentence(rng, 1, 16);
    Sentence gen = oracle::random_sentence(rng, 1, 16, 4);
    for (auto& t : gen.tokens) t = src[std::stoul(t.substr(1)) % src.length()];
    const Benchmark bench = Benchmark::of(0.5);
    const RougePBreakdown one = rouge_p_sentence(gen, src, bench);
    const RougePBreakdown two = rouge_p_sentence(Doubled(gen), src, bench);
    EXPECT_EQ(two.src_rouge_1, one.src_rouge_1);
    EXPECT_LE(two.lenpen, one.lenpen);
    EXPECT_LE(two.src_rouge_1 * two.lenpen, one.src_rouge_1 * one.lenpen);
  }
}

// Doubling can raise srcROUGE-L and so relax the fluency or novelty
// factor by more than the length penalty costs.
TEST(RougePProperties, DoublingCanRaiseFullScore) {
  const Benchmark bench = Benchmark::of(0.5);
  const Sentence src = S({"a", "b", "c", "d", "e", "f", "g", "h"});
  const Sentence gen = S({"b", "a"});
  EXPECT_GT(rouge_p_sentence(Doubled(gen), src, bench).score, rouge_p_sentence(gen, src, bench).score);

  const Sentence abc = S({"a", "b", "c"});
  EXPECT_EQ(rouge_p_sentence(abc, abc, bench).score, 0.0);
  EXPECT_GT(rouge_p_sentence(Doubled(abc), abc, bench).score, 0.0);
}

}  // namespace
}  // namespace paraeval
