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

// ROUGE-P: a paraphrase score that multiplies adequacy (source unigram
// recall) by the penalty factors below.
//
//   nf     = 1 - (max(srcRL - bench, 0) / (1 - bench))^beta
//   ff     = 1 - (max(bench - srcRL, 0) / bench)^gamma
//   lenpen = min(1, exp(1 - len(gen) / len(src)))
//   score  = srcR1 * nf * ff * lenpen
//
// `bench` is the corpus-level ROUGE-L between sources and references, the
// natural similarity level of the dataset. nf only acts above it and ff only
// below it. With beta = 2 an excess of a tenth of the remaining range costs
// 1%; with gamma = 7 dropping to half the benchmark costs 1/128.

#ifndef PARAEVAL_ROUGE_P_HPP_
#define PARAEVAL_ROUGE_P_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "paraeval/errors.hpp"
#include "paraeval/record.hpp"
#include "paraeval/reference_metrics.hpp"
#include "paraeval/text.hpp"

namespace paraeval {

struct RougePConfig {
  double beta = 2.0;
  double gamma = 7.0;

  void validate() const {
    if (!(beta > 0.0)) throw std::invalid_argument("rouge_p: beta must be > 0");
    if (!(gamma > 0.0)) throw std::invalid_argument("rouge_p: gamma must be > 0");
  }
};

enum class BenchmarkMode { kMicro, kMacro };

inline const char* to_string(BenchmarkMode m) { return m == BenchmarkMode::kMicro ? "micro" : "macro"; }

inline BenchmarkMode parse_benchmark_mode(const std::string& s) {
  if (s == "micro") return BenchmarkMode::kMicro;
  if (s == "macro") return BenchmarkMode::kMacro;
  throw std::invalid_argument("unknown benchmark mode '" + s + "'");
}

struct Benchmark {
  double bench_rouge_l = 0.0;
  BenchmarkMode mode = BenchmarkMode::kMicro;
  std::string corpus_id;
  std::size_t pair_count = 0;

  void validate() const {
    if (!(bench_rouge_l > 0.0 && bench_rouge_l < 1.0)) {
      throw DegenerateCorpusError("benchmark ROUGE-L must lie strictly inside (0, 1), got " +
                                  std::to_string(bench_rouge_l));
    }
  }

  // Benchmark with no provenance, for scoring against a known value.
  static Benchmark of(double value) {
    Benchmark b;
    b.bench_rouge_l = value;
    b.validate();
    return b;
  }
};

struct RougePBreakdown {
  double src_rouge_1 = 0.0;
  double src_rouge_l = 0.0;
  double nf = 1.0;
  double ff = 1.0;
  double lenpen = 1.0;
  double score = 0.0;
};

// Micro mode pools LCS lengths and sentence lengths over every
// (source, reference) pair before forming recall, precision and F1; macro
// mode averages per-pair F1. Both use the id order for reduction.
inline Benchmark compute_benchmark(const Corpus& corpus, BenchmarkMode mode = BenchmarkMode::kMicro) {
  if (corpus.empty()) throw InputError("compute_benchmark: empty corpus");
  double lcs_sum = 0.0, src_sum = 0.0, ref_sum = 0.0, f_sum = 0.0;
  std::size_t pairs = 0;
  for (std::size_t idx : id_order(corpus)) {
    const auto& r = corpus.records[idx];
    if (r.references.empty()) throw InputError("record '" + r.id + "' has no references");
    for (const Sentence& ref : r.references) {
      const std::size_t lcs = lcs_length(r.source, ref);
      lcs_sum += static_cast<double>(lcs);
      src_sum += static_cast<double>(r.source.length());
      ref_sum += static_cast<double>(ref.length());
      f_sum += f_lcs(lcs, r.source.length(), ref.length());
      ++pairs;
    }
  }
  Benchmark b;
  b.mode = mode;
  b.pair_count = pairs;
  b.corpus_id = corpus_fingerprint(corpus);
  if (mode == BenchmarkMode::kMicro) {
    if (lcs_sum > 0.0) {
      const double recall = lcs_sum / ref_sum;
      const double precision = lcs_sum / src_sum;
      b.bench_rouge_l = 2.0 * recall * precision / (recall + precision);
    }
  } else {
    b.bench_rouge_l = f_sum / static_cast<double>(pairs);
  }
  b.validate();
  return b;
}

inline double novelty_factor(double src_rl, double bench, const RougePConfig& cfg = {}) {
  const double excess = std::max(src_rl - bench, 0.0);
  return 1.0 - std::pow(excess / (1.0 - bench), cfg.beta);
}

inline double novelty_factor(double src_rl, const Benchmark& bench, const RougePConfig& cfg = {}) {
  return novelty_factor(src_rl, bench.bench_rouge_l, cfg);
}

inline double fluency_factor(double src_rl, double bench, const RougePConfig& cfg = {}) {
  const double deficit = std::max(bench - src_rl, 0.0);
  return 1.0 - std::pow(deficit / bench, cfg.gamma);
}

inline double fluency_factor(double src_rl, const Benchmark& bench, const RougePConfig& cfg = {}) {
  return fluency_factor(src_rl, bench.bench_rouge_l, cfg);
}

// Penalizes generations longer than the source.
inline double length_penalty(std::size_t gen_len, std::size_t src_len) {
  if (src_len == 0) throw std::invalid_argument("length_penalty: empty source");
  return std::min(1.0, std::exp(1.0 - static_cast<double>(gen_len) / static_cast<double>(src_len)));
}

inline RougePBreakdown rouge_p_sentence(const Sentence& gen, const Sentence& src, const Benchmark& bench,
                                        const RougePConfig& cfg = {}) {
  if (src.empty()) throw std::invalid_argument("rouge_p_sentence: empty source");
  RougePBreakdown out;
  out.src_rouge_1 = rouge_n(gen, src, 1);
  out.src_rouge_l = f_lcs(lcs_length(gen, src), gen.length(), src.length());
  out.nf = novelty_factor(out.src_rouge_l, bench, cfg);
  out.ff = fluency_factor(out.src_rouge_l, bench, cfg);
  out.lenpen = length_penalty(gen.length(), src.length());
  out.score = out.src_rouge_1 * out.nf * out.ff * out.lenpen;
  return out;
}

// Mean sentence score of each record's generation, summed in id order.
inline double rouge_p_corpus(const Corpus& corpus, const Benchmark& bench, const RougePConfig& cfg = {}) {
  if (corpus.empty()) throw InputError("rouge_p_corpus: empty corpus");
  double sum = 0.0;
  for (std::size_t idx : id_order(corpus)) {
    const auto& r = corpus.records[idx];
    sum += rouge_p_sentence(generation_of(r), r.source, bench, cfg).score;
  }
  return sum / static_cast<double>(corpus.size());
}

inline nlohmann::ordered_json benchmark_to_json(const Benchmark& b) {
  nlohmann::ordered_json j;
  j["bench_rouge_l"] = b.bench_rouge_l;
  j["mode"] = to_string(b.mode);
  j["corpus_id"] = b.corpus_id;
  j["pair_count"] = b.pair_count;
  return j;
}

inline Benchmark benchmark_from_json(const nlohmann::json& j) {
  Benchmark b;
  try {
    b.bench_rouge_l = j.at("bench_rouge_l").get<double>();
    b.mode = parse_benchmark_mode(j.value("mode", std::string("micro")));
    b.corpus_id = j.value("corpus_id", std::string());
    b.pair_count = j.value("pair_count", std::size_t{0});
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed benchmark: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("malformed benchmark: ") + e.what());
  }
  b.validate();
  return b;
}

}  // namespace paraeval

#endif  // PARAEVAL_ROUGE_P_HPP_
