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

// Corpus-level evaluation rows.
//
// Two targets:
//   references  - each reference stands in for a generation of its source.
//                 Source-side metrics (srcROUGE-1, srcROUGE-L, PINC, ROUGE-P)
//                 are averaged over every (source, reference) pair; BLEU, TER
//                 and the max-rule reference metrics score the source against
//                 its references.
//   candidates  - each record's selected candidate is the generation.
//                 Source-side metrics compare it with the source; BLEU, TER
//                 and the reference metrics compare it with the references.
//
// Records are scored in parallel and reduced in id order, so a report is
// bit-identical for any worker count and any record order.

#ifndef PARAEVAL_EVALUATION_HPP_
#define PARAEVAL_EVALUATION_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "paraeval/errors.hpp"
#include "paraeval/parallel.hpp"
#include "paraeval/record.hpp"
#include "paraeval/reference_metrics.hpp"
#include "paraeval/rouge_p.hpp"
#include "paraeval/ter.hpp"

namespace paraeval {

enum class EvaluationTarget { kReferences, kCandidates };

inline const char* to_string(EvaluationTarget t) {
  return t == EvaluationTarget::kReferences ? "references" : "candidates";
}

struct MetricConfigs {
  RougePConfig rouge_p;
  PincConfig pinc;
  MeteorConfig meteor;
  TerConfig ter;
};

struct EvaluationReport {
  std::string corpus;
  EvaluationTarget target = EvaluationTarget::kReferences;
  std::size_t record_count = 0;
  std::size_t pair_count = 0;
  // Table columns.
  double bleu = 0.0;
  double ter = 0.0;
  double src_rouge_1 = 0.0;
  double src_rouge_l = 0.0;
  double std_src_rouge_l = 0.0;
  double pinc = 0.0;
  double rouge_p = 0.0;
  // Max-over-references adequacy metrics, averaged per record.
  double ref_rouge_1 = 0.0;
  double ref_rouge_2 = 0.0;
  double ref_rouge_l = 0.0;
  double meteor = 0.0;
  Benchmark benchmark;
};

// Population standard deviation (divide by n). Exactly 0 when all values
// are equal.
inline double std_src_rouge_l(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("std_src_rouge_l: no values");
  bool all_equal = true;
  for (double v : values) all_equal = all_equal && v == values.front();
  if (all_equal) return 0.0;
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / static_cast<double>(values.size()));
}

// Candidates when every record has a generation, otherwise references.
inline EvaluationTarget resolve_target(const Corpus& corpus) {
  for (const auto& r : corpus.records) {
    if (!r.selected && r.candidates.size() != 1) return EvaluationTarget::kReferences;
  }
  return corpus.empty() ? EvaluationTarget::kReferences : EvaluationTarget::kCandidates;
}

inline void check_benchmark_matches(const Benchmark& bench, const Corpus& corpus) {
  const std::string id = corpus_fingerprint(corpus);
  if (bench.corpus_id != id) {
    throw BenchmarkMismatchError("benchmark corpus_id '" + bench.corpus_id + "' does not match corpus '" + id +
                                 "'");
  }
}

namespace evaluation_internal {

struct PairScores {
  double src_rouge_1;
  double src_rouge_l;
  double rouge_p;
  double pinc;
};

struct RecordScores {
  std::vector<PairScores> pairs;
  BleuStats bleu;
  TerStats ter;
  double ref_rouge_1 = 0.0;
  double ref_rouge_2 = 0.0;
  double ref_rouge_l = 0.0;
  double meteor = 0.0;
};

inline PairScores score_pair(const Sentence& gen, const ParaphraseRecord& r, const Benchmark& bench,
                             const MetricConfigs& cfg) {
  if (gen.empty()) throw InputError("record '" + r.id + "' has an empty generation");
  const RougePBreakdown bd = rouge_p_sentence(gen, r.source, bench, cfg.rouge_p);
  return {bd.src_rouge_1, bd.src_rouge_l, bd.score, pinc(r.source, gen, cfg.pinc)};
}

inline RecordScores score_record(const ParaphraseRecord& r, const Benchmark& bench, const MetricConfigs& cfg,
                                 EvaluationTarget target) {
  if (r.source.empty()) throw InputError("record '" + r.id + "' has an empty source");
  if (r.references.empty()) throw InputError("record '" + r.id + "' has no references");
  RecordScores out;
  const Sentence* hyp = &r.source;
  if (target == EvaluationTarget::kReferences) {
    for (const Sentence& ref : r.references) out.pairs.push_back(score_pair(ref, r, bench, cfg));
  } else {
    hyp = &generation_of(r);
    out.pairs.push_back(score_pair(*hyp, r, bench, cfg));
  }
  out.bleu = bleu_stats(*hyp, r.references);
  try {
    out.ter = ter_stats(*hyp, r.references, cfg.ter);
  } catch (const std::invalid_argument& e) {
    throw InputError("record '" + r.id + "': " + e.what());
  }
  out.ref_rouge_1 = rouge_n(*hyp, r.references, 1);
  out.ref_rouge_2 = rouge_n(*hyp, r.references, 2);
  out.ref_rouge_l = rouge_l(*hyp, r.references);
  out.meteor = meteor_lite(*hyp, r.references, cfg.meteor);
  return out;
}

}  // namespace evaluation_internal

inline EvaluationReport evaluate_pairs(const Corpus& corpus, const Benchmark& bench, const MetricConfigs& cfg = {},
                                       EvaluationTarget target = EvaluationTarget::kReferences,
                                       std::size_t workers = 1) {
  if (corpus.empty()) throw InputError("evaluate: empty corpus");
  bench.validate();
  cfg.rouge_p.validate();
  cfg.pinc.validate();
  cfg.meteor.validate();

  const std::vector<std::size_t> order = id_order(corpus);
  std::vector<evaluation_internal::RecordScores> scores(order.size());
  parallel_for(order.size(), workers, [&](std::size_t k) {
    scores[k] = evaluation_internal::score_record(corpus.records[order[k]], bench, cfg, target);
  });

  EvaluationReport rep;
  rep.corpus = corpus.name;
  rep.target = target;
  rep.record_count = corpus.size();
  rep.benchmark = bench;
  BleuStats bleu;
  TerStats ter_pool;
  std::vector<double> src_rl;
  double r1_sum = 0.0, rl_sum = 0.0, rp_sum = 0.0, pinc_sum = 0.0;
  for (const auto& s : scores) {
    for (const auto& p : s.pairs) {
      r1_sum += p.src_rouge_1;
      rl_sum += p.src_rouge_l;
      rp_sum += p.rouge_p;
      pinc_sum += p.pinc;
      src_rl.push_back(p.src_rouge_l);
    }
    bleu += s.bleu;
    ter_pool += s.ter;
    rep.ref_rouge_1 += s.ref_rouge_1;
    rep.ref_rouge_2 += s.ref_rouge_2;
    rep.ref_rouge_l += s.ref_rouge_l;
    rep.meteor += s.meteor;
  }
  const auto pairs = static_cast<double>(src_rl.size());
  const auto records = static_cast<double>(scores.size());
  rep.pair_count = src_rl.size();
  rep.src_rouge_1 = r1_sum / pairs;
  rep.src_rouge_l = rl_sum / pairs;
  rep.rouge_p = rp_sum / pairs;
  rep.pinc = pinc_sum / pairs;
  rep.std_src_rouge_l = std_src_rouge_l(src_rl);
  rep.ref_rouge_1 /= records;
  rep.ref_rouge_2 /= records;
  rep.ref_rouge_l /= records;
  rep.meteor /= records;
  rep.bleu = bleu_score(bleu);
  rep.ter = ter_corpus(ter_pool);
  return rep;
}

inline nlohmann::ordered_json report_to_json(const EvaluationReport& r) {
  nlohmann::ordered_json j;
  j["corpus"] = r.corpus;
  j["target"] = to_string(r.target);
  j["record_count"] = r.record_count;
  j["pair_count"] = r.pair_count;
  j["bleu"] = r.bleu;
  j["ter"] = r.ter;
  j["src_rouge_1"] = r.src_rouge_1;
  j["src_rouge_l"] = r.src_rouge_l;
  j["std_src_rouge_l"] = r.std_src_rouge_l;
  j["pinc"] = r.pinc;
  j["rouge_p"] = r.rouge_p;
  j["ref_rouge_1"] = r.ref_rouge_1;
  j["ref_rouge_2"] = r.ref_rouge_2;
  j["ref_rouge_l"] = r.ref_rouge_l;
  j["meteor"] = r.meteor;
  j["std_convention"] = "population";
  j["benchmark"] = benchmark_to_json(r.benchmark);
  return j;
}

namespace evaluation_internal {

inline std::vector<std::string> row_cells(const EvaluationReport& r) {
  auto fmt = [](double v, int prec) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", prec, v);
    return std::string(buf);
  };
  return {r.corpus,           fmt(r.bleu, 2),           fmt(r.ter, 2),  fmt(r.src_rouge_1, 4),
          fmt(r.src_rouge_l, 4), fmt(r.std_src_rouge_l, 4), fmt(r.pinc, 4), fmt(r.rouge_p, 4)};
}

inline const std::vector<std::string>& header_cells() {
  static const std::vector<std::string> h = {"corpus", "BLEU", "TER",  "srcROUGE1",
                                             "srcROUGEL", "std", "PINC", "ROUGEP"};
  return h;
}

}  // namespace evaluation_internal

// Aligned columns in the order BLEU, TER, srcROUGE1, srcROUGEL, std, PINC,
// ROUGEP, after a comment line naming the std convention and benchmark.
inline std::string format_table(std::span<const EvaluationReport> rows) {
  std::vector<std::vector<std::string>> cells{evaluation_internal::header_cells()};
  for (const auto& r : rows) cells.push_back(evaluation_internal::row_cells(r));
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  os << "# std = population standard deviation of per-pair srcROUGE-L";
  if (!rows.empty()) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "; benchROUGE-L = %.4f (%s)", rows.front().benchmark.bench_rouge_l,
                  to_string(rows.front().benchmark.mode));
    os << buf;
  }
  os << '\n';
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c == 0) {
        os << row[c] << std::string(width[c] - row[c].size(), ' ');
      } else {
        os << "  " << std::string(width[c] - row[c].size(), ' ') << row[c];
      }
    }
    os << '\n';
  }
  return os.str();
}

inline std::string format_tsv(std::span<const EvaluationReport> rows) {
  std::ostringstream os;
  auto line = [&os](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) os << (c ? "\t" : "") << cells[c];
    os << '\n';
  };
  line(evaluation_internal::header_cells());
  for (const auto& r : rows) line(evaluation_internal::row_cells(r));
  return os.str();
}

}  // namespace paraeval

#endif  // PARAEVAL_EVALUATION_HPP_
