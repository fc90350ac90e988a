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

// Baseline metric suite: ROUGE-N, ROUGE-L, corpus BLEU, PINC and a
// METEOR variant restricted to exact and Porter-stem matching.
//
// Scales: ROUGE, PINC and METEOR are in [0, 1]; BLEU is in [0, 100].
// Multi-reference ROUGE and METEOR take the maximum over references.

#ifndef PARAEVAL_REFERENCE_METRICS_HPP_
#define PARAEVAL_REFERENCE_METRICS_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "paraeval/porter_stemmer.hpp"
#include "paraeval/text.hpp"

namespace paraeval {

struct RougeLConfig {
  double f_beta = 1.0;

  void validate() const {
    if (!(f_beta > 0.0)) throw std::invalid_argument("rouge_l: f_beta must be > 0");
  }
};

enum class EmptyOrderMode { kSkip, kZero };

struct PincConfig {
  std::size_t max_n = 4;
  EmptyOrderMode empty_order_mode = EmptyOrderMode::kSkip;

  void validate() const {
    if (max_n < 1) throw std::invalid_argument("pinc: max_n must be >= 1");
  }
};

enum class MeteorStage { kExact, kStem };

struct MeteorConfig {
  double alpha = 0.9;
  double pen_weight = 0.5;
  double pen_exp = 3.0;
  std::vector<MeteorStage> stages{MeteorStage::kExact, MeteorStage::kStem};

  void validate() const {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("meteor: alpha must be in (0,1)");
    if (!(pen_weight >= 0.0 && pen_weight <= 1.0)) {
      throw std::invalid_argument("meteor: pen_weight must be in [0,1]");
    }
  }
};

namespace detail {

inline void require_refs(std::span<const Sentence> refs, const char* who) {
  if (refs.empty()) throw std::invalid_argument(std::string(who) + ": at least one reference required");
}

// Clipped n-gram matches of `cand` against a single reference, and the
// reference n-gram count.
inline std::pair<std::size_t, std::size_t> ngram_overlap(const Sentence& cand, const Sentence& ref,
                                                         std::size_t n) {
  const NGramMultiset ref_grams = ngrams(ref, n);
  const NGramMultiset cand_grams = ngrams(cand, n);
  std::size_t matched = 0;
  for (const auto& [gram, c] : ref_grams.counts) matched += std::min(c, cand_grams.count(gram));
  return {matched, ref_grams.total()};
}

}  // namespace detail

// n-gram recall of a single reference in `cand`, maximized over refs. A
// reference shorter than n scores 0.
inline double rouge_n(const Sentence& cand, std::span<const Sentence> refs, std::size_t n) {
  detail::require_refs(refs, "rouge_n");
  if (n < 1) throw std::invalid_argument("rouge_n: order must be >= 1");
  double best = 0.0;
  for (const Sentence& ref : refs) {
    const auto [matched, total] = detail::ngram_overlap(cand, ref, n);
    if (total == 0) continue;
    best = std::max(best, static_cast<double>(matched) / static_cast<double>(total));
  }
  return best;
}

inline double rouge_n(const Sentence& cand, const Sentence& ref, std::size_t n) {
  return rouge_n(cand, std::span<const Sentence>(&ref, 1), n);
}

// F_LCS = (1 + b^2) R P / (R + b^2 P) with R = lcs/len(ref), P = lcs/len(cand).
inline double f_lcs(std::size_t lcs, std::size_t cand_len, std::size_t ref_len, double f_beta = 1.0) {
  if (lcs == 0 || cand_len == 0 || ref_len == 0) return 0.0;
  const double r = static_cast<double>(lcs) / static_cast<double>(ref_len);
  const double p = static_cast<double>(lcs) / static_cast<double>(cand_len);
  const double b2 = f_beta * f_beta;
  return (1.0 + b2) * r * p / (r + b2 * p);
}

inline double rouge_l(const Sentence& cand, std::span<const Sentence> refs, const RougeLConfig& cfg = {}) {
  detail::require_refs(refs, "rouge_l");
  cfg.validate();
  double best = 0.0;
  for (const Sentence& ref : refs) {
    best = std::max(best, f_lcs(lcs_length(cand, ref), cand.length(), ref.length(), cfg.f_beta));
  }
  return best;
}

inline double rouge_l(const Sentence& cand, const Sentence& ref, const RougeLConfig& cfg = {}) {
  return rouge_l(cand, std::span<const Sentence>(&ref, 1), cfg);
}

// ---------------------------------------------------------------------------
// BLEU

inline constexpr std::size_t kBleuMaxOrder = 4;

// Sufficient statistics for corpus BLEU. Integer counts, so pooling in any
// order is exact.
struct BleuStats {
  std::array<std::uint64_t, kBleuMaxOrder> matches{};
  std::array<std::uint64_t, kBleuMaxOrder> totals{};
  std::uint64_t gen_length = 0;
  std::uint64_t ref_length = 0;

  BleuStats& operator+=(const BleuStats& o) {
    for (std::size_t i = 0; i < kBleuMaxOrder; ++i) {
      matches[i] += o.matches[i];
      totals[i] += o.totals[i];
    }
    gen_length += o.gen_length;
    ref_length += o.ref_length;
    return *this;
  }
  friend bool operator==(const BleuStats&, const BleuStats&) = default;
};

// Counts are clipped at the maximum count of each n-gram in any single
// reference; the reference length is the one closest to the candidate
// (shorter wins ties).
inline BleuStats bleu_stats(const Sentence& cand, std::span<const Sentence> refs) {
  detail::require_refs(refs, "bleu");
  BleuStats st;
  st.gen_length = cand.length();
  std::size_t best_len = refs.front().length();
  for (const Sentence& ref : refs) {
    const auto d = std::llabs(static_cast<long long>(ref.length()) - static_cast<long long>(cand.length()));
    const auto bd = std::llabs(static_cast<long long>(best_len) - static_cast<long long>(cand.length()));
    if (d < bd || (d == bd && ref.length() < best_len)) best_len = ref.length();
  }
  st.ref_length = best_len;
  for (std::size_t n = 1; n <= kBleuMaxOrder; ++n) {
    const NGramMultiset cand_grams = ngrams(cand, n);
    std::unordered_map<NGram, std::size_t, NGramHash> max_ref;
    for (const Sentence& ref : refs) {
      for (const auto& [gram, c] : ngrams(ref, n).counts) {
        auto& slot = max_ref[gram];
        slot = std::max(slot, c);
      }
    }
    std::uint64_t matched = 0;
    for (const auto& [gram, c] : cand_grams.counts) {
      auto it = max_ref.find(gram);
      if (it != max_ref.end()) matched += std::min(c, it->second);
    }
    st.matches[n - 1] = matched;
    st.totals[n - 1] = cand_grams.total();
  }
  return st;
}

// Unsmoothed: any zero (or undefined) pooled precision makes the score 0.
inline double bleu_score(const BleuStats& st) {
  double log_sum = 0.0;
  for (std::size_t i = 0; i < kBleuMaxOrder; ++i) {
    if (st.totals[i] == 0 || st.matches[i] == 0) return 0.0;
    log_sum += std::log(static_cast<double>(st.matches[i]) / static_cast<double>(st.totals[i]));
  }
  const double bp = std::min(
      1.0, std::exp(1.0 - static_cast<double>(st.ref_length) / static_cast<double>(st.gen_length)));
  return 100.0 * bp * std::exp(log_sum / static_cast<double>(kBleuMaxOrder));
}

// One candidate with its references.
struct BleuSegment {
  const Sentence* candidate;
  std::span<const Sentence> references;
};

inline double bleu_corpus(std::span<const BleuSegment> segments) {
  if (segments.empty()) throw std::invalid_argument("bleu_corpus: empty candidate corpus");
  BleuStats total;
  for (const auto& seg : segments) total += bleu_stats(*seg.candidate, seg.references);
  return bleu_score(total);
}

// Convenience form: cands[i] against refs[i].
inline double bleu_corpus(std::span<const Sentence> cands, std::span<const std::vector<Sentence>> refs) {
  if (cands.size() != refs.size()) throw std::invalid_argument("bleu_corpus: size mismatch");
  std::vector<BleuSegment> segs;
  segs.reserve(cands.size());
  for (std::size_t i = 0; i < cands.size(); ++i) segs.push_back({&cands[i], refs[i]});
  return bleu_corpus(segs);
}

// ---------------------------------------------------------------------------
// PINC

// Mean over n = 1..max_n of the fraction of the candidate's distinct
// n-grams that do not occur in the source.
inline double pinc(const Sentence& src, const Sentence& cand, const PincConfig& cfg = {}) {
  cfg.validate();
  if (cand.empty()) throw std::invalid_argument("pinc: empty candidate");
  double sum = 0.0;
  std::size_t orders = 0;
  for (std::size_t n = 1; n <= cfg.max_n; ++n) {
    const NGramMultiset cand_grams = ngrams(cand, n);
    if (cand_grams.distinct() == 0) {
      if (cfg.empty_order_mode == EmptyOrderMode::kZero) ++orders;
      continue;
    }
    const NGramMultiset src_grams = ngrams(src, n);
    std::size_t shared = 0;
    for (const auto& [gram, c] : cand_grams.counts) {
      if (src_grams.counts.contains(gram)) ++shared;
    }
    sum += 1.0 - static_cast<double>(shared) / static_cast<double>(cand_grams.distinct());
    ++orders;
  }
  return orders == 0 ? 0.0 : sum / static_cast<double>(orders);
}

// ---------------------------------------------------------------------------
// METEOR (exact + stem stages)

// One-to-one unigram alignment as (candidate position, reference position)
// pairs, sorted by candidate position.
using Alignment = std::vector<std::pair<std::size_t, std::size_t>>;

// Each stage aligns still-unmatched tokens whose stage keys agree. Any
// per-stage greedy pairing is maximum-cardinality for equality matching;
// among the available reference positions, the one that extends the longest
// run of further matches wins, leftmost on ties.
inline Alignment meteor_align(const Sentence& cand, const Sentence& ref, std::span<const MeteorStage> stages) {
  std::vector<long> cand_to_ref(cand.length(), -1);
  std::vector<bool> ref_used(ref.length(), false);
  for (MeteorStage stage : stages) {
    auto key = [stage](const std::string& tok) {
      return stage == MeteorStage::kStem ? porter_stem(tok) : tok;
    };
    std::vector<std::string> ck(cand.length()), rk(ref.length());
    for (std::size_t i = 0; i < cand.length(); ++i) ck[i] = key(cand[i]);
    for (std::size_t j = 0; j < ref.length(); ++j) rk[j] = key(ref[j]);
    for (std::size_t i = 0; i < cand.length(); ++i) {
      if (cand_to_ref[i] >= 0) continue;
      long best = -1;
      std::size_t best_run = 0;
      for (std::size_t j = 0; j < ref.length(); ++j) {
        if (ref_used[j] || rk[j] != ck[i]) continue;
        std::size_t run = 1;
        while (i + run < cand.length() && j + run < ref.length() && cand_to_ref[i + run] < 0 &&
               !ref_used[j + run] && ck[i + run] == rk[j + run]) {
          ++run;
        }
        if (best < 0 || run > best_run) {
          best = static_cast<long>(j);
          best_run = run;
        }
      }
      if (best >= 0) {
        cand_to_ref[i] = best;
        ref_used[static_cast<std::size_t>(best)] = true;
      }
    }
  }
  Alignment out;
  for (std::size_t i = 0; i < cand.length(); ++i) {
    if (cand_to_ref[i] >= 0) out.emplace_back(i, static_cast<std::size_t>(cand_to_ref[i]));
  }
  return out;
}

// Runs of alignment pairs adjacent in both sentences.
inline std::size_t count_chunks(const Alignment& a) {
  std::size_t chunks = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k == 0 || a[k].first != a[k - 1].first + 1 || a[k].second != a[k - 1].second + 1) ++chunks;
  }
  return chunks;
}

inline double meteor_single(const Sentence& cand, const Sentence& ref, const MeteorConfig& cfg) {
  const Alignment a = meteor_align(cand, ref, cfg.stages);
  if (a.empty()) return 0.0;
  const double mapped = static_cast<double>(a.size());
  const double p = mapped / static_cast<double>(cand.length());
  const double r = mapped / static_cast<double>(ref.length());
  const double f_mean = p * r / (cfg.alpha * p + (1.0 - cfg.alpha) * r);
  const double pen = cfg.pen_weight * std::pow(static_cast<double>(count_chunks(a)) / mapped, cfg.pen_exp);
  return (1.0 - pen) * f_mean;
}

inline double meteor_lite(const Sentence& cand, std::span<const Sentence> refs, const MeteorConfig& cfg = {}) {
  detail::require_refs(refs, "meteor_lite");
  cfg.validate();
  double best = 0.0;
  for (const Sentence& ref : refs) best = std::max(best, meteor_single(cand, ref, cfg));
  return best;
}

}  // namespace paraeval

#endif  // PARAEVAL_REFERENCE_METRICS_HPP_
