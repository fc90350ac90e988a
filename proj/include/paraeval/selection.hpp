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

// Candidate selection: a weighted harmonic mean of adequacy (source
// unigram recall, R1) and novelty (1 - source ROUGE-L F1, RL),
//
//   score = R1 * (1 - RL) * w / (R1 + (1 - RL) * w)
//
// optionally times a brevity penalty against the source. Larger w favours
// adequacy. Candidates whose RL falls outside [rl_lower, rl_upper) are
// filtered before the argmax.

#ifndef PARAEVAL_SELECTION_HPP_
#define PARAEVAL_SELECTION_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "paraeval/reference_metrics.hpp"
#include "paraeval/text.hpp"

namespace paraeval {

struct SelectionConfig {
  double w = 3.0;
  double rl_lower = 0.0;
  // Exclusive, so the default window rejects exact parrots (RL = 1).
  double rl_upper = 1.0;
  bool apply_length_penalty = true;

  void validate() const {
    if (!(w > 0.0)) throw std::invalid_argument("selection: w must be > 0");
    if (!(rl_lower >= 0.0 && rl_upper <= 1.0 && rl_lower <= rl_upper)) {
      throw std::invalid_argument("selection: need 0 <= rl_lower <= rl_upper <= 1");
    }
  }
};

struct SelectionResult {
  std::size_t chosen_index = 0;
  std::vector<double> scores;
  std::vector<bool> filtered;
  // True when every candidate was filtered and the raw maximum was taken.
  bool fell_back = false;
};

// The harmonic-mean term on precomputed R1 and RL.
inline double selection_score_from(double r1, double rl, double w) {
  const double novelty = (1.0 - rl) * w;
  const double denom = r1 + novelty;
  if (denom <= 0.0) return 0.0;
  return r1 * novelty / denom;
}

// BLEU-style: penalizes candidates shorter than the source.
inline double selection_length_penalty(std::size_t cand_len, std::size_t src_len) {
  return std::min(1.0, std::exp(1.0 - static_cast<double>(src_len) / static_cast<double>(cand_len)));
}

inline double selection_score(const Sentence& cand, const Sentence& src, const SelectionConfig& cfg = {}) {
  if (src.empty()) throw std::invalid_argument("selection_score: empty source");
  if (cand.empty()) return 0.0;
  const double r1 = rouge_n(cand, src, 1);
  const double rl = f_lcs(lcs_length(cand, src), cand.length(), src.length());
  double score = selection_score_from(r1, rl, cfg.w);
  if (cfg.apply_length_penalty) score *= selection_length_penalty(cand.length(), src.length());
  return score;
}

inline SelectionResult select_best(std::span<const Sentence> candidates, const Sentence& src,
                                   const SelectionConfig& cfg = {}) {
  cfg.validate();
  if (candidates.empty()) throw std::invalid_argument("select_best: no candidates");
  if (src.empty()) throw std::invalid_argument("select_best: empty source");
  SelectionResult out;
  out.scores.reserve(candidates.size());
  out.filtered.reserve(candidates.size());
  for (const Sentence& cand : candidates) {
    out.scores.push_back(selection_score(cand, src, cfg));
    const double rl = f_lcs(lcs_length(cand, src), cand.length(), src.length());
    out.filtered.push_back(rl < cfg.rl_lower || rl >= cfg.rl_upper);
  }
  out.fell_back = std::all_of(out.filtered.begin(), out.filtered.end(), [](bool f) { return f; });
  bool found = false;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!out.fell_back && out.filtered[i]) continue;
    if (!found || out.scores[i] > out.scores[out.chosen_index]) {
      out.chosen_index = i;
      found = true;
    }
  }
  return out;
}

}  // namespace paraeval

#endif  // PARAEVAL_SELECTION_HPP_
