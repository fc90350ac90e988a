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

// Translation edit rate. Insertions, deletions, substitutions and block
// shifts all cost 1. Optimal shift search is NP-hard, so shifts are found
// by greedy best-improvement search: each round applies the single block
// move that lowers (shifts + edit distance) the most, and stops when no
// move strictly helps. The result is therefore an upper bound on the
// optimal edit count.

#ifndef PARAEVAL_TER_HPP_
#define PARAEVAL_TER_HPP_

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "paraeval/text.hpp"

namespace paraeval {

struct TerConfig {
  bool enable_shifts = true;
  std::size_t max_shift_iterations = 50;
  // Search bounds on a single shift, as in tercom.
  std::size_t max_shift_size = 10;
  std::size_t max_shift_distance = 50;
};

namespace ter_internal {

using Ids = std::vector<int>;

inline std::size_t edit_distance(const Ids& hyp, const Ids& ref, std::vector<std::size_t>& row) {
  row.resize(ref.size() + 1);
  for (std::size_t j = 0; j <= ref.size(); ++j) row[j] = j;
  for (std::size_t i = 0; i < hyp.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i + 1;
    for (std::size_t j = 0; j < ref.size(); ++j) {
      const std::size_t up = row[j + 1];
      const std::size_t sub = diag + (hyp[i] == ref[j] ? 0 : 1);
      row[j + 1] = std::min({sub, up + 1, row[j] + 1});
      diag = up;
    }
  }
  return row[ref.size()];
}

// Marks hypothesis positions that sit on an exact match in one minimum
// edit alignment.
inline std::vector<bool> matched_positions(const Ids& hyp, const Ids& ref) {
  const std::size_t n = hyp.size(), m = ref.size();
  std::vector<std::size_t> d((n + 1) * (m + 1));
  auto at = [&](std::size_t i, std::size_t j) -> std::size_t& { return d[i * (m + 1) + j]; };
  for (std::size_t i = 0; i <= n; ++i) at(i, 0) = i;
  for (std::size_t j = 0; j <= m; ++j) at(0, j) = j;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      at(i, j) = std::min({at(i - 1, j - 1) + (hyp[i - 1] == ref[j - 1] ? 0 : 1), at(i - 1, j) + 1,
                           at(i, j - 1) + 1});
    }
  }
  std::vector<bool> matched(n, false);
  std::size_t i = n, j = m;
  while (i > 0 && j > 0) {
    if (hyp[i - 1] == ref[j - 1] && at(i, j) == at(i - 1, j - 1)) {
      matched[i - 1] = true;
      --i;
      --j;
    } else if (at(i, j) == at(i - 1, j - 1) + 1) {
      --i;
      --j;
    } else if (at(i, j) == at(i - 1, j) + 1) {
      --i;
    } else {
      --j;
    }
  }
  return matched;
}

// Moves hyp[start, start+len) so that it begins at `dest` in the result.
inline void apply_shift(const Ids& hyp, std::size_t start, std::size_t len, std::size_t dest, Ids& out) {
  out.clear();
  Ids rest;
  rest.reserve(hyp.size() - len);
  for (std::size_t i = 0; i < hyp.size(); ++i) {
    if (i < start || i >= start + len) rest.push_back(hyp[i]);
  }
  out.insert(out.end(), rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(dest));
  out.insert(out.end(), hyp.begin() + static_cast<std::ptrdiff_t>(start),
             hyp.begin() + static_cast<std::ptrdiff_t>(start + len));
  out.insert(out.end(), rest.begin() + static_cast<std::ptrdiff_t>(dest), rest.end());
}

inline std::size_t greedy_edits(Ids hyp, const Ids& ref, const TerConfig& cfg) {
  std::vector<std::size_t> row;
  std::size_t current = edit_distance(hyp, ref, row);
  if (!cfg.enable_shifts) return current;
  std::size_t shifts = 0;
  Ids candidate, best;
  for (std::size_t iter = 0; iter < cfg.max_shift_iterations && current > 0; ++iter) {
    const std::vector<bool> matched = matched_positions(hyp, ref);
    std::size_t best_cost = current;  // must beat without counting the shift
    for (std::size_t start = 0; start < hyp.size(); ++start) {
      // Reference offsets where hyp[start, start+len) occurs.
      std::vector<std::size_t> occurrences;
      for (std::size_t j = 0; j < ref.size(); ++j) {
        if (ref[j] == hyp[start]) occurrences.push_back(j);
      }
      bool all_matched = true;
      for (std::size_t len = 1; len <= cfg.max_shift_size && start + len <= hyp.size(); ++len) {
        if (len > 1) {
          std::erase_if(occurrences, [&](std::size_t j) {
            return j + len > ref.size() || ref[j + len - 1] != hyp[start + len - 1];
          });
        }
        if (occurrences.empty()) break;
        all_matched = all_matched && matched[start + len - 1];
        if (all_matched) continue;
        const std::size_t slots = hyp.size() - len;
        for (std::size_t dest = 0; dest <= slots; ++dest) {
          if (dest == start) continue;
          const std::size_t dist = dest > start ? dest - start : start - dest;
          if (dist > cfg.max_shift_distance) continue;
          apply_shift(hyp, start, len, dest, candidate);
          const std::size_t cost = edit_distance(candidate, ref, row) + 1;
          if (cost < best_cost) {
            best_cost = cost;
            best = candidate;
          }
        }
      }
    }
    if (best_cost >= current) break;
    hyp.swap(best);
    current = best_cost - 1;
    ++shifts;
  }
  return shifts + current;
}

struct Vocabulary {
  std::unordered_map<std::string, int> ids;
  Ids encode(const Sentence& s) {
    Ids out;
    out.reserve(s.length());
    for (const auto& tok : s.tokens) {
      out.push_back(ids.try_emplace(tok, static_cast<int>(ids.size())).first->second);
    }
    return out;
  }
};

}  // namespace ter_internal

// Edit count and normalizer for one candidate; pooled over a corpus as
// sum(edits) / sum(avg_ref_length).
struct TerStats {
  double edits = 0.0;
  double avg_ref_length = 0.0;

  TerStats& operator+=(const TerStats& o) {
    edits += o.edits;
    avg_ref_length += o.avg_ref_length;
    return *this;
  }
};

// Minimum edits over references, normalized by the average reference
// length (not by the chosen reference's own length).
inline TerStats ter_stats(const Sentence& cand, std::span<const Sentence> refs, const TerConfig& cfg = {}) {
  if (refs.empty()) throw std::invalid_argument("ter: at least one reference required");
  ter_internal::Vocabulary vocab;
  const ter_internal::Ids hyp = vocab.encode(cand);
  std::size_t best = static_cast<std::size_t>(-1);
  std::size_t ref_tokens = 0;
  for (const Sentence& ref : refs) {
    ref_tokens += ref.length();
    best = std::min(best, ter_internal::greedy_edits(hyp, vocab.encode(ref), cfg));
  }
  if (ref_tokens == 0) throw std::invalid_argument("ter: all references are empty");
  return {static_cast<double>(best), static_cast<double>(ref_tokens) / static_cast<double>(refs.size())};
}

// Edit rate on the 0-100 scale.
inline double ter(const Sentence& cand, std::span<const Sentence> refs, const TerConfig& cfg = {}) {
  const TerStats st = ter_stats(cand, refs, cfg);
  return 100.0 * st.edits / st.avg_ref_length;
}

inline double ter(const Sentence& cand, const Sentence& ref, const TerConfig& cfg = {}) {
  return ter(cand, std::span<const Sentence>(&ref, 1), cfg);
}

inline double ter_corpus(const TerStats& pooled) {
  if (pooled.avg_ref_length <= 0.0) throw std::invalid_argument("ter: empty reference corpus");
  return 100.0 * pooled.edits / pooled.avg_ref_length;
}

}  // namespace paraeval

#endif  // PARAEVAL_TER_HPP_
