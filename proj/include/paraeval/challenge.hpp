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

// Deterministic adversarial "paraphrases" built by editing the source
// tokens. Word overlap survives while novelty or order is lost, which is
// where n-gram and edit metrics disagree with ROUGE-P.

#ifndef PARAEVAL_CHALLENGE_HPP_
#define PARAEVAL_CHALLENGE_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "paraeval/evaluation.hpp"
#include "paraeval/record.hpp"
#include "paraeval/rng.hpp"
#include "paraeval/rouge_p.hpp"
#include "paraeval/text.hpp"

namespace paraeval {

enum class PerturbationKind { kParrot, kNearParrot, kReverse, kShuffle, kTruncate };

inline const char* to_string(PerturbationKind k) {
  switch (k) {
    case PerturbationKind::kParrot: return "parrot";
    case PerturbationKind::kNearParrot: return "near_parrot";
    case PerturbationKind::kReverse: return "reverse";
    case PerturbationKind::kShuffle: return "shuffle";
    case PerturbationKind::kTruncate: return "truncate";
  }
  return "unknown";
}

inline PerturbationKind parse_perturbation_kind(const std::string& s) {
  for (auto k : {PerturbationKind::kParrot, PerturbationKind::kNearParrot, PerturbationKind::kReverse,
                 PerturbationKind::kShuffle, PerturbationKind::kTruncate}) {
    if (s == to_string(k)) return k;
  }
  throw std::invalid_argument("unknown perturbation kind '" + s + "'");
}

struct Perturbation {
  PerturbationKind kind = PerturbationKind::kParrot;
  // Only meaningful for truncate.
  std::optional<double> ratio;
  std::uint64_t seed = 0;

  static Perturbation parrot() { return {PerturbationKind::kParrot, std::nullopt, 0}; }
  static Perturbation near_parrot(std::uint64_t seed) { return {PerturbationKind::kNearParrot, std::nullopt, seed}; }
  static Perturbation reverse() { return {PerturbationKind::kReverse, std::nullopt, 0}; }
  static Perturbation shuffle(std::uint64_t seed) { return {PerturbationKind::kShuffle, std::nullopt, seed}; }
  static Perturbation truncate(double ratio = 0.5) { return {PerturbationKind::kTruncate, ratio, 0}; }

  void validate() const {
    if (ratio.has_value() != (kind == PerturbationKind::kTruncate)) {
      throw std::invalid_argument("perturbation: ratio applies to truncate only");
    }
    if (ratio && !(*ratio > 0.0 && *ratio <= 1.0)) {
      throw std::invalid_argument("perturbation: ratio must be in (0,1]");
    }
  }

  std::string label() const {
    if (kind != PerturbationKind::kTruncate) return to_string(kind);
    char buf[48];
    std::snprintf(buf, sizeof(buf), "truncate@%g", *ratio);
    return buf;
  }
};

inline Sentence perturb(const Sentence& src, const Perturbation& p) {
  p.validate();
  if (src.empty()) throw std::invalid_argument("perturb: empty source");
  const std::size_t n = src.length();
  switch (p.kind) {
    case PerturbationKind::kParrot:
      return src;
    case PerturbationKind::kNearParrot: {
      if (n == 1) return src;
      Rng rng(p.seed);
      Sentence out = src;
      out.tokens.erase(out.tokens.begin() + static_cast<std::ptrdiff_t>(rng.below(n)));
      return out;
    }
    case PerturbationKind::kReverse: {
      Sentence out = src;
      std::reverse(out.tokens.begin(), out.tokens.end());
      return out;
    }
    case PerturbationKind::kShuffle: {
      // Fisher-Yates over positions, redrawn until it is not the identity.
      Rng rng(p.seed);
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      while (true) {
        for (std::size_t i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
        if (n < 2 || !std::is_sorted(perm.begin(), perm.end())) break;
      }
      Sentence out;
      out.tokens.reserve(n);
      for (std::size_t i : perm) out.tokens.push_back(src[i]);
      return out;
    }
    case PerturbationKind::kTruncate: {
      auto keep = static_cast<std::size_t>(std::ceil(*p.ratio * static_cast<double>(n) - 1e-9));
      keep = std::clamp<std::size_t>(keep, 1, n);
      return Sentence(std::vector<std::string>(src.tokens.begin(),
                                               src.tokens.begin() + static_cast<std::ptrdiff_t>(keep)));
    }
  }
  return src;
}

// Replaces every record's candidates with the single perturbed source.
// Seeded kinds draw a per-record seed from (seed, record position).
inline Corpus build_challenge_set(const Corpus& corpus, const Perturbation& p) {
  p.validate();
  Corpus out = corpus;
  for (std::size_t i = 0; i < out.records.size(); ++i) {
    auto& r = out.records[i];
    Perturbation local = p;
    local.seed = splitmix64(p.seed ^ splitmix64(i));
    r.candidates.assign(1, perturb(r.source, local));
    r.selected.reset();
  }
  return out;
}

// One candidate-mode evaluation row per perturbation, all scored against
// the benchmark of the unperturbed corpus.
inline std::vector<EvaluationReport> metric_contrast_report(const Corpus& corpus,
                                                            std::span<const Perturbation> perturbations,
                                                            const Benchmark& bench, const MetricConfigs& cfg = {},
                                                            std::size_t workers = 1) {
  std::vector<EvaluationReport> rows;
  rows.reserve(perturbations.size());
  for (const auto& p : perturbations) {
    const Corpus challenge = build_challenge_set(corpus, p);
    EvaluationReport rep = evaluate_pairs(challenge, bench, cfg, EvaluationTarget::kCandidates, workers);
    rep.corpus = p.label();
    rows.push_back(std::move(rep));
  }
  return rows;
}

inline std::vector<EvaluationReport> metric_contrast_report(const Corpus& corpus,
                                                            std::span<const Perturbation> perturbations,
                                                            const MetricConfigs& cfg = {}, std::size_t workers = 1) {
  return metric_contrast_report(corpus, perturbations, compute_benchmark(corpus), cfg, workers);
}

}  // namespace paraeval

#endif  // PARAEVAL_CHALLENGE_HPP_
