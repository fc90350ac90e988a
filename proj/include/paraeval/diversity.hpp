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

// Diversity statistics over a bag of generated paraphrases.

#ifndef PARAEVAL_DIVERSITY_HPP_
#define PARAEVAL_DIVERSITY_HPP_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "paraeval/errors.hpp"
#include "paraeval/record.hpp"
#include "paraeval/reference_metrics.hpp"
#include "paraeval/text.hpp"

namespace paraeval {

struct DiversityReport {
  double vocabulary_diversity = 0.0;
  double self_bleu = 0.0;
  std::size_t sample_size = 0;
};

// Distinct tokens over total tokens across all sentences.
inline double vocabulary_diversity(std::span<const Sentence> sentences) {
  std::unordered_set<std::string> types;
  std::size_t tokens = 0;
  for (const Sentence& s : sentences) {
    tokens += s.length();
    types.insert(s.tokens.begin(), s.tokens.end());
  }
  if (tokens == 0) throw std::invalid_argument("vocabulary_diversity: no tokens");
  return static_cast<double>(types.size()) / static_cast<double>(tokens);
}

// Counts the source and one reference together with exactly k paraphrases.
inline double vocabulary_diversity(const Sentence& source, const Sentence& reference,
                                   std::span<const Sentence> paraphrases, std::size_t k = 10) {
  if (paraphrases.size() != k) {
    throw std::invalid_argument("vocabulary_diversity: expected " + std::to_string(k) + " paraphrases, got " +
                                std::to_string(paraphrases.size()));
  }
  std::vector<Sentence> all;
  all.reserve(k + 2);
  all.push_back(source);
  all.push_back(reference);
  all.insert(all.end(), paraphrases.begin(), paraphrases.end());
  for (const Sentence& s : all) {
    if (s.empty()) throw std::invalid_argument("vocabulary_diversity: empty sentence");
  }
  return vocabulary_diversity(all);
}

// Mean corpus BLEU of each candidate against all the others.
inline double self_bleu(std::span<const Sentence> candidates) {
  if (candidates.size() < 2) throw std::invalid_argument("self_bleu: need at least two candidates");
  double sum = 0.0;
  std::vector<Sentence> others;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    others.clear();
    for (std::size_t j = 0; j < candidates.size(); ++j) {
      if (j != i) others.push_back(candidates[j]);
    }
    const BleuSegment seg{&candidates[i], others};
    sum += bleu_corpus(std::span<const BleuSegment>(&seg, 1));
  }
  return sum / static_cast<double>(candidates.size());
}

// Per-record diversity of k candidates (with the source and first
// reference for vocabulary diversity), averaged in id order.
inline DiversityReport diversity_report(const Corpus& corpus, std::size_t k = 10) {
  if (corpus.empty()) throw InputError("diversity: empty corpus");
  DiversityReport rep;
  for (std::size_t idx : id_order(corpus)) {
    const auto& r = corpus.records[idx];
    if (r.candidates.size() != k) {
      throw InputError("record '" + r.id + "' has " + std::to_string(r.candidates.size()) + " candidates, expected " +
                       std::to_string(k));
    }
    try {
      rep.vocabulary_diversity += vocabulary_diversity(r.source, r.references.front(), r.candidates, k);
      rep.self_bleu += self_bleu(r.candidates);
    } catch (const std::invalid_argument& e) {
      throw InputError("record '" + r.id + "': " + e.what());
    }
    ++rep.sample_size;
  }
  rep.vocabulary_diversity /= static_cast<double>(rep.sample_size);
  rep.self_bleu /= static_cast<double>(rep.sample_size);
  return rep;
}

}  // namespace paraeval

#endif  // PARAEVAL_DIVERSITY_HPP_
