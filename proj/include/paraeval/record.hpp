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

#ifndef PARAEVAL_RECORD_HPP_
#define PARAEVAL_RECORD_HPP_

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "paraeval/errors.hpp"
#include "paraeval/text.hpp"

namespace paraeval {

// One source sentence (S1) with its references (S2..Sn) and, optionally,
// generated candidates with a selected output.
struct ParaphraseRecord {
  std::string id;
  Sentence source;
  std::vector<Sentence> references;
  std::vector<Sentence> candidates;
  std::optional<std::size_t> selected;

  friend bool operator==(const ParaphraseRecord&, const ParaphraseRecord&) = default;
};

struct Corpus {
  std::string name;
  std::vector<ParaphraseRecord> records;

  std::size_t size() const { return records.size(); }
  bool empty() const { return records.empty(); }
};

inline void validate_record(const ParaphraseRecord& r) {
  if (r.references.empty()) throw InputError("record '" + r.id + "' has no references");
  if (r.selected && *r.selected >= r.candidates.size()) {
    throw InputError("record '" + r.id + "' selects a candidate that does not exist");
  }
}

inline void validate_corpus(const Corpus& c) {
  std::unordered_set<std::string> seen;
  for (const auto& r : c.records) {
    validate_record(r);
    if (!seen.insert(r.id).second) throw InputError("duplicate record id '" + r.id + "'");
  }
}

// The generation a record contributes in candidate mode: the selected
// candidate, or the only candidate when there is exactly one.
inline const Sentence& generation_of(const ParaphraseRecord& r) {
  if (r.selected) {
    if (*r.selected >= r.candidates.size()) {
      throw InputError("record '" + r.id + "' selects a candidate that does not exist");
    }
    return r.candidates[*r.selected];
  }
  if (r.candidates.size() == 1) return r.candidates.front();
  throw InputError("record '" + r.id + "' has no selected generation");
}

// Record indices ordered by id; every corpus-level reduction runs in this
// order so results do not depend on file order or worker count.
inline std::vector<std::size_t> id_order(const Corpus& c) {
  std::vector<std::size_t> order(c.records.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return c.records[a].id < c.records[b].id; });
  return order;
}

// FNV-1a over the tokenized sources and references in id order. Candidates
// and ids are excluded, so a challenge set built from a corpus keeps the
// corpus fingerprint.
inline std::string corpus_fingerprint(const Corpus& c) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 0x100000001b3ULL;
    }
    h ^= 0x1f;
    h *= 0x100000001b3ULL;
  };
  for (std::size_t i : id_order(c)) {
    const auto& r = c.records[i];
    mix(join(r.source));
    for (const auto& ref : r.references) mix(join(ref));
    mix("\x1e");
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace paraeval

#endif  // PARAEVAL_RECORD_HPP_
