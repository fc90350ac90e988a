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

// Corpus ingestion and serialization.
//
// JSONL (canonical), one object per line:
//   {"id": "...", "source": "...", "references": ["...", ...],
//    "candidates": ["...", ...], "selected": 0}
// `candidates` and `selected` are optional. A missing id becomes the
// 1-based record number.
//
// TSV: source<TAB>reference, no header; ids are record numbers.

#ifndef PARAEVAL_CORPUS_HPP_
#define PARAEVAL_CORPUS_HPP_

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "paraeval/errors.hpp"
#include "paraeval/record.hpp"
#include "paraeval/rng.hpp"
#include "paraeval/text.hpp"

namespace paraeval {

enum class CorpusFormat { kJsonl, kTsv };

inline CorpusFormat parse_corpus_format(const std::string& s) {
  if (s == "jsonl") return CorpusFormat::kJsonl;
  if (s == "tsv") return CorpusFormat::kTsv;
  throw std::invalid_argument("unknown corpus format '" + s + "'");
}

inline CorpusFormat format_from_path(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext == ".tsv" || ext == ".txt" ? CorpusFormat::kTsv : CorpusFormat::kJsonl;
}

namespace corpus_internal {

inline bool is_blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); });
}

[[noreturn]] inline void fail(std::size_t line_no, const std::string& what) {
  throw InputError("line " + std::to_string(line_no) + ": " + what);
}

inline std::vector<Sentence> sentence_list(const nlohmann::json& row, const char* key, std::size_t line_no,
                                           const TokenizerConfig& tok) {
  std::vector<Sentence> out;
  const auto& arr = row.at(key);
  if (!arr.is_array()) fail(line_no, std::string("'") + key + "' must be an array of strings");
  for (const auto& item : arr) {
    if (!item.is_string()) fail(line_no, std::string("'") + key + "' must be an array of strings");
    out.push_back(tokenize(item.get_ref<const std::string&>(), tok));
  }
  return out;
}

inline ParaphraseRecord parse_jsonl_row(const std::string& line, std::size_t line_no, std::size_t ordinal,
                                        const TokenizerConfig& tok) {
  nlohmann::json row;
  try {
    row = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    fail(line_no, std::string("invalid JSON: ") + e.what());
  }
  if (!row.is_object()) fail(line_no, "expected a JSON object");
  ParaphraseRecord rec;
  if (auto it = row.find("id"); it != row.end()) {
    if (!it->is_string()) fail(line_no, "'id' must be a string");
    rec.id = it->get<std::string>();
  } else {
    rec.id = std::to_string(ordinal);
  }
  auto src = row.find("source");
  if (src == row.end() || !src->is_string()) fail(line_no, "missing string field 'source'");
  rec.source = tokenize(src->get_ref<const std::string&>(), tok);
  if (!row.contains("references")) fail(line_no, "missing field 'references'");
  rec.references = sentence_list(row, "references", line_no, tok);
  if (rec.references.empty()) fail(line_no, "record has no references");
  if (row.contains("candidates")) rec.candidates = sentence_list(row, "candidates", line_no, tok);
  if (auto sel = row.find("selected"); sel != row.end() && !sel->is_null()) {
    if (!sel->is_number_unsigned()) fail(line_no, "'selected' must be a non-negative integer");
    rec.selected = sel->get<std::size_t>();
    if (*rec.selected >= rec.candidates.size()) fail(line_no, "'selected' is out of range");
  }
  return rec;
}

inline ParaphraseRecord parse_tsv_row(std::string line, std::size_t line_no, std::size_t ordinal,
                                      const TokenizerConfig& tok) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto tab = line.find('\t');
  if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
    fail(line_no, "expected exactly two tab-separated columns");
  }
  ParaphraseRecord rec;
  rec.id = std::to_string(ordinal);
  rec.source = tokenize(std::string_view(line).substr(0, tab), tok);
  rec.references.push_back(tokenize(std::string_view(line).substr(tab + 1), tok));
  return rec;
}

}  // namespace corpus_internal

inline Corpus parse_corpus(std::istream& in, CorpusFormat format, const TokenizerConfig& tok = {},
                           std::string name = "corpus") {
  Corpus corpus;
  corpus.name = std::move(name);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (corpus_internal::is_blank(line)) continue;
    const std::size_t ordinal = corpus.records.size() + 1;
    corpus.records.push_back(format == CorpusFormat::kJsonl
                                 ? corpus_internal::parse_jsonl_row(line, line_no, ordinal, tok)
                                 : corpus_internal::parse_tsv_row(line, line_no, ordinal, tok));
  }
  validate_corpus(corpus);
  return corpus;
}

inline Corpus load_corpus(const std::filesystem::path& path, CorpusFormat format,
                          const TokenizerConfig& tok = {}) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open corpus file '" + path.string() + "'");
  return parse_corpus(in, format, tok, path.stem().string());
}

inline Corpus load_corpus(const std::filesystem::path& path, const TokenizerConfig& tok = {}) {
  return load_corpus(path, format_from_path(path), tok);
}

inline nlohmann::ordered_json record_to_json(const ParaphraseRecord& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["source"] = join(r.source);
  auto& refs = j["references"] = nlohmann::ordered_json::array();
  for (const auto& s : r.references) refs.push_back(join(s));
  if (!r.candidates.empty()) {
    auto& cands = j["candidates"] = nlohmann::ordered_json::array();
    for (const auto& s : r.candidates) cands.push_back(join(s));
  }
  if (r.selected) j["selected"] = *r.selected;
  return j;
}

// Sentences are written as space-joined tokens; reloading with the same
// tokenizer reproduces the data model.
inline void write_jsonl(std::ostream& out, const Corpus& corpus) {
  for (const auto& r : corpus.records) out << record_to_json(r).dump() << '\n';
}

inline std::string to_jsonl(const Corpus& corpus) {
  std::ostringstream os;
  write_jsonl(os, corpus);
  return os.str();
}

// ceil(fraction * n) records chosen by a partial Fisher-Yates shuffle of
// record indices driven by Rng(seed); kept in original order.
inline Corpus sample_fraction(const Corpus& corpus, double fraction, std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction <= 1.0)) throw std::invalid_argument("sample_fraction: fraction must be in (0,1]");
  const std::size_t n = corpus.size();
  // The epsilon keeps values like 0.05 * 40000 from rounding up a record.
  auto k = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(n) - 1e-9));
  k = std::min(k, n);
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  Rng rng(seed);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  Corpus out;
  out.name = corpus.name;
  out.records.reserve(k);
  for (std::size_t i : idx) out.records.push_back(corpus.records[i]);
  return out;
}

}  // namespace paraeval

#endif  // PARAEVAL_CORPUS_HPP_
