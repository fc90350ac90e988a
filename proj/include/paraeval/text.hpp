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

// Tokenization and the shared kernels (n-gram multisets, LCS) that every
// metric in the library is built from.

#ifndef PARAEVAL_TEXT_HPP_
#define PARAEVAL_TEXT_HPP_

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/locid.h>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace paraeval {

enum class PunctuationMode { kStrip, kKeepAsToken };

struct TokenizerConfig {
  bool lowercase = true;
  PunctuationMode punctuation_mode = PunctuationMode::kStrip;
  // NFC canonical composition.
  bool unicode_normalize = true;
};

// A normalized token sequence. May be empty.
struct Sentence {
  std::vector<std::string> tokens;

  Sentence() = default;
  explicit Sentence(std::vector<std::string> t) : tokens(std::move(t)) {}
  Sentence(std::initializer_list<std::string> t) : tokens(t) {}

  std::size_t length() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
  const std::string& operator[](std::size_t i) const { return tokens[i]; }

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

// Tokens joined by single spaces; tokenize(join(s)) == s.
inline std::string join(const Sentence& s) {
  std::string out;
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += s.tokens[i];
  }
  return out;
}

inline Sentence concat(const Sentence& a, const Sentence& b) {
  Sentence out = a;
  out.tokens.insert(out.tokens.end(), b.tokens.begin(), b.tokens.end());
  return out;
}

// Lowercase (optional), separate punctuation from words, then drop it or
// keep it as single-character tokens, and split on whitespace.
inline Sentence tokenize(std::string_view raw, const TokenizerConfig& config = {}) {
  icu::UnicodeString text = icu::UnicodeString::fromUTF8(
      icu::StringPiece(raw.data(), static_cast<int32_t>(raw.size())));
  if (config.unicode_normalize) {
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
    if (U_SUCCESS(status)) {
      icu::UnicodeString normalized = nfc->normalize(text, status);
      if (U_SUCCESS(status)) text = std::move(normalized);
    }
  }
  if (config.lowercase) text.toLower(icu::Locale::getRoot());

  Sentence out;
  icu::UnicodeString current;
  auto flush = [&] {
    if (current.isEmpty()) return;
    std::string token;
    current.toUTF8String(token);
    out.tokens.push_back(std::move(token));
    current.remove();
  };
  for (int32_t i = 0; i < text.length();) {
    const UChar32 c = text.char32At(i);
    i = text.moveIndex32(i, 1);
    if (u_isUWhiteSpace(c) || u_iscntrl(c)) {
      flush();
    } else if (u_ispunct(c)) {
      flush();
      if (config.punctuation_mode == PunctuationMode::kKeepAsToken) {
        current.append(c);
        flush();
      }
    } else {
      current.append(c);
    }
  }
  flush();
  return out;
}

using NGram = std::vector<std::string>;

struct NGramHash {
  std::size_t operator()(const NGram& g) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (const auto& tok : g) {
      h ^= std::hash<std::string>{}(tok) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct NGramMultiset {
  std::size_t n = 1;
  std::unordered_map<NGram, std::size_t, NGramHash> counts;

  std::size_t total() const {
    std::size_t sum = 0;
    for (const auto& [gram, c] : counts) sum += c;
    return sum;
  }
  std::size_t distinct() const { return counts.size(); }
  std::size_t count(const NGram& gram) const {
    auto it = counts.find(gram);
    return it == counts.end() ? 0 : it->second;
  }
};

inline NGramMultiset ngrams(const Sentence& s, std::size_t n) {
  if (n == 0) throw std::invalid_argument("ngrams: order must be >= 1");
  NGramMultiset out;
  out.n = n;
  if (s.length() < n) return out;
  out.counts.reserve(s.length() - n + 1);
  for (std::size_t i = 0; i + n <= s.length(); ++i) {
    NGram gram(s.tokens.begin() + static_cast<std::ptrdiff_t>(i),
               s.tokens.begin() + static_cast<std::ptrdiff_t>(i + n));
    ++out.counts[std::move(gram)];
  }
  return out;
}

// Token-level longest common subsequence, O(len(a) * len(b)) time and
// O(min) memory.
inline std::size_t lcs_length(const Sentence& a, const Sentence& b) {
  const auto* outer = &a.tokens;
  const auto* inner = &b.tokens;
  if (inner->size() > outer->size()) std::swap(outer, inner);
  if (inner->empty()) return 0;
  std::vector<std::size_t> row(inner->size() + 1, 0);
  for (const auto& x : *outer) {
    std::size_t diag = 0;
    for (std::size_t j = 0; j < inner->size(); ++j) {
      const std::size_t up = row[j + 1];
      row[j + 1] = (x == (*inner)[j]) ? diag + 1 : std::max(row[j], up);
      diag = up;
    }
  }
  return row.back();
}

}  // namespace paraeval

#endif  // PARAEVAL_TEXT_HPP_
