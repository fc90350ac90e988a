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

#include "paraeval/porter_stemmer.hpp"

#include <string>
#include <utility>
#include <vector>

#include "gtest/gtest.h"

namespace paraeval {
namespace {

TEST(PorterStemmerTest, ReferenceVocabulary) {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"caresses", "caress"},   {"ponies", "poni"},         {"ties", "ti"},
      {"caress", "caress"},     {"cats", "cat"},            {"feed", "feed"},
      {"agreed", "agre"},       {"plastered", "plaster"},   {"bled", "bled"},
      {"motoring", "motor"},    {"sing", "sing"},           {"conflated", "conflat"},
      {"troubled", "troubl"},   {"sized", "size"},          {"hopping", "hop"},
      {"tanned", "tan"},        {"falling", "fall"},        {"hissing", "hiss"},
      {"fizzed", "fizz"},       {"failing", "fail"},        {"filing", "file"},
      {"happy", "happi"},       {"sky", "sky"},             {"relational", "relat"},
      {"conditional", "condit"}, {"rational", "ration"},    {"valenci", "valenc"},
      {"digitizer", "digit"},   {"conformabli", "conform"}, {"radicalli", "radic"},
      {"differentli", "differ"}, {"vileli", "vile"},        {"analogousli", "analog"},
      {"vietnamization", "vietnam"}, {"predication", "predic"}, {"operator", "oper"},
      {"feudalism", "feudal"},  {"decisiveness", "decis"},  {"hopefulness", "hope"},
      {"callousness", "callous"}, {"formaliti", "formal"},  {"sensitiviti", "sensit"},
      {"sensibiliti", "sensibl"}, {"triplicate", "triplic"}, {"formative", "form"},
      {"formalize", "formal"},  {"electriciti", "electr"},  {"electrical", "electr"},
      {"hopeful", "hope"},      {"goodness", "good"},       {"revival", "reviv"},
      {"allowance", "allow"},   {"inference", "infer"},     {"airliner", "airlin"},
      {"gyroscopic", "gyroscop"}, {"adjustable", "adjust"}, {"defensible", "defens"},
      {"irritant", "irrit"},    {"replacement", "replac"},  {"adjustment", "adjust"},
      {"dependent", "depend"},  {"adoption", "adopt"},      {"homologous", "homolog"},
      {"communism", "commun"},  {"activate", "activ"},      {"angulariti", "angular"},
      {"effective", "effect"},  {"bowdlerize", "bowdler"},  {"probate", "probat"},
      {"rate", "rate"},         {"cease", "ceas"},          {"controll", "control"},
      {"roll", "roll"},         {"generalizations", "gener"}, {"oscillators", "oscil"},
      {"running", "run"},       {"connections", "connect"},
  };
  for (const auto& [word, stem] : cases) EXPECT_EQ(porter_stem(word), stem) << word;
}

TEST(PorterStemmerTest, ShortAndNonAlphabeticTokensUnchanged) {
  EXPECT_EQ(porter_stem("is"), "is");
  EXPECT_EQ(porter_stem("a"), "a");
  EXPECT_EQ(porter_stem(""), "");
  EXPECT_EQ(porter_stem("3rd"), "3rd");
  EXPECT_EQ(porter_stem("caf\xc3\xa9s"), "caf\xc3\xa9s");
}

}  // namespace
}  // namespace paraeval
