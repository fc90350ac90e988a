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

// Run-wide settings for the command-line tool, loadable from a JSON
// document whose keys mirror the field names below, e.g.
//
//   {"tokenizer": {"lowercase": true, "punctuation_mode": "strip"},
//    "rouge_p": {"beta": 2, "gamma": 7},
//    "selection": {"w": 1.5, "rl_lower": 0.2, "rl_upper": 0.9},
//    "pinc": {"max_n": 4, "empty_order_mode": "skip"},
//    "meteor": {"alpha": 0.9, "pen_weight": 0.5, "pen_exp": 3,
//               "stages": ["exact", "stem"]},
//    "ter": {"enable_shifts": true, "max_shift_iterations": 50},
//    "workers": 4, "seed": 7, "output_format": "table"}
//
// Missing keys keep their defaults; unknown keys are rejected.

#ifndef PARAEVAL_RUN_CONFIG_HPP_
#define PARAEVAL_RUN_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "paraeval/errors.hpp"
#include "paraeval/evaluation.hpp"
#include "paraeval/reference_metrics.hpp"
#include "paraeval/rouge_p.hpp"
#include "paraeval/selection.hpp"
#include "paraeval/ter.hpp"
#include "paraeval/text.hpp"

namespace paraeval {

enum class OutputFormat { kJson, kTable, kTsv };

inline OutputFormat parse_output_format(const std::string& s) {
  if (s == "json") return OutputFormat::kJson;
  if (s == "table") return OutputFormat::kTable;
  if (s == "tsv") return OutputFormat::kTsv;
  throw std::invalid_argument("unknown output format '" + s + "'");
}

struct RunConfig {
  TokenizerConfig tokenizer;
  RougePConfig rouge_p;
  SelectionConfig selection;
  PincConfig pinc;
  MeteorConfig meteor;
  TerConfig ter;
  std::size_t workers = 1;
  std::uint64_t seed = 0;
  OutputFormat output_format = OutputFormat::kJson;

  MetricConfigs metrics() const { return {rouge_p, pinc, meteor, ter}; }

  void validate() const {
    rouge_p.validate();
    selection.validate();
    pinc.validate();
    meteor.validate();
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  }
};

namespace run_config_internal {

inline void check_keys(const nlohmann::json& obj, const std::string& where, std::set<std::string> allowed) {
  if (!obj.is_object()) throw InputError("config: '" + where + "' must be an object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) throw InputError("config: unknown key '" + where + "." + key + "'");
  }
}

template <typename T>
void read(const nlohmann::json& obj, const char* key, T& out) {
  if (auto it = obj.find(key); it != obj.end()) out = it->get<T>();
}

}  // namespace run_config_internal

// Applies the keys present in `j` on top of `cfg`.
inline void apply_config_json(const nlohmann::json& j, RunConfig& cfg) {
  using run_config_internal::check_keys;
  using run_config_internal::read;
  try {
    check_keys(j, "", {"tokenizer", "rouge_p", "selection", "pinc", "meteor", "ter", "workers", "seed",
                       "output_format"});
    if (auto it = j.find("tokenizer"); it != j.end()) {
      check_keys(*it, "tokenizer", {"lowercase", "punctuation_mode", "unicode_normalize"});
      read(*it, "lowercase", cfg.tokenizer.lowercase);
      read(*it, "unicode_normalize", cfg.tokenizer.unicode_normalize);
      if (auto pm = it->find("punctuation_mode"); pm != it->end()) {
        const auto s = pm->get<std::string>();
        if (s == "strip") {
          cfg.tokenizer.punctuation_mode = PunctuationMode::kStrip;
        } else if (s == "keep-as-token" || s == "keep") {
          cfg.tokenizer.punctuation_mode = PunctuationMode::kKeepAsToken;
        } else {
          throw InputError("config: unknown punctuation_mode '" + s + "'");
        }
      }
    }
    if (auto it = j.find("rouge_p"); it != j.end()) {
      check_keys(*it, "rouge_p", {"beta", "gamma"});
      read(*it, "beta", cfg.rouge_p.beta);
      read(*it, "gamma", cfg.rouge_p.gamma);
    }
    if (auto it = j.find("selection"); it != j.end()) {
      check_keys(*it, "selection", {"w", "rl_lower", "rl_upper", "apply_length_penalty"});
      read(*it, "w", cfg.selection.w);
      read(*it, "rl_lower", cfg.selection.rl_lower);
      read(*it, "rl_upper", cfg.selection.rl_upper);
      read(*it, "apply_length_penalty", cfg.selection.apply_length_penalty);
    }
    if (auto it = j.find("pinc"); it != j.end()) {
      check_keys(*it, "pinc", {"max_n", "empty_order_mode"});
      read(*it, "max_n", cfg.pinc.max_n);
      if (auto m = it->find("empty_order_mode"); m != it->end()) {
        const auto s = m->get<std::string>();
        if (s == "skip") {
          cfg.pinc.empty_order_mode = EmptyOrderMode::kSkip;
        } else if (s == "zero") {
          cfg.pinc.empty_order_mode = EmptyOrderMode::kZero;
        } else {
          throw InputError("config: unknown empty_order_mode '" + s + "'");
        }
      }
    }
    if (auto it = j.find("meteor"); it != j.end()) {
      check_keys(*it, "meteor", {"alpha", "pen_weight", "pen_exp", "stages"});
      read(*it, "alpha", cfg.meteor.alpha);
      read(*it, "pen_weight", cfg.meteor.pen_weight);
      read(*it, "pen_exp", cfg.meteor.pen_exp);
      if (auto st = it->find("stages"); st != it->end()) {
        cfg.meteor.stages.clear();
        for (const auto& s : *st) {
          const auto name = s.get<std::string>();
          if (name == "exact") {
            cfg.meteor.stages.push_back(MeteorStage::kExact);
          } else if (name == "stem") {
            cfg.meteor.stages.push_back(MeteorStage::kStem);
          } else {
            throw InputError("config: unknown meteor stage '" + name + "'");
          }
        }
      }
    }
    if (auto it = j.find("ter"); it != j.end()) {
      check_keys(*it, "ter", {"enable_shifts", "max_shift_iterations"});
      read(*it, "enable_shifts", cfg.ter.enable_shifts);
      read(*it, "max_shift_iterations", cfg.ter.max_shift_iterations);
    }
    read(j, "workers", cfg.workers);
    read(j, "seed", cfg.seed);
    if (auto it = j.find("output_format"); it != j.end()) {
      cfg.output_format = parse_output_format(it->get<std::string>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("config: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("config: ") + e.what());
  }
}

inline RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file '" + path.string() + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("config: ") + e.what());
  }
  RunConfig cfg;
  apply_config_json(j, cfg);
  return cfg;
}

}  // namespace paraeval

#endif  // PARAEVAL_RUN_CONFIG_HPP_
