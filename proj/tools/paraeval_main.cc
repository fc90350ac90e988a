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

// Command-line front end. Data goes to stdout (or -o), logs and warnings to
// stderr. Exit codes: 0 ok, 2 input or usage error, 3 degenerate corpus,
// 4 benchmark mismatch.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "paraeval.hpp"

namespace {

using namespace paraeval;

struct Globals {
  std::string config_path;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  std::string format = "json";
};

struct CorpusArgs {
  std::string path;
  std::string input_format = "auto";
  std::string output;
};

void add_corpus_args(CLI::App* sub, CorpusArgs& args) {
  sub->add_option("corpus", args.path, "Corpus file (JSONL or TSV)")->required();
  sub->add_option("--input-format", args.input_format, "auto, jsonl or tsv")
      ->check(CLI::IsMember({"auto", "jsonl", "tsv"}));
  sub->add_option("-o,--output", args.output, "Write primary output to this file instead of stdout");
}

Corpus load(const CorpusArgs& args, const RunConfig& cfg) {
  if (args.input_format == "auto") return load_corpus(args.path, cfg.tokenizer);
  return load_corpus(args.path, parse_corpus_format(args.input_format), cfg.tokenizer);
}

void emit(const CorpusArgs& args, const std::string& text) {
  if (args.output.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(args.output, std::ios::binary);
  if (!out) throw InputError("cannot write '" + args.output + "'");
  out << text;
}

std::string render(std::span<const EvaluationReport> rows, OutputFormat format) {
  switch (format) {
    case OutputFormat::kTable: return format_table(rows);
    case OutputFormat::kTsv: return format_tsv(rows);
    case OutputFormat::kJson: break;
  }
  if (rows.size() == 1) return report_to_json(rows.front()).dump(2) + "\n";
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) arr.push_back(report_to_json(r));
  return arr.dump(2) + "\n";
}

Benchmark read_benchmark(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open benchmark file '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("benchmark: ") + e.what());
  }
  return benchmark_from_json(j);
}

int run(int argc, char** argv) {
  CLI::App app{"Paraphrase evaluation with ROUGE-P and reference metrics", "paraeval"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--config", g.config_path, "JSON run configuration; flags override it");
  auto* seed_opt = app.add_option("--seed", g.seed, "Seed for sampling and seeded perturbations");
  auto* workers_opt = app.add_option("--workers", g.workers, "Worker threads for evaluation");
  auto* format_opt =
      app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"json", "table", "tsv"}));

  // benchmark
  CorpusArgs bench_args;
  std::string bench_mode = "micro";
  auto* bench_cmd = app.add_subcommand("benchmark", "Compute the corpus benchmark ROUGE-L (JSON)");
  add_corpus_args(bench_cmd, bench_args);
  bench_cmd->add_option("--mode", bench_mode, "micro or macro")->check(CLI::IsMember({"micro", "macro"}));

  // evaluate
  CorpusArgs eval_args;
  std::string eval_bench_path, eval_target = "auto", eval_mode = "micro";
  bool eval_force = false;
  auto* eval_cmd = app.add_subcommand("evaluate", "Score a corpus and print the metric report");
  add_corpus_args(eval_cmd, eval_args);
  eval_cmd->add_option("--benchmark", eval_bench_path, "Pinned benchmark JSON; default is this corpus's own");
  eval_cmd->add_option("--mode", eval_mode, "Benchmark mode when no --benchmark is given")
      ->check(CLI::IsMember({"micro", "macro"}));
  eval_cmd->add_option("--target", eval_target, "auto, references or candidates")
      ->check(CLI::IsMember({"auto", "references", "candidates"}));
  eval_cmd->add_flag("--force", eval_force, "Accept a benchmark computed on a different corpus");

  // select
  CorpusArgs sel_args;
  double sel_w = 0.0, sel_lower = 0.0, sel_upper = 0.0;
  bool sel_no_lp = false;
  auto* sel_cmd = app.add_subcommand("select", "Pick one candidate per record and write the corpus");
  add_corpus_args(sel_cmd, sel_args);
  auto* w_opt = sel_cmd->add_option("--w", sel_w, "Adequacy weight w");
  auto* lower_opt = sel_cmd->add_option("--rl-lower", sel_lower, "Lowest accepted srcROUGE-L");
  auto* upper_opt = sel_cmd->add_option("--rl-upper", sel_upper, "srcROUGE-L upper bound (exclusive)");
  sel_cmd->add_flag("--no-length-penalty", sel_no_lp, "Disable the brevity penalty");

  // perturb
  CorpusArgs pert_args;
  std::string pert_kind;
  double pert_ratio = 0.5;
  auto* pert_cmd = app.add_subcommand("perturb", "Build a challenge corpus from the sources");
  add_corpus_args(pert_cmd, pert_args);
  pert_cmd->add_option("--kind", pert_kind, "parrot, near_parrot, reverse, shuffle or truncate")->required();
  auto* ratio_opt = pert_cmd->add_option("--ratio", pert_ratio, "Kept fraction for truncate");

  // sample
  CorpusArgs sample_args;
  double sample_fraction_value = 0.05;
  auto* sample_cmd = app.add_subcommand("sample", "Deterministic random subset of records");
  add_corpus_args(sample_cmd, sample_args);
  sample_cmd->add_option("--fraction", sample_fraction_value, "Fraction in (0, 1]");

  // contrast
  CorpusArgs con_args;
  std::vector<std::string> con_kinds = {"parrot", "near_parrot", "reverse", "shuffle", "truncate"};
  double con_ratio = 0.5;
  std::string con_bench_path;
  auto* con_cmd = app.add_subcommand("contrast", "One report row per perturbation of the corpus");
  add_corpus_args(con_cmd, con_args);
  con_cmd->add_option("--kinds", con_kinds, "Perturbations to run")->delimiter(',');
  con_cmd->add_option("--ratio", con_ratio, "Kept fraction for truncate");
  con_cmd->add_option("--benchmark", con_bench_path, "Pinned benchmark JSON");

  // diversity
  CorpusArgs div_args;
  std::size_t div_k = 10;
  auto* div_cmd = app.add_subcommand("diversity", "Vocabulary diversity and selfBLEU of candidates (JSON)");
  add_corpus_args(div_cmd, div_args);
  div_cmd->add_option("--k", div_k, "Candidates expected per record");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  RunConfig cfg;
  if (!g.config_path.empty()) cfg = load_run_config(g.config_path);
  if (seed_opt->count() > 0) cfg.seed = g.seed;
  if (workers_opt->count() > 0) cfg.workers = g.workers;
  if (format_opt->count() > 0) cfg.output_format = parse_output_format(g.format);
  if (w_opt->count() > 0) cfg.selection.w = sel_w;
  if (lower_opt->count() > 0) cfg.selection.rl_lower = sel_lower;
  if (upper_opt->count() > 0) cfg.selection.rl_upper = sel_upper;
  if (sel_no_lp) cfg.selection.apply_length_penalty = false;
  cfg.validate();

  if (bench_cmd->parsed()) {
    const Corpus corpus = load(bench_args, cfg);
    emit(bench_args, benchmark_to_json(compute_benchmark(corpus, parse_benchmark_mode(bench_mode))).dump(2) + "\n");
    return 0;
  }

  if (eval_cmd->parsed()) {
    const Corpus corpus = load(eval_args, cfg);
    Benchmark bench;
    if (eval_bench_path.empty()) {
      bench = compute_benchmark(corpus, parse_benchmark_mode(eval_mode));
    } else {
      bench = read_benchmark(eval_bench_path);
      if (eval_force) {
        if (bench.corpus_id != corpus_fingerprint(corpus)) {
          std::cerr << "paraeval: warning: benchmark corpus_id does not match; continuing (--force)\n";
        }
      } else {
        check_benchmark_matches(bench, corpus);
      }
    }
    EvaluationTarget target = resolve_target(corpus);
    if (eval_target == "references") target = EvaluationTarget::kReferences;
    if (eval_target == "candidates") target = EvaluationTarget::kCandidates;
    const EvaluationReport rep = evaluate_pairs(corpus, bench, cfg.metrics(), target, cfg.workers);
    emit(eval_args, render(std::span<const EvaluationReport>(&rep, 1), cfg.output_format));
    return 0;
  }

  if (sel_cmd->parsed()) {
    Corpus corpus = load(sel_args, cfg);
    for (const auto& r : corpus.records) {
      if (r.candidates.empty()) throw InputError("record '" + r.id + "' has no candidates");
    }
    std::vector<SelectionResult> results(corpus.size());
    parallel_for(corpus.size(), cfg.workers, [&](std::size_t i) {
      results[i] = select_best(corpus.records[i].candidates, corpus.records[i].source, cfg.selection);
    });
    std::size_t filtered = 0, fallbacks = 0;
    double score_sum = 0.0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const SelectionResult& res = results[i];
      corpus.records[i].selected = res.chosen_index;
      score_sum += res.scores[res.chosen_index];
      for (bool f : res.filtered) filtered += f ? 1 : 0;
      if (res.fell_back) {
        ++fallbacks;
        std::cerr << "paraeval: warning: record '" << corpus.records[i].id
                  << "': every candidate is outside the srcROUGE-L window; taking the raw maximum\n";
      }
    }
    emit(sel_args, to_jsonl(corpus));
    nlohmann::ordered_json summary;
    summary["records"] = corpus.size();
    summary["mean_score"] = corpus.empty() ? 0.0 : score_sum / static_cast<double>(corpus.size());
    summary["filtered_candidates"] = filtered;
    summary["fallbacks"] = fallbacks;
    summary["w"] = cfg.selection.w;
    (sel_args.output.empty() ? std::cerr : std::cout) << summary.dump() << "\n";
    return 0;
  }

  if (pert_cmd->parsed()) {
    const PerturbationKind kind = parse_perturbation_kind(pert_kind);
    Perturbation p{kind, std::nullopt, cfg.seed};
    if (kind == PerturbationKind::kTruncate) {
      p.ratio = pert_ratio;
    } else if (ratio_opt->count() > 0) {
      throw InputError("--ratio applies to --kind truncate only");
    }
    p.validate();
    const Corpus corpus = load(pert_args, cfg);
    emit(pert_args, to_jsonl(build_challenge_set(corpus, p)));
    return 0;
  }

  if (sample_cmd->parsed()) {
    const Corpus corpus = load(sample_args, cfg);
    emit(sample_args, to_jsonl(sample_fraction(corpus, sample_fraction_value, cfg.seed)));
    return 0;
  }

  if (con_cmd->parsed()) {
    const Corpus corpus = load(con_args, cfg);
    std::vector<Perturbation> ps;
    for (const auto& k : con_kinds) {
      const PerturbationKind kind = parse_perturbation_kind(k);
      Perturbation p{kind, std::nullopt, cfg.seed};
      if (kind == PerturbationKind::kTruncate) p.ratio = con_ratio;
      p.validate();
      ps.push_back(p);
    }
    Benchmark bench = con_bench_path.empty() ? compute_benchmark(corpus) : read_benchmark(con_bench_path);
    if (!con_bench_path.empty()) check_benchmark_matches(bench, corpus);
    const auto rows = metric_contrast_report(corpus, ps, bench, cfg.metrics(), cfg.workers);
    emit(con_args, render(rows, cfg.output_format));
    return 0;
  }

  if (div_cmd->parsed()) {
    const Corpus corpus = load(div_args, cfg);
    const DiversityReport rep = diversity_report(corpus, div_k);
    nlohmann::ordered_json j;
    j["corpus"] = corpus.name;
    j["sample_size"] = rep.sample_size;
    j["k"] = div_k;
    j["vocabulary_diversity"] = rep.vocabulary_diversity;
    j["self_bleu"] = rep.self_bleu;
    emit(div_args, j.dump(2) + "\n");
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const paraeval::DegenerateCorpusError& e) {
    std::cerr << "paraeval: error: " << e.what() << "\n";
    return 3;
  } catch (const paraeval::BenchmarkMismatchError& e) {
    std::cerr << "paraeval: error: " << e.what() << " (use --force to override)\n";
    return 4;
  } catch (const paraeval::InputError& e) {
    std::cerr << "paraeval: error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "paraeval: error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "paraeval: error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "paraeval: internal error: " << e.what() << "\n";
    return 1;
  }
}
