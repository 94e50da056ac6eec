/*
 * Copyright 2026 The analogykit Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "analogy/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "analogy/embedding.hpp"
#include "analogy/error.hpp"
#include "analogy/evaluate.hpp"
#include "analogy/metrics.hpp"
#include "analogy/report.hpp"

namespace analogy::cli {
namespace {

// Writes to `path`, or to `fallback` when `path` is empty and a fallback is
// given.
template <typename Fn>
void emit(const std::string& path, std::ostream* fallback, Fn&& fn) {
  if (path.empty()) {
    if (fallback) fn(*fallback);
    return;
  }
  std::ofstream file(path, std::ios::out | std::ios::trunc);
  if (!file) throw Error("cannot write '" + path + "'");
  fn(file);
  if (!file) throw Error("write failed for '" + path + "'");
}

void emit_summary(const Summary& summary, const std::string& table_path,
                  const std::string& csv_path, std::ostream& out) {
  emit(table_path, &out, [&](std::ostream& s) { write_table(s, summary); });
  emit(csv_path, nullptr, [&](std::ostream& s) { write_csv(s, summary); });
}

}  // namespace

int cmd_evaluate(const EvaluateConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config.method);
    if (config.workers < 1) throw Error("--workers must be >= 1");
    const auto emb = load_embeddings(config.embeddings, config.embeddings_format);
    const auto terms = load_term_list(config.candidates);
    const auto records = parse_dataset(config.dataset);
    if (records.empty()) throw Error("dataset '" + config.dataset + "' is empty");
    const auto index = build_candidate_index(terms, emb);
    err << "embeddings: " << emb.size() << " x " << emb.dim() << "; candidates: "
        << index.size() << " (" << index.discarded() << " discarded, all words OOV)\n";

    EvaluationOptions options;
    options.setting = config.setting;
    options.method = config.method;
    options.normalize_queries = config.normalize;
    options.workers = config.workers;
    const auto result = evaluate(records, emb, index, options);

    for (const auto& s : result.skipped) {
      err << "skipped record " << s.record + 1 << ": " << s.reason << '\n';
    }
    if (result.no_answer_in_index > 0) {
      err << "warning: " << result.no_answer_in_index
          << " scored analogies have no answer in the candidate index\n";
    }
    if (result.outcomes.empty()) throw Error("no analogy could be scored");

    emit(config.out_outcomes, nullptr,
         [&](std::ostream& s) { write_outcomes(s, result.outcomes); });
    emit_summary(summarize(result.outcomes), config.out_table, config.out_csv, out);

    if (!result.skipped.empty()) {
      err << "skipped " << result.skipped.size() << " of " << records.size()
          << " analogies\n";
      return kSkipped;
    }
    return kOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFatal;
  }
}

int cmd_generate(const GenerateConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const auto triples = datagen::read_triples(config.triples);
    const auto lexicon = datagen::read_lexicon(config.lexicon);
    const auto freqs = datagen::read_frequencies(config.frequencies);
    auto generation = config.generation;
    if (!config.allowlist.empty()) {
      generation.allowlist = datagen::read_allowlist(config.allowlist);
    }
    const auto dataset = datagen::generate(triples, lexicon, freqs, generation);

    emit(config.out_dataset, &out,
         [&](std::ostream& s) { write_dataset(s, dataset.term_records); });
    emit(config.out_ids, nullptr,
         [&](std::ostream& s) { write_dataset(s, dataset.id_records); });
    emit(config.out_stats, nullptr,
         [&](std::ostream& s) { datagen::write_stats(s, dataset.stats); });
    if (!config.out_review.empty()) {
      const auto frequent =
          datagen::frequent_concepts(lexicon, freqs, generation.min_term_freq);
      emit(config.out_review, nullptr, [&](std::ostream& s) {
        datagen::write_review(s, dataset.review, frequent, freqs);
      });
    }
    err << "generated " << dataset.id_records.size() << " analogies over "
        << dataset.stats.size() << " relations\n";
    return kOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFatal;
  }
}

int cmd_report(const ReportConfig& config, std::ostream& out, std::ostream& err) {
  try {
    std::ifstream in(config.outcomes);
    if (!in) throw Error("cannot open '" + config.outcomes + "'");
    const auto outcomes = read_outcomes(in, config.outcomes);
    if (outcomes.empty()) throw Error("'" + config.outcomes + "' has no outcomes");
    emit_summary(summarize(outcomes), config.out_table, config.out_csv, out);
    return kOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFatal;
  }
}

int run(int argc, const char* const* argv) {
  CLI::App app{"Analogy completion evaluation and dataset generation"};
  app.require_subcommand(1);

  EvaluateConfig eval;
  std::string format = "text", setting = "multi", method = "cosadd";
  bool shift = false, no_normalize = false;
  auto* evaluate = app.add_subcommand("evaluate", "Score an analogy dataset against embeddings");
  evaluate->add_option("--embeddings", eval.embeddings, "Embedding file")->required();
  evaluate->add_option("--embeddings-format", format, "text | text-noheader | binary")
      ->check(CLI::IsMember({"text", "text-noheader", "binary"}));
  evaluate->add_option("--candidates", eval.candidates, "Candidate term list, one per line")
      ->required();
  evaluate->add_option("--dataset", eval.dataset, "Analogy dataset (TSV)")->required();
  evaluate->add_option("--setting", setting, "single | multi | all-info")
      ->check(CLI::IsMember({"single", "multi", "all-info"}));
  evaluate->add_option("--method", method, "cosadd | pairdist | cosmul")
      ->check(CLI::IsMember({"cosadd", "pairdist", "cosmul"}));
  evaluate->add_option("--epsilon", eval.method.epsilon, "CosMul denominator epsilon")
      ->check(CLI::PositiveNumber);
  evaluate->add_flag("--shift-cosines", shift, "CosMul: map cosines to (x+1)/2");
  evaluate->add_flag("--no-normalize", no_normalize,
                     "Do not unit-normalize a, b and c before the offset arithmetic");
  evaluate->add_option("--workers", eval.workers, "Worker threads")
      ->check(CLI::PositiveNumber);
  evaluate->add_option("--out-table", eval.out_table, "Table output (default stdout)");
  evaluate->add_option("--out-csv", eval.out_csv, "Per-relation CSV output");
  evaluate->add_option("--out-outcomes", eval.out_outcomes, "Per-query outcomes (TSV)");

  GenerateConfig gen;
  auto* generate = app.add_subcommand("generate", "Generate an analogy dataset from triples");
  generate->add_option("--triples", gen.triples, "subject<TAB>relation<TAB>object")
      ->required();
  generate->add_option("--lexicon", gen.lexicon, "concept<TAB>term")->required();
  generate->add_option("--frequencies", gen.frequencies, "term<TAB>count")->required();
  generate->add_option("--allowlist", gen.allowlist, "One relation id per line");
  generate->add_option("--min-term-freq", gen.generation.min_term_freq)
      ->check(CLI::PositiveNumber);
  generate->add_option("--min-one-to-one", gen.generation.min_one_to_one,
                       "Minimum 1:1 instances per relation (0 disables)");
  generate->add_option("--pairs-per-relation", gen.generation.pairs_per_relation)
      ->check(CLI::Range(2, 1 << 20));
  generate->add_option("--seed", gen.generation.seed, "Sampling seed");
  generate->add_option("--out-dataset", gen.out_dataset, "Term dataset (default stdout)");
  generate->add_option("--out-ids", gen.out_ids, "Concept-id dataset");
  generate->add_option("--out-stats", gen.out_stats, "Per-relation statistics (TSV)");
  generate->add_option("--out-review", gen.out_review, "Relation review report (TSV)");

  ReportConfig report;
  auto* rep = app.add_subcommand("report", "Summarize an outcomes file");
  rep->add_option("outcomes", report.outcomes, "Outcomes file from evaluate")->required();
  rep->add_option("--out-table", report.out_table, "Table output (default stdout)");
  rep->add_option("--out-csv", report.out_csv, "Per-relation CSV output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kFatal;
  }

  if (evaluate->parsed()) {
    eval.embeddings_format = parse_embedding_format(format);
    eval.setting = parse_setting(setting);
    eval.method.variant = parse_scoring_variant(method);
    eval.method.shift_cosines = shift;
    eval.normalize = !no_normalize;
    return cmd_evaluate(eval, std::cout, std::cerr);
  }
  if (generate->parsed()) return cmd_generate(gen, std::cout, std::cerr);
  return cmd_report(report, std::cout, std::cerr);
}

}  // namespace analogy::cli
