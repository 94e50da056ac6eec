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

#ifndef ANALOGY_CLI_HPP_
#define ANALOGY_CLI_HPP_

#include <iosfwd>
#include <string>

#include "analogy/datagen.hpp"
#include "analogy/dataset.hpp"
#include "analogy/embedding_io.hpp"
#include "analogy/scoring.hpp"

namespace analogy::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFatal = 1;
inline constexpr int kSkipped = 2;  // evaluate: some analogies were skipped

struct EvaluateConfig {
  std::string embeddings;
  EmbeddingFormat embeddings_format = EmbeddingFormat::kText;
  std::string candidates;
  std::string dataset;
  EvaluationSetting setting = EvaluationSetting::kMultiAnswer;
  ScoringMethod method;
  bool normalize = true;
  std::size_t workers = 1;
  std::string out_table;  // stdout when empty
  std::string out_csv;
  std::string out_outcomes;
};

struct GenerateConfig {
  std::string triples;
  std::string lexicon;
  std::string frequencies;
  std::string allowlist;  // optional
  datagen::GenerationConfig generation;
  std::string out_dataset;  // term rendering
  std::string out_ids;      // concept-id rendering
  std::string out_stats;
  std::string out_review;
};

struct ReportConfig {
  std::string outcomes;
  std::string out_table;  // stdout when empty
  std::string out_csv;
};

int cmd_evaluate(const EvaluateConfig& config, std::ostream& out, std::ostream& err);
int cmd_generate(const GenerateConfig& config, std::ostream& out, std::ostream& err);
int cmd_report(const ReportConfig& config, std::ostream& out, std::ostream& err);

// Parses `analogykit <evaluate|generate|report> [flags]` and dispatches.
int run(int argc, const char* const* argv);

}  // namespace analogy::cli

#endif  // ANALOGY_CLI_HPP_
