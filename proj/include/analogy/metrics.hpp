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

#ifndef ANALOGY_METRICS_HPP_
#define ANALOGY_METRICS_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include <Eigen/Core>

namespace analogy {

// Per-query result. `top_guess_correct` comes from the ranking with a, B and
// c excluded; `answer_positions` from the full ranking.
struct QueryOutcome {
  std::string relation_id;
  std::size_t record = 0;     // 0-based position in the dataset
  std::size_t n_answers = 0;  // |d_list|, for the ambiguity column
  bool top_guess_correct = false;
  std::vector<std::size_t> answer_positions;  // sorted, 1-based
  std::size_t n_answers_in_index = 0;

  bool operator==(const QueryOutcome&) const = default;
};

bool relaxed_accuracy_hit(Eigen::Index top_guess,
                          const std::unordered_set<Eigen::Index>& d_valid);

// (1/n) sum_k k / position_k over the n answers present in the index;
// 0 when none is present.
double average_precision(std::span<const std::size_t> positions);

// 1 / position of the first answer; 0 when none is present.
double reciprocal_rank(std::span<const std::size_t> positions);

struct RelationSummary {
  std::string relation_id;
  std::size_t n_queries = 0;
  double rel_acc = 0.0;
  double map = 0.0;
  double mrr = 0.0;
  double ambiguity = 0.0;
};

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;  // population
};

struct OverallSummary {
  // Macro: across relation summaries.
  MeanStd rel_acc, map, mrr;
  // Micro: across all queries.
  std::size_t n_queries = 0;
  double micro_rel_acc = 0.0, micro_map = 0.0, micro_mrr = 0.0;
};

struct Summary {
  std::vector<RelationSummary> relations;
  OverallSummary overall;
};

// Relations appear in order of first appearance among `outcomes`.
// Throws on empty input.
Summary summarize(const std::vector<QueryOutcome>& outcomes);

MeanStd mean_std(std::span<const double> values);

}  // namespace analogy

#endif  // ANALOGY_METRICS_HPP_
