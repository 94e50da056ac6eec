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

#ifndef ANALOGY_EVALUATE_HPP_
#define ANALOGY_EVALUATE_HPP_

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "analogy/dataset.hpp"
#include "analogy/embedding.hpp"
#include "analogy/metrics.hpp"
#include "analogy/scoring.hpp"

namespace analogy {

struct EvaluationOptions {
  EvaluationSetting setting = EvaluationSetting::kMultiAnswer;
  ScoringMethod method;
  // Scale a, each b and c to unit length before the offset arithmetic.
  bool normalize_queries = true;
  std::size_t workers = 1;
  Eigen::Index block_rows = 4096;
};

struct SkippedQuery {
  std::size_t record = 0;
  std::string reason;
};

struct EvaluationResult {
  std::vector<QueryOutcome> outcomes;  // dataset order
  std::vector<SkippedQuery> skipped;   // dataset order
  // Scored queries none of whose answers is a candidate (AP = RR = 0).
  std::size_t no_answer_in_index = 0;
};

// Composes the query-side terms of `view`. Returns nullopt, with the
// offending term in `*missing`, if a, any used b, or c has no
// in-vocabulary word.
template <typename Scalar>
std::optional<ResolvedQuery<Scalar>> resolve_query(
    const QueryView& view, const EmbeddingMatrix<Scalar>& emb,
    const CandidateIndex<Scalar>& index, bool normalize,
    std::string* missing = nullptr) {
  auto vector_of = [&](std::string_view term) -> std::optional<Vector<Scalar>> {
    auto composed = compose_term(term, emb);
    if (!composed.vector) {
      if (missing) *missing = std::string(term);
      return std::nullopt;
    }
    if (normalize) return detail::unit_or_zero<Scalar>(*composed.vector);
    return std::move(*composed.vector);
  };
  ResolvedQuery<Scalar> q;
  auto a = vector_of(view.a);
  if (!a) return std::nullopt;
  q.a = std::move(*a);
  for (auto b : view.b_used) {
    auto bv = vector_of(b);
    if (!bv) return std::nullopt;
    q.b.push_back(std::move(*bv));
  }
  auto c = vector_of(view.c);
  if (!c) return std::nullopt;
  q.c = std::move(*c);

  auto exclude = [&](std::string_view term) {
    if (const auto i = index.find(term)) q.exclusions.push_back(*i);
  };
  exclude(view.a);
  for (auto b : view.b_used) exclude(b);
  exclude(view.c);
  std::sort(q.exclusions.begin(), q.exclusions.end());
  q.exclusions.erase(std::unique(q.exclusions.begin(), q.exclusions.end()),
                     q.exclusions.end());
  return q;
}

// Scores one record under `options.setting`. Returns nullopt (and fills
// `*skip_reason`) when the query side cannot be composed.
template <typename Scalar>
std::optional<QueryOutcome> evaluate_record(const AnalogyRecord& record,
                                            std::size_t record_index,
                                            const EmbeddingMatrix<Scalar>& emb,
                                            const CandidateIndex<Scalar>& index,
                                            const EvaluationOptions& options,
                                            std::string* skip_reason = nullptr) {
  const QueryView view = apply_setting(record, options.setting);
  std::string missing;
  const auto query = resolve_query(view, emb, index, options.normalize_queries, &missing);
  if (!query) {
    if (skip_reason) *skip_reason = "no in-vocabulary word in '" + missing + "'";
    return std::nullopt;
  }
  const Vector<Scalar> scores = score_all(options.method, *query, index, options.block_rows);

  std::vector<Eigen::Index> answers;
  for (auto d : view.d_valid) {
    if (const auto i = index.find(d)) answers.push_back(*i);
  }
  std::sort(answers.begin(), answers.end());
  answers.erase(std::unique(answers.begin(), answers.end()), answers.end());
  const std::unordered_set<Eigen::Index> answer_set(answers.begin(), answers.end());

  QueryOutcome outcome;
  outcome.relation_id = record.relation_id;
  outcome.record = record_index;
  outcome.n_answers = record.d_list.size();
  outcome.top_guess_correct = relaxed_accuracy_hit(
      top_candidate<Scalar>(scores, query->exclusions), answer_set);
  outcome.answer_positions = answer_positions<Scalar>(scores, answers);
  outcome.n_answers_in_index = answers.size();
  return outcome;
}

// Evaluates every record on `options.workers` threads sharing the immutable
// embeddings and index. Output order is dataset order for any worker count.
template <typename Scalar>
EvaluationResult evaluate(const std::vector<AnalogyRecord>& records,
                          const EmbeddingMatrix<Scalar>& emb,
                          const CandidateIndex<Scalar>& index,
                          const EvaluationOptions& options) {
  validate(options.method);
  if (options.workers < 1) throw Error("worker count must be >= 1");
  std::vector<std::optional<QueryOutcome>> slots(records.size());
  std::vector<std::string> reasons(records.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto work = [&] {
    try {
      for (std::size_t i = next++; i < records.size(); i = next++) {
        slots[i] = evaluate_record(records[i], i, emb, index, options, &reasons[i]);
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = records.size();
    }
  };
  const std::size_t n_threads = std::min(options.workers, std::max<std::size_t>(records.size(), 1));
  if (n_threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(n_threads);
    for (std::size_t t = 0; t < n_threads; ++t) threads.emplace_back(work);
  }
  if (error) std::rethrow_exception(error);

  EvaluationResult result;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (slots[i]) {
      result.no_answer_in_index += slots[i]->n_answers_in_index == 0;
      result.outcomes.push_back(std::move(*slots[i]));
    } else {
      result.skipped.push_back({i, std::move(reasons[i])});
    }
  }
  return result;
}

}  // namespace analogy

#endif  // ANALOGY_EVALUATE_HPP_
