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

#include "analogy/metrics.hpp"

#include <cmath>
#include <unordered_map>

#include "analogy/error.hpp"

namespace analogy {

bool relaxed_accuracy_hit(Eigen::Index top_guess,
                          const std::unordered_set<Eigen::Index>& d_valid) {
  return d_valid.count(top_guess) > 0;
}

double average_precision(std::span<const std::size_t> positions) {
  if (positions.empty()) return 0.0;
  double total = 0.0;
  for (std::size_t k = 0; k < positions.size(); ++k) {
    total += static_cast<double>(k + 1) / static_cast<double>(positions[k]);
  }
  return total / static_cast<double>(positions.size());
}

double reciprocal_rank(std::span<const std::size_t> positions) {
  if (positions.empty()) return 0.0;
  return 1.0 / static_cast<double>(positions.front());
}

MeanStd mean_std(std::span<const double> values) {
  if (values.empty()) return {};
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  var /= static_cast<double>(values.size());
  return {mean, std::sqrt(var)};
}

Summary summarize(const std::vector<QueryOutcome>& outcomes) {
  if (outcomes.empty()) throw Error("no query outcomes to summarize");
  struct Totals {
    std::size_t n = 0;
    double hits = 0, ap = 0, rr = 0, answers = 0;
  };
  std::vector<std::string> order;
  std::unordered_map<std::string, Totals> by_relation;
  Totals all;
  for (const auto& o : outcomes) {
    if (o.relation_id.empty()) throw Error("outcome without a relation id");
    auto [it, inserted] = by_relation.try_emplace(o.relation_id);
    if (inserted) order.push_back(o.relation_id);
    const double ap = average_precision(o.answer_positions);
    const double rr = reciprocal_rank(o.answer_positions);
    for (Totals* t : {&it->second, &all}) {
      ++t->n;
      t->hits += o.top_guess_correct ? 1.0 : 0.0;
      t->ap += ap;
      t->rr += rr;
      t->answers += static_cast<double>(o.n_answers);
    }
  }

  Summary summary;
  std::vector<double> acc, map, mrr;
  for (const auto& id : order) {
    const Totals& t = by_relation.at(id);
    const double n = static_cast<double>(t.n);
    summary.relations.push_back({id, t.n, t.hits / n, t.ap / n, t.rr / n, t.answers / n});
    acc.push_back(summary.relations.back().rel_acc);
    map.push_back(summary.relations.back().map);
    mrr.push_back(summary.relations.back().mrr);
  }
  auto& overall = summary.overall;
  overall.rel_acc = mean_std(acc);
  overall.map = mean_std(map);
  overall.mrr = mean_std(mrr);
  overall.n_queries = all.n;
  overall.micro_rel_acc = all.hits / static_cast<double>(all.n);
  overall.micro_map = all.ap / static_cast<double>(all.n);
  overall.micro_mrr = all.rr / static_cast<double>(all.n);
  return summary;
}

}  // namespace analogy
