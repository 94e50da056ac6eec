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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "analogy/error.hpp"
#include "analogy/metrics.hpp"
#include "analogy/scoring.hpp"
#include "fixtures.hpp"

using namespace analogy;
using Positions = std::vector<std::size_t>;

namespace {

// Precision at each relevant rank of a 0/1 label list, averaged.
double brute_force_ap(const std::vector<int>& labels) {
  double total = 0;
  int hits = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!labels[i]) continue;
    ++hits;
    total += static_cast<double>(hits) / static_cast<double>(i + 1);
  }
  return hits ? total / hits : 0.0;
}

Positions positions_of(const std::vector<int>& labels) {
  Positions p;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i]) p.push_back(i + 1);
  }
  return p;
}

QueryOutcome outcome(const std::string& relation, bool correct, Positions positions,
                     std::size_t n_answers = 1) {
  QueryOutcome o;
  o.relation_id = relation;
  o.top_guess_correct = correct;
  o.n_answers_in_index = positions.size();
  o.answer_positions = std::move(positions);
  o.n_answers = n_answers;
  return o;
}

}  // namespace

TEST_CASE("average_precision") {
  CHECK(average_precision(Positions{1}) == 1.0);
  CHECK(average_precision(Positions{1, 2}) == 1.0);
  CHECK(average_precision(Positions{2, 4}) == 0.5);
  CHECK(average_precision(Positions{}) == 0.0);
}

TEST_CASE("reciprocal_rank") {
  CHECK(reciprocal_rank(Positions{1, 50}) == 1.0);
  CHECK(reciprocal_rank(Positions{4}) == 0.25);
  CHECK(reciprocal_rank(Positions{}) == 0.0);
  CHECK(reciprocal_rank(Positions{7}) == average_precision(Positions{7}));
}

TEST_CASE("relaxed_accuracy_hit is set membership") {
  CHECK(relaxed_accuracy_hit(3, {3}));
  CHECK_FALSE(relaxed_accuracy_hit(2, {3}));
  CHECK(relaxed_accuracy_hit(5, {4, 5, 6}));
  CHECK_FALSE(relaxed_accuracy_hit(0, {}));
}

TEST_CASE("hit through exclusion: b ranks first unexcluded") {
  const auto emb = analogy::testing::royal_embeddings<double>();
  const auto index = build_candidate_index<double>({"man", "woman", "king", "queen"}, emb);
  ResolvedQuery<double> q;
  q.a = emb.row(*emb.find("man")).transpose();
  q.b = {emb.row(*emb.find("woman")).transpose()};
  q.c = q.a;
  q.exclusions = {*index.find("man"), *index.find("woman")};
  const auto scores = score_all({}, q, index);
  const auto queen = *index.find("queen");
  CHECK(rank<double>(scores).order.front() == *index.find("woman"));
  CHECK(relaxed_accuracy_hit(top_candidate<double>(scores, q.exclusions), {queen}));
  const std::vector<Eigen::Index> answers = {queen};
  CHECK(answer_positions<double>(scores, answers) == Positions{2});
}

TEST_CASE("AP can exceed RR when later answers cluster") {
  // Precision at the second hit (2/7) beats precision at the first (1/6).
  const Positions p = {6, 7};
  CHECK(average_precision(p) == doctest::Approx((1.0 / 6 + 2.0 / 7) / 2));
  CHECK(average_precision(p) > reciprocal_rank(p));
}

TEST_CASE("property: AP matches a brute-force definition; bounds") {
  std::mt19937 rng(211);
  for (int trial = 0; trial < 10000; ++trial) {
    std::vector<int> labels(1 + rng() % 40);
    for (auto& l : labels) l = rng() % 6 == 0;
    const auto p = positions_of(labels);
    const double ap = average_precision(p), rr = reciprocal_rank(p);
    REQUIRE(ap == doctest::Approx(brute_force_ap(labels)).epsilon(1e-12));
    REQUIRE(ap >= 0.0);
    REQUIRE(ap <= 1.0);
    REQUIRE(rr >= 0.0);
    REQUIRE(rr <= 1.0);
    if (p.size() == 1) REQUIRE(ap == rr);
  }
}

TEST_CASE("summarize per relation and overall") {
  const auto one = summarize({outcome("R", true, {1}), outcome("R", false, {})});
  REQUIRE(one.relations.size() == 1);
  CHECK(one.relations[0].map == 0.5);
  CHECK(one.relations[0].rel_acc == 0.5);
  CHECK(one.relations[0].n_queries == 2);
  CHECK(one.overall.map.std == 0.0);

  const auto two = summarize({outcome("A", false, {5}), outcome("B", false, {5}),
                              outcome("B", false, {5, 6}, 2), outcome("B", false, {})});
  REQUIRE(two.relations.size() == 2);
  CHECK(two.relations[0].map == doctest::Approx(0.2));
  // (0.2 + (1/5 + 2/6)/2 + 0) / 3
  const double b_map = (0.2 + (0.2 + 2.0 / 6.0) / 2.0) / 3.0;
  CHECK(two.relations[1].map == doctest::Approx(b_map));
  CHECK(two.relations[1].ambiguity == doctest::Approx(4.0 / 3.0));
  CHECK(two.overall.map.mean == doctest::Approx((0.2 + b_map) / 2));
  CHECK(two.overall.n_queries == 4);
}

TEST_CASE("macro mean and population std") {
  const auto s = summarize({outcome("A", false, {5}), outcome("B", false, {5, 10}, 2),
                            outcome("B", false, {5}), outcome("B", false, {5})});
  // A: MAP 0.2. B: AP {0.2, 0.2, 0.2} -> 0.2. Same, so std 0.
  CHECK(s.overall.map.std == doctest::Approx(0.0));
  const double values[] = {0.2, 0.4};
  const auto ms = mean_std(values);
  CHECK(ms.mean == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(ms.std == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("all-perfect outcomes give 1.0 and zero spread") {
  const auto s = summarize({outcome("A", true, {1}), outcome("B", true, {1, 2}, 2),
                            outcome("C", true, {1})});
  for (const auto& r : s.relations) {
    CHECK(r.rel_acc == 1.0);
    CHECK(r.map == 1.0);
    CHECK(r.mrr == 1.0);
  }
  CHECK(s.overall.rel_acc.std == 0.0);
  CHECK(s.overall.map.std == 0.0);
  CHECK(s.overall.mrr.mean == 1.0);
}

TEST_CASE("summarize errors") {
  CHECK_THROWS_AS(summarize({}), Error);
  CHECK_THROWS_AS(summarize({outcome("", true, {1})}), Error);
}

TEST_CASE("property: adding answers never loses a relaxed-accuracy hit") {
  std::mt19937 rng(223);
  for (int trial = 0; trial < 1000; ++trial) {
    const Eigen::Index top = static_cast<Eigen::Index>(rng() % 20);
    std::unordered_set<Eigen::Index> single = {static_cast<Eigen::Index>(rng() % 20)};
    auto multi = single;
    for (unsigned k = 0; k < rng() % 5; ++k) multi.insert(static_cast<Eigen::Index>(rng() % 20));
    CHECK(relaxed_accuracy_hit(top, multi) >= relaxed_accuracy_hit(top, single));
  }
}
