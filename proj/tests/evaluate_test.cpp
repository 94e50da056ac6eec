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

#include "analogy/evaluate.hpp"
#include "fixtures.hpp"

using namespace analogy;
using analogy::testing::royal_candidates;
using analogy::testing::royal_embeddings;
using analogy::testing::royal_record;

namespace {

constexpr EvaluationSetting kSettings[] = {EvaluationSetting::kSingleAnswer,
                                           EvaluationSetting::kMultiAnswer,
                                           EvaluationSetting::kAllInfo};
constexpr ScoringVariant kVariants[] = {ScoringVariant::kCosAdd, ScoringVariant::kPairDist,
                                        ScoringVariant::kCosMul};

struct RandomWorld {
  EmbeddingMatrixd emb;
  std::vector<std::string> terms;
  std::vector<AnalogyRecord> records;
};

// Words w0..w(n-1); terms are 1-3 word phrases; records draw from terms
// with 1-3 exemplar objects and answers. Some answers are not candidates.
RandomWorld random_world(std::mt19937& rng, int n_words, int dim, int n_records) {
  std::normal_distribution<double> normal;
  std::vector<std::string> words;
  RowMatrix<double> v(n_words, dim);
  for (int i = 0; i < n_words; ++i) {
    words.push_back("w" + std::to_string(i));
    for (int j = 0; j < dim; ++j) v(i, j) = normal(rng);
  }
  RandomWorld world{EmbeddingMatrixd(words, v), {}, {}};
  std::vector<std::string> pool;
  for (int i = 0; i < 3 * n_words; ++i) {
    std::string t = words[rng() % words.size()];
    for (unsigned k = 0; k < rng() % 3; ++k) t += " " + words[rng() % words.size()];
    pool.push_back(t);
  }
  world.terms.assign(pool.begin(), pool.begin() + 2 * n_words);
  auto distinct = [&](std::size_t k) {
    std::vector<std::string> out;
    while (out.size() < k) {
      const auto& t = pool[rng() % pool.size()];
      if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
    }
    return out;
  };
  for (int r = 0; r < n_records; ++r) {
    AnalogyRecord rec;
    rec.relation_id = "R" + std::to_string(r % 4);
    const auto subjects = distinct(2);
    rec.a = subjects[0];
    rec.c = subjects[1];
    rec.b_list = distinct(1 + rng() % 3);
    rec.d_list = distinct(1 + rng() % 3);
    world.records.push_back(rec);
  }
  return world;
}

}  // namespace

TEST_CASE("royal fixture is perfect under every method and setting") {
  const auto emb = royal_embeddings<double>();
  const auto index = build_candidate_index(royal_candidates(), emb);
  for (auto setting : kSettings) {
    for (auto variant : kVariants) {
      EvaluationOptions options;
      options.setting = setting;
      options.method.variant = variant;
      const auto result = evaluate({royal_record()}, emb, index, options);
      REQUIRE(result.outcomes.size() == 1);
      const auto summary = summarize(result.outcomes);
      CHECK(summary.relations[0].rel_acc == 1.0);
      CHECK(summary.relations[0].map == 1.0);
      CHECK(summary.relations[0].mrr == 1.0);
    }
  }
}

TEST_CASE("query terms with no in-vocabulary word are skipped") {
  const auto emb = royal_embeddings<double>();
  const auto index = build_candidate_index(royal_candidates(), emb);
  auto bad = royal_record();
  bad.c = "prince regent";
  const auto result = evaluate({royal_record(), bad}, emb, index, {});
  CHECK(result.outcomes.size() == 1);
  REQUIRE(result.skipped.size() == 1);
  CHECK(result.skipped[0].record == 1);
  CHECK(result.skipped[0].reason.find("prince regent") != std::string::npos);
}

TEST_CASE("answers outside the candidate index are left out of AP") {
  const auto emb = royal_embeddings<double>();
  const auto index = build_candidate_index(royal_candidates(), emb);
  auto record = royal_record();
  record.d_list = {"queen", "empress"};
  const auto result = evaluate({record}, emb, index, {});
  REQUIRE(result.outcomes.size() == 1);
  const auto& o = result.outcomes[0];
  CHECK(o.n_answers == 2);
  CHECK(o.n_answers_in_index == 1);
  CHECK(o.answer_positions == std::vector<std::size_t>{1});

  record.d_list = {"empress"};
  const auto none = evaluate({record}, emb, index, {});
  CHECK(none.no_answer_in_index == 1);
  CHECK(none.outcomes[0].answer_positions.empty());
}

TEST_CASE("all-info excludes every exemplar object") {
  const auto emb = royal_embeddings<double>();
  const auto index = build_candidate_index(royal_candidates(), emb);
  AnalogyRecord record{"R", "man", {"woman", "queen"}, "king", {"queen"}};
  const auto view = apply_setting(record, EvaluationSetting::kAllInfo);
  const auto q = resolve_query(view, emb, index, true);
  REQUIRE(q.has_value());
  CHECK(q->exclusions.size() == 4);
  const auto single = resolve_query(apply_setting(record, EvaluationSetting::kSingleAnswer),
                                    emb, index, true);
  CHECK(single->exclusions.size() == 3);
}

TEST_CASE("query normalization can be switched off") {
  RowMatrix<double> v(4, 2);
  v << 10, 0, 0, 1, 1, 1, 0.2, 1;
  const EmbeddingMatrixd emb({"man", "woman", "king", "queen"}, v);
  const auto index = build_candidate_index<double>({"man", "woman", "king", "queen"}, emb);
  const auto record = royal_record();
  const auto view = apply_setting(record, EvaluationSetting::kSingleAnswer);
  const auto unit = *resolve_query(view, emb, index, true);
  const auto raw = *resolve_query(view, emb, index, false);
  CHECK(unit.a == Eigen::Vector2d(1, 0));
  CHECK(raw.a == Eigen::Vector2d(10, 0));
  CHECK_FALSE(score_all({}, unit, index).isApprox(score_all({}, raw, index)));
}

TEST_CASE("property: worker count does not change outcomes") {
  std::mt19937 rng(307);
  const auto world = random_world(rng, 60, 8, 200);
  const auto index = build_candidate_index(world.terms, world.emb);
  for (auto variant : kVariants) {
    EvaluationOptions options;
    options.method.variant = variant;
    options.setting = EvaluationSetting::kAllInfo;
    const auto serial = evaluate(world.records, world.emb, index, options);
    options.workers = 4;
    const auto parallel = evaluate(world.records, world.emb, index, options);
    CHECK(serial.outcomes == parallel.outcomes);
    CHECK(serial.skipped.size() == parallel.skipped.size());
  }
}

TEST_CASE("property: singleton lists make the three settings agree exactly") {
  std::mt19937 rng(311);
  auto world = random_world(rng, 50, 6, 120);
  for (auto& r : world.records) {
    r.b_list.resize(1);
    r.d_list.resize(1);
  }
  const auto index = build_candidate_index(world.terms, world.emb);
  for (auto variant : kVariants) {
    std::vector<std::vector<QueryOutcome>> per_setting;
    for (auto setting : kSettings) {
      EvaluationOptions options;
      options.setting = setting;
      options.method.variant = variant;
      per_setting.push_back(evaluate(world.records, world.emb, index, options).outcomes);
    }
    CHECK(per_setting[0] == per_setting[1]);
    CHECK(per_setting[0] == per_setting[2]);
  }
}

TEST_CASE("property: multi-answer hits cover single-answer hits") {
  std::mt19937 rng(313);
  const auto world = random_world(rng, 40, 5, 300);
  const auto index = build_candidate_index(world.terms, world.emb);
  EvaluationOptions single, multi;
  single.setting = EvaluationSetting::kSingleAnswer;
  multi.setting = EvaluationSetting::kMultiAnswer;
  const auto s = evaluate(world.records, world.emb, index, single).outcomes;
  const auto m = evaluate(world.records, world.emb, index, multi).outcomes;
  REQUIRE(s.size() == m.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(m[i].top_guess_correct >= s[i].top_guess_correct);
    CHECK(m[i].n_answers_in_index >= s[i].n_answers_in_index);
  }
}

TEST_CASE("invalid options are rejected") {
  const auto emb = royal_embeddings<double>();
  const auto index = build_candidate_index(royal_candidates(), emb);
  EvaluationOptions options;
  options.workers = 0;
  CHECK_THROWS_AS(evaluate({royal_record()}, emb, index, options), Error);
  options.workers = 1;
  options.method.epsilon = -1;
  CHECK_THROWS_AS(evaluate({royal_record()}, emb, index, options), Error);
}
