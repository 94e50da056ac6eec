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

#ifndef ANALOGY_TESTS_FIXTURES_HPP_
#define ANALOGY_TESTS_FIXTURES_HPP_

#include <string>
#include <vector>

#include "analogy/dataset.hpp"
#include "analogy/embedding.hpp"

namespace analogy::testing {

// man = (1,0), woman = (0,1), king = (1,1)/sqrt(2), queen = (0,1).
// Queen and woman share a vector, so they tie on every score; queen is
// listed before woman so the tie resolves in queen's favour in the full
// (unexcluded) ranking.
template <typename Scalar>
EmbeddingMatrix<Scalar> royal_embeddings() {
  RowMatrix<Scalar> v(4, 2);
  const Scalar h = Scalar(1) / std::sqrt(Scalar(2));
  v << 1, 0,  //
      0, 1,   //
      h, h,   //
      0, 1;
  return EmbeddingMatrix<Scalar>({"man", "woman", "king", "queen"}, std::move(v));
}

inline const std::vector<std::string>& royal_candidates() {
  static const std::vector<std::string> terms = {"queen", "man", "woman", "king"};
  return terms;
}

inline AnalogyRecord royal_record() {
  return {"royalty", "man", {"woman"}, "king", {"queen"}};
}

inline constexpr const char* kRoyalEmbeddingsText =
    "4 2\nman 1 0\nwoman 0 1\nking 1 1\nqueen 0 1\n";
inline constexpr const char* kRoyalCandidatesText = "queen\nman\nwoman\nking\n";
inline constexpr const char* kRoyalDatasetText = "royalty\tman\twoman\tking\tqueen\n";

}  // namespace analogy::testing

#endif  // ANALOGY_TESTS_FIXTURES_HPP_
