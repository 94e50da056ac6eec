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

#include "analogy/scoring.hpp"

namespace analogy {

ScoringVariant parse_scoring_variant(std::string_view name) {
  if (name == "cosadd") return ScoringVariant::kCosAdd;
  if (name == "pairdist") return ScoringVariant::kPairDist;
  if (name == "cosmul") return ScoringVariant::kCosMul;
  throw Error("unknown scoring method '" + std::string(name) + "'");
}

std::string_view scoring_variant_name(ScoringVariant variant) {
  switch (variant) {
    case ScoringVariant::kCosAdd:
      return "cosadd";
    case ScoringVariant::kPairDist:
      return "pairdist";
    case ScoringVariant::kCosMul:
      return "cosmul";
  }
  return "?";
}

}  // namespace analogy
