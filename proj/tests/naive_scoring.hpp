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

#ifndef ANALOGY_TESTS_NAIVE_SCORING_HPP_
#define ANALOGY_TESTS_NAIVE_SCORING_HPP_

// Reference scorers for tests: per-candidate loops over plain arrays,
// written straight from the formulas and independent of score_all.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace analogy::testing {

using Vec = std::vector<double>;

inline double dot(const Vec& x, const Vec& y) {
  double s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

// cos(x, 0) := 0
inline double cosine(const Vec& x, const Vec& y) {
  const double nx = std::sqrt(dot(x, x));
  const double ny = std::sqrt(dot(y, y));
  if (nx == 0 || ny == 0) return 0;
  return dot(x, y) / (nx * ny);
}

inline Vec mean_offset(const Vec& a, const std::vector<Vec>& bs) {
  Vec o(a.size(), 0.0);
  for (const auto& b : bs) {
    for (std::size_t j = 0; j < a.size(); ++j) o[j] += b[j] - a[j];
  }
  for (auto& v : o) v /= static_cast<double>(bs.size());
  return o;
}

enum class NaiveMethod { kCosAdd, kPairDist, kCosMul };

inline double naive_score(NaiveMethod method, const Vec& d, const Vec& a,
                          const std::vector<Vec>& bs, const Vec& c, double eps = 1e-3,
                          bool shift = false) {
  const Vec o = mean_offset(a, bs);
  switch (method) {
    case NaiveMethod::kCosAdd: {
      Vec t(c.size());
      for (std::size_t j = 0; j < c.size(); ++j) t[j] = o[j] + c[j];
      return cosine(d, t);
    }
    case NaiveMethod::kPairDist: {
      Vec dc(c.size());
      for (std::size_t j = 0; j < c.size(); ++j) dc[j] = d[j] - c[j];
      return cosine(dc, o);
    }
    case NaiveMethod::kCosMul: {
      auto s = [&](double x) { return shift ? (x + 1) / 2 : x; };
      double total = 0;
      for (const auto& b : bs) {
        total += s(cosine(d, b)) * s(cosine(d, c)) / (s(cosine(d, a)) + eps);
      }
      return total / static_cast<double>(bs.size());
    }
  }
  return 0;
}

// Sort by (-score, index), dropping excluded indices.
inline std::vector<long> naive_rank(const std::vector<double>& scores,
                                    const std::vector<long>& exclusions = {}) {
  std::vector<std::pair<double, long>> keyed;
  for (long i = 0; i < static_cast<long>(scores.size()); ++i) {
    if (std::find(exclusions.begin(), exclusions.end(), i) != exclusions.end()) continue;
    keyed.emplace_back(-scores[static_cast<std::size_t>(i)], i);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<long> order;
  for (const auto& k : keyed) order.push_back(k.second);
  return order;
}

}  // namespace analogy::testing

#endif  // ANALOGY_TESTS_NAIVE_SCORING_HPP_
