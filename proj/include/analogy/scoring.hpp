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

#ifndef ANALOGY_SCORING_HPP_
#define ANALOGY_SCORING_HPP_

#include <Eigen/Dense>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "analogy/embedding.hpp"
#include "analogy/error.hpp"

namespace analogy {

enum class ScoringVariant { kCosAdd, kPairDist, kCosMul };

// Accepts "cosadd", "pairdist" and "cosmul".
ScoringVariant parse_scoring_variant(std::string_view name);
std::string_view scoring_variant_name(ScoringVariant variant);

struct ScoringMethod {
  ScoringVariant variant = ScoringVariant::kCosAdd;
  // CosMul denominator guard; must be > 0.
  double epsilon = 1e-3;
  // CosMul only: map each cosine x to (x + 1) / 2 before combining.
  bool shift_cosines = false;
};

inline void validate(const ScoringMethod& method) {
  if (!(method.epsilon > 0.0)) throw Error("epsilon must be > 0");
}

// Query-side vectors for one analogy plus the candidate rows to skip when
// picking the top guess (a, every used b, and c, where they are candidates).
template <typename Scalar>
struct ResolvedQuery {
  Vector<Scalar> a;
  std::vector<Vector<Scalar>> b;
  Vector<Scalar> c;
  std::vector<Eigen::Index> exclusions;
};

// Mean exemplar offset (1/|B|) sum_i (b_i - a), oriented b - a so that
// CosAdd targets offset + c. With one b this is exactly b - a.
template <typename DerivedA, typename Scalar = typename DerivedA::Scalar>
Vector<Scalar> exemplar_offset(const Eigen::MatrixBase<DerivedA>& a,
                               std::span<const Vector<Scalar>> b) {
  if (b.empty()) throw Error("exemplar_offset: empty exemplar list");
  Vector<Scalar> offset = Vector<Scalar>::Zero(a.size());
  for (const auto& bi : b) offset += bi - a;
  if (b.size() > 1) offset /= static_cast<Scalar>(b.size());
  return offset;
}

namespace detail {

// x / |x|, or the zero vector when |x| = 0 so that cos(d, 0) = 0.
template <typename Scalar>
Vector<Scalar> unit_or_zero(const Vector<Scalar>& x) {
  const Scalar norm = x.norm();
  if (norm == Scalar(0)) return Vector<Scalar>::Zero(x.size());
  return x / norm;
}

template <typename Scalar>
void check_dims(const ResolvedQuery<Scalar>& q, Eigen::Index dim) {
  bool ok = q.a.size() == dim && q.c.size() == dim && !q.b.empty();
  for (const auto& bi : q.b) ok = ok && bi.size() == dim;
  if (!ok) {
    throw Error("query dimension does not match candidate index dim " +
                std::to_string(dim));
  }
}

}  // namespace detail

// Scores every candidate row d (rows are unit length):
//   CosAdd   cos(d, offset + c)
//   PairDist cos(d - c, offset)
//   CosMul   mean_i cos(d, b_i) cos(d, c) / (cos(d, a) + epsilon)
// Rows are processed in blocks of `block_rows`; the result does not depend
// on the block size beyond floating-point summation order.
template <typename Scalar>
Vector<Scalar> score_all(const ScoringMethod& method,
                         const ResolvedQuery<Scalar>& q,
                         const CandidateIndex<Scalar>& index,
                         Eigen::Index block_rows = 4096) {
  validate(method);
  detail::check_dims(q, index.dim());
  if (block_rows <= 0) throw Error("block_rows must be > 0");
  const auto& rows = index.vectors();
  const Eigen::Index n = rows.rows();
  Vector<Scalar> scores(n);

  const Vector<Scalar> offset = exemplar_offset(q.a, std::span(q.b));
  const Scalar eps = static_cast<Scalar>(method.epsilon);

  // Per-variant query-side setup.
  Vector<Scalar> target;
  Scalar offset_norm(0);
  RowMatrix<Scalar> probes;  // CosMul: unit a, b_1..b_k, c as rows
  switch (method.variant) {
    case ScoringVariant::kCosAdd:
      target = detail::unit_or_zero<Scalar>(offset + q.c);
      break;
    case ScoringVariant::kPairDist:
      offset_norm = offset.norm();
      break;
    case ScoringVariant::kCosMul: {
      const auto k = static_cast<Eigen::Index>(q.b.size());
      probes.resize(k + 2, index.dim());
      probes.row(0) = detail::unit_or_zero(q.a).transpose();
      for (Eigen::Index i = 0; i < k; ++i) {
        probes.row(i + 1) =
            detail::unit_or_zero(q.b[static_cast<std::size_t>(i)]).transpose();
      }
      probes.row(k + 1) = detail::unit_or_zero(q.c).transpose();
      break;
    }
  }

  for (Eigen::Index start = 0; start < n; start += block_rows) {
    const Eigen::Index len = std::min(block_rows, n - start);
    const auto block = rows.middleRows(start, len);
    auto out = scores.segment(start, len);
    switch (method.variant) {
      case ScoringVariant::kCosAdd:
        out.noalias() = block * target;
        break;
      case ScoringVariant::kPairDist: {
        if (offset_norm == Scalar(0)) {
          out.setZero();
          break;
        }
        const RowMatrix<Scalar> diff = block.rowwise() - q.c.transpose();
        const Vector<Scalar> dots = diff * offset;
        const Vector<Scalar> norms = diff.rowwise().norm();
        for (Eigen::Index r = 0; r < len; ++r) {
          out(r) = norms(r) == Scalar(0) ? Scalar(0)
                                         : dots(r) / (norms(r) * offset_norm);
        }
        break;
      }
      case ScoringVariant::kCosMul: {
        RowMatrix<Scalar> cosines = block * probes.transpose();
        if (method.shift_cosines) {
          cosines = (cosines.array() + Scalar(1)) / Scalar(2);
        }
        const Eigen::Index k = probes.rows() - 2;
        for (Eigen::Index r = 0; r < len; ++r) {
          const Scalar denom = cosines(r, 0) + eps;
          const Scalar cc = cosines(r, k + 1);
          Scalar total(0);
          for (Eigen::Index i = 1; i <= k; ++i) total += cosines(r, i) * cc / denom;
          out(r) = k == 1 ? total : total / static_cast<Scalar>(k);
        }
        break;
      }
    }
  }
  return scores;
}

// Candidates sorted by descending score, ties by ascending index.
template <typename Scalar>
struct RankedResult {
  std::vector<Eigen::Index> order;
  Vector<Scalar> scores;
};

// Full ranking with `exclusions` removed. Throws if nothing is left.
template <typename Scalar>
RankedResult<Scalar> rank(const Vector<Scalar>& scores,
                          std::span<const Eigen::Index> exclusions = {}) {
  std::vector<bool> excluded(static_cast<std::size_t>(scores.size()), false);
  for (const auto i : exclusions) {
    if (i < 0 || i >= scores.size()) throw Error("exclusion index out of range");
    excluded[static_cast<std::size_t>(i)] = true;
  }
  RankedResult<Scalar> result{{}, scores};
  result.order.reserve(excluded.size());
  for (Eigen::Index i = 0; i < scores.size(); ++i) {
    if (!excluded[static_cast<std::size_t>(i)]) result.order.push_back(i);
  }
  if (result.order.empty()) throw Error("rank: every candidate is excluded");
  std::sort(result.order.begin(), result.order.end(),
            [&](Eigen::Index x, Eigen::Index y) {
              if (scores(x) != scores(y)) return scores(x) > scores(y);
              return x < y;
            });
  return result;
}

// First element of rank(scores, exclusions).order, in one pass.
template <typename Scalar>
Eigen::Index top_candidate(const Vector<Scalar>& scores,
                           std::span<const Eigen::Index> exclusions) {
  Eigen::Index best = -1;
  for (Eigen::Index i = 0; i < scores.size(); ++i) {
    if (std::find(exclusions.begin(), exclusions.end(), i) != exclusions.end()) {
      continue;
    }
    if (best < 0 || scores(i) > scores(best)) best = i;
  }
  if (best < 0) throw Error("rank: every candidate is excluded");
  return best;
}

// Sorted 1-based positions of `answers` in the unexcluded ranking, computed
// by counting the candidates that outrank each answer.
template <typename Scalar>
std::vector<std::size_t> answer_positions(const Vector<Scalar>& scores,
                                          std::span<const Eigen::Index> answers) {
  std::vector<std::size_t> positions;
  positions.reserve(answers.size());
  for (const auto j : answers) {
    const Scalar sj = scores(j);
    std::size_t ahead = 0;
    for (Eigen::Index i = 0; i < scores.size(); ++i) {
      ahead += scores(i) > sj || (scores(i) == sj && i < j);
    }
    positions.push_back(ahead + 1);
  }
  std::sort(positions.begin(), positions.end());
  return positions;
}

}  // namespace analogy

#endif  // ANALOGY_SCORING_HPP_
