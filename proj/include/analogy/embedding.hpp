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

#ifndef ANALOGY_EMBEDDING_HPP_
#define ANALOGY_EMBEDDING_HPP_

#include <Eigen/Dense>

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "analogy/error.hpp"
#include "analogy/text.hpp"

namespace analogy {

template <typename Scalar>
using RowMatrix =
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// A token vocabulary with one dense row per token. Rows are never zero and
// every entry is finite; tokens are unique.
template <typename Scalar>
class EmbeddingMatrix {
 public:
  using Index = Eigen::Index;

  EmbeddingMatrix() = default;

  EmbeddingMatrix(std::vector<std::string> tokens, RowMatrix<Scalar> vectors)
      : tokens_(std::move(tokens)), vectors_(std::move(vectors)) {
    if (static_cast<Index>(tokens_.size()) != vectors_.rows()) {
      throw Error("embedding matrix: " + std::to_string(tokens_.size()) +
                  " tokens but " + std::to_string(vectors_.rows()) + " rows");
    }
    if (vectors_.cols() <= 0) throw Error("embedding matrix: dim must be > 0");
    rows_.reserve(tokens_.size());
    for (Index i = 0; i < vectors_.rows(); ++i) {
      const auto& token = tokens_[static_cast<std::size_t>(i)];
      if (!rows_.emplace(token, i).second) {
        throw Error("embedding matrix: duplicate token '" + token + "'");
      }
      if (!vectors_.row(i).allFinite()) {
        throw Error("embedding matrix: non-finite value for '" + token + "'");
      }
      if (vectors_.row(i).squaredNorm() == Scalar(0)) {
        throw Error("embedding matrix: zero vector for '" + token + "'");
      }
    }
  }

  Index size() const { return vectors_.rows(); }
  Index dim() const { return vectors_.cols(); }
  const std::vector<std::string>& tokens() const { return tokens_; }
  const RowMatrix<Scalar>& vectors() const { return vectors_; }
  auto row(Index i) const { return vectors_.row(i); }

  std::optional<Index> find(std::string_view token) const {
    const auto it = rows_.find(std::string(token));
    if (it == rows_.end()) return std::nullopt;
    return it->second;
  }

  // Copy with every row scaled to unit L2 norm.
  EmbeddingMatrix normalized() const {
    RowMatrix<Scalar> unit = vectors_;
    unit.rowwise().normalize();
    return EmbeddingMatrix(tokens_, std::move(unit));
  }

  template <typename Other>
  EmbeddingMatrix<Other> cast() const {
    return EmbeddingMatrix<Other>(tokens_, vectors_.template cast<Other>());
  }

 private:
  std::vector<std::string> tokens_;
  RowMatrix<Scalar> vectors_;
  std::unordered_map<std::string, Index> rows_;
};

using EmbeddingMatrixf = EmbeddingMatrix<float>;
using EmbeddingMatrixd = EmbeddingMatrix<double>;

template <typename Scalar>
struct ComposedTerm {
  std::string surface;
  std::vector<std::string> tokens;
  std::vector<std::string> in_vocab;
  // Absent iff `in_vocab` is empty.
  std::optional<Vector<Scalar>> vector;
};

// Represents a (possibly multi-word) term as the mean of the raw vectors of
// its in-vocabulary tokens. Out-of-vocabulary tokens are ignored; a term
// with no in-vocabulary token has no vector. The sum is accumulated in
// double so the result does not depend on token order.
template <typename Scalar>
ComposedTerm<Scalar> compose_term(std::string_view term,
                                  const EmbeddingMatrix<Scalar>& emb) {
  ComposedTerm<Scalar> composed;
  composed.surface = std::string(term);
  composed.tokens = normalize_term(term);
  Vector<double> sum = Vector<double>::Zero(emb.dim());
  for (const auto& token : composed.tokens) {
    if (const auto row = emb.find(token)) {
      composed.in_vocab.push_back(token);
      sum += emb.row(*row).transpose().template cast<double>();
    }
  }
  if (!composed.in_vocab.empty()) {
    sum /= static_cast<double>(composed.in_vocab.size());
    composed.vector = sum.template cast<Scalar>();
  }
  return composed;
}

// The answer vocabulary: unit-normalized composed vectors, one per distinct
// term key, in first-occurrence order.
template <typename Scalar>
class CandidateIndex {
 public:
  using Index = Eigen::Index;

  CandidateIndex(std::vector<std::string> surfaces, RowMatrix<Scalar> vectors,
                 std::size_t discarded)
      : surfaces_(std::move(surfaces)),
        vectors_(std::move(vectors)),
        discarded_(discarded) {
    if (surfaces_.empty()) {
      throw Error("candidate index is empty: no term has an in-vocabulary word");
    }
    for (std::size_t i = 0; i < surfaces_.size(); ++i) {
      if (!keys_.emplace(term_key(surfaces_[i]), static_cast<Index>(i))
               .second) {
        throw Error("candidate index: duplicate term '" + surfaces_[i] + "'");
      }
    }
  }

  Index size() const { return vectors_.rows(); }
  Index dim() const { return vectors_.cols(); }
  std::size_t discarded() const { return discarded_; }
  const std::vector<std::string>& surfaces() const { return surfaces_; }
  const RowMatrix<Scalar>& vectors() const { return vectors_; }

  // Looks a term up by its normalized key.
  std::optional<Index> find(std::string_view term) const {
    const auto it = keys_.find(term_key(term));
    if (it == keys_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::vector<std::string> surfaces_;
  RowMatrix<Scalar> vectors_;
  std::size_t discarded_;
  std::unordered_map<std::string, Index> keys_;
};

// Composes every term, drops duplicates (by normalized key, first wins) and
// terms with no in-vocabulary word, and unit-normalizes the survivors.
// `discarded()` counts the dropped all-OOV terms; duplicates are not counted.
template <typename Scalar>
CandidateIndex<Scalar> build_candidate_index(
    const std::vector<std::string>& terms, const EmbeddingMatrix<Scalar>& emb) {
  std::unordered_map<std::string, bool> seen;
  std::vector<std::string> kept;
  std::vector<Vector<Scalar>> rows;
  std::size_t discarded = 0;
  for (const auto& term : terms) {
    if (!seen.emplace(term_key(term), true).second) continue;
    auto composed = compose_term(term, emb);
    if (!composed.vector) {
      ++discarded;
      continue;
    }
    const Scalar norm = composed.vector->norm();
    if (norm == Scalar(0)) {
      ++discarded;
      continue;
    }
    kept.push_back(term);
    rows.push_back(*composed.vector / norm);
  }
  RowMatrix<Scalar> vectors(static_cast<Eigen::Index>(rows.size()), emb.dim());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    vectors.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  }
  return CandidateIndex<Scalar>(std::move(kept), std::move(vectors), discarded);
}

}  // namespace analogy

#endif  // ANALOGY_EMBEDDING_HPP_
