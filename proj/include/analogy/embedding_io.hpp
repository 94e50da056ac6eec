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

#ifndef ANALOGY_EMBEDDING_IO_HPP_
#define ANALOGY_EMBEDDING_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "analogy/embedding.hpp"

namespace analogy {

enum class EmbeddingFormat {
  kText,          // header "<count> <dim>" if line 1 parses as one, else none
  kTextNoHeader,  // GloVe style; dim from line 1, count from line count
  kBinary,        // word2vec binary: header line, then "token " + dim LE f32
};

// Accepts "text", "text-noheader" and "binary".
EmbeddingFormat parse_embedding_format(std::string_view name);

// Throws ParseError on a malformed row (wrong arity, bad or non-finite
// number, zero vector, duplicate token). Text errors carry the line number,
// binary errors the byte offset.
EmbeddingMatrixf load_embeddings(const std::string& path,
                                 EmbeddingFormat format);

// kText writes the "<count> <dim>" header, kTextNoHeader omits it.
void save_embeddings(const EmbeddingMatrixf& emb, const std::string& path,
                     EmbeddingFormat format);

// One term per line; blank lines skipped.
std::vector<std::string> load_term_list(const std::string& path);

}  // namespace analogy

#endif  // ANALOGY_EMBEDDING_IO_HPP_
