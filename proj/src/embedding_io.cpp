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

#include "analogy/embedding_io.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace analogy {
namespace {

std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

template <typename T>
bool parse_number(std::string_view text, T& value) {
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  return ec == std::errc() && ptr == end;
}

std::ifstream open_or_throw(const std::string& path, std::ios::openmode mode) {
  std::ifstream in(path, mode);
  if (!in) throw Error("cannot open '" + path + "'");
  return in;
}

// Validation common to both formats; the EmbeddingMatrix constructor would
// catch these too, but without a location.
class RowChecker {
 public:
  RowChecker(const std::string& path) : path_(path) {}

  void check(const std::string& token, const float* values, std::size_t dim,
             std::size_t location) {
    bool nonzero = false;
    for (std::size_t j = 0; j < dim; ++j) {
      if (!std::isfinite(values[j])) {
        throw ParseError(path_, location, "non-finite value for '" + token + "'");
      }
      nonzero = nonzero || values[j] != 0.0f;
    }
    if (!nonzero) {
      throw ParseError(path_, location, "zero vector for '" + token + "'");
    }
    if (!seen_.insert(token).second) {
      throw ParseError(path_, location, "duplicate token '" + token + "'");
    }
  }

 private:
  const std::string& path_;
  std::unordered_set<std::string> seen_;
};

EmbeddingMatrixf load_text(const std::string& path, bool allow_header) {
  auto in = open_or_throw(path, std::ios::in);
  std::vector<std::string> tokens;
  std::vector<float> values;
  std::size_t dim = 0;
  std::size_t declared = 0;
  bool has_header = false;
  RowChecker checker(path);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = strip_line_ending(raw);
    const auto fields = split_whitespace(line);
    if (line_no == 1 && allow_header && fields.size() == 2) {
      std::size_t count = 0, width = 0;
      if (parse_number(fields[0], count) && parse_number(fields[1], width)) {
        if (width == 0) throw ParseError(path, line_no, "header dim is 0");
        has_header = true;
        declared = count;
        dim = width;
        continue;
      }
    }
    if (fields.empty()) {
      throw ParseError(path, line_no, "empty line");
    }
    if (dim == 0) {
      if (fields.size() < 2) throw ParseError(path, line_no, "no vector values");
      dim = fields.size() - 1;
    }
    if (fields.size() != dim + 1) {
      throw ParseError(path, line_no,
                       "expected " + std::to_string(dim) + " values, found " +
                           std::to_string(fields.size() - 1));
    }
    tokens.emplace_back(fields[0]);
    const std::size_t base = values.size();
    values.resize(base + dim);
    for (std::size_t j = 0; j < dim; ++j) {
      if (!parse_number(fields[j + 1], values[base + j])) {
        throw ParseError(path, line_no,
                         "bad number '" + std::string(fields[j + 1]) + "'");
      }
    }
    checker.check(tokens.back(), values.data() + base, dim, line_no);
  }
  if (has_header && tokens.size() != declared) {
    throw ParseError(path, line_no,
                     "header declares " + std::to_string(declared) +
                         " tokens, file has " + std::to_string(tokens.size()));
  }
  if (tokens.empty()) throw ParseError(path, line_no, "no embeddings");
  RowMatrix<float> vectors = Eigen::Map<RowMatrix<float>>(
      values.data(), static_cast<Eigen::Index>(tokens.size()),
      static_cast<Eigen::Index>(dim));
  return EmbeddingMatrixf(std::move(tokens), std::move(vectors));
}

float from_little_endian(const char* bytes) {
  std::uint32_t bits;
  std::memcpy(&bits, bytes, sizeof(bits));
  if constexpr (std::endian::native == std::endian::big) {
    bits = __builtin_bswap32(bits);
  }
  return std::bit_cast<float>(bits);
}

void to_little_endian(float value, char* bytes) {
  auto bits = std::bit_cast<std::uint32_t>(value);
  if constexpr (std::endian::native == std::endian::big) {
    bits = __builtin_bswap32(bits);
  }
  std::memcpy(bytes, &bits, sizeof(bits));
}

EmbeddingMatrixf load_binary(const std::string& path) {
  auto in = open_or_throw(path, std::ios::in | std::ios::binary);
  std::string header;
  if (!std::getline(in, header)) throw ParseError(path, 0, "missing header");
  const auto fields = split_whitespace(strip_line_ending(header));
  std::size_t count = 0, dim = 0;
  if (fields.size() != 2 || !parse_number(fields[0], count) ||
      !parse_number(fields[1], dim) || dim == 0) {
    throw ParseError(path, 0, "bad header '" + header + "'");
  }
  std::vector<std::string> tokens;
  tokens.reserve(count);
  RowMatrix<float> vectors(static_cast<Eigen::Index>(count),
                           static_cast<Eigen::Index>(dim));
  RowChecker checker(path);
  std::vector<char> buffer(dim * sizeof(float));
  for (std::size_t i = 0; i < count; ++i) {
    std::string token;
    char ch;
    // word2vec writes '\n' after each vector; tolerate any leading space.
    while (in.get(ch) && (ch == '\n' || ch == '\r' || ch == ' ')) {
    }
    while (in && ch != ' ') {
      token.push_back(ch);
      if (!in.get(ch)) break;
    }
    const auto offset = static_cast<std::size_t>(in.tellg());
    if (!in || token.empty()) {
      throw ParseError(path, offset, "truncated file at token " +
                                         std::to_string(i + 1) + " of " +
                                         std::to_string(count));
    }
    if (!in.read(buffer.data(), static_cast<std::streamsize>(buffer.size()))) {
      throw ParseError(path, offset,
                       "truncated vector for '" + token + "': expected " +
                           std::to_string(dim) + " floats");
    }
    auto row = vectors.row(static_cast<Eigen::Index>(i));
    for (std::size_t j = 0; j < dim; ++j) {
      row(static_cast<Eigen::Index>(j)) =
          from_little_endian(buffer.data() + j * sizeof(float));
    }
    checker.check(token, row.data(), dim, offset);
    tokens.push_back(std::move(token));
  }
  if (count == 0) throw ParseError(path, 0, "no embeddings");
  return EmbeddingMatrixf(std::move(tokens), std::move(vectors));
}

}  // namespace

EmbeddingFormat parse_embedding_format(std::string_view name) {
  if (name == "text") return EmbeddingFormat::kText;
  if (name == "text-noheader") return EmbeddingFormat::kTextNoHeader;
  if (name == "binary") return EmbeddingFormat::kBinary;
  throw Error("unknown embedding format '" + std::string(name) + "'");
}

EmbeddingMatrixf load_embeddings(const std::string& path,
                                 EmbeddingFormat format) {
  switch (format) {
    case EmbeddingFormat::kText:
      return load_text(path, /*allow_header=*/true);
    case EmbeddingFormat::kTextNoHeader:
      return load_text(path, /*allow_header=*/false);
    case EmbeddingFormat::kBinary:
      return load_binary(path);
  }
  throw Error("unknown embedding format");
}

void save_embeddings(const EmbeddingMatrixf& emb, const std::string& path,
                     EmbeddingFormat format) {
  std::ofstream out(path, std::ios::out | std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path + "'");
  const auto& tokens = emb.tokens();
  if (format == EmbeddingFormat::kBinary) {
    out << emb.size() << ' ' << emb.dim() << '\n';
    std::vector<char> buffer(static_cast<std::size_t>(emb.dim()) * sizeof(float));
    for (Eigen::Index i = 0; i < emb.size(); ++i) {
      out << tokens[static_cast<std::size_t>(i)] << ' ';
      for (Eigen::Index j = 0; j < emb.dim(); ++j) {
        to_little_endian(emb.vectors()(i, j),
                         buffer.data() + static_cast<std::size_t>(j) * sizeof(float));
      }
      out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
      out << '\n';
    }
  } else {
    if (format == EmbeddingFormat::kText) {
      out << emb.size() << ' ' << emb.dim() << '\n';
    }
    char number[32];
    for (Eigen::Index i = 0; i < emb.size(); ++i) {
      out << tokens[static_cast<std::size_t>(i)];
      for (Eigen::Index j = 0; j < emb.dim(); ++j) {
        // Shortest representation that parses back to the same float.
        auto [end, ec] = std::to_chars(number, number + sizeof(number),
                                       emb.vectors()(i, j));
        out << ' ' << std::string_view(number, static_cast<std::size_t>(end - number));
      }
      out << '\n';
    }
  }
  if (!out) throw Error("write failed for '" + path + "'");
}

std::vector<std::string> load_term_list(const std::string& path) {
  auto in = open_or_throw(path, std::ios::in);
  std::vector<std::string> terms;
  std::string raw;
  while (std::getline(in, raw)) {
    const auto line = strip_line_ending(raw);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    terms.emplace_back(line);
  }
  return terms;
}

}  // namespace analogy
