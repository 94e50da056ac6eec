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

#include "analogy/text.hpp"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

namespace analogy {

std::vector<std::string> normalize_term(std::string_view term) {
  std::vector<std::string> tokens;
  std::string current;
  const auto* bytes = reinterpret_cast<const uint8_t*>(term.data());
  const auto length = static_cast<int32_t>(term.size());
  int32_t offset = 0;
  while (offset < length) {
    UChar32 c;
    U8_NEXT(bytes, offset, length, c);
    if (c < 0) continue;
    if (u_isUWhiteSpace(c)) {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
      continue;
    }
    if (U_GET_GC_MASK(c) & (U_GC_P_MASK | U_GC_S_MASK)) continue;
    c = u_tolower(c);
    char buffer[U8_MAX_LENGTH];
    int32_t written = 0;
    UBool error = false;
    U8_APPEND(reinterpret_cast<uint8_t*>(buffer), written, U8_MAX_LENGTH, c,
              error);
    if (!error) current.append(buffer, static_cast<std::size_t>(written));
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::string term_key(std::string_view term) {
  std::string key;
  for (const auto& token : normalize_term(term)) {
    if (!key.empty()) key.push_back(' ');
    key += token;
  }
  return key;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string_view strip_line_ending(std::string_view line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) {
    line.remove_suffix(1);
  }
  return line;
}

}  // namespace analogy
