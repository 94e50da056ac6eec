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

#ifndef ANALOGY_TEXT_HPP_
#define ANALOGY_TEXT_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace analogy {

// Lowercases `term`, removes every code point in Unicode general categories
// P* (punctuation) and S* (symbols), and splits the remainder on white
// space. Invalid UTF-8 bytes are dropped.
//
//   normalize_term("Common cold")  -> {"common", "cold"}
//   normalize_term("ICI 118630")   -> {"ici", "118630"}
std::vector<std::string> normalize_term(std::string_view term);

// Canonical lookup key of a term: its normalized tokens joined by one space.
std::string term_key(std::string_view term);

// Splits on `sep` keeping empty fields.
std::vector<std::string_view> split(std::string_view line, char sep);

std::string_view strip_line_ending(std::string_view line);

}  // namespace analogy

#endif  // ANALOGY_TEXT_HPP_
