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

#ifndef ANALOGY_ERROR_HPP_
#define ANALOGY_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace analogy {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input. `location()` is a 1-based line number for text inputs
// and a byte offset for binary inputs; 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t location,
             const std::string& what)
      : Error(source + ":" + std::to_string(location) + ": " + what),
        location_(location) {}

  std::size_t location() const { return location_; }

 private:
  std::size_t location_;
};

}  // namespace analogy

#endif  // ANALOGY_ERROR_HPP_
