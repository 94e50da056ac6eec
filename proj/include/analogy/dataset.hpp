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

#ifndef ANALOGY_DATASET_HPP_
#define ANALOGY_DATASET_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace analogy {

// a : B :: c : D. `b_list` and `d_list` keep file order; their first
// elements are the "first listed" objects.
struct AnalogyRecord {
  std::string relation_id;
  std::string a;
  std::vector<std::string> b_list;
  std::string c;
  std::vector<std::string> d_list;

  bool operator==(const AnalogyRecord&) const = default;
};

enum class EvaluationSetting { kSingleAnswer, kMultiAnswer, kAllInfo };

// Accepts "single", "multi" and "all-info".
EvaluationSetting parse_setting(std::string_view name);
std::string_view setting_name(EvaluationSetting setting);

// The parts of a record that a setting exposes to the scorer.
struct QueryView {
  std::string_view a;
  std::vector<std::string_view> b_used;
  std::string_view c;
  std::vector<std::string_view> d_valid;
};

// Throws Error if the record breaks an AnalogyRecord invariant.
void validate_record(const AnalogyRecord& record);

// Reads the tab-separated dataset format:
//   relation_id \t a \t b1|b2|... \t c \t d1|d2|...
// '#' lines and blank lines are skipped. Errors name the line.
std::vector<AnalogyRecord> parse_dataset(const std::string& path);
std::vector<AnalogyRecord> parse_dataset(std::istream& in,
                                         const std::string& source);

void write_dataset(std::ostream& out, const std::vector<AnalogyRecord>& records);

// The view references `record`, which must outlive it.
QueryView apply_setting(const AnalogyRecord& record, EvaluationSetting setting);
QueryView apply_setting(AnalogyRecord&&, EvaluationSetting) = delete;

struct SubjectObjects {
  std::string subject;
  std::vector<std::string> objects;
};

// All ordered pairs (i, j), i != j, of one relation's bundles, in row-major
// order: n * (n - 1) records. Throws on fewer than 2 pairs or duplicate
// subjects.
std::vector<AnalogyRecord> combine_pairs(const std::string& relation_id,
                                         const std::vector<SubjectObjects>& pairs);

// Mean |d_list| over the records. Throws on an empty list.
double ambiguity(const std::vector<AnalogyRecord>& records);

// Groups records by relation id, groups ordered by the relation's
// first appearance and records by file order.
std::vector<std::pair<std::string, std::vector<AnalogyRecord>>> group_by_relation(
    const std::vector<AnalogyRecord>& records);

}  // namespace analogy

#endif  // ANALOGY_DATASET_HPP_
