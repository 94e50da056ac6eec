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

#include "analogy/dataset.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_map>
#include <unordered_set>

#include "analogy/error.hpp"
#include "analogy/text.hpp"

namespace analogy {
namespace {

template <typename Strings>
bool has_duplicates(const Strings& values) {
  std::unordered_set<std::string_view> seen;
  for (const auto& v : values) {
    if (!seen.insert(v).second) return true;
  }
  return false;
}

std::vector<std::string> split_list(std::string_view field) {
  std::vector<std::string> items;
  if (field.empty()) return items;
  for (auto item : split(field, '|')) items.emplace_back(item);
  return items;
}

void write_list(std::ostream& out, const std::vector<std::string>& items) {
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out << '|';
    out << items[i];
  }
}

}  // namespace

EvaluationSetting parse_setting(std::string_view name) {
  if (name == "single") return EvaluationSetting::kSingleAnswer;
  if (name == "multi") return EvaluationSetting::kMultiAnswer;
  if (name == "all-info") return EvaluationSetting::kAllInfo;
  throw Error("unknown setting '" + std::string(name) + "'");
}

std::string_view setting_name(EvaluationSetting setting) {
  switch (setting) {
    case EvaluationSetting::kSingleAnswer:
      return "single";
    case EvaluationSetting::kMultiAnswer:
      return "multi";
    case EvaluationSetting::kAllInfo:
      return "all-info";
  }
  return "?";
}

void validate_record(const AnalogyRecord& r) {
  if (r.relation_id.empty()) throw Error("empty relation id");
  if (r.a.empty() || r.c.empty()) throw Error("empty subject term");
  for (const auto* subject : {&r.a, &r.c}) {
    if (subject->find_first_of("\t\n") != std::string::npos) {
      throw Error("term '" + *subject + "' contains a field separator");
    }
  }
  if (r.b_list.empty()) throw Error("empty exemplar object list");
  if (r.d_list.empty()) throw Error("empty answer list");
  for (const auto* list : {&r.b_list, &r.d_list}) {
    for (const auto& term : *list) {
      if (term.empty()) throw Error("empty term in object list");
      if (term.find_first_of("|\t\n") != std::string::npos) {
        throw Error("term '" + term + "' contains a field separator");
      }
    }
    if (has_duplicates(*list)) throw Error("duplicate term in object list");
  }
  if (r.a == r.c) throw Error("exemplar and query subject are both '" + r.a + "'");
}

std::vector<AnalogyRecord> parse_dataset(std::istream& in,
                                         const std::string& source) {
  std::vector<AnalogyRecord> records;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = strip_line_ending(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split(line, '\t');
    if (fields.size() != 5) {
      throw ParseError(source, line_no,
                       "expected 5 tab-separated fields, found " +
                           std::to_string(fields.size()));
    }
    AnalogyRecord r;
    r.relation_id = std::string(fields[0]);
    r.a = std::string(fields[1]);
    r.b_list = split_list(fields[2]);
    r.c = std::string(fields[3]);
    r.d_list = split_list(fields[4]);
    try {
      validate_record(r);
    } catch (const Error& e) {
      throw ParseError(source, line_no, e.what());
    }
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<AnalogyRecord> parse_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_dataset(in, path);
}

void write_dataset(std::ostream& out, const std::vector<AnalogyRecord>& records) {
  for (const auto& r : records) {
    out << r.relation_id << '\t' << r.a << '\t';
    write_list(out, r.b_list);
    out << '\t' << r.c << '\t';
    write_list(out, r.d_list);
    out << '\n';
  }
}

QueryView apply_setting(const AnalogyRecord& r, EvaluationSetting setting) {
  QueryView view;
  view.a = r.a;
  view.c = r.c;
  const bool all_b = setting == EvaluationSetting::kAllInfo;
  const bool all_d = setting != EvaluationSetting::kSingleAnswer;
  const std::size_t nb = all_b ? r.b_list.size() : 1;
  const std::size_t nd = all_d ? r.d_list.size() : 1;
  view.b_used.assign(r.b_list.begin(), r.b_list.begin() + static_cast<long>(nb));
  view.d_valid.assign(r.d_list.begin(), r.d_list.begin() + static_cast<long>(nd));
  return view;
}

std::vector<AnalogyRecord> combine_pairs(const std::string& relation_id,
                                         const std::vector<SubjectObjects>& pairs) {
  if (pairs.size() < 2) {
    throw Error("relation '" + relation_id + "' needs at least 2 pairs to combine");
  }
  std::unordered_set<std::string_view> subjects;
  for (const auto& p : pairs) {
    if (!subjects.insert(p.subject).second) {
      throw Error("relation '" + relation_id + "' has duplicate subject '" +
                  p.subject + "'");
    }
  }
  std::vector<AnalogyRecord> records;
  records.reserve(pairs.size() * (pairs.size() - 1));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      if (i == j) continue;
      records.push_back({relation_id, pairs[i].subject, pairs[i].objects,
                         pairs[j].subject, pairs[j].objects});
    }
  }
  return records;
}

double ambiguity(const std::vector<AnalogyRecord>& records) {
  if (records.empty()) throw Error("ambiguity of an empty relation");
  double total = 0.0;
  for (const auto& r : records) total += static_cast<double>(r.d_list.size());
  return total / static_cast<double>(records.size());
}

std::vector<std::pair<std::string, std::vector<AnalogyRecord>>> group_by_relation(
    const std::vector<AnalogyRecord>& records) {
  std::vector<std::pair<std::string, std::vector<AnalogyRecord>>> groups;
  std::unordered_map<std::string, std::size_t> slot;
  for (const auto& r : records) {
    auto [it, inserted] = slot.emplace(r.relation_id, groups.size());
    if (inserted) groups.emplace_back(r.relation_id, std::vector<AnalogyRecord>{});
    groups[it->second].second.push_back(r);
  }
  return groups;
}

}  // namespace analogy
