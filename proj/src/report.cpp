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

#include "analogy/report.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <charconv>
#include <istream>
#include <ostream>

#include "analogy/error.hpp"
#include "analogy/text.hpp"

namespace analogy {
namespace {

constexpr std::string_view kOutcomesHeader =
    "relation\trecord\tn_answers\tcorrect\tn_in_index\tpositions";

std::size_t parse_count(std::string_view text, const std::string& source,
                        std::size_t line_no) {
  std::size_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ParseError(source, line_no, "bad integer '" + std::string(text) + "'");
  }
  return value;
}

std::string mean_std_cell(const MeanStd& m) {
  return fmt::format("{:.2f} ({:.2f})", m.mean, m.std);
}

}  // namespace

void write_outcomes(std::ostream& out, const std::vector<QueryOutcome>& outcomes) {
  out << kOutcomesHeader << '\n';
  for (const auto& o : outcomes) {
    out << o.relation_id << '\t' << o.record << '\t' << o.n_answers << '\t'
        << (o.top_guess_correct ? 1 : 0) << '\t' << o.n_answers_in_index << '\t';
    if (o.answer_positions.empty()) {
      out << '-';
    } else {
      for (std::size_t i = 0; i < o.answer_positions.size(); ++i) {
        if (i) out << ',';
        out << o.answer_positions[i];
      }
    }
    out << '\n';
  }
}

std::vector<QueryOutcome> read_outcomes(std::istream& in, const std::string& source) {
  std::vector<QueryOutcome> outcomes;
  std::string raw;
  std::size_t line_no = 0;
  if (!std::getline(in, raw) || strip_line_ending(raw) != kOutcomesHeader) {
    throw ParseError(source, 1, "missing outcomes header");
  }
  line_no = 1;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = strip_line_ending(raw);
    if (line.empty()) continue;
    const auto fields = split(line, '\t');
    if (fields.size() != 6) {
      throw ParseError(source, line_no, "expected 6 fields, found " +
                                            std::to_string(fields.size()));
    }
    QueryOutcome o;
    o.relation_id = std::string(fields[0]);
    if (o.relation_id.empty()) throw ParseError(source, line_no, "empty relation");
    o.record = parse_count(fields[1], source, line_no);
    o.n_answers = parse_count(fields[2], source, line_no);
    const auto correct = parse_count(fields[3], source, line_no);
    if (correct > 1) throw ParseError(source, line_no, "correct must be 0 or 1");
    o.top_guess_correct = correct == 1;
    o.n_answers_in_index = parse_count(fields[4], source, line_no);
    if (fields[5] != "-") {
      for (auto p : split(fields[5], ',')) {
        const auto pos = parse_count(p, source, line_no);
        if (pos == 0 || (!o.answer_positions.empty() && pos <= o.answer_positions.back())) {
          throw ParseError(source, line_no, "positions must be increasing and >= 1");
        }
        o.answer_positions.push_back(pos);
      }
    }
    if (o.answer_positions.size() != o.n_answers_in_index) {
      throw ParseError(source, line_no, "position count != n_in_index");
    }
    outcomes.push_back(std::move(o));
  }
  return outcomes;
}

void write_table(std::ostream& out, const Summary& summary) {
  std::size_t width = 8;
  for (const auto& r : summary.relations) width = std::max(width, r.relation_id.size());
  fmt::print(out, "{:<{}}  {:>7}  {:>12}  {:>12}  {:>12}  {:>6}\n", "relation", width,
             "n", "RelAcc", "MAP", "MRR", "Amb");
  for (const auto& r : summary.relations) {
    fmt::print(out, "{:<{}}  {:>7}  {:>12.2f}  {:>12.2f}  {:>12.2f}  {:>6.1f}\n",
               r.relation_id, width, r.n_queries, r.rel_acc, r.map, r.mrr,
               r.ambiguity);
  }
  const auto& o = summary.overall;
  fmt::print(out, "{:<{}}  {:>7}  {:>12}  {:>12}  {:>12}\n", "mean (std)", width,
             summary.relations.size(), mean_std_cell(o.rel_acc),
             mean_std_cell(o.map), mean_std_cell(o.mrr));
  fmt::print(out, "{:<{}}  {:>7}  {:>12.2f}  {:>12.2f}  {:>12.2f}\n", "micro", width,
             o.n_queries, o.micro_rel_acc, o.micro_map, o.micro_mrr);
}

void write_csv(std::ostream& out, const Summary& summary) {
  out << "relation,n,rel_acc,map,mrr,ambiguity\n";
  for (const auto& r : summary.relations) {
    fmt::print(out, "{},{},{:.6f},{:.6f},{:.6f},{:.6f}\n", r.relation_id,
               r.n_queries, r.rel_acc, r.map, r.mrr, r.ambiguity);
  }
}

}  // namespace analogy
