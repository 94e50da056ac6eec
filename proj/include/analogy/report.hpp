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

#ifndef ANALOGY_REPORT_HPP_
#define ANALOGY_REPORT_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "analogy/metrics.hpp"

namespace analogy {

// Outcomes file: a header line, then one tab-separated row per query:
//   relation record n_answers correct n_in_index positions
// `positions` is a comma-separated list of 1-based ranks, or "-" if empty.
void write_outcomes(std::ostream& out, const std::vector<QueryOutcome>& outcomes);
std::vector<QueryOutcome> read_outcomes(std::istream& in, const std::string& source);

// Fixed-width table, one row per relation, then the macro "mean (std)" row
// and the micro (per-query) row.
void write_table(std::ostream& out, const Summary& summary);

// Columns: relation,n,rel_acc,map,mrr,ambiguity
void write_csv(std::ostream& out, const Summary& summary);

}  // namespace analogy

#endif  // ANALOGY_REPORT_HPP_
