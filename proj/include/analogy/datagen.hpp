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

#ifndef ANALOGY_DATAGEN_HPP_
#define ANALOGY_DATAGEN_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "analogy/dataset.hpp"

namespace analogy::datagen {

struct Triple {
  std::string subject;
  std::string relation;
  std::string object;
};

struct ConceptPair {
  std::string subject;
  std::string object;

  bool operator==(const ConceptPair&) const = default;
};

// concept id -> terms in file order.
using ConceptLexicon = std::map<std::string, std::vector<std::string>>;

// Counts keyed by term_key(term).
class FrequencyTable {
 public:
  // Throws if two terms share a normalized key.
  void add(const std::string& term, std::uint64_t count);
  std::uint64_t count(const std::string& term) const;
  std::size_t size() const { return counts_.size(); }

 private:
  std::unordered_map<std::string, std::uint64_t> counts_;
};

struct GenerationConfig {
  std::uint64_t min_term_freq = 25;
  std::size_t min_one_to_one = 50;  // 0 disables the 1:1 threshold
  std::size_t pairs_per_relation = 50;
  std::uint64_t seed = 0;
  // Relations to keep among those passing the 1:1 threshold; all if unset.
  std::optional<std::set<std::string>> allowlist;
};

// Seedable generator with a fully specified algorithm: std::mt19937_64
// (its output sequence is fixed by the C++ standard) seeded with
// SplitMix64(seed XOR FNV-1a-64(stream name)). Bounded draws use rejection
// sampling on the raw 64-bit output, so results do not depend on the
// standard library's distribution implementations.
class Rng {
 public:
  Rng(std::uint64_t seed, std::string_view stream);
  // Uniform in [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

// Concepts with at least one term counted >= min_freq, keeping only such
// terms in their original order.
ConceptLexicon frequent_concepts(const ConceptLexicon& lexicon,
                                 const FrequencyTable& freqs,
                                 std::uint64_t min_freq);

// Pairs whose subject and object each occur in exactly one pair of the list.
std::vector<ConceptPair> one_to_one_instances(const std::vector<ConceptPair>& pairs);

struct RelationReview {
  std::string relation;
  std::size_t n_pairs = 0;
  std::size_t n_one_to_one = 0;
  bool allowlisted = true;
  std::vector<ConceptPair> sample;  // up to 5 sampled 1:1 pairs
};

struct RelationSelection {
  std::vector<std::string> selected;   // relation id order
  std::vector<RelationReview> review;  // every relation passing the threshold
};

// Relations with >= min_one_to_one 1:1 instances, intersected with the
// allowlist when one is configured.
RelationSelection select_relations(
    const std::map<std::string, std::vector<ConceptPair>>& relations,
    const GenerationConfig& config);

// Draws pairs uniformly without replacement until pairs_per_relation
// distinct subjects are seen; each subject is bundled with every object it
// has in `pairs` (first-seen order). Throws if the relation has too few
// distinct subjects.
std::vector<SubjectObjects> sample_and_bundle(const std::string& relation,
                                              const std::vector<ConceptPair>& pairs,
                                              const GenerationConfig& config);

// The concept's surviving term with the largest count; ties go to the
// lexicographically smallest term.
std::string choose_representative_term(const std::string& concept_id,
                                       const ConceptLexicon& frequent,
                                       const FrequencyTable& freqs);

struct RelationStats {
  std::string relation;
  std::size_t n_pairs = 0;  // deduplicated frequent pairs
  std::size_t n_one_to_one = 0;
  std::size_t n_bundles = 0;
  std::size_t n_analogies = 0;
  std::size_t n_multi_answer = 0;  // analogies with |D| > 1
  double ambiguity = 0.0;
};

struct GeneratedDataset {
  std::vector<AnalogyRecord> id_records;
  std::vector<AnalogyRecord> term_records;
  std::vector<RelationStats> stats;
  std::vector<RelationReview> review;
};

// frequent_concepts -> 1:1 counts -> select_relations -> sample_and_bundle
// -> combine_pairs -> term rendering. Relations are emitted in id order.
GeneratedDataset generate(const std::vector<Triple>& triples,
                          const ConceptLexicon& lexicon,
                          const FrequencyTable& freqs,
                          const GenerationConfig& config);

// TSV readers. Errors carry the line number.
std::vector<Triple> read_triples(const std::string& path);
ConceptLexicon read_lexicon(const std::string& path);
FrequencyTable read_frequencies(const std::string& path);
std::set<std::string> read_allowlist(const std::string& path);

void write_stats(std::ostream& out, const std::vector<RelationStats>& stats);
void write_review(std::ostream& out, const std::vector<RelationReview>& review,
                  const ConceptLexicon& frequent, const FrequencyTable& freqs);

}  // namespace analogy::datagen

#endif  // ANALOGY_DATAGEN_HPP_
