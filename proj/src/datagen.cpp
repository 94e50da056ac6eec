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

#include "analogy/datagen.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <limits>
#include <fstream>
#include <ostream>
#include <unordered_set>

#include "analogy/error.hpp"
#include "analogy/text.hpp"

namespace analogy::datagen {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

// Calls fn(fields, line_no) for every non-blank, non-comment line, after
// checking the field count.
template <typename Fn>
void for_each_tsv_row(const std::string& path, std::size_t n_fields, Fn&& fn) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = strip_line_ending(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split(line, '\t');
    if (fields.size() != n_fields) {
      throw ParseError(path, line_no,
                       "expected " + std::to_string(n_fields) + " fields, found " +
                           std::to_string(fields.size()));
    }
    for (auto f : fields) {
      if (f.empty()) throw ParseError(path, line_no, "empty field");
    }
    fn(fields, line_no);
  }
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::string_view stream)
    : engine_(splitmix64(seed ^ fnv1a64(stream))) {}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error("Rng::below: bound must be > 0");
  // Largest multiple of bound representable in 64 bits.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  while (true) {
    const std::uint64_t x = engine_();
    if (x < limit) return x % bound;
  }
}

void FrequencyTable::add(const std::string& term, std::uint64_t count) {
  if (!counts_.emplace(term_key(term), count).second) {
    throw Error("frequency table: duplicate term '" + term + "' after normalization");
  }
}

std::uint64_t FrequencyTable::count(const std::string& term) const {
  const auto it = counts_.find(term_key(term));
  return it == counts_.end() ? 0 : it->second;
}

ConceptLexicon frequent_concepts(const ConceptLexicon& lexicon,
                                 const FrequencyTable& freqs,
                                 std::uint64_t min_freq) {
  ConceptLexicon kept;
  for (const auto& [concept_id, terms] : lexicon) {
    std::vector<std::string> frequent;
    for (const auto& t : terms) {
      if (freqs.count(t) >= min_freq) frequent.push_back(t);
    }
    if (!frequent.empty()) kept.emplace(concept_id, std::move(frequent));
  }
  return kept;
}

std::vector<ConceptPair> one_to_one_instances(const std::vector<ConceptPair>& pairs) {
  std::unordered_map<std::string_view, std::size_t> subject_degree, object_degree;
  for (const auto& p : pairs) {
    ++subject_degree[p.subject];
    ++object_degree[p.object];
  }
  std::vector<ConceptPair> kept;
  for (const auto& p : pairs) {
    if (subject_degree[p.subject] == 1 && object_degree[p.object] == 1) {
      kept.push_back(p);
    }
  }
  return kept;
}

RelationSelection select_relations(
    const std::map<std::string, std::vector<ConceptPair>>& relations,
    const GenerationConfig& config) {
  RelationSelection selection;
  for (const auto& [relation, pairs] : relations) {
    auto one_to_one = one_to_one_instances(pairs);
    if (one_to_one.size() < config.min_one_to_one) continue;
    RelationReview review;
    review.relation = relation;
    review.n_pairs = pairs.size();
    review.n_one_to_one = one_to_one.size();
    review.allowlisted = !config.allowlist || config.allowlist->count(relation) > 0;
    Rng rng(config.seed, "review:" + relation);
    for (std::size_t i = 0; i < std::min<std::size_t>(5, one_to_one.size()); ++i) {
      const auto j = i + rng.below(one_to_one.size() - i);
      std::swap(one_to_one[i], one_to_one[j]);
      review.sample.push_back(one_to_one[i]);
    }
    if (review.allowlisted) selection.selected.push_back(relation);
    selection.review.push_back(std::move(review));
  }
  return selection;
}

std::vector<SubjectObjects> sample_and_bundle(const std::string& relation,
                                              const std::vector<ConceptPair>& pairs,
                                              const GenerationConfig& config) {
  const std::size_t wanted = config.pairs_per_relation;
  std::vector<SubjectObjects> bundles;
  std::unordered_map<std::string, std::size_t> bundle_of;
  std::vector<std::string> subject_order;
  std::unordered_map<std::string, std::vector<std::string>> objects_of;
  for (const auto& p : pairs) {
    auto& objects = objects_of[p.subject];
    if (objects.empty()) subject_order.push_back(p.subject);
    if (std::find(objects.begin(), objects.end(), p.object) == objects.end()) {
      objects.push_back(p.object);
    }
  }
  if (pairs.size() < wanted || subject_order.size() < wanted) {
    throw Error("relation '" + relation + "' has " +
                std::to_string(subject_order.size()) + " distinct subjects, " +
                std::to_string(wanted) + " needed");
  }

  std::vector<std::size_t> pool(pairs.size());
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
  Rng rng(config.seed, relation);
  for (std::size_t i = 0; i < pool.size() && bundles.size() < wanted; ++i) {
    const auto j = i + rng.below(pool.size() - i);
    std::swap(pool[i], pool[j]);
    const auto& subject = pairs[pool[i]].subject;
    if (bundle_of.count(subject)) continue;
    bundle_of.emplace(subject, bundles.size());
    bundles.push_back({subject, objects_of.at(subject)});
  }
  return bundles;
}

std::string choose_representative_term(const std::string& concept_id,
                                       const ConceptLexicon& frequent,
                                       const FrequencyTable& freqs) {
  const auto it = frequent.find(concept_id);
  if (it == frequent.end() || it->second.empty()) {
    throw Error("concept '" + concept_id + "' has no frequent term");
  }
  const std::string* best = nullptr;
  std::uint64_t best_count = 0;
  for (const auto& term : it->second) {
    const auto count = freqs.count(term);
    if (!best || count > best_count || (count == best_count && term < *best)) {
      best = &term;
      best_count = count;
    }
  }
  return *best;
}

GeneratedDataset generate(const std::vector<Triple>& triples,
                          const ConceptLexicon& lexicon,
                          const FrequencyTable& freqs,
                          const GenerationConfig& config) {
  if (config.min_term_freq == 0 || config.pairs_per_relation < 2) {
    throw Error("min_term_freq must be positive and pairs_per_relation >= 2");
  }
  const ConceptLexicon frequent = frequent_concepts(lexicon, freqs, config.min_term_freq);

  std::map<std::string, std::vector<ConceptPair>> relations;
  std::map<std::string, std::set<std::pair<std::string, std::string>>> seen;
  for (const auto& t : triples) {
    if (!frequent.count(t.subject) || !frequent.count(t.object)) continue;
    if (!seen[t.relation].emplace(t.subject, t.object).second) continue;
    relations[t.relation].push_back({t.subject, t.object});
  }

  GeneratedDataset out;
  auto selection = select_relations(relations, config);
  out.review = std::move(selection.review);
  if (selection.selected.empty()) throw Error("no relations selected");

  std::unordered_map<std::string, std::string> term_of;
  auto render = [&](const std::string& concept_id) -> const std::string& {
    auto it = term_of.find(concept_id);
    if (it == term_of.end()) {
      it = term_of.emplace(concept_id,
                           choose_representative_term(concept_id, frequent, freqs))
               .first;
    }
    return it->second;
  };
  auto render_list = [&](const std::vector<std::string>& ids) {
    std::vector<std::string> terms;
    for (const auto& id : ids) {
      const auto& term = render(id);
      if (std::find(terms.begin(), terms.end(), term) == terms.end()) {
        terms.push_back(term);
      }
    }
    return terms;
  };

  for (const auto& relation : selection.selected) {
    const auto& pairs = relations.at(relation);
    const auto bundles = sample_and_bundle(relation, pairs, config);
    auto records = combine_pairs(relation, bundles);

    RelationStats stats;
    stats.relation = relation;
    stats.n_pairs = pairs.size();
    stats.n_one_to_one = one_to_one_instances(pairs).size();
    stats.n_bundles = bundles.size();
    stats.n_analogies = records.size();
    stats.ambiguity = ambiguity(records);
    for (const auto& r : records) {
      stats.n_multi_answer += r.d_list.size() > 1;
      AnalogyRecord rendered{relation, render(r.a), render_list(r.b_list),
                             render(r.c), render_list(r.d_list)};
      try {
        validate_record(rendered);
      } catch (const Error& e) {
        throw Error("relation '" + relation + "': concepts " + r.a + " and " + r.c +
                    " render to an invalid analogy: " + e.what());
      }
      out.term_records.push_back(std::move(rendered));
    }
    out.stats.push_back(stats);
    out.id_records.insert(out.id_records.end(),
                          std::make_move_iterator(records.begin()),
                          std::make_move_iterator(records.end()));
  }
  return out;
}

std::vector<Triple> read_triples(const std::string& path) {
  std::vector<Triple> triples;
  for_each_tsv_row(path, 3, [&](const auto& f, std::size_t) {
    triples.push_back({std::string(f[0]), std::string(f[1]), std::string(f[2])});
  });
  return triples;
}

ConceptLexicon read_lexicon(const std::string& path) {
  ConceptLexicon lexicon;
  for_each_tsv_row(path, 2, [&](const auto& f, std::size_t) {
    auto& terms = lexicon[std::string(f[0])];
    std::string term(f[1]);
    if (std::find(terms.begin(), terms.end(), term) == terms.end()) {
      terms.push_back(std::move(term));
    }
  });
  return lexicon;
}

FrequencyTable read_frequencies(const std::string& path) {
  FrequencyTable freqs;
  for_each_tsv_row(path, 2, [&](const auto& f, std::size_t line_no) {
    std::uint64_t count = 0;
    const char* end = f[1].data() + f[1].size();
    auto [ptr, ec] = std::from_chars(f[1].data(), end, count);
    if (ec != std::errc() || ptr != end) {
      throw ParseError(path, line_no, "bad count '" + std::string(f[1]) + "'");
    }
    try {
      freqs.add(std::string(f[0]), count);
    } catch (const Error& e) {
      throw ParseError(path, line_no, e.what());
    }
  });
  return freqs;
}

std::set<std::string> read_allowlist(const std::string& path) {
  std::set<std::string> relations;
  for_each_tsv_row(path, 1, [&](const auto& f, std::size_t) {
    relations.emplace(f[0]);
  });
  return relations;
}

void write_stats(std::ostream& out, const std::vector<RelationStats>& stats) {
  out << "relation\tn_pairs\tn_one_to_one\tn_bundles\tn_analogies\tn_multi_answer"
         "\tambiguity\n";
  std::size_t analogies = 0, multi = 0;
  char amb[32];
  for (const auto& s : stats) {
    std::snprintf(amb, sizeof(amb), "%.4f", s.ambiguity);
    out << s.relation << '\t' << s.n_pairs << '\t' << s.n_one_to_one << '\t'
        << s.n_bundles << '\t' << s.n_analogies << '\t' << s.n_multi_answer << '\t'
        << amb << '\n';
    analogies += s.n_analogies;
    multi += s.n_multi_answer;
  }
  out << "#total\t\t\t\t" << analogies << '\t' << multi << "\t\n";
}

void write_review(std::ostream& out, const std::vector<RelationReview>& review,
                  const ConceptLexicon& frequent, const FrequencyTable& freqs) {
  out << "relation\tn_pairs\tn_one_to_one\tallowlisted\tsample\n";
  for (const auto& r : review) {
    out << r.relation << '\t' << r.n_pairs << '\t' << r.n_one_to_one << '\t'
        << (r.allowlisted ? "yes" : "no") << '\t';
    for (std::size_t i = 0; i < r.sample.size(); ++i) {
      if (i) out << " | ";
      out << choose_representative_term(r.sample[i].subject, frequent, freqs) << " : "
          << choose_representative_term(r.sample[i].object, frequent, freqs);
    }
    out << '\n';
  }
}

}  // namespace analogy::datagen
