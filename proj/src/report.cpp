// Copyright 2026 The lexsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lexsynth/report.hpp"

#include <algorithm>
#include <unordered_map>

#include "lexsynth/error.hpp"
#include "lexsynth/unicode.hpp"

namespace lexsynth {

PosDistribution lexicon_pos_distribution(const Lexicon& lex, const LabeledCorpus& reference) {
  if (reference.schema != Schema::POS) {
    throw ValidationError("POS distribution needs a POS-tagged reference");
  }
  if (reference.empty()) throw ValidationError("POS reference corpus is empty");

  std::unordered_map<std::string, std::map<std::string, std::size_t>> tag_counts;
  for (const auto& s : reference.sentences) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      ++tag_counts[unicode::case_fold(s.tokens[i])][s.labels[i]];
    }
  }

  PosDistribution d;
  for (const auto& source : lex.sources()) {
    auto it = tag_counts.find(source.source);
    if (it == tag_counts.end()) {
      ++d.out_of_reference;
      continue;
    }
    // std::map iterates tags in order, so max_element keeps the smallest
    // tag among ties.
    const auto best = std::max_element(
        it->second.begin(), it->second.end(),
        [](const auto& a, const auto& b) { return a.second < b.second; });
    ++d.counts[best->first];
    ++d.found;
  }
  for (const auto& [tag, count] : d.counts) {
    d.fractions[tag] = static_cast<double>(count) / static_cast<double>(d.found);
  }
  return d;
}

Json to_json(const CoverageReport& r) {
  Json j;
  j["total_tokens"] = r.total_tokens;
  j["replaced_tokens"] = r.replaced_tokens;
  j["replacement_rate"] = r.replacement_rate;
  j["distinct_types"] = r.distinct_types;
  j["covered_types"] = r.covered_types;
  j["sentences"] = r.sentences;
  return j;
}

Json to_json(const LexiconStats& s) {
  Json j;
  j["entry_pairs"] = s.entry_pairs;
  j["distinct_sources"] = s.distinct_sources;
  j["multi_candidate_sources"] = s.multi_candidate_sources;
  j["multi_token_targets"] = s.multi_token_targets;
  return j;
}

Json to_json(const DistillReport& r) {
  Json j;
  j["positions"] = r.positions;
  j["changed"] = r.changed;
  j["change_rate"] = r.change_rate;
  Json confusion = Json::array();
  for (const auto& [labels, count] : r.confusion) {
    Json entry;
    entry["original"] = labels.first;
    entry["teacher"] = labels.second;
    entry["count"] = count;
    confusion.push_back(std::move(entry));
  }
  j["per_label_confusion"] = std::move(confusion);
  return j;
}

Json to_json(const PosDistribution& d) {
  Json j;
  j["method"] = "majority UPOS tag per case-folded reference word type; "
                "ties go to the lexicographically smallest tag";
  j["found"] = d.found;
  j["out_of_reference"] = d.out_of_reference;
  Json fractions = Json::object();
  for (const auto& [tag, f] : d.fractions) fractions[tag] = f;
  j["fractions"] = std::move(fractions);
  Json counts = Json::object();
  for (const auto& [tag, c] : d.counts) counts[tag] = c;
  j["counts"] = std::move(counts);
  return j;
}

Json StageRecord::to_json() const {
  Json j;
  j["stage"] = stage;
  if (seed) j["seed"] = *seed;
  j["report"] = report;
  return j;
}

StageRecord StageRecord::from_json(const Json& j, const std::string& name) {
  if (!j.is_object() || !j.contains("stage") || !j["stage"].is_string() ||
      !j.contains("report")) {
    throw FormatError(name, 0, "not a stage report (needs \"stage\" and \"report\")");
  }
  StageRecord r;
  r.stage = j["stage"].get<std::string>();
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) throw FormatError(name, 0, "seed is not an unsigned integer");
    r.seed = j["seed"].get<std::uint64_t>();
  }
  r.report = j["report"];
  return r;
}

Json pipeline_summary(const std::vector<StageRecord>& stages) {
  Json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  Json seeds = Json::array();
  std::vector<std::uint64_t> seen;
  for (const auto& s : stages) {
    if (s.seed && std::find(seen.begin(), seen.end(), *s.seed) == seen.end()) {
      seen.push_back(*s.seed);
      seeds.push_back(*s.seed);
    }
  }
  j["seeds"] = std::move(seeds);
  if (!stages.empty()) {
    Json list = Json::array();
    for (const auto& s : stages) list.push_back(s.to_json());
    j["stages"] = std::move(list);
  }
  return j;
}

}  // namespace lexsynth
