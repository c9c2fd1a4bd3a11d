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

#ifndef LEXSYNTH_REPORT_HPP_
#define LEXSYNTH_REPORT_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lexsynth/corpus_io.hpp"
#include "lexsynth/distill.hpp"
#include "lexsynth/lexicon.hpp"
#include "lexsynth/synth.hpp"

namespace lexsynth {

inline constexpr const char* kToolName = "lexsynth";
inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

struct PosDistribution {
  std::map<std::string, double> fractions;   // tag -> share of found sources
  std::map<std::string, std::size_t> counts;  // tag -> found sources
  std::size_t found = 0;
  std::size_t out_of_reference = 0;
};

/// Tags every reference word type (case-folded) with its most frequent
/// label, ties going to the lexicographically smallest tag, then histograms
/// the tags of the lexicon's source words. Throws ValidationError unless
/// the reference is a non-empty POS corpus.
PosDistribution lexicon_pos_distribution(const Lexicon& lex,
                                         const LabeledCorpus& reference);

Json to_json(const CoverageReport& r);
Json to_json(const LexiconStats& s);
Json to_json(const DistillReport& r);
Json to_json(const PosDistribution& d);

/// One pipeline step's report, as written by each CLI subcommand.
struct StageRecord {
  std::string stage;                  // e.g. "synth mono"
  std::optional<std::uint64_t> seed;  // for stochastic stages
  Json report;

  Json to_json() const;
  /// Throws FormatError when a required key is missing.
  static StageRecord from_json(const Json& j, const std::string& name);
};

/// {"tool", "version", "seeds", "stages"}; "stages" lists the records in
/// input order and is omitted when there are none. "seeds" holds the
/// distinct seeds in first-seen order.
Json pipeline_summary(const std::vector<StageRecord>& stages);

}  // namespace lexsynth

#endif  // LEXSYNTH_REPORT_HPP_
