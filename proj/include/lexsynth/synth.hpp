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

// Word-to-word synthesis of pseudo target-language corpora.
//
// Every token is looked up case-folded. A hit is replaced by one of its
// candidates, drawn uniformly from a random stream keyed by
// (seed, sentence index, token index); a miss is copied through. Because
// each position owns its stream, output does not depend on thread count.

#ifndef LEXSYNTH_SYNTH_HPP_
#define LEXSYNTH_SYNTH_HPP_

#include <cstddef>
#include <cstdint>

#include "lexsynth/corpus_io.hpp"
#include "lexsynth/lexicon.hpp"

namespace lexsynth {

enum class CasePolicy {
  LexiconForm,  // emit targets exactly as stored in the lexicon
  RestoreCase,  // title-case the target when the source token is title case
};

enum class Sampling { PerOccurrenceUniform };

struct SynthesisConfig {
  std::uint64_t seed = 0;
  CasePolicy case_policy = CasePolicy::LexiconForm;
  Sampling sampling = Sampling::PerOccurrenceUniform;
  unsigned threads = 1;
};

struct CoverageReport {
  std::size_t total_tokens = 0;
  std::size_t replaced_tokens = 0;
  double replacement_rate = 0.0;
  std::size_t distinct_types = 0;  // counted over case-folded tokens
  std::size_t covered_types = 0;
  std::size_t sentences = 0;

  bool operator==(const CoverageReport&) const = default;
};

TokenizedSentence translate_tokens(const TokenizedSentence& sentence,
                                   const Lexicon& lex,
                                   const SynthesisConfig& cfg,
                                   std::uint64_t sentence_index);

struct MonoSynthesis {
  TokenizedCorpus corpus;
  CoverageReport report;
};

/// Multi-token targets expand in place, so sentences may grow.
MonoSynthesis synth_mono(const TokenizedCorpus& corpus, const Lexicon& lex,
                         const SynthesisConfig& cfg);

struct LabeledSynthesis {
  LabeledCorpus corpus;
  CoverageReport report;
};

/// Replaces tokens one for one and leaves every annotation untouched.
/// Throws ValidationError, before producing anything, if the lexicon holds
/// a multi-token target.
LabeledSynthesis synth_labeled(const LabeledCorpus& corpus, const Lexicon& lex,
                               const SynthesisConfig& cfg);

/// Lookup-only counterparts of the reports above.
CoverageReport coverage(const TokenizedCorpus& corpus, const Lexicon& lex);
CoverageReport coverage(const LabeledCorpus& corpus, const Lexicon& lex);

}  // namespace lexsynth

#endif  // LEXSYNTH_SYNTH_HPP_
