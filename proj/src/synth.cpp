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

#include "lexsynth/synth.hpp"

#include <string>
#include <unordered_map>
#include <vector>

#include "lexsynth/error.hpp"
#include "lexsynth/parallel.hpp"
#include "lexsynth/random.hpp"
#include "lexsynth/unicode.hpp"

namespace lexsynth {

namespace {

// Folded type -> whether it was found in the lexicon.
using TypeTable = std::unordered_map<std::string, bool>;

struct Tally {
  std::size_t total = 0;
  std::size_t replaced = 0;
  TypeTable types;
};

const Candidate* pick(const std::vector<Candidate>& candidates,
                      const SynthesisConfig& cfg, std::uint64_t sentence_index,
                      std::uint64_t token_index) {
  if (candidates.size() == 1) return &candidates.front();
  Engine engine(stream_seed(cfg.seed, sentence_index, token_index));
  return &candidates[uniform_below(engine, candidates.size())];
}

// Translates one token, appending its output tokens and updating the tally.
void translate_one(const std::string& token, const Lexicon& lex,
                   const SynthesisConfig& cfg, std::uint64_t sentence_index,
                   std::uint64_t token_index, std::vector<std::string>& out,
                   Tally* tally) {
  std::string folded = unicode::case_fold(token);
  const auto* candidates = lex.lookup_folded(folded);
  if (tally) {
    ++tally->total;
    if (candidates) ++tally->replaced;
    tally->types.emplace(std::move(folded), candidates != nullptr);
  }
  if (!candidates) {
    out.push_back(token);
    return;
  }
  const Candidate* chosen = pick(*candidates, cfg, sentence_index, token_index);
  const std::size_t first = out.size();
  out.insert(out.end(), chosen->tokens.begin(), chosen->tokens.end());
  if (cfg.case_policy == CasePolicy::RestoreCase && unicode::is_title_case(token)) {
    out[first] = unicode::title_case_first(out[first]);
  }
}

CoverageReport finish(std::vector<Tally>& tallies, std::size_t sentences) {
  CoverageReport r;
  r.sentences = sentences;
  TypeTable merged;
  for (auto& t : tallies) {
    r.total_tokens += t.total;
    r.replaced_tokens += t.replaced;
    for (auto& [type, found] : t.types) merged.emplace(type, found);
  }
  r.distinct_types = merged.size();
  for (const auto& [type, found] : merged) r.covered_types += found ? 1 : 0;
  r.replacement_rate = r.total_tokens
                           ? static_cast<double>(r.replaced_tokens) /
                                 static_cast<double>(r.total_tokens)
                           : 0.0;
  return r;
}

template <typename Sentences, typename TokensOf>
CoverageReport count_coverage(const Sentences& sentences, const Lexicon& lex,
                              TokensOf tokens_of) {
  std::vector<Tally> tally(1);
  for (const auto& s : sentences) {
    for (const auto& token : tokens_of(s)) {
      std::string folded = unicode::case_fold(token);
      const bool found = lex.lookup_folded(folded) != nullptr;
      ++tally[0].total;
      if (found) ++tally[0].replaced;
      tally[0].types.emplace(std::move(folded), found);
    }
  }
  return finish(tally, sentences.size());
}

}  // namespace

TokenizedSentence translate_tokens(const TokenizedSentence& sentence,
                                   const Lexicon& lex, const SynthesisConfig& cfg,
                                   std::uint64_t sentence_index) {
  TokenizedSentence out;
  out.tokens.reserve(sentence.tokens.size());
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    translate_one(sentence.tokens[i], lex, cfg, sentence_index, i, out.tokens,
                  nullptr);
  }
  return out;
}

MonoSynthesis synth_mono(const TokenizedCorpus& corpus, const Lexicon& lex,
                         const SynthesisConfig& cfg) {
  MonoSynthesis result;
  result.corpus.sentences.resize(corpus.size());
  std::vector<Tally> tallies(std::max(1u, cfg.threads));
  parallel_for(corpus.size(), cfg.threads,
               [&](unsigned worker, std::size_t begin, std::size_t end) {
                 for (std::size_t s = begin; s < end; ++s) {
                   const auto& in = corpus.sentences[s].tokens;
                   auto& out = result.corpus.sentences[s].tokens;
                   out.reserve(in.size());
                   for (std::size_t i = 0; i < in.size(); ++i) {
                     translate_one(in[i], lex, cfg, s, i, out, &tallies[worker]);
                   }
                 }
               });
  result.report = finish(tallies, corpus.size());
  return result;
}

LabeledSynthesis synth_labeled(const LabeledCorpus& corpus, const Lexicon& lex,
                               const SynthesisConfig& cfg) {
  for (const auto& s : lex.sources()) {
    for (const auto& c : s.candidates) {
      if (c.multi_token()) {
        throw ValidationError("labeled synthesis needs single-token targets; '" +
                              s.source + "' -> '" + c.target + "' has " +
                              std::to_string(c.tokens.size()));
      }
    }
  }
  LabeledSynthesis result;
  result.corpus = corpus;
  std::vector<Tally> tallies(std::max(1u, cfg.threads));
  parallel_for(corpus.size(), cfg.threads,
               [&](unsigned worker, std::size_t begin, std::size_t end) {
                 std::vector<std::string> buffer;
                 for (std::size_t s = begin; s < end; ++s) {
                   auto& tokens = result.corpus.sentences[s].tokens;
                   for (std::size_t i = 0; i < tokens.size(); ++i) {
                     buffer.clear();
                     translate_one(tokens[i], lex, cfg, s, i, buffer,
                                   &tallies[worker]);
                     tokens[i] = std::move(buffer.front());
                   }
                 }
               });
  result.report = finish(tallies, corpus.size());
  return result;
}

CoverageReport coverage(const TokenizedCorpus& corpus, const Lexicon& lex) {
  return count_coverage(corpus.sentences, lex,
                        [](const TokenizedSentence& s) -> const auto& { return s.tokens; });
}

CoverageReport coverage(const LabeledCorpus& corpus, const Lexicon& lex) {
  return count_coverage(corpus.sentences, lex,
                        [](const LabeledSentence& s) -> const auto& { return s.tokens; });
}

}  // namespace lexsynth
