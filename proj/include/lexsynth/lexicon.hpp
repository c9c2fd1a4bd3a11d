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

#ifndef LEXSYNTH_LEXICON_HPP_
#define LEXSYNTH_LEXICON_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lexsynth {

enum class Provenance { Base, Induced };

const char* to_string(Provenance p);

/// One (source, target) pair as seen from outside the lexicon.
struct LexiconEntry {
  std::string source;  // case-folded, single token
  std::string target;  // one or more tokens joined by a single space
  Provenance provenance = Provenance::Base;

  bool operator==(const LexiconEntry&) const = default;
};

struct Candidate {
  std::string target;
  std::vector<std::string> tokens;  // target split on whitespace
  Provenance provenance = Provenance::Base;

  bool multi_token() const { return tokens.size() > 1; }
};

/// Source word type -> ordered, duplicate-free list of candidate
/// translations. Sources are case-folded; targets are kept verbatim apart
/// from whitespace normalization. Sources and candidates keep first-seen
/// order.
class Lexicon {
 public:
  struct Source {
    std::string source;
    std::vector<Candidate> candidates;
  };

  Lexicon() = default;
  Lexicon(std::string src_lang, std::string tgt_lang)
      : src_lang_(std::move(src_lang)), tgt_lang_(std::move(tgt_lang)) {}

  /// Adds a pair. Throws ValidationError if the source is empty or holds
  /// whitespace, or the target has no tokens. Returns false when the
  /// (folded source, target) pair was already present; the existing
  /// provenance is kept.
  bool add(std::string_view source, std::string_view target,
           Provenance provenance = Provenance::Base);

  /// Candidates for an already case-folded key, or nullptr.
  const std::vector<Candidate>* lookup_folded(const std::string& folded) const;
  /// Case-folds the token, then looks it up.
  const std::vector<Candidate>* lookup(std::string_view token) const;

  const std::vector<Source>& sources() const { return sources_; }
  std::vector<LexiconEntry> entries() const;

  std::size_t entry_count() const { return pair_count_; }
  std::size_t source_count() const { return sources_.size(); }
  bool empty() const { return pair_count_ == 0; }
  bool has_multi_token_targets() const;

  const std::string& src_lang() const { return src_lang_; }
  const std::string& tgt_lang() const { return tgt_lang_; }

 private:
  std::string src_lang_;
  std::string tgt_lang_;
  std::vector<Source> sources_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t pair_count_ = 0;
};

enum class TargetMode { AllowMultiToken, SingleTokenOnly };

struct LexiconLoadOptions {
  TargetMode mode = TargetMode::AllowMultiToken;
  Provenance provenance = Provenance::Base;
  std::string src_lang;
  std::string tgt_lang;
};

struct LoadedLexicon {
  Lexicon lexicon;
  std::size_t dropped = 0;  // lines skipped by the target mode
};

/// Reads `source<TAB>target` lines. '#' comment lines and blank lines are
/// ignored; a trailing CR is tolerated. Throws FormatError naming the line
/// for a wrong field count or an empty/invalid field.
LoadedLexicon read_lexicon(std::istream& in, const std::string& name,
                           const LexiconLoadOptions& options = {});
LoadedLexicon load_lexicon(const std::filesystem::path& path,
                           const LexiconLoadOptions& options = {});
LoadedLexicon load_lexicon(const std::filesystem::path& path, TargetMode mode);

void write_lexicon(std::ostream& out, const Lexicon& lex);
void save_lexicon(const Lexicon& lex, const std::filesystem::path& path);

/// Union of pairs. Base candidates come first for each source; a pair
/// present in both keeps the base provenance. Throws ValidationError on a
/// language-code mismatch.
Lexicon merge(const Lexicon& base, const Lexicon& extra);

/// Drops every multi-token target; `dropped` counts removed pairs.
LoadedLexicon single_token_only(const Lexicon& lex);

struct LexiconStats {
  std::size_t entry_pairs = 0;
  std::size_t distinct_sources = 0;
  std::size_t multi_candidate_sources = 0;
  std::size_t multi_token_targets = 0;

  bool operator==(const LexiconStats&) const = default;
};

LexiconStats lexicon_stats(const Lexicon& lex);

}  // namespace lexsynth

#endif  // LEXSYNTH_LEXICON_HPP_
