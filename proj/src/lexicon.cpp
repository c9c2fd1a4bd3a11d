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

#include "lexsynth/lexicon.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include "lexsynth/error.hpp"
#include "lexsynth/output.hpp"
#include "lexsynth/unicode.hpp"

namespace lexsynth {

const char* to_string(Provenance p) {
  return p == Provenance::Base ? "base" : "induced";
}

bool Lexicon::add(std::string_view source, std::string_view target,
                  Provenance provenance) {
  if (source.empty()) throw ValidationError("lexicon source is empty");
  if (unicode::contains_whitespace(source)) {
    throw ValidationError("lexicon source '" + std::string(source) +
                          "' contains whitespace");
  }
  auto tokens = unicode::split_whitespace(target);
  if (tokens.empty()) {
    throw ValidationError("lexicon target for '" + std::string(source) +
                          "' is empty");
  }
  std::string normalized = tokens.front();
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    normalized += ' ';
    normalized += tokens[i];
  }

  std::string key = unicode::case_fold(source);
  auto [it, inserted] = index_.try_emplace(key, sources_.size());
  if (inserted) sources_.push_back({std::move(key), {}});
  auto& candidates = sources_[it->second].candidates;
  for (const auto& c : candidates) {
    if (c.target == normalized) return false;
  }
  candidates.push_back({std::move(normalized), std::move(tokens), provenance});
  ++pair_count_;
  return true;
}

const std::vector<Candidate>* Lexicon::lookup_folded(
    const std::string& folded) const {
  auto it = index_.find(folded);
  return it == index_.end() ? nullptr : &sources_[it->second].candidates;
}

const std::vector<Candidate>* Lexicon::lookup(std::string_view token) const {
  return lookup_folded(unicode::case_fold(token));
}

std::vector<LexiconEntry> Lexicon::entries() const {
  std::vector<LexiconEntry> out;
  out.reserve(pair_count_);
  for (const auto& s : sources_) {
    for (const auto& c : s.candidates) {
      out.push_back({s.source, c.target, c.provenance});
    }
  }
  return out;
}

bool Lexicon::has_multi_token_targets() const {
  for (const auto& s : sources_) {
    for (const auto& c : s.candidates) {
      if (c.multi_token()) return true;
    }
  }
  return false;
}

LoadedLexicon read_lexicon(std::istream& in, const std::string& name,
                           const LexiconLoadOptions& options) {
  LoadedLexicon result{Lexicon(options.src_lang, options.tgt_lang), 0};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;

    const auto tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw FormatError(name, line_no, "expected exactly two tab-separated fields");
    }
    const std::string_view source(line.data(), tab);
    const std::string_view target(line.data() + tab + 1, line.size() - tab - 1);
    if (source.empty() || target.empty()) {
      throw FormatError(name, line_no, "empty field");
    }
    if (options.mode == TargetMode::SingleTokenOnly &&
        unicode::split_whitespace(target).size() > 1) {
      ++result.dropped;
      continue;
    }
    try {
      result.lexicon.add(source, target, options.provenance);
    } catch (const ValidationError& e) {
      throw FormatError(name, line_no, e.what());
    }
  }
  if (in.bad()) throw IoError("failed reading " + name);
  return result;
}

LoadedLexicon load_lexicon(const std::filesystem::path& path,
                           const LexiconLoadOptions& options) {
  auto in = open_input(path);
  return read_lexicon(in, path.string(), options);
}

LoadedLexicon load_lexicon(const std::filesystem::path& path, TargetMode mode) {
  LexiconLoadOptions options;
  options.mode = mode;
  return load_lexicon(path, options);
}

void write_lexicon(std::ostream& out, const Lexicon& lex) {
  for (const auto& s : lex.sources()) {
    for (const auto& c : s.candidates) out << s.source << '\t' << c.target << '\n';
  }
}

void save_lexicon(const Lexicon& lex, const std::filesystem::path& path) {
  auto out = open_output(path);
  write_lexicon(out, lex);
  finish_output(out, path);
}

Lexicon merge(const Lexicon& base, const Lexicon& extra) {
  if (base.src_lang() != extra.src_lang() || base.tgt_lang() != extra.tgt_lang()) {
    throw ValidationError("cannot merge lexicons " + base.src_lang() + "-" +
                          base.tgt_lang() + " and " + extra.src_lang() + "-" +
                          extra.tgt_lang());
  }
  Lexicon out = base;
  for (const auto& s : extra.sources()) {
    for (const auto& c : s.candidates) out.add(s.source, c.target, c.provenance);
  }
  return out;
}

LoadedLexicon single_token_only(const Lexicon& lex) {
  LoadedLexicon result{Lexicon(lex.src_lang(), lex.tgt_lang()), 0};
  for (const auto& s : lex.sources()) {
    for (const auto& c : s.candidates) {
      if (c.multi_token()) {
        ++result.dropped;
      } else {
        result.lexicon.add(s.source, c.target, c.provenance);
      }
    }
  }
  return result;
}

LexiconStats lexicon_stats(const Lexicon& lex) {
  LexiconStats st;
  st.distinct_sources = lex.source_count();
  for (const auto& s : lex.sources()) {
    st.entry_pairs += s.candidates.size();
    if (s.candidates.size() > 1) ++st.multi_candidate_sources;
    st.multi_token_targets += static_cast<std::size_t>(
        std::count_if(s.candidates.begin(), s.candidates.end(),
                      [](const Candidate& c) { return c.multi_token(); }));
  }
  return st;
}

}  // namespace lexsynth
