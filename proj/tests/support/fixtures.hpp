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

#ifndef LEXSYNTH_TESTS_FIXTURES_HPP_
#define LEXSYNTH_TESTS_FIXTURES_HPP_

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lexsynth/corpus_io.hpp"
#include "lexsynth/lexicon.hpp"

namespace lexsynth::testing {

/// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("lexsynth-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<std::string> words(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream ss(text);
  for (std::string w; ss >> w;) out.push_back(w);
  return out;
}

inline Lexicon lexicon_from(const std::vector<std::pair<std::string, std::string>>& pairs) {
  Lexicon lex;
  for (const auto& [s, t] : pairs) lex.add(s, t);
  return lex;
}

inline std::string lexicon_tsv(const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::string out;
  for (const auto& [s, t] : pairs) out += s + "\t" + t + "\n";
  return out;
}

// Worked example: English Wikipedia sentence and its Maltese pseudo text.
namespace worked {

inline const std::string kMonoSource =
    "Anarchism calls for the abolition of the state , which it holds to be "
    "undesirable , unnecessary , and harmful .";
inline const std::string kMonoPseudo =
    "Anarchism calls għal il abolition ta’ il stat , lima hi holds għal tkun "
    "undesirable , bla bzonn , u harmful .";
inline const std::vector<std::pair<std::string, std::string>> kMonoLexicon{
    {"for", "għal"}, {"the", "il"},    {"of", "ta’"},  {"state", "stat"},
    {"which", "lima"}, {"it", "hi"},   {"to", "għal"}, {"be", "tkun"},
    {"unnecessary", "bla bzonn"}, {"and", "u"}};

inline const std::string kPosSource =
    "I suspect the streets of Baghdad will look as if a war is looming this week .";
inline const std::string kPosPseudo =
    "jien iddubita il streets ta’ Bagdad xewqa hares kif jekk a gwerra is "
    "looming dan ġimgħa .";
inline const std::string kPosLabels =
    "PRON VERB DET NOUN ADP PROPN AUX VERB SCONJ SCONJ DET NOUN AUX VERB DET NOUN PUNCT";
inline const std::string kDistilledLabels =
    "PRON VERB DET NOUN ADP PROPN NOUN NOUN SCONJ SCONJ DET NOUN AUX VERB DET NOUN PUNCT";
inline const std::vector<std::pair<std::string, std::string>> kPosLexicon{
    {"I", "jien"},  {"suspect", "iddubita"}, {"the", "il"},    {"of", "ta’"},
    {"Baghdad", "Bagdad"}, {"will", "xewqa"}, {"look", "hares"}, {"as", "kif"},
    {"if", "jekk"}, {"war", "gwerra"},       {"this", "dan"},  {"week", "ġimgħa"}};

inline LabeledCorpus pos_corpus(const std::string& tokens, const std::string& labels) {
  LabeledCorpus c;
  c.schema = Schema::POS;
  LabeledSentence s;
  s.tokens = words(tokens);
  s.labels = words(labels);
  c.sentences.push_back(s);
  return c;
}

inline std::string two_column(const std::string& tokens, const std::string& labels) {
  const auto t = words(tokens);
  const auto l = words(labels);
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) out += t[i] + "\t" + l[i] + "\n";
  return out + "\n";
}

}  // namespace worked

// --- random generators --------------------------------------------------

inline std::string random_word(std::mt19937_64& rng, int vocab, const std::string& prefix) {
  return prefix + std::to_string(std::uniform_int_distribution<int>(0, vocab - 1)(rng));
}

/// Toy parallel corpus: up to `max_pairs` pairs, sentence lengths 1..5,
/// at most `vocab` types per side.
inline ParallelCorpus random_parallel(std::mt19937_64& rng, int max_pairs, int vocab) {
  ParallelCorpus c;
  const int n = std::uniform_int_distribution<int>(1, max_pairs)(rng);
  std::uniform_int_distribution<int> len(1, 5);
  for (int p = 0; p < n; ++p) {
    SentencePair pair;
    for (int i = len(rng); i > 0; --i) pair.source.tokens.push_back(random_word(rng, vocab, "s"));
    for (int i = len(rng); i > 0; --i) pair.target.tokens.push_back(random_word(rng, vocab, "t"));
    c.pairs.push_back(pair);
  }
  return c;
}

/// Random labeled sentence for `schema` with 1..max_len tokens. Tokens mix
/// case and include punctuation and non-ASCII forms.
inline LabeledSentence random_labeled_sentence(std::mt19937_64& rng, Schema schema,
                                               int max_len = 25) {
  static const std::vector<std::string> kTokens{
      "The", "the", "house", "House", "I", "will", "look", "war", "week", ",", ".",
      "Baghdad", "of", "ta’", "ġimgħa", "STREETS", "a", "is", "x-ray", "naïve"};
  static const std::vector<std::string> kNer{"O", "B-PER", "I-PER", "B-LOC", "I-LOC", "B-ORG"};
  static const std::vector<std::string> kPos{"NOUN", "VERB", "DET", "ADP", "PUNCT", "PROPN", "AUX"};
  static const std::vector<std::string> kRel{"nsubj", "obj", "root", "det", "case", "punct"};
  auto pick = [&](const std::vector<std::string>& v) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
  };
  LabeledSentence s;
  const int n = std::uniform_int_distribution<int>(1, max_len)(rng);
  for (int i = 0; i < n; ++i) {
    s.tokens.push_back(pick(kTokens));
    switch (schema) {
      case Schema::NER: s.labels.push_back(pick(kNer)); break;
      case Schema::POS: s.labels.push_back(pick(kPos)); break;
      case Schema::DEP:
        s.labels.push_back(pick(kRel));
        s.heads.push_back(std::uniform_int_distribution<int>(0, n)(rng));
        break;
    }
  }
  return s;
}

}  // namespace lexsynth::testing

#endif  // LEXSYNTH_TESTS_FIXTURES_HPP_
