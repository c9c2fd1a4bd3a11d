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

// Corpus data model and the on-disk formats:
//
//   mono       one sentence per line, tokens separated by spaces
//   two-col    token<TAB>label per line (token<TAB>head<TAB>deprel for
//              dependencies), blank line after each sentence
//   conllu     standard 10-column CoNLL-U
//   parallel   two line-aligned mono files
//
// All writers emit UTF-8 with LF line endings and a final newline.

#ifndef LEXSYNTH_CORPUS_IO_HPP_
#define LEXSYNTH_CORPUS_IO_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lexsynth {

struct TokenizedSentence {
  std::vector<std::string> tokens;

  bool operator==(const TokenizedSentence&) const = default;
  auto operator<=>(const TokenizedSentence&) const = default;
};

struct TokenizedCorpus {
  std::vector<TokenizedSentence> sentences;

  std::size_t size() const { return sentences.size(); }
  bool empty() const { return sentences.empty(); }
  bool operator==(const TokenizedCorpus&) const = default;
};

enum class Schema { NER, POS, DEP };
enum class LabeledFormat { TwoColumn, CoNLLU };

const char* to_string(Schema s);
const char* to_string(LabeledFormat f);
std::optional<Schema> parse_schema(std::string_view name);
std::optional<LabeledFormat> parse_format(std::string_view name);

/// A line that is kept verbatim but is not a token: CoNLL-U comments,
/// multiword-token ranges ("1-2") and empty nodes ("1.1").
struct PassthroughLine {
  std::size_t before_token = 0;  // index of the token the line precedes
  std::string text;

  bool operator==(const PassthroughLine&) const = default;
};

struct LabeledSentence {
  std::vector<std::string> tokens;
  std::vector<std::string> labels;  // BIO/UPOS tag, or DEPREL for DEP
  std::vector<int> heads;           // DEP only; 0 is the root
  // Raw columns of each token line as read, so that columns the library
  // does not interpret survive a round trip. Empty for built sentences.
  std::vector<std::vector<std::string>> rows;
  std::vector<PassthroughLine> passthrough;

  std::size_t size() const { return tokens.size(); }
  bool operator==(const LabeledSentence&) const = default;
};

struct LabeledLayout {
  LabeledFormat format = LabeledFormat::TwoColumn;
  // Two-column only. For DEP the head is at label_col and the relation at
  // label_col + 1.
  std::size_t token_col = 0;
  std::size_t label_col = 1;

  bool operator==(const LabeledLayout&) const = default;
};

struct LabeledCorpus {
  Schema schema = Schema::POS;
  LabeledLayout layout;
  std::vector<LabeledSentence> sentences;

  std::size_t size() const { return sentences.size(); }
  bool empty() const { return sentences.empty(); }
  bool operator==(const LabeledCorpus&) const = default;
};

struct SentencePair {
  TokenizedSentence source;
  TokenizedSentence target;

  bool operator==(const SentencePair&) const = default;
};

struct ParallelCorpus {
  std::vector<SentencePair> pairs;

  std::size_t size() const { return pairs.size(); }
  bool empty() const { return pairs.empty(); }
};

struct ParallelReadResult {
  ParallelCorpus corpus;
  std::size_t dropped = 0;  // pairs with a blank side
};

/// Throws ValidationError if the annotation columns do not fit the tokens.
void validate_sentence(const LabeledSentence& sentence, Schema schema);

// --- mono ---------------------------------------------------------------

/// Blank lines are skipped. A non-zero limit keeps only the first `limit`
/// sentences.
TokenizedCorpus read_mono(std::istream& in, std::size_t limit = 0);
TokenizedCorpus read_mono(const std::filesystem::path& path,
                          std::size_t limit = 0);
void write_mono(std::ostream& out, const TokenizedCorpus& corpus);
void write_mono(const TokenizedCorpus& corpus,
                const std::filesystem::path& path);

// --- labeled ------------------------------------------------------------

LabeledCorpus read_labeled(std::istream& in, const std::string& name,
                           Schema schema, const LabeledLayout& layout);
LabeledCorpus read_labeled(const std::filesystem::path& path, Schema schema,
                           const LabeledLayout& layout);
LabeledCorpus read_labeled(const std::filesystem::path& path, Schema schema,
                           LabeledFormat format);
/// Writes with the corpus' own layout when `format` matches it, otherwise
/// rebuilds the lines from tokens and annotations alone.
void write_labeled(std::ostream& out, const LabeledCorpus& corpus,
                   LabeledFormat format);
void write_labeled(const LabeledCorpus& corpus,
                   const std::filesystem::path& path, LabeledFormat format);

/// Guesses the format from the first non-comment line: ten tab-separated
/// columns with a numeric ID mean CoNLL-U.
LabeledFormat sniff_format(const std::filesystem::path& path);

// --- parallel -----------------------------------------------------------

/// Throws ValidationError, stating both counts, when the files have
/// different numbers of lines.
ParallelReadResult read_parallel(std::istream& src, std::istream& tgt);
ParallelReadResult read_parallel(const std::filesystem::path& src_path,
                                 const std::filesystem::path& tgt_path);
void write_parallel(const ParallelCorpus& corpus,
                    const std::filesystem::path& src_path,
                    const std::filesystem::path& tgt_path);

// --- tokenization -------------------------------------------------------

TokenizedSentence tokenize_basic(std::string_view text);

}  // namespace lexsynth

#endif  // LEXSYNTH_CORPUS_IO_HPP_
