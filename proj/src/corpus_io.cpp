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

#include "lexsynth/corpus_io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>

#include "lexsynth/error.hpp"
#include "lexsynth/output.hpp"
#include "lexsynth/unicode.hpp"

namespace lexsynth {

namespace {

constexpr std::size_t kConlluColumns = 10;
constexpr std::size_t kConlluForm = 1;
constexpr std::size_t kConlluUpos = 3;
constexpr std::size_t kConlluHead = 6;
constexpr std::size_t kConlluDeprel = 7;

bool read_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

bool is_blank(std::string_view line) {
  return unicode::split_whitespace(line).empty();
}

std::vector<std::string> split_tabs(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    fields.emplace_back(line.substr(start, tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return fields;
}

std::optional<int> parse_int(std::string_view text) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) return std::nullopt;
  return value;
}

void write_tokens(std::ostream& out, const std::vector<std::string>& tokens) {
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out << ' ';
    out << tokens[i];
  }
  out << '\n';
}

void write_row(std::ostream& out, const std::vector<std::string>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out << '\t';
    out << row[i];
  }
  out << '\n';
}

// Accumulates the token lines of one sentence while parsing.
struct SentenceBuilder {
  LabeledSentence sentence;
  std::vector<std::size_t> token_lines;

  bool empty() const { return sentence.tokens.empty() && sentence.passthrough.empty(); }
};

void check_token(const std::string& token, const std::string& name,
                 std::size_t line_no) {
  if (token.empty()) throw FormatError(name, line_no, "empty token");
  if (unicode::contains_whitespace(token)) {
    throw FormatError(name, line_no, "token '" + token + "' contains whitespace");
  }
}

void finish_sentence(SentenceBuilder& b, Schema schema, const std::string& name,
                     std::size_t line_no, std::vector<LabeledSentence>& out) {
  if (b.empty()) return;
  if (b.sentence.tokens.empty()) {
    throw FormatError(name, line_no, "sentence has no tokens");
  }
  if (schema == Schema::DEP) {
    const auto n = static_cast<int>(b.sentence.size());
    for (std::size_t i = 0; i < b.sentence.heads.size(); ++i) {
      const int h = b.sentence.heads[i];
      if (h < 0 || h > n) {
        throw FormatError(name, b.token_lines[i],
                          "head " + std::to_string(h) + " outside [0, " +
                              std::to_string(n) + "]");
      }
    }
  }
  out.push_back(std::move(b.sentence));
  b = SentenceBuilder{};
}

void parse_two_column_line(SentenceBuilder& b, std::vector<std::string> fields,
                           Schema schema, const LabeledLayout& layout,
                           const std::string& name, std::size_t line_no) {
  const std::size_t needed =
      std::max(layout.token_col, layout.label_col + (schema == Schema::DEP ? 1 : 0)) + 1;
  if (fields.size() < needed) {
    throw FormatError(name, line_no,
                      "expected at least " + std::to_string(needed) +
                          " tab-separated columns, found " +
                          std::to_string(fields.size()));
  }
  check_token(fields[layout.token_col], name, line_no);
  auto& s = b.sentence;
  s.tokens.push_back(fields[layout.token_col]);
  if (schema == Schema::DEP) {
    const auto head = parse_int(fields[layout.label_col]);
    if (!head) {
      throw FormatError(name, line_no,
                        "non-integer head '" + fields[layout.label_col] + "'");
    }
    s.heads.push_back(*head);
    s.labels.push_back(fields[layout.label_col + 1]);
  } else {
    if (fields[layout.label_col].empty()) throw FormatError(name, line_no, "empty label");
    s.labels.push_back(fields[layout.label_col]);
  }
  s.rows.push_back(std::move(fields));
  b.token_lines.push_back(line_no);
}

void parse_conllu_line(SentenceBuilder& b, const std::string& line,
                       Schema schema, const std::string& name,
                       std::size_t line_no) {
  auto& s = b.sentence;
  if (line.front() == '#') {
    s.passthrough.push_back({s.tokens.size(), line});
    return;
  }
  auto fields = split_tabs(line);
  if (fields.size() != kConlluColumns) {
    throw FormatError(name, line_no,
                      "expected 10 tab-separated columns, found " +
                          std::to_string(fields.size()));
  }
  if (fields[0].find_first_of("-.") != std::string::npos) {
    s.passthrough.push_back({s.tokens.size(), line});
    return;
  }
  if (!parse_int(fields[0])) {
    throw FormatError(name, line_no, "non-integer ID '" + fields[0] + "'");
  }
  check_token(fields[kConlluForm], name, line_no);
  s.tokens.push_back(fields[kConlluForm]);
  if (schema == Schema::DEP) {
    const auto head = parse_int(fields[kConlluHead]);
    if (!head) {
      throw FormatError(name, line_no,
                        "non-integer HEAD '" + fields[kConlluHead] + "'");
    }
    s.heads.push_back(*head);
    s.labels.push_back(fields[kConlluDeprel]);
  } else {
    s.labels.push_back(fields[kConlluUpos]);
  }
  s.rows.push_back(std::move(fields));
  b.token_lines.push_back(line_no);
}

std::vector<std::string> fresh_row(const LabeledSentence& s, std::size_t i,
                                   Schema schema, LabeledFormat format) {
  if (format == LabeledFormat::CoNLLU) {
    std::vector<std::string> row(kConlluColumns, "_");
    row[0] = std::to_string(i + 1);
    row[kConlluForm] = s.tokens[i];
    if (schema == Schema::DEP) {
      row[kConlluHead] = std::to_string(s.heads[i]);
      row[kConlluDeprel] = s.labels[i];
    } else {
      row[kConlluUpos] = s.labels[i];
    }
    return row;
  }
  if (schema == Schema::DEP) {
    return {s.tokens[i], std::to_string(s.heads[i]), s.labels[i]};
  }
  return {s.tokens[i], s.labels[i]};
}

std::vector<std::string> layout_row(const LabeledSentence& s, std::size_t i,
                                    Schema schema, const LabeledLayout& layout) {
  auto row = s.rows[i];
  if (layout.format == LabeledFormat::CoNLLU) {
    row[kConlluForm] = s.tokens[i];
    if (schema == Schema::DEP) {
      row[kConlluHead] = std::to_string(s.heads[i]);
      row[kConlluDeprel] = s.labels[i];
    } else {
      row[kConlluUpos] = s.labels[i];
    }
  } else {
    row[layout.token_col] = s.tokens[i];
    if (schema == Schema::DEP) {
      row[layout.label_col] = std::to_string(s.heads[i]);
      row[layout.label_col + 1] = s.labels[i];
    } else {
      row[layout.label_col] = s.labels[i];
    }
  }
  return row;
}

}  // namespace

const char* to_string(Schema s) {
  switch (s) {
    case Schema::NER: return "ner";
    case Schema::POS: return "pos";
    case Schema::DEP: return "dep";
  }
  return "?";
}

const char* to_string(LabeledFormat f) {
  return f == LabeledFormat::TwoColumn ? "two-col" : "conllu";
}

std::optional<Schema> parse_schema(std::string_view name) {
  if (name == "ner") return Schema::NER;
  if (name == "pos") return Schema::POS;
  if (name == "dep") return Schema::DEP;
  return std::nullopt;
}

std::optional<LabeledFormat> parse_format(std::string_view name) {
  if (name == "two-col") return LabeledFormat::TwoColumn;
  if (name == "conllu") return LabeledFormat::CoNLLU;
  return std::nullopt;
}

void validate_sentence(const LabeledSentence& s, Schema schema) {
  const std::size_t n = s.tokens.size();
  if (n == 0) throw ValidationError("sentence has no tokens");
  if (s.labels.size() != n) {
    throw ValidationError("sentence has " + std::to_string(n) + " tokens but " +
                          std::to_string(s.labels.size()) + " labels");
  }
  if (schema == Schema::DEP) {
    if (s.heads.size() != n) {
      throw ValidationError("sentence has " + std::to_string(n) +
                            " tokens but " + std::to_string(s.heads.size()) +
                            " heads");
    }
    for (int h : s.heads) {
      if (h < 0 || h > static_cast<int>(n)) {
        throw ValidationError("head " + std::to_string(h) + " outside [0, " +
                              std::to_string(n) + "]");
      }
    }
  } else if (!s.heads.empty()) {
    throw ValidationError(std::string("heads present in a ") + to_string(schema) +
                          " sentence");
  }
  if (!s.rows.empty() && s.rows.size() != n) {
    throw ValidationError("raw row count does not match token count");
  }
}

// --- mono ---------------------------------------------------------------

TokenizedCorpus read_mono(std::istream& in, std::size_t limit) {
  TokenizedCorpus corpus;
  std::string line;
  while ((limit == 0 || corpus.size() < limit) && read_line(in, line)) {
    auto tokens = unicode::split_whitespace(line);
    if (tokens.empty()) continue;
    corpus.sentences.push_back({std::move(tokens)});
  }
  if (in.bad()) throw IoError("failed reading monolingual corpus");
  return corpus;
}

TokenizedCorpus read_mono(const std::filesystem::path& path, std::size_t limit) {
  auto in = open_input(path);
  return read_mono(in, limit);
}

void write_mono(std::ostream& out, const TokenizedCorpus& corpus) {
  for (const auto& s : corpus.sentences) write_tokens(out, s.tokens);
}

void write_mono(const TokenizedCorpus& corpus, const std::filesystem::path& path) {
  auto out = open_output(path);
  write_mono(out, corpus);
  finish_output(out, path);
}

// --- labeled ------------------------------------------------------------

LabeledCorpus read_labeled(std::istream& in, const std::string& name,
                           Schema schema, const LabeledLayout& layout) {
  if (layout.format == LabeledFormat::CoNLLU && schema == Schema::NER) {
    throw ValidationError("the ner schema is only supported in two-col format");
  }
  LabeledCorpus corpus;
  corpus.schema = schema;
  corpus.layout = layout;

  SentenceBuilder builder;
  std::string line;
  std::size_t line_no = 0;
  while (read_line(in, line)) {
    ++line_no;
    if (is_blank(line)) {
      finish_sentence(builder, schema, name, line_no, corpus.sentences);
      continue;
    }
    if (layout.format == LabeledFormat::CoNLLU) {
      parse_conllu_line(builder, line, schema, name, line_no);
    } else {
      parse_two_column_line(builder, split_tabs(line), schema, layout, name,
                            line_no);
    }
  }
  if (in.bad()) throw IoError("failed reading " + name);
  finish_sentence(builder, schema, name, line_no, corpus.sentences);
  return corpus;
}

LabeledCorpus read_labeled(const std::filesystem::path& path, Schema schema,
                           const LabeledLayout& layout) {
  auto in = open_input(path);
  return read_labeled(in, path.string(), schema, layout);
}

LabeledCorpus read_labeled(const std::filesystem::path& path, Schema schema,
                           LabeledFormat format) {
  LabeledLayout layout;
  layout.format = format;
  return read_labeled(path, schema, layout);
}

void write_labeled(std::ostream& out, const LabeledCorpus& corpus,
                   LabeledFormat format) {
  const bool same_layout = format == corpus.layout.format;
  for (const auto& s : corpus.sentences) {
    validate_sentence(s, corpus.schema);
    const bool use_rows = same_layout && s.rows.size() == s.size();
    std::size_t next_passthrough = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
      if (format == LabeledFormat::CoNLLU) {
        while (next_passthrough < s.passthrough.size() &&
               s.passthrough[next_passthrough].before_token == i) {
          out << s.passthrough[next_passthrough++].text << '\n';
        }
      }
      if (i == s.size()) break;
      write_row(out, use_rows ? layout_row(s, i, corpus.schema, corpus.layout)
                              : fresh_row(s, i, corpus.schema, format));
    }
    out << '\n';
  }
}

void write_labeled(const LabeledCorpus& corpus, const std::filesystem::path& path,
                   LabeledFormat format) {
  auto out = open_output(path);
  write_labeled(out, corpus, format);
  finish_output(out, path);
}

LabeledFormat sniff_format(const std::filesystem::path& path) {
  auto in = open_input(path);
  std::string line;
  while (read_line(in, line)) {
    if (is_blank(line) || line.front() == '#') continue;
    const auto fields = split_tabs(line);
    const bool numeric_id =
        !fields[0].empty() &&
        std::all_of(fields[0].begin(), fields[0].end(), [](char c) {
          return (c >= '0' && c <= '9') || c == '-' || c == '.';
        });
    return fields.size() == kConlluColumns && numeric_id ? LabeledFormat::CoNLLU
                                                         : LabeledFormat::TwoColumn;
  }
  return LabeledFormat::TwoColumn;
}

// --- parallel -----------------------------------------------------------

ParallelReadResult read_parallel(std::istream& src, std::istream& tgt) {
  std::vector<std::string> src_lines;
  std::vector<std::string> tgt_lines;
  std::string line;
  while (read_line(src, line)) src_lines.push_back(line);
  while (read_line(tgt, line)) tgt_lines.push_back(line);
  if (src.bad() || tgt.bad()) throw IoError("failed reading parallel corpus");
  if (src_lines.size() != tgt_lines.size()) {
    throw ValidationError("parallel files differ in length: source has " +
                          std::to_string(src_lines.size()) +
                          " lines, target has " +
                          std::to_string(tgt_lines.size()) + " lines");
  }
  ParallelReadResult result;
  result.corpus.pairs.reserve(src_lines.size());
  for (std::size_t i = 0; i < src_lines.size(); ++i) {
    auto s = unicode::split_whitespace(src_lines[i]);
    auto t = unicode::split_whitespace(tgt_lines[i]);
    if (s.empty() || t.empty()) {
      ++result.dropped;
      continue;
    }
    result.corpus.pairs.push_back({{std::move(s)}, {std::move(t)}});
  }
  return result;
}

ParallelReadResult read_parallel(const std::filesystem::path& src_path,
                                 const std::filesystem::path& tgt_path) {
  auto src = open_input(src_path);
  auto tgt = open_input(tgt_path);
  return read_parallel(src, tgt);
}

void write_parallel(const ParallelCorpus& corpus,
                    const std::filesystem::path& src_path,
                    const std::filesystem::path& tgt_path) {
  auto src = open_output(src_path);
  auto tgt = open_output(tgt_path);
  for (const auto& p : corpus.pairs) {
    write_tokens(src, p.source.tokens);
    write_tokens(tgt, p.target.tokens);
  }
  finish_output(src, src_path);
  finish_output(tgt, tgt_path);
}

TokenizedSentence tokenize_basic(std::string_view text) {
  return {unicode::tokenize_basic(text)};
}

}  // namespace lexsynth
