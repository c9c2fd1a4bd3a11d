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

// Thin UTF-8 helpers over ICU. Invalid byte sequences are never rejected;
// they pass through unchanged.

#ifndef LEXSYNTH_UNICODE_HPP_
#define LEXSYNTH_UNICODE_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace lexsynth::unicode {

/// Unicode default (full) case folding.
std::string case_fold(std::string_view text);

/// True when the first code point is upper/title case and the remainder is
/// already case-folded ("I", "Baghdad", but not "NATO" or "iPhone").
bool is_title_case(std::string_view text);

/// Title-cases the first code point, leaves the rest untouched.
std::string title_case_first(std::string_view text);

/// True when the string holds exactly one code point of a Unicode
/// punctuation category (Pc Pd Ps Pe Pi Pf Po).
bool is_single_punctuation(std::string_view text);

/// Splits on Unicode White_Space. Empty pieces are dropped.
std::vector<std::string> split_whitespace(std::string_view text);

/// True when the text contains any Unicode White_Space code point.
bool contains_whitespace(std::string_view text);

/// Whitespace split followed by peeling of leading and trailing
/// punctuation into separate tokens. Word-internal characters are never
/// split, and an apostrophe glued to a word stays with it ("ta’").
std::vector<std::string> tokenize_basic(std::string_view text);

}  // namespace lexsynth::unicode

#endif  // LEXSYNTH_UNICODE_HPP_
