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

#include "lexsynth/unicode.hpp"

#include <unicode/uchar.h>
#include <unicode/ustring.h>
#include <unicode/utf16.h>
#include <unicode/utf8.h>

#include <algorithm>
#include <cstdint>

namespace lexsynth::unicode {

namespace {

struct CodePoint {
  UChar32 value;      // negative for an undecodable byte
  std::size_t begin;  // byte offsets into the source string
  std::size_t end;
};

std::vector<CodePoint> decode(std::string_view text) {
  std::vector<CodePoint> out;
  out.reserve(text.size());
  const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
  const auto length = static_cast<int32_t>(text.size());
  int32_t i = 0;
  while (i < length) {
    const int32_t begin = i;
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    out.push_back({c, static_cast<std::size_t>(begin),
                   static_cast<std::size_t>(i)});
  }
  return out;
}

void append_utf8(std::string& out, UChar32 c) {
  char buf[U8_MAX_LENGTH];
  int32_t n = 0;
  UBool error = false;
  U8_APPEND(reinterpret_cast<uint8_t*>(buf), n, U8_MAX_LENGTH, c, error);
  if (!error) out.append(buf, static_cast<std::size_t>(n));
}

void append_folded(std::string& out, UChar32 c) {
  UChar src[U16_MAX_LENGTH];
  int32_t src_len = 0;
  UBool error = false;
  U16_APPEND(src, src_len, U16_MAX_LENGTH, c, error);
  if (error) {
    append_utf8(out, c);
    return;
  }
  // Full folding expands to at most three code points.
  UChar dst[8];
  UErrorCode status = U_ZERO_ERROR;
  const int32_t dst_len =
      u_strFoldCase(dst, 8, src, src_len, U_FOLD_CASE_DEFAULT, &status);
  if (U_FAILURE(status)) {
    append_utf8(out, c);
    return;
  }
  for (int32_t i = 0; i < dst_len;) {
    UChar32 folded;
    U16_NEXT(dst, i, dst_len, folded);
    append_utf8(out, folded);
  }
}

bool is_apostrophe(UChar32 c) {
  return c == 0x0027 || c == 0x2019 || c == 0x02BC;
}

bool is_punct(const CodePoint& cp) { return cp.value >= 0 && u_ispunct(cp.value); }

bool is_space(UChar32 c) { return c >= 0 && u_isUWhiteSpace(c); }

}  // namespace

std::string case_fold(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const auto byte = static_cast<unsigned char>(text[i]);
    if (byte < 0x80) {
      out.push_back(byte >= 'A' && byte <= 'Z' ? static_cast<char>(byte + 32)
                                               : static_cast<char>(byte));
      ++i;
      continue;
    }
    const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
    auto pos = static_cast<int32_t>(i);
    UChar32 c;
    U8_NEXT(bytes, pos, static_cast<int32_t>(text.size()), c);
    if (c < 0) {
      out.append(text.substr(i, static_cast<std::size_t>(pos) - i));
    } else {
      append_folded(out, c);
    }
    i = static_cast<std::size_t>(pos);
  }
  return out;
}

bool is_title_case(std::string_view text) {
  if (text.empty()) return false;
  const auto cps = decode(text.substr(0, 4));
  const UChar32 first = cps.front().value;
  if (first < 0 || !(u_isupper(first) || u_istitle(first))) return false;
  const auto rest = text.substr(cps.front().end);
  return case_fold(rest) == rest;
}

std::string title_case_first(std::string_view text) {
  if (text.empty()) return {};
  const auto cps = decode(text.substr(0, 4));
  if (cps.front().value < 0) return std::string(text);
  std::string out;
  append_utf8(out, u_totitle(cps.front().value));
  out.append(text.substr(cps.front().end));
  return out;
}

bool is_single_punctuation(std::string_view text) {
  const auto cps = decode(text);
  return cps.size() == 1 && is_punct(cps.front());
}

bool contains_whitespace(std::string_view text) {
  for (const auto& cp : decode(text)) {
    if (is_space(cp.value)) return true;
  }
  return false;
}

std::vector<std::string> split_whitespace(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = std::string_view::npos;
  const bool ascii = std::all_of(text.begin(), text.end(), [](char c) {
    return static_cast<unsigned char>(c) < 0x80;
  });
  if (ascii) {
    // White_Space within ASCII is exactly TAB..CR and SPACE.
    for (std::size_t i = 0; i <= text.size(); ++i) {
      const bool space = i == text.size() || text[i] == ' ' ||
                         (text[i] >= '\t' && text[i] <= '\r');
      if (space && start != std::string_view::npos) {
        out.emplace_back(text.substr(start, i - start));
        start = std::string_view::npos;
      } else if (!space && start == std::string_view::npos) {
        start = i;
      }
    }
    return out;
  }
  for (const auto& cp : decode(text)) {
    if (is_space(cp.value)) {
      if (start != std::string_view::npos) {
        out.emplace_back(text.substr(start, cp.begin - start));
        start = std::string_view::npos;
      }
    } else if (start == std::string_view::npos) {
      start = cp.begin;
    }
  }
  if (start != std::string_view::npos) out.emplace_back(text.substr(start));
  return out;
}

std::vector<std::string> tokenize_basic(std::string_view text) {
  std::vector<std::string> out;
  for (const auto& word : split_whitespace(text)) {
    const auto cps = decode(word);
    std::size_t lo = 0;
    std::size_t hi = cps.size();

    // Peeled punctuation is grouped into runs of the same code point.
    std::vector<std::pair<std::size_t, std::size_t>> leading;
    while (lo < hi && is_punct(cps[lo])) {
      if (is_apostrophe(cps[lo].value) && lo + 1 < hi && !is_punct(cps[lo + 1]))
        break;
      if (!leading.empty() && cps[leading.back().first].value == cps[lo].value &&
          leading.back().second == lo) {
        leading.back().second = lo + 1;
      } else {
        leading.emplace_back(lo, lo + 1);
      }
      ++lo;
    }
    std::vector<std::pair<std::size_t, std::size_t>> trailing;
    while (hi > lo && is_punct(cps[hi - 1])) {
      if (is_apostrophe(cps[hi - 1].value) && hi - 1 > lo &&
          !is_punct(cps[hi - 2]))
        break;
      if (!trailing.empty() &&
          cps[trailing.back().first].value == cps[hi - 1].value &&
          trailing.back().first == hi) {
        trailing.back().first = hi - 1;
      } else {
        trailing.emplace_back(hi - 1, hi);
      }
      --hi;
    }

    auto slice = [&](std::size_t a, std::size_t b) {
      return word.substr(cps[a].begin, cps[b - 1].end - cps[a].begin);
    };
    for (const auto& [a, b] : leading) out.push_back(slice(a, b));
    if (lo < hi) out.push_back(slice(lo, hi));
    for (auto it = trailing.rbegin(); it != trailing.rend(); ++it)
      out.push_back(slice(it->first, it->second));
  }
  return out;
}

}  // namespace lexsynth::unicode
