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

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "lexsynth/error.hpp"

namespace lexsynth {
namespace {

using testing::lexicon_from;

LoadedLexicon parse(const std::string& text, TargetMode mode = TargetMode::AllowMultiToken) {
  std::istringstream in(text);
  LexiconLoadOptions options;
  options.mode = mode;
  return read_lexicon(in, "test.tsv", options);
}

std::set<std::pair<std::string, std::string>> pair_set(const Lexicon& lex) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& e : lex.entries()) out.emplace(e.source, e.target);
  return out;
}

TEST(LoadLexicon, SingleTokenEntriesKept) {
  const auto r = parse("will\txewqa\nlook\thares\n", TargetMode::SingleTokenOnly);
  EXPECT_EQ(r.lexicon.entry_count(), 2u);
  EXPECT_EQ(r.dropped, 0u);
}

TEST(LoadLexicon, MultiTokenTargetDroppedInSingleTokenMode) {
  const auto r = parse("unnecessary\tbla bzonn\n", TargetMode::SingleTokenOnly);
  EXPECT_EQ(r.lexicon.entry_count(), 0u);
  EXPECT_EQ(r.dropped, 1u);

  const auto all = parse("unnecessary\tbla bzonn\n");
  EXPECT_EQ(all.lexicon.entry_count(), 1u);
  EXPECT_EQ(all.dropped, 0u);
}

TEST(LoadLexicon, EmptyFile) {
  const auto r = parse("");
  EXPECT_TRUE(r.lexicon.empty());
  EXPECT_EQ(r.dropped, 0u);
}

TEST(LoadLexicon, CommentsBlankLinesAndCrlf) {
  const auto r = parse("# lexicon export\n\nI\tjien\r\n");
  ASSERT_EQ(r.lexicon.entry_count(), 1u);
  EXPECT_EQ(r.lexicon.entries()[0], (LexiconEntry{"i", "jien", Provenance::Base}));
}

TEST(LoadLexicon, SourcesFoldedTargetsVerbatim) {
  const auto r = parse("Baghdad\tBagdad\nbaghdad\tBagdad\nBAGHDAD\tBaghdad\n");
  ASSERT_EQ(r.lexicon.source_count(), 1u);
  ASSERT_NE(r.lexicon.lookup("BaGhDaD"), nullptr);
  const auto& c = *r.lexicon.lookup("baghdad");
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].target, "Bagdad");
  EXPECT_EQ(c[1].target, "Baghdad");
}

TEST(LoadLexicon, DuplicatesKeepFirstSeenOrder) {
  const auto r = parse("a\tx\nb\tz\na\ty\na\tx\n");
  EXPECT_EQ(r.lexicon.entry_count(), 3u);
  const auto& c = *r.lexicon.lookup("a");
  EXPECT_EQ(c[0].target, "x");
  EXPECT_EQ(c[1].target, "y");
  EXPECT_EQ(r.lexicon.sources()[1].source, "b");
}

TEST(LoadLexicon, MalformedLinesNameTheLine) {
  for (const std::string bad : {"a\tb\nc\n", "a\tb\nc\td\te\n", "a\tb\n\tx\n", "a\tb\nx\t\n",
                                "a\tb\nx y\tz\n", "a\tb\nx\t \n"}) {
    try {
      parse(bad);
      FAIL() << "accepted: " << bad;
    } catch (const FormatError& e) {
      EXPECT_EQ(e.line(), 2u) << bad;
    }
  }
}

TEST(LoadLexicon, MissingFileIsIoError) {
  EXPECT_THROW(load_lexicon("/nonexistent/lexicon.tsv"), IoError);
}

TEST(LoadLexicon, IdempotentOnOwnOutput) {
  const auto first = parse("The\til\nthe\tl-\nunnecessary\tbla   bzonn\nX\ty\n").lexicon;
  std::ostringstream once;
  write_lexicon(once, first);
  const auto second = parse(once.str()).lexicon;
  std::ostringstream twice;
  write_lexicon(twice, second);
  EXPECT_EQ(once.str(), twice.str());
  EXPECT_EQ(once.str(), "the\til\nthe\tl-\nunnecessary\tbla bzonn\nx\ty\n");
}

TEST(Merge, IdentityWithEmpty) {
  const auto l = lexicon_from({{"a", "x"}, {"b", "y"}});
  EXPECT_EQ(merge(l, Lexicon{}).entries(), l.entries());
}

TEST(Merge, UnionBaseFirst) {
  const auto m = merge(lexicon_from({{"a", "x"}}), lexicon_from({{"a", "y"}, {"b", "z"}}));
  const std::vector<LexiconEntry> expected{
      {"a", "x", Provenance::Base}, {"a", "y", Provenance::Base}, {"b", "z", Provenance::Base}};
  EXPECT_EQ(m.entries(), expected);
}

TEST(Merge, DuplicateKeepsBaseProvenance) {
  Lexicon induced;
  induced.add("a", "x", Provenance::Induced);
  induced.add("b", "y", Provenance::Induced);
  const auto m = merge(lexicon_from({{"a", "x"}}), induced);
  ASSERT_EQ(m.entry_count(), 2u);
  EXPECT_EQ(m.entries()[0], (LexiconEntry{"a", "x", Provenance::Base}));
  EXPECT_EQ(m.entries()[1], (LexiconEntry{"b", "y", Provenance::Induced}));
}

TEST(Merge, LanguageMismatch) {
  EXPECT_THROW(merge(Lexicon("eng", "mlt"), Lexicon("eng", "glv")), ValidationError);
  EXPECT_NO_THROW(merge(Lexicon("eng", "mlt"), Lexicon("eng", "mlt")));
}

TEST(Stats, Empty) { EXPECT_EQ(lexicon_stats(Lexicon{}), LexiconStats{}); }

TEST(Stats, DirectCount) {
  const auto s = lexicon_stats(lexicon_from({{"a", "x"}, {"a", "y"}, {"b", "m n"}}));
  EXPECT_EQ(s, (LexiconStats{3, 2, 1, 1}));
}

// Random lexicons: pair-set algebra of merge, stats sum rule, and the
// single-token filter as a subset.
TEST(LexiconProperties, RandomLexicons) {
  std::mt19937_64 rng(7);
  auto random_lexicon = [&] {
    Lexicon lex;
    const int n = std::uniform_int_distribution<int>(0, 30)(rng);
    for (int i = 0; i < n; ++i) {
      std::string src = testing::random_word(rng, 8, i % 2 ? "W" : "w");
      std::string tgt = testing::random_word(rng, 6, "t");
      if (rng() % 4 == 0) tgt += " " + testing::random_word(rng, 6, "u");
      lex.add(src, tgt, rng() % 2 ? Provenance::Base : Provenance::Induced);
    }
    return lex;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_lexicon();
    const auto b = random_lexicon();
    const auto c = random_lexicon();

    auto expected = pair_set(a);
    const auto bs = pair_set(b);
    expected.insert(bs.begin(), bs.end());
    EXPECT_EQ(pair_set(merge(a, b)), expected);
    EXPECT_EQ(pair_set(merge(merge(a, b), c)), pair_set(merge(a, merge(b, c))));

    const auto st = lexicon_stats(a);
    std::size_t sum = 0;
    for (const auto& s : a.sources()) sum += s.candidates.size();
    EXPECT_EQ(st.entry_pairs, sum);
    EXPECT_EQ(st.entry_pairs, a.entry_count());

    const auto single = single_token_only(a);
    std::set<std::pair<std::string, std::string>> expected_single;
    for (const auto& e : a.entries()) {
      if (e.target.find(' ') == std::string::npos) expected_single.emplace(e.source, e.target);
    }
    EXPECT_EQ(pair_set(single.lexicon), expected_single);
    EXPECT_EQ(single.dropped, st.multi_token_targets);
  }
}

}  // namespace
}  // namespace lexsynth
