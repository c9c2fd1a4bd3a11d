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


#include "lexsynth/mix.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "fixtures.hpp"
#include "lexsynth/error.hpp"

namespace lexsynth {
namespace {

TokenizedCorpus numbered(std::size_t n, const std::string& prefix = "s") {
  TokenizedCorpus c;
  for (std::size_t i = 0; i < n; ++i) c.sentences.push_back({{prefix + std::to_string(i)}});
  return c;
}

std::map<TokenizedSentence, std::size_t> multiset(const TokenizedCorpus& c) {
  std::map<TokenizedSentence, std::size_t> m;
  for (const auto& s : c.sentences) ++m[s];
  return m;
}

TEST(Upsample, SmallExample) {
  const auto out = upsample_to_match(numbered(3), 7, 1);
  ASSERT_EQ(out.size(), 7u);
  for (const auto& [s, n] : multiset(out)) EXPECT_TRUE(n == 2 || n == 3) << s.tokens[0];
  // Two full copies in original order come first.
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(out.sentences[i].tokens[0], "s" + std::to_string(i % 3));
}

TEST(Upsample, IdentityWhenSizesMatch) {
  const auto gold = numbered(5);
  EXPECT_EQ(upsample_to_match(gold, 5, 9), gold);
}

TEST(Upsample, SmallerTargetSubsamples) {
  const auto out = upsample_to_match(numbered(10), 4, 2);
  EXPECT_EQ(out.size(), 4u);
  for (const auto& [s, n] : multiset(out)) EXPECT_EQ(n, 1u);
}

TEST(Upsample, LargeTargetMultiplicities) {
  const auto out = upsample_to_match(numbered(6000), 200000, 17);
  ASSERT_EQ(out.size(), 200000u);
  const auto m = multiset(out);
  ASSERT_EQ(m.size(), 6000u);
  std::size_t at34 = 0;
  for (const auto& [s, n] : m) {
    ASSERT_TRUE(n == 33 || n == 34);
    at34 += n == 34 ? 1 : 0;
  }
  EXPECT_EQ(at34, 200000u - 33u * 6000u);
}

TEST(Upsample, SeedChangesOnlyThePartialCopy) {
  const auto a = upsample_to_match(numbered(100), 250, 1);
  const auto b = upsample_to_match(numbered(100), 250, 2);
  EXPECT_EQ(a, upsample_to_match(numbered(100), 250, 1));
  EXPECT_NE(a, b);
  EXPECT_TRUE(std::equal(a.sentences.begin(), a.sentences.begin() + 200, b.sentences.begin()));
}

TEST(Upsample, RejectsEmpty) {
  EXPECT_THROW(upsample_to_match(TokenizedCorpus{}, 10, 1), ValidationError);
  EXPECT_THROW(upsample_to_match(numbered(3), 0, 1), ValidationError);
}

TEST(Concat, UnshuffledKeepsOrder) {
  const auto out = concat_shuffle({numbered(2, "a"), numbered(3, "b")}, 0, false);
  ASSERT_EQ(out.size(), 5u);
  EXPECT_EQ(out.sentences[0].tokens[0], "a0");
  EXPECT_EQ(out.sentences[2].tokens[0], "b0");
}

TEST(Concat, ShufflePreservesMultisetFuzz) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<TokenizedCorpus> parts(1 + rng() % 4);
    TokenizedCorpus all;
    for (auto& p : parts) {
      const auto n = rng() % 30;
      for (std::size_t i = 0; i < n; ++i) {
        p.sentences.push_back({{testing::random_word(rng, 10, "w"), testing::random_word(rng, 3, "v")}});
        all.sentences.push_back(p.sentences.back());
      }
    }
    const auto seed = rng();
    const auto out = concat_shuffle(parts, seed, true);
    EXPECT_EQ(multiset(out), multiset(all));
    EXPECT_EQ(out, concat_shuffle(parts, seed, true));
  }
}

TEST(Concat, ShuffleIsAPermutation) {
  const auto out = concat_shuffle({numbered(50)}, 3, true);
  EXPECT_NE(out, numbered(50));
  EXPECT_EQ(multiset(out), multiset(numbered(50)));
}

TEST(Joint, GoldThenPseudo) {
  const auto gold = testing::worked::pos_corpus("the house", "DET NOUN");
  const auto pseudo = testing::worked::pos_corpus("il dar", "DET NOUN");
  const auto joint = build_joint_labeled(gold, pseudo);
  ASSERT_EQ(joint.size(), 2u);
  EXPECT_EQ(joint.sentences[0], gold.sentences[0]);
  EXPECT_EQ(joint.sentences[1], pseudo.sentences[0]);
}

TEST(Joint, SchemaMismatchRejected) {
  const auto gold = testing::worked::pos_corpus("the house", "DET NOUN");
  auto ner = testing::worked::pos_corpus("il dar", "O O");
  ner.schema = Schema::NER;
  EXPECT_THROW(build_joint_labeled(gold, ner), ValidationError);
  auto conllu = gold;
  conllu.layout.format = LabeledFormat::CoNLLU;
  EXPECT_THROW(build_joint_labeled(gold, conllu), ValidationError);
}

}  // namespace
}  // namespace lexsynth
