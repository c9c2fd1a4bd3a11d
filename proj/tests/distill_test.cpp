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


#include "lexsynth/distill.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "lexsynth/error.hpp"

namespace lexsynth {
namespace {

namespace worked = testing::worked;

TEST(Distill, WorkedExampleRelabelsTwoPositions) {
  const auto pseudo = worked::pos_corpus(worked::kPosPseudo, worked::kPosLabels);
  const auto teacher = worked::pos_corpus(worked::kPosPseudo, worked::kDistilledLabels);
  const auto d = apply_teacher_labels(pseudo, teacher);
  EXPECT_EQ(d.corpus.sentences[0].labels, testing::words(worked::kDistilledLabels));
  EXPECT_EQ(d.corpus.sentences[0].tokens, pseudo.sentences[0].tokens);
  EXPECT_EQ(d.report.positions, 17u);
  EXPECT_EQ(d.report.changed, 2u);
  EXPECT_NEAR(d.report.change_rate, 2.0 / 17.0, 1e-12);
  const std::map<std::pair<std::string, std::string>, std::size_t> confusion{
      {{"AUX", "NOUN"}, 1}, {{"VERB", "NOUN"}, 1}};
  EXPECT_EQ(d.report.confusion, confusion);
  EXPECT_EQ(distill_report(pseudo, d.corpus), d.report);
}

TEST(Distill, Idempotent) {
  const auto pseudo = worked::pos_corpus(worked::kPosPseudo, worked::kPosLabels);
  const auto teacher = worked::pos_corpus(worked::kPosPseudo, worked::kDistilledLabels);
  const auto once = apply_teacher_labels(pseudo, teacher);
  const auto twice = apply_teacher_labels(once.corpus, teacher);
  EXPECT_EQ(twice.corpus, once.corpus);
  EXPECT_EQ(twice.report.changed, 0u);
  EXPECT_TRUE(twice.report.confusion.empty());
}

TEST(Distill, KeepsPseudoRawColumns) {
  std::istringstream pin("1\tdar\thouse\tVERB\t_\t_\t0\troot\t_\t_\n\n");
  std::istringstream tin("dar\tNOUN\n\n");
  LabeledLayout conllu;
  conllu.format = LabeledFormat::CoNLLU;
  const auto pseudo = read_labeled(pin, "p", Schema::POS, conllu);
  const auto teacher = read_labeled(tin, "t", Schema::POS, LabeledLayout{});
  const auto d = apply_teacher_labels(pseudo, teacher);
  std::ostringstream out;
  write_labeled(out, d.corpus, LabeledFormat::CoNLLU);
  EXPECT_EQ(out.str(), "1\tdar\thouse\tNOUN\t_\t_\t0\troot\t_\t_\n\n");
}

TEST(Distill, DependencyHeadsAndRelations) {
  LabeledCorpus pseudo;
  pseudo.schema = Schema::DEP;
  pseudo.sentences.push_back({{"a", "b"}, {"det", "root"}, {2, 0}, {}, {}});
  auto teacher = pseudo;
  teacher.sentences[0].heads = {0, 1};
  teacher.sentences[0].labels = {"root", "root"};
  const auto d = apply_teacher_labels(pseudo, teacher);
  EXPECT_EQ(d.corpus.sentences[0].heads, (std::vector<int>{0, 1}));
  EXPECT_EQ(d.report.changed, 2u);  // one relation change, one head-only change
  EXPECT_EQ(d.report.confusion.at({"det", "root"}), 1u);
}

TEST(Distill, MismatchesAreRejected) {
  const auto pseudo = worked::pos_corpus("a b", "X Y");
  EXPECT_THROW(apply_teacher_labels(pseudo, worked::pos_corpus("a c", "X Y")), ValidationError);
  EXPECT_THROW(apply_teacher_labels(pseudo, worked::pos_corpus("a", "X")), ValidationError);
  EXPECT_THROW(apply_teacher_labels(pseudo, LabeledCorpus{}), ValidationError);
  auto ner = pseudo;
  ner.schema = Schema::NER;
  EXPECT_THROW(apply_teacher_labels(pseudo, ner), ValidationError);
  try {
    apply_teacher_labels(pseudo, worked::pos_corpus("a c", "X Y"));
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("sentence 1"), std::string::npos) << e.what();
  }
}

TEST(Distill, RandomTeachersCountDifferences) {
  std::mt19937_64 rng(3);
  LabeledCorpus pseudo;
  pseudo.schema = Schema::POS;
  for (int i = 0; i < 100; ++i) pseudo.sentences.push_back(testing::random_labeled_sentence(rng, Schema::POS));
  auto teacher = pseudo;
  std::size_t expected = 0;
  std::size_t positions = 0;
  for (auto& s : teacher.sentences) {
    for (auto& l : s.labels) {
      ++positions;
      if (rng() % 3 == 0 && l != "X") {
        l = "X";
        ++expected;
      }
    }
  }
  const auto d = apply_teacher_labels(pseudo, teacher);
  EXPECT_EQ(d.report.positions, positions);
  EXPECT_EQ(d.report.changed, expected);
  std::size_t total = 0;
  for (const auto& [k, v] : d.report.confusion) total += v;
  EXPECT_EQ(total, expected);
}

}  // namespace
}  // namespace lexsynth
