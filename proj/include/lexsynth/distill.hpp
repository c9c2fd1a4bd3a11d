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

// Label distillation on the data side: a teacher tagger labels the pseudo
// corpus, and its predictions replace the labels carried over from the
// source language.

#ifndef LEXSYNTH_DISTILL_HPP_
#define LEXSYNTH_DISTILL_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "lexsynth/corpus_io.hpp"

namespace lexsynth {

struct DistillReport {
  std::size_t positions = 0;
  std::size_t changed = 0;
  double change_rate = 0.0;
  // (original label, teacher label) -> count, over changed positions only.
  // For DEP the key is the relation; a head-only change counts under
  // (rel, rel).
  std::map<std::pair<std::string, std::string>, std::size_t> confusion;

  bool operator==(const DistillReport&) const = default;
};

struct Distilled {
  LabeledCorpus corpus;
  DistillReport report;
};

/// Keeps the pseudo tokens and raw columns, takes labels (and heads for
/// DEP) from the teacher. The teacher must have the same schema, sentence
/// count and exact token strings; otherwise ValidationError names the
/// first mismatch.
Distilled apply_teacher_labels(const LabeledCorpus& pseudo,
                               const LabeledCorpus& teacher);

/// Throws ValidationError when the corpora differ in shape.
DistillReport distill_report(const LabeledCorpus& pseudo,
                             const LabeledCorpus& distilled);

}  // namespace lexsynth

#endif  // LEXSYNTH_DISTILL_HPP_
