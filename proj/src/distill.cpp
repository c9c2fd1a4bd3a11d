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

#include "lexsynth/error.hpp"

namespace lexsynth {

namespace {

void check_shape(const LabeledCorpus& pseudo, const LabeledCorpus& other,
                 const char* what) {
  if (pseudo.schema != other.schema) {
    throw ValidationError(std::string(what) + " schema " + to_string(other.schema) +
                          " does not match pseudo schema " + to_string(pseudo.schema));
  }
  if (pseudo.size() != other.size()) {
    throw ValidationError(std::string(what) + " has " + std::to_string(other.size()) +
                          " sentences, pseudo corpus has " +
                          std::to_string(pseudo.size()));
  }
  for (std::size_t s = 0; s < pseudo.size(); ++s) {
    const auto& a = pseudo.sentences[s].tokens;
    const auto& b = other.sentences[s].tokens;
    if (a.size() != b.size()) {
      throw ValidationError(std::string(what) + " sentence " + std::to_string(s + 1) +
                            " has " + std::to_string(b.size()) + " tokens, expected " +
                            std::to_string(a.size()));
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) {
        throw ValidationError(std::string(what) + " sentence " + std::to_string(s + 1) +
                              " token " + std::to_string(i + 1) + " is '" + b[i] +
                              "', expected '" + a[i] + "'");
      }
    }
    validate_sentence(other.sentences[s], other.schema);
  }
}

}  // namespace

Distilled apply_teacher_labels(const LabeledCorpus& pseudo, const LabeledCorpus& teacher) {
  check_shape(pseudo, teacher, "teacher");
  Distilled out;
  out.corpus = pseudo;
  for (std::size_t s = 0; s < pseudo.size(); ++s) {
    auto& sentence = out.corpus.sentences[s];
    sentence.labels = teacher.sentences[s].labels;
    if (pseudo.schema == Schema::DEP) sentence.heads = teacher.sentences[s].heads;
  }
  out.report = distill_report(pseudo, out.corpus);
  return out;
}

DistillReport distill_report(const LabeledCorpus& pseudo, const LabeledCorpus& distilled) {
  check_shape(pseudo, distilled, "distilled corpus");
  DistillReport r;
  const bool dep = pseudo.schema == Schema::DEP;
  for (std::size_t s = 0; s < pseudo.size(); ++s) {
    const auto& a = pseudo.sentences[s];
    const auto& b = distilled.sentences[s];
    for (std::size_t i = 0; i < a.size(); ++i) {
      ++r.positions;
      const bool differs = a.labels[i] != b.labels[i] || (dep && a.heads[i] != b.heads[i]);
      if (!differs) continue;
      ++r.changed;
      ++r.confusion[{a.labels[i], b.labels[i]}];
    }
  }
  r.change_rate = r.positions ? static_cast<double>(r.changed) /
                                    static_cast<double>(r.positions)
                              : 0.0;
  return r;
}

}  // namespace lexsynth
