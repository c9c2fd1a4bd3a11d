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

#include <algorithm>
#include <numeric>

#include "lexsynth/error.hpp"
#include "lexsynth/random.hpp"

namespace lexsynth {

TokenizedCorpus upsample_to_match(const TokenizedCorpus& gold, std::size_t target_size,
                                  std::uint64_t seed) {
  if (gold.empty()) throw ValidationError("cannot upsample an empty corpus");
  if (target_size == 0) throw ValidationError("target size must be at least 1");

  const std::size_t copies = target_size / gold.size();
  const std::size_t remainder = target_size - copies * gold.size();

  TokenizedCorpus out;
  out.sentences.reserve(target_size);
  for (std::size_t c = 0; c < copies; ++c) {
    out.sentences.insert(out.sentences.end(), gold.sentences.begin(), gold.sentences.end());
  }
  if (remainder > 0) {
    // Partial Fisher-Yates: the first `remainder` slots form the sample.
    std::vector<std::size_t> index(gold.size());
    std::iota(index.begin(), index.end(), 0);
    Engine engine(seed);
    for (std::size_t i = 0; i < remainder; ++i) {
      const auto j = i + static_cast<std::size_t>(uniform_below(engine, gold.size() - i));
      std::swap(index[i], index[j]);
    }
    index.resize(remainder);
    std::sort(index.begin(), index.end());
    for (auto i : index) out.sentences.push_back(gold.sentences[i]);
  }
  return out;
}

TokenizedCorpus concat_shuffle(const std::vector<TokenizedCorpus>& corpora,
                               std::uint64_t seed, bool shuffle) {
  TokenizedCorpus out;
  std::size_t total = 0;
  for (const auto& c : corpora) total += c.size();
  out.sentences.reserve(total);
  for (const auto& c : corpora) {
    out.sentences.insert(out.sentences.end(), c.sentences.begin(), c.sentences.end());
  }
  if (shuffle) {
    Engine engine(seed);
    lexsynth::shuffle(out.sentences, engine);
  }
  return out;
}

LabeledCorpus build_joint_labeled(const LabeledCorpus& gold, const LabeledCorpus& pseudo) {
  if (gold.schema != pseudo.schema) {
    throw ValidationError(std::string("cannot join a ") + to_string(gold.schema) +
                          " corpus with a " + to_string(pseudo.schema) + " corpus");
  }
  if (!(gold.layout == pseudo.layout)) {
    throw ValidationError(std::string("cannot join ") + to_string(gold.layout.format) +
                          " data with differently laid out " +
                          to_string(pseudo.layout.format) + " data");
  }
  LabeledCorpus out = gold;
  out.sentences.insert(out.sentences.end(), pseudo.sentences.begin(), pseudo.sentences.end());
  for (const auto& s : out.sentences) validate_sentence(s, out.schema);
  return out;
}

}  // namespace lexsynth
