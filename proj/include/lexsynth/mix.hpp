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

#ifndef LEXSYNTH_MIX_HPP_
#define LEXSYNTH_MIX_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lexsynth/corpus_io.hpp"

namespace lexsynth {

/// Repeats `gold` to exactly `target_size` sentences: floor(target/|gold|)
/// full copies in order, then a seeded sample without replacement of the
/// remainder, kept in original relative order. Throws ValidationError for
/// an empty gold corpus or a zero target size.
TokenizedCorpus upsample_to_match(const TokenizedCorpus& gold,
                                  std::size_t target_size, std::uint64_t seed);

/// Concatenates in argument order, then optionally applies a seeded
/// uniform permutation.
TokenizedCorpus concat_shuffle(const std::vector<TokenizedCorpus>& corpora,
                               std::uint64_t seed, bool shuffle);

/// Gold sentences followed by pseudo ones, unshuffled. Throws
/// ValidationError when schemas or formats differ.
LabeledCorpus build_joint_labeled(const LabeledCorpus& gold,
                                  const LabeledCorpus& pseudo);

}  // namespace lexsynth

#endif  // LEXSYNTH_MIX_HPP_
