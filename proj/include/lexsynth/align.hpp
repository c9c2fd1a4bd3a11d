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

// IBM Model 1 word alignment and lexicon induction from a parallel corpus.
//
// The model generates each target token f_j from a source token e_i or
// from NULL, with uniform alignment probability, so the alignment
// posterior is
//
//   P(a_j = i) = t(f_j | e_i) / sum_{i'} t(f_j | e_i'),   i' over NULL + e
//
// and the corpus log-likelihood is
//
//   sum_pairs sum_j log( 1/(l+1) * sum_i t(f_j | e_i) ).
//
// t(. | e) starts uniform over the target types that co-occur with e.

#ifndef LEXSYNTH_ALIGN_HPP_
#define LEXSYNTH_ALIGN_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lexsynth/corpus_io.hpp"
#include "lexsynth/lexicon.hpp"

namespace lexsynth {

enum class Symmetrization { Intersection, Forward, Backward };

const char* to_string(Symmetrization s);

struct AlignerConfig {
  int iterations = 5;
  int min_count = 2;  // keep pairs linked at least this many times
  Symmetrization symmetrization = Symmetrization::Intersection;
  bool case_fold = true;
  bool keep_punct = false;  // keep induced pairs with a punctuation side
  unsigned threads = 1;

  /// Throws ValidationError for non-positive iterations or min_count.
  void validate() const;
};

struct AlignmentLink {
  std::uint32_t source = 0;
  std::uint32_t target = 0;

  bool operator==(const AlignmentLink&) const = default;
  auto operator<=>(const AlignmentLink&) const = default;
};

/// Links of one sentence pair, sorted and unique. A target index with no
/// link is aligned to NULL.
struct SentenceAlignment {
  std::vector<AlignmentLink> links;

  bool operator==(const SentenceAlignment&) const = default;
};

/// Sparse t(target | source) over the source types plus NULL.
class TranslationTable {
 public:
  /// Probability of `target` given source word `source`; 0 when either is
  /// unknown or they never co-occurred.
  double prob(std::string_view source, std::string_view target) const;
  double null_prob(std::string_view target) const;

  /// Source word types in first-seen order (NULL excluded).
  const std::vector<std::string>& source_words() const { return src_words_; }
  const std::vector<std::string>& target_words() const { return tgt_words_; }

  /// Non-zero entries of t(. | source) in target first-seen order. An empty
  /// `source` with `null_source` set selects NULL.
  std::vector<std::pair<std::string, double>> distribution(
      std::string_view source, bool null_source = false) const;

  /// Largest |sum_f t(f|e) - 1| over all source types including NULL.
  double max_normalization_error() const;

  /// Log-likelihood before the first iteration and after each one; the
  /// last element equals final_log_likelihood().
  const std::vector<double>& log_likelihoods() const { return log_likelihoods_; }
  double final_log_likelihood() const { return log_likelihoods_.back(); }

  bool case_folded() const { return case_folded_; }

 private:
  friend class Model1Trainer;

  // Ids: source 0 is NULL, words start at 1. Targets of source e live in
  // [offsets_[e], offsets_[e + 1]) sorted by target id.
  std::vector<std::string> src_words_;
  std::vector<std::string> tgt_words_;
  std::unordered_map<std::string, std::uint32_t> src_ids_;
  std::unordered_map<std::string, std::uint32_t> tgt_ids_;
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> targets_;
  std::vector<double> probs_;
  std::vector<double> log_likelihoods_;
  bool case_folded_ = true;

  double slot_prob(std::uint32_t source_id, std::uint32_t target_id) const;
  std::uint32_t source_id(std::string_view word) const;  // 0 if unknown
  std::uint32_t target_id(std::string_view word) const;  // UINT32_MAX if unknown

  friend std::vector<SentenceAlignment> viterbi_align(
      const ParallelCorpus&, const TranslationTable&);
};

/// Called after every EM iteration (1-based) with the current table.
using TrainingObserver = std::function<void(int, const TranslationTable&)>;

/// Throws ValidationError on an empty corpus or invalid config.
TranslationTable train_model1(const ParallelCorpus& corpus,
                              const AlignerConfig& cfg,
                              const TrainingObserver& observer = {});

/// Links each target token to argmax_i t(f_j | e_i). NULL loses ties to
/// real tokens, earlier source tokens win ties among themselves, and a
/// zero best probability leaves the token unlinked.
std::vector<SentenceAlignment> viterbi_align(const ParallelCorpus& corpus,
                                             const TranslationTable& table);

/// Combines source->target alignments with target->source ones (whose
/// links are (target index, source index)). Throws ValidationError when
/// the lists differ in length.
std::vector<SentenceAlignment> symmetrize(
    const std::vector<SentenceAlignment>& forward,
    const std::vector<SentenceAlignment>& backward, Symmetrization method);

/// Swaps the two sides of every pair.
ParallelCorpus reverse(const ParallelCorpus& corpus);

/// Trains both directions, aligns, and symmetrizes per cfg.
std::vector<SentenceAlignment> align_corpus(const ParallelCorpus& corpus,
                                            const AlignerConfig& cfg);

/// Counts linked (source type, target type) pairs over the corpus and
/// keeps those with count >= cfg.min_count, ordered by descending count
/// then lexicographically. Throws ValidationError when alignments do not
/// match the corpus.
Lexicon induce_lexicon(const ParallelCorpus& corpus,
                       const std::vector<SentenceAlignment>& alignments,
                       const AlignerConfig& cfg);

/// "i-j" pairs separated by spaces, one sentence per line.
void write_alignments(std::ostream& out,
                      const std::vector<SentenceAlignment>& alignments);
std::vector<SentenceAlignment> read_alignments(std::istream& in,
                                               const std::string& name);

}  // namespace lexsynth

#endif  // LEXSYNTH_ALIGN_HPP_
