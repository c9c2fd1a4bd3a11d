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

#include "lexsynth/align.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <map>
#include <ostream>

#include "lexsynth/error.hpp"
#include "lexsynth/parallel.hpp"
#include "lexsynth/unicode.hpp"

namespace lexsynth {

namespace {

constexpr std::uint32_t kNullId = 0;
constexpr std::uint32_t kUnknown = std::numeric_limits<std::uint32_t>::max();

std::string fold_if(const std::string& word, bool fold) {
  return fold ? unicode::case_fold(word) : word;
}

}  // namespace

const char* to_string(Symmetrization s) {
  switch (s) {
    case Symmetrization::Intersection: return "intersection";
    case Symmetrization::Forward: return "forward";
    case Symmetrization::Backward: return "backward";
  }
  return "?";
}

void AlignerConfig::validate() const {
  if (iterations < 1) throw ValidationError("iterations must be at least 1");
  if (min_count < 1) throw ValidationError("min_count must be at least 1");
}

// --- TranslationTable ---------------------------------------------------

std::uint32_t TranslationTable::source_id(std::string_view word) const {
  auto it = src_ids_.find(fold_if(std::string(word), case_folded_));
  return it == src_ids_.end() ? kNullId : it->second;
}

std::uint32_t TranslationTable::target_id(std::string_view word) const {
  auto it = tgt_ids_.find(fold_if(std::string(word), case_folded_));
  return it == tgt_ids_.end() ? kUnknown : it->second;
}

double TranslationTable::slot_prob(std::uint32_t e, std::uint32_t f) const {
  if (f == kUnknown) return 0.0;
  const auto first = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[e]);
  const auto last = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[e + 1]);
  const auto it = std::lower_bound(first, last, f);
  if (it == last || *it != f) return 0.0;
  return probs_[static_cast<std::size_t>(it - targets_.begin())];
}

double TranslationTable::prob(std::string_view source, std::string_view target) const {
  const auto e = source_id(source);
  return e == kNullId ? 0.0 : slot_prob(e, target_id(target));
}

double TranslationTable::null_prob(std::string_view target) const {
  return slot_prob(kNullId, target_id(target));
}

std::vector<std::pair<std::string, double>> TranslationTable::distribution(
    std::string_view source, bool null_source) const {
  std::vector<std::pair<std::string, double>> out;
  const auto e = null_source ? kNullId : source_id(source);
  if (e == kNullId && !null_source) return out;
  for (std::size_t s = offsets_[e]; s < offsets_[e + 1]; ++s) {
    if (probs_[s] > 0.0) out.emplace_back(tgt_words_[targets_[s]], probs_[s]);
  }
  return out;
}

double TranslationTable::max_normalization_error() const {
  double worst = 0.0;
  for (std::size_t e = 0; e + 1 < offsets_.size(); ++e) {
    if (offsets_[e] == offsets_[e + 1]) continue;
    double sum = 0.0;
    for (std::size_t s = offsets_[e]; s < offsets_[e + 1]; ++s) sum += probs_[s];
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  return worst;
}

// --- training -----------------------------------------------------------

// Holds the id-encoded corpus and, for every sentence pair, the table slot
// of each (source position incl. NULL, target position) so EM never has
// to search the table.
class Model1Trainer {
 public:
  Model1Trainer(const ParallelCorpus& corpus, const AlignerConfig& cfg)
      : threads_(std::max(1u, cfg.threads)) {
    table_.case_folded_ = cfg.case_fold;
    table_.src_words_.emplace_back();  // NULL placeholder
    encode(corpus, cfg.case_fold);
    build_slots();
  }

  TranslationTable run(int iterations, const TrainingObserver& observer) {
    compute_denominators();
    table_.log_likelihoods_.push_back(log_likelihood());
    for (int k = 1; k <= iterations; ++k) {
      accumulate_counts();
      normalize();
      compute_denominators();
      table_.log_likelihoods_.push_back(log_likelihood());
      if (observer) observer(k, public_view());
    }
    return public_view();
  }

 private:
  struct EncodedPair {
    std::vector<std::uint32_t> src;  // src[0] is NULL
    std::vector<std::uint32_t> tgt;
    std::size_t slot_offset = 0;     // into slots_, row-major (i, j)
    std::size_t token_offset = 0;    // into denominators_
  };

  unsigned threads_;
  TranslationTable table_;
  std::vector<EncodedPair> pairs_;
  std::vector<std::uint32_t> slots_;
  std::vector<double> denominators_;
  std::vector<double> counts_;

  static std::uint32_t intern(std::unordered_map<std::string, std::uint32_t>& ids,
                              std::vector<std::string>& words, std::string word) {
    auto [it, inserted] = ids.try_emplace(word, static_cast<std::uint32_t>(words.size()));
    if (inserted) words.push_back(std::move(word));
    return it->second;
  }

  void encode(const ParallelCorpus& corpus, bool fold) {
    pairs_.reserve(corpus.size());
    std::size_t slot_offset = 0;
    std::size_t token_offset = 0;
    for (const auto& p : corpus.pairs) {
      EncodedPair ep;
      ep.src.push_back(kNullId);
      for (const auto& w : p.source.tokens) {
        ep.src.push_back(intern(table_.src_ids_, table_.src_words_, fold_if(w, fold)));
      }
      for (const auto& w : p.target.tokens) {
        ep.tgt.push_back(intern(table_.tgt_ids_, table_.tgt_words_, fold_if(w, fold)));
      }
      ep.slot_offset = slot_offset;
      ep.token_offset = token_offset;
      slot_offset += ep.src.size() * ep.tgt.size();
      token_offset += ep.tgt.size();
      pairs_.push_back(std::move(ep));
    }
    slots_.resize(slot_offset);
    denominators_.resize(token_offset);
  }

  void build_slots() {
    const std::size_t num_src = table_.src_words_.size();
    std::vector<std::vector<std::uint32_t>> cooc(num_src);
    for (const auto& p : pairs_) {
      for (auto e : p.src) cooc[e].insert(cooc[e].end(), p.tgt.begin(), p.tgt.end());
    }
    auto& t = table_;
    t.offsets_.assign(num_src + 1, 0);
    for (std::size_t e = 0; e < num_src; ++e) {
      auto& v = cooc[e];
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      t.offsets_[e + 1] = t.offsets_[e] + v.size();
    }
    t.targets_.reserve(t.offsets_.back());
    t.probs_.reserve(t.offsets_.back());
    for (auto& v : cooc) {
      const double uniform = v.empty() ? 0.0 : 1.0 / static_cast<double>(v.size());
      t.targets_.insert(t.targets_.end(), v.begin(), v.end());
      t.probs_.insert(t.probs_.end(), v.size(), uniform);
      std::vector<std::uint32_t>().swap(v);
    }
    counts_.assign(t.probs_.size(), 0.0);

    parallel_for(pairs_.size(), threads_, [&](unsigned, std::size_t begin, std::size_t end) {
      for (std::size_t n = begin; n < end; ++n) {
        const auto& p = pairs_[n];
        const std::size_t m = p.tgt.size();
        for (std::size_t i = 0; i < p.src.size(); ++i) {
          const auto first = t.targets_.begin() + static_cast<std::ptrdiff_t>(t.offsets_[p.src[i]]);
          const auto last = t.targets_.begin() + static_cast<std::ptrdiff_t>(t.offsets_[p.src[i] + 1]);
          for (std::size_t j = 0; j < m; ++j) {
            const auto it = std::lower_bound(first, last, p.tgt[j]);
            slots_[p.slot_offset + i * m + j] =
                static_cast<std::uint32_t>(it - t.targets_.begin());
          }
        }
      }
    });
  }

  // denominators_[j] = sum_i t(f_j | e_i) for every target token.
  void compute_denominators() {
    const auto& probs = table_.probs_;
    parallel_for(pairs_.size(), threads_, [&](unsigned, std::size_t begin, std::size_t end) {
      for (std::size_t n = begin; n < end; ++n) {
        const auto& p = pairs_[n];
        const std::size_t m = p.tgt.size();
        for (std::size_t j = 0; j < m; ++j) {
          double sum = 0.0;
          for (std::size_t i = 0; i < p.src.size(); ++i) {
            sum += probs[slots_[p.slot_offset + i * m + j]];
          }
          denominators_[p.token_offset + j] = sum;
        }
      }
    });
  }

  double log_likelihood() const {
    double ll = 0.0;
    for (const auto& p : pairs_) {
      const double norm = std::log(static_cast<double>(p.src.size()));
      for (std::size_t j = 0; j < p.tgt.size(); ++j) {
        ll += std::log(denominators_[p.token_offset + j]) - norm;
      }
    }
    return ll;
  }

  // Each worker owns the source types with id % workers == worker and
  // visits pairs in corpus order, so every count is summed in the same
  // order whatever the worker count.
  void accumulate_counts() {
    std::fill(counts_.begin(), counts_.end(), 0.0);
    const auto& probs = table_.probs_;
    const unsigned workers = threads_;
    parallel_for(workers, workers, [&](unsigned, std::size_t wbegin, std::size_t wend) {
      for (std::size_t w = wbegin; w < wend; ++w) {
        for (const auto& p : pairs_) {
          const std::size_t m = p.tgt.size();
          for (std::size_t i = 0; i < p.src.size(); ++i) {
            if (p.src[i] % workers != w) continue;
            for (std::size_t j = 0; j < m; ++j) {
              const auto slot = slots_[p.slot_offset + i * m + j];
              counts_[slot] += probs[slot] / denominators_[p.token_offset + j];
            }
          }
        }
      }
    });
  }

  void normalize() {
    auto& t = table_;
    for (std::size_t e = 0; e + 1 < t.offsets_.size(); ++e) {
      double total = 0.0;
      for (std::size_t s = t.offsets_[e]; s < t.offsets_[e + 1]; ++s) total += counts_[s];
      if (total <= 0.0) continue;
      for (std::size_t s = t.offsets_[e]; s < t.offsets_[e + 1]; ++s) {
        t.probs_[s] = counts_[s] / total;
      }
    }
  }

  // The trainer keeps a NULL placeholder at src_words_[0]; the public
  // table lists words only, so ids are shifted on the way out.
  TranslationTable public_view() const {
    TranslationTable out = table_;
    out.src_words_.erase(out.src_words_.begin());
    return out;
  }
};

TranslationTable train_model1(const ParallelCorpus& corpus, const AlignerConfig& cfg,
                              const TrainingObserver& observer) {
  cfg.validate();
  if (corpus.empty()) throw ValidationError("cannot train an aligner on an empty corpus");
  for (const auto& p : corpus.pairs) {
    if (p.source.tokens.empty() || p.target.tokens.empty()) {
      throw ValidationError("parallel corpus contains an empty side");
    }
  }
  Model1Trainer trainer(corpus, cfg);
  return trainer.run(cfg.iterations, observer);
}

// --- alignment ----------------------------------------------------------

std::vector<SentenceAlignment> viterbi_align(const ParallelCorpus& corpus,
                                             const TranslationTable& table) {
  std::vector<SentenceAlignment> out;
  out.reserve(corpus.size());
  std::vector<std::uint32_t> src;
  for (const auto& p : corpus.pairs) {
    src.clear();
    for (const auto& w : p.source.tokens) src.push_back(table.source_id(w));
    SentenceAlignment a;
    for (std::size_t j = 0; j < p.target.tokens.size(); ++j) {
      const auto f = table.target_id(p.target.tokens[j]);
      double best = table.slot_prob(kNullId, f);
      std::ptrdiff_t best_i = -1;
      for (std::size_t i = 0; i < src.size(); ++i) {
        const double t = src[i] == kNullId ? 0.0 : table.slot_prob(src[i], f);
        if (best_i < 0 ? t >= best : t > best) {
          best = t;
          best_i = static_cast<std::ptrdiff_t>(i);
        }
      }
      if (best_i >= 0 && best > 0.0) {
        a.links.push_back({static_cast<std::uint32_t>(best_i), static_cast<std::uint32_t>(j)});
      }
    }
    std::sort(a.links.begin(), a.links.end());
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<SentenceAlignment> symmetrize(const std::vector<SentenceAlignment>& forward,
                                          const std::vector<SentenceAlignment>& backward,
                                          Symmetrization method) {
  if (forward.size() != backward.size()) {
    throw ValidationError("cannot symmetrize " + std::to_string(forward.size()) +
                          " forward alignments with " + std::to_string(backward.size()) +
                          " backward alignments");
  }
  std::vector<SentenceAlignment> out(forward.size());
  for (std::size_t n = 0; n < forward.size(); ++n) {
    std::vector<AlignmentLink> fwd = forward[n].links;
    std::vector<AlignmentLink> bwd;
    bwd.reserve(backward[n].links.size());
    for (const auto& l : backward[n].links) bwd.push_back({l.target, l.source});
    std::sort(fwd.begin(), fwd.end());
    fwd.erase(std::unique(fwd.begin(), fwd.end()), fwd.end());
    std::sort(bwd.begin(), bwd.end());
    bwd.erase(std::unique(bwd.begin(), bwd.end()), bwd.end());
    switch (method) {
      case Symmetrization::Forward: out[n].links = std::move(fwd); break;
      case Symmetrization::Backward: out[n].links = std::move(bwd); break;
      case Symmetrization::Intersection:
        std::set_intersection(fwd.begin(), fwd.end(), bwd.begin(), bwd.end(),
                              std::back_inserter(out[n].links));
        break;
    }
  }
  return out;
}

ParallelCorpus reverse(const ParallelCorpus& corpus) {
  ParallelCorpus out;
  out.pairs.reserve(corpus.size());
  for (const auto& p : corpus.pairs) out.pairs.push_back({p.target, p.source});
  return out;
}

std::vector<SentenceAlignment> align_corpus(const ParallelCorpus& corpus,
                                            const AlignerConfig& cfg) {
  const auto forward = viterbi_align(corpus, train_model1(corpus, cfg));
  if (cfg.symmetrization == Symmetrization::Forward) return forward;
  const auto backward_corpus = reverse(corpus);
  const auto backward = viterbi_align(backward_corpus, train_model1(backward_corpus, cfg));
  return symmetrize(forward, backward, cfg.symmetrization);
}

// --- induction ----------------------------------------------------------

Lexicon induce_lexicon(const ParallelCorpus& corpus,
                       const std::vector<SentenceAlignment>& alignments,
                       const AlignerConfig& cfg) {
  cfg.validate();
  if (alignments.size() != corpus.size()) {
    throw ValidationError("got " + std::to_string(alignments.size()) +
                          " alignments for " + std::to_string(corpus.size()) +
                          " sentence pairs");
  }
  std::map<std::pair<std::string, std::string>, std::size_t> counts;
  for (std::size_t n = 0; n < corpus.size(); ++n) {
    const auto& src = corpus.pairs[n].source.tokens;
    const auto& tgt = corpus.pairs[n].target.tokens;
    for (const auto& l : alignments[n].links) {
      if (l.source >= src.size() || l.target >= tgt.size()) {
        throw ValidationError("link " + std::to_string(l.source) + "-" +
                              std::to_string(l.target) + " out of range in sentence " +
                              std::to_string(n + 1));
      }
      ++counts[{fold_if(src[l.source], cfg.case_fold),
                fold_if(tgt[l.target], cfg.case_fold)}];
    }
  }

  std::vector<std::pair<const std::pair<std::string, std::string>*, std::size_t>> kept;
  for (const auto& [pair, count] : counts) {
    if (count < static_cast<std::size_t>(cfg.min_count)) continue;
    if (!cfg.keep_punct && (unicode::is_single_punctuation(pair.first) ||
                            unicode::is_single_punctuation(pair.second))) {
      continue;
    }
    kept.emplace_back(&pair, count);
  }
  // counts is a std::map, so a stable sort by count keeps lexicographic
  // order among equal counts.
  std::stable_sort(kept.begin(), kept.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });

  Lexicon lex;
  for (const auto& [pair, count] : kept) {
    lex.add(pair->first, pair->second, Provenance::Induced);
  }
  return lex;
}

void write_alignments(std::ostream& out, const std::vector<SentenceAlignment>& alignments) {
  for (const auto& a : alignments) {
    for (std::size_t k = 0; k < a.links.size(); ++k) {
      if (k) out << ' ';
      out << a.links[k].source << '-' << a.links[k].target;
    }
    out << '\n';
  }
}

std::vector<SentenceAlignment> read_alignments(std::istream& in, const std::string& name) {
  std::vector<SentenceAlignment> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    SentenceAlignment a;
    for (const auto& item : unicode::split_whitespace(line)) {
      const auto dash = item.find('-');
      std::uint32_t i = 0;
      std::uint32_t j = 0;
      const char* begin = item.data();
      const char* end = begin + item.size();
      const bool ok = dash != std::string::npos &&
                      std::from_chars(begin, begin + dash, i).ptr == begin + dash &&
                      dash > 0 && dash + 1 < item.size() &&
                      std::from_chars(begin + dash + 1, end, j).ptr == end;
      if (!ok) throw FormatError(name, line_no, "malformed link '" + item + "'");
      a.links.push_back({i, j});
    }
    std::sort(a.links.begin(), a.links.end());
    a.links.erase(std::unique(a.links.begin(), a.links.end()), a.links.end());
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace lexsynth
