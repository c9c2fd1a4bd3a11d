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

#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lexsynth/align.hpp"
#include "lexsynth/corpus_io.hpp"
#include "lexsynth/distill.hpp"
#include "lexsynth/error.hpp"
#include "lexsynth/lexicon.hpp"
#include "lexsynth/mix.hpp"
#include "lexsynth/output.hpp"
#include "lexsynth/report.hpp"
#include "lexsynth/synth.hpp"

namespace fs = std::filesystem;

namespace lexsynth::cli {

namespace {

const std::map<std::string, Schema> kSchemas{
    {"ner", Schema::NER}, {"pos", Schema::POS}, {"dep", Schema::DEP}};
const std::map<std::string, LabeledFormat> kFormats{
    {"two-col", LabeledFormat::TwoColumn}, {"conllu", LabeledFormat::CoNLLU}};
const std::map<std::string, Symmetrization> kSymmetrizations{
    {"intersection", Symmetrization::Intersection},
    {"forward", Symmetrization::Forward},
    {"backward", Symmetrization::Backward}};
const std::map<std::string, CasePolicy> kCasePolicies{
    {"lexicon", CasePolicy::LexiconForm}, {"restore", CasePolicy::RestoreCase}};

struct Options {
  std::string lexicon, base, extra, out, report, src, tgt, dump_alignments;
  std::string corpus, input, pseudo, teacher, gold, reference;
  std::vector<std::string> inputs;
  std::string format = "auto";
  Schema schema = Schema::POS;
  bool json = false;
  bool shuffle = false;
  bool no_case_fold = false;
  bool keep_punct = false;
  std::uint64_t seed = 0;
  std::size_t limit = 0;
  std::size_t target_size = 0;
  unsigned threads = 1;
  int iterations = 5;
  int min_count = 2;
  Symmetrization symmetrization = Symmetrization::Intersection;
  CasePolicy case_policy = CasePolicy::LexiconForm;
};

LabeledFormat resolve_format(const std::string& name, const fs::path& path) {
  if (name == "auto") return sniff_format(path);
  return kFormats.at(name);
}

void write_json(const Json& j, const fs::path& path) {
  auto out = open_output(path);
  out << j.dump(2) << '\n';
  finish_output(out, path);
}

// Writes the stage report, if one was requested, into the transaction.
void stage_report(StagedOutputs& outputs, const Options& o, const std::string& stage,
                  std::optional<std::uint64_t> seed, Json report) {
  if (o.report.empty()) return;
  write_json(StageRecord{stage, seed, std::move(report)}.to_json(), outputs.stage(o.report));
}

// --- lex ----------------------------------------------------------------

int lex_stats(const Options& o, std::ostream& out) {
  const auto stats = lexicon_stats(load_lexicon(o.lexicon).lexicon);
  if (o.json) {
    out << to_json(stats).dump(2) << '\n';
  } else {
    out << "entry_pairs\t" << stats.entry_pairs << '\n'
        << "distinct_sources\t" << stats.distinct_sources << '\n'
        << "multi_candidate_sources\t" << stats.multi_candidate_sources << '\n'
        << "multi_token_targets\t" << stats.multi_token_targets << '\n';
  }
  return kSuccess;
}

int lex_merge(const Options& o) {
  const auto base = load_lexicon(o.base).lexicon;
  LexiconLoadOptions extra_options;
  extra_options.provenance = Provenance::Induced;
  const auto extra = load_lexicon(o.extra, extra_options).lexicon;
  const auto merged = merge(base, extra);

  StagedOutputs outputs;
  save_lexicon(merged, outputs.stage(o.out));
  Json report;
  report["base"] = to_json(lexicon_stats(base));
  report["extra"] = to_json(lexicon_stats(extra));
  report["merged"] = to_json(lexicon_stats(merged));
  stage_report(outputs, o, "lex merge", std::nullopt, std::move(report));
  outputs.commit();
  return kSuccess;
}

int lex_induce(const Options& o, std::ostream& err) {
  AlignerConfig cfg;
  cfg.iterations = o.iterations;
  cfg.min_count = o.min_count;
  cfg.symmetrization = o.symmetrization;
  cfg.case_fold = !o.no_case_fold;
  cfg.keep_punct = o.keep_punct;
  cfg.threads = o.threads;
  cfg.validate();

  const auto parallel = read_parallel(o.src, o.tgt);
  if (parallel.dropped) {
    err << "warning: dropped " << parallel.dropped << " pairs with a blank side\n";
  }
  const auto alignments = align_corpus(parallel.corpus, cfg);
  const auto induced = induce_lexicon(parallel.corpus, alignments, cfg);

  StagedOutputs outputs;
  save_lexicon(induced, outputs.stage(o.out));
  if (!o.dump_alignments.empty()) {
    const auto path = outputs.stage(o.dump_alignments);
    auto stream = open_output(path);
    write_alignments(stream, alignments);
    finish_output(stream, path);
  }
  Json report;
  report["pairs"] = parallel.corpus.size();
  report["dropped_pairs"] = parallel.dropped;
  report["iterations"] = cfg.iterations;
  report["min_count"] = cfg.min_count;
  report["symmetrization"] = to_string(cfg.symmetrization);
  report["induced"] = to_json(lexicon_stats(induced));
  stage_report(outputs, o, "lex induce", std::nullopt, std::move(report));
  outputs.commit();
  return kSuccess;
}

// --- synth --------------------------------------------------------------

SynthesisConfig synthesis_config(const Options& o) {
  SynthesisConfig cfg;
  cfg.seed = o.seed;
  cfg.case_policy = o.case_policy;
  cfg.threads = o.threads;
  return cfg;
}

int synth_mono_cmd(const Options& o) {
  const auto corpus = read_mono(o.corpus, o.limit);
  const auto lex = load_lexicon(o.lexicon).lexicon;
  const auto result = synth_mono(corpus, lex, synthesis_config(o));

  StagedOutputs outputs;
  write_mono(result.corpus, outputs.stage(o.out));
  stage_report(outputs, o, "synth mono", o.seed, to_json(result.report));
  outputs.commit();
  return kSuccess;
}

int synth_labeled_cmd(const Options& o, std::ostream& err) {
  LabeledLayout layout;
  layout.format = resolve_format(o.format, o.input);
  const auto corpus = read_labeled(fs::path(o.input), o.schema, layout);
  const auto loaded = load_lexicon(o.lexicon, TargetMode::SingleTokenOnly);
  if (loaded.dropped) {
    err << "note: skipped " << loaded.dropped << " multi-token lexicon entries\n";
  }
  const auto result = synth_labeled(corpus, loaded.lexicon, synthesis_config(o));

  StagedOutputs outputs;
  write_labeled(result.corpus, outputs.stage(o.out), layout.format);
  stage_report(outputs, o, "synth labeled", o.seed, to_json(result.report));
  outputs.commit();
  return kSuccess;
}

// --- distill ------------------------------------------------------------

int distill_apply(const Options& o) {
  const auto format = resolve_format(o.format, o.pseudo);
  const auto pseudo = read_labeled(fs::path(o.pseudo), o.schema, format);
  const auto teacher = read_labeled(fs::path(o.teacher), o.schema, format);
  const auto result = apply_teacher_labels(pseudo, teacher);

  StagedOutputs outputs;
  write_labeled(result.corpus, outputs.stage(o.out), format);
  stage_report(outputs, o, "distill apply", std::nullopt, to_json(result.report));
  outputs.commit();
  return kSuccess;
}

// --- mix ----------------------------------------------------------------

int mix_upsample(const Options& o) {
  const auto gold = read_mono(o.gold);
  const auto result = upsample_to_match(gold, o.target_size, o.seed);

  StagedOutputs outputs;
  write_mono(result, outputs.stage(o.out));
  Json report;
  report["gold_sentences"] = gold.size();
  report["target_size"] = o.target_size;
  report["full_copies"] = o.target_size / gold.size();
  report["sampled"] = o.target_size % gold.size();
  stage_report(outputs, o, "mix upsample", o.seed, std::move(report));
  outputs.commit();
  return kSuccess;
}

int mix_concat(const Options& o) {
  std::vector<TokenizedCorpus> corpora;
  Json sizes = Json::array();
  for (const auto& path : o.inputs) {
    corpora.push_back(read_mono(path));
    sizes.push_back(corpora.back().size());
  }
  const auto result = concat_shuffle(corpora, o.seed, o.shuffle);

  StagedOutputs outputs;
  write_mono(result, outputs.stage(o.out));
  Json report;
  report["input_sentences"] = std::move(sizes);
  report["output_sentences"] = result.size();
  report["shuffled"] = o.shuffle;
  stage_report(outputs, o, "mix concat", o.seed, std::move(report));
  outputs.commit();
  return kSuccess;
}

int mix_joint_labeled(const Options& o) {
  const auto format = resolve_format(o.format, o.gold);
  const auto gold = read_labeled(fs::path(o.gold), o.schema, format);
  const auto pseudo = read_labeled(fs::path(o.pseudo), o.schema, format);
  const auto joint = build_joint_labeled(gold, pseudo);

  StagedOutputs outputs;
  write_labeled(joint, outputs.stage(o.out), format);
  Json report;
  report["gold_sentences"] = gold.size();
  report["pseudo_sentences"] = pseudo.size();
  report["output_sentences"] = joint.size();
  stage_report(outputs, o, "mix joint-labeled", std::nullopt, std::move(report));
  outputs.commit();
  return kSuccess;
}

// --- report -------------------------------------------------------------

int report_pos_dist(const Options& o, std::ostream& out) {
  const auto lex = load_lexicon(o.lexicon).lexicon;
  const auto reference = read_labeled(fs::path(o.reference), Schema::POS,
                                      resolve_format(o.format, o.reference));
  const auto dist = lexicon_pos_distribution(lex, reference);
  if (o.json) {
    out << to_json(dist).dump(2) << '\n';
    return kSuccess;
  }
  for (const auto& [tag, fraction] : dist.fractions) {
    out << tag << '\t' << std::fixed << std::setprecision(4) << fraction << '\t'
        << dist.counts.at(tag) << '\n';
  }
  out << "found\t" << dist.found << '\n'
      << "out_of_reference\t" << dist.out_of_reference << '\n';
  return kSuccess;
}

int report_summary(const Options& o) {
  std::vector<StageRecord> stages;
  for (const auto& path : o.inputs) {
    auto in = open_input(path);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw FormatError(path, 0, e.what());
    }
    stages.push_back(StageRecord::from_json(j, path));
  }
  StagedOutputs outputs;
  write_json(pipeline_summary(stages), outputs.stage(o.out));
  outputs.commit();
  return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lexicon-based data synthesis for low-resource languages", "lexsynth"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  Options o;

  auto existing = CLI::ExistingFile;
  auto add_threads = [&](CLI::App* cmd) {
    cmd->add_option("--threads", o.threads, "Worker threads (output is identical for any value)")
        ->check(CLI::Range(1u, 1024u));
  };
  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", o.seed, "Random seed")->required();
  };
  auto add_report = [&](CLI::App* cmd) {
    cmd->add_option("--report", o.report, "Write a JSON stage report here");
  };
  auto add_labeled_format = [&](CLI::App* cmd, bool with_schema) {
    cmd->add_option("--format", o.format, "Labeled file format")
        ->check(CLI::IsMember({"auto", "two-col", "conllu"}));
    if (with_schema) {
      cmd->add_option("--schema", o.schema, "Annotation schema")
          ->transform(CLI::CheckedTransformer(kSchemas));
    }
  };

  // lex
  auto* lex = app.add_subcommand("lex", "Lexicon tools")->require_subcommand(1);
  auto* lex_stats_cmd = lex->add_subcommand("stats", "Print lexicon size statistics");
  lex_stats_cmd->add_option("--lexicon", o.lexicon)->required()->check(existing);
  lex_stats_cmd->add_flag("--json", o.json, "Print JSON");

  auto* lex_merge_cmd = lex->add_subcommand("merge", "Merge an extra lexicon into a base one");
  lex_merge_cmd->add_option("--base", o.base)->required()->check(existing);
  lex_merge_cmd->add_option("--extra", o.extra)->required()->check(existing);
  lex_merge_cmd->add_option("--out", o.out)->required();
  add_report(lex_merge_cmd);

  auto* lex_induce_cmd = lex->add_subcommand("induce", "Induce lexicon entries from parallel text");
  lex_induce_cmd->add_option("--src", o.src)->required()->check(existing);
  lex_induce_cmd->add_option("--tgt", o.tgt)->required()->check(existing);
  lex_induce_cmd->add_option("--out", o.out)->required();
  lex_induce_cmd->add_option("--iterations", o.iterations, "EM iterations")->check(CLI::PositiveNumber);
  lex_induce_cmd->add_option("--min-count", o.min_count, "Minimum link count")->check(CLI::PositiveNumber);
  lex_induce_cmd->add_option("--symmetrization", o.symmetrization)
      ->transform(CLI::CheckedTransformer(kSymmetrizations));
  lex_induce_cmd->add_flag("--no-case-fold", o.no_case_fold, "Align surface forms as-is");
  lex_induce_cmd->add_flag("--keep-punct", o.keep_punct, "Keep pairs with a punctuation side");
  lex_induce_cmd->add_option("--dump-alignments", o.dump_alignments, "Write i-j alignments here");
  add_threads(lex_induce_cmd);
  add_report(lex_induce_cmd);

  // synth
  auto* synth = app.add_subcommand("synth", "Synthesize pseudo corpora")->require_subcommand(1);
  auto* synth_mono_sub = synth->add_subcommand("mono", "Pseudo monolingual text");
  synth_mono_sub->add_option("--corpus", o.corpus)->required()->check(existing);
  synth_mono_sub->add_option("--lexicon", o.lexicon)->required()->check(existing);
  synth_mono_sub->add_option("--out", o.out)->required();
  synth_mono_sub->add_option("--limit", o.limit, "Keep only the first N sentences");
  add_seed(synth_mono_sub);
  add_report(synth_mono_sub);
  add_threads(synth_mono_sub);

  auto* synth_labeled_sub = synth->add_subcommand("labeled", "Pseudo labeled data");
  synth_labeled_sub->add_option("--input", o.input)->required()->check(existing);
  synth_labeled_sub->add_option("--lexicon", o.lexicon)->required()->check(existing);
  synth_labeled_sub->add_option("--out", o.out)->required();
  add_labeled_format(synth_labeled_sub, true);
  add_seed(synth_labeled_sub);
  add_report(synth_labeled_sub);
  add_threads(synth_labeled_sub);

  for (auto* cmd : {synth_mono_sub, synth_labeled_sub}) {
    cmd->add_option("--case-policy", o.case_policy, "lexicon (default) or restore")
        ->transform(CLI::CheckedTransformer(kCasePolicies));
  }

  // distill
  auto* distill = app.add_subcommand("distill", "Label distillation")->require_subcommand(1);
  auto* distill_apply_cmd = distill->add_subcommand("apply", "Replace labels with teacher predictions");
  distill_apply_cmd->add_option("--pseudo", o.pseudo)->required()->check(existing);
  distill_apply_cmd->add_option("--teacher", o.teacher)->required()->check(existing);
  distill_apply_cmd->add_option("--out", o.out)->required();
  add_labeled_format(distill_apply_cmd, true);
  add_report(distill_apply_cmd);

  // mix
  auto* mix = app.add_subcommand("mix", "Assemble training corpora")->require_subcommand(1);
  auto* mix_upsample_cmd = mix->add_subcommand("upsample", "Repeat a corpus to a target size");
  mix_upsample_cmd->add_option("--gold", o.gold)->required()->check(existing);
  mix_upsample_cmd->add_option("--target-size", o.target_size)->required()->check(CLI::PositiveNumber);
  mix_upsample_cmd->add_option("--out", o.out)->required();
  add_seed(mix_upsample_cmd);
  add_report(mix_upsample_cmd);

  auto* mix_concat_cmd = mix->add_subcommand("concat", "Concatenate (and shuffle) corpora");
  mix_concat_cmd->add_option("--inputs", o.inputs)->required()->check(existing);
  mix_concat_cmd->add_option("--out", o.out)->required();
  mix_concat_cmd->add_flag("--shuffle", o.shuffle, "Shuffle sentences");
  add_seed(mix_concat_cmd);
  add_report(mix_concat_cmd);

  auto* mix_joint_cmd = mix->add_subcommand("joint-labeled", "Gold followed by pseudo labeled data");
  mix_joint_cmd->add_option("--gold", o.gold)->required()->check(existing);
  mix_joint_cmd->add_option("--pseudo", o.pseudo)->required()->check(existing);
  mix_joint_cmd->add_option("--out", o.out)->required();
  add_labeled_format(mix_joint_cmd, true);
  add_report(mix_joint_cmd);

  // report
  auto* report = app.add_subcommand("report", "Analytics")->require_subcommand(1);
  auto* pos_dist_cmd = report->add_subcommand("pos-dist", "POS distribution of lexicon sources");
  pos_dist_cmd->add_option("--lexicon", o.lexicon)->required()->check(existing);
  pos_dist_cmd->add_option("--reference", o.reference)->required()->check(existing);
  pos_dist_cmd->add_flag("--json", o.json, "Print JSON");
  add_labeled_format(pos_dist_cmd, false);

  auto* summary_cmd = report->add_subcommand("summary", "Combine stage reports into one document");
  summary_cmd->add_option("--inputs", o.inputs, "Stage report files in pipeline order")->check(existing);
  summary_cmd->add_option("--out", o.out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (lex_stats_cmd->parsed()) return lex_stats(o, out);
    if (lex_merge_cmd->parsed()) return lex_merge(o);
    if (lex_induce_cmd->parsed()) return lex_induce(o, err);
    if (synth_mono_sub->parsed()) return synth_mono_cmd(o);
    if (synth_labeled_sub->parsed()) return synth_labeled_cmd(o, err);
    if (distill_apply_cmd->parsed()) return distill_apply(o);
    if (mix_upsample_cmd->parsed()) return mix_upsample(o);
    if (mix_concat_cmd->parsed()) return mix_concat(o);
    if (mix_joint_cmd->parsed()) return mix_joint_labeled(o);
    if (pos_dist_cmd->parsed()) return report_pos_dist(o, out);
    if (summary_cmd->parsed()) return report_summary(o);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kDataFormatError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kDataFormatError;
  }
  err << app.help();
  return kUsageError;
}

}  // namespace lexsynth::cli
