// Copyright 2026 The skewlens Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "skewlens/evaluator.hpp"
#include "skewlens/io.hpp"
#include "skewlens/metrics.hpp"
#include "skewlens/sampler.hpp"
#include "skewlens/svg.hpp"
#include "skewlens/synthgen.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace skewlens;

namespace {

RelationLexicon load_lexicon_or_default(const std::string& path) {
  return path.empty() ? RelationLexicon::default_lexicon() : read_lexicon(path);
}

std::optional<ConceptVocabulary> load_manifest_vocab(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return read_vocab_manifest(path).first;
}

Dataset load_dataset(const std::string& path, const std::string& lexicon_path,
                     const std::string& vocab_path) {
  const auto lexicon = load_lexicon_or_default(lexicon_path);
  const auto manifest = load_manifest_vocab(vocab_path);
  return read_dataset_jsonl(path, lexicon, manifest ? &*manifest : nullptr);
}

json config_json(const std::string& subcommand, const json& args) {
  return {{"tool", "skewlens"}, {"subcommand", subcommand}, {"args", args}};
}

GlyphAtlas load_atlas(const std::string& sprite, const std::string& manifest, int procedural_n,
                      std::uint64_t seed, int cell_size,
                      const std::vector<std::string>& procedural_names) {
  if (!sprite.empty()) {
    if (manifest.empty()) throw Error("--atlas-sprite requires --atlas-manifest");
    return load_glyph_atlas(sprite, manifest);
  }
  if (!procedural_names.empty()) return procedural_glyphs(procedural_names, seed, cell_size);
  if (procedural_n >= 2) return procedural_glyphs(procedural_n, seed, cell_size);
  throw Error("no atlas given: use --atlas-sprite/--atlas-manifest or --procedural-n");
}

std::vector<std::string> default_concept_names(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "icon%03d", i);
    names.emplace_back(buf);
  }
  return names;
}

int run_audit(const std::string& in, const std::string& lexicon_path,
              const std::string& vocab_path, const std::string& format, const std::string& out,
              bool uniform_weights, bool allow_repeat) {
  const Dataset dataset = load_dataset(in, lexicon_path, vocab_path);
  const Universe universe(dataset.concept_vocab, dataset.vis_vocab, allow_repeat);
  const SkewReport visual =
      skew_report(dataset, &universe, Perspective::kVisual, uniform_weights);
  const SkewReport linguistic =
      skew_report(dataset, nullptr, Perspective::kLinguistic, uniform_weights);

  std::string payload;
  if (format == "csv") {
    std::ostringstream csv;
    csv << "perspective," << skew_report_csv_header(dataset, Perspective::kVisual) << "\n";
    csv << "visual," << skew_report_csv_row(visual, dataset.vis_vocab.positions()) << "\n";
    csv << "linguistic," << skew_report_csv_row(linguistic, dataset.ling_vocab.positions())
        << "\n";
    payload = csv.str();
  } else {
    json output = {
        {"config", config_json("audit", {{"in", in}, {"uniform_weights", uniform_weights}})},
        {"visual", skew_report_to_json(visual)},
        {"linguistic", skew_report_to_json(linguistic)},
    };
    payload = output.dump(2) + "\n";
  }
  if (out.empty())
    std::cout << payload;
  else
    write_text_file(out, payload);
  return 0;
}

TargetSpec parse_targets(const std::string& spec_path, const std::vector<double>& flat,
                         double tolerance) {
  TargetSpec targets;
  targets.tolerance = tolerance;
  if (!spec_path.empty()) {
    const json spec = json::parse(read_text_file(spec_path));
    const json& t = spec.contains("targets") ? spec.at("targets") : spec;
    targets.cpl_r1 = t.value("cpl_r1", 1.0);
    targets.cpl_r2 = t.value("cpl_r2", 1.0);
    targets.blc = t.value("blc", 1.0);
    targets.coverage = t.value("coverage", 1.0);
    targets.tolerance = t.value("tolerance", tolerance);
  } else if (flat.size() == 4) {
    targets.cpl_r1 = flat[0];
    targets.cpl_r2 = flat[1];
    targets.blc = flat[2];
    targets.coverage = flat[3];
  } else if (!flat.empty()) {
    throw Error("--targets expects four values: cpl_r1 cpl_r2 blc coverage");
  }
  return targets;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dataset skew audit and controlled-split toolkit for binary spatial relations"};
  app.require_subcommand(1);

  // Global-ish options shared by multiple subcommands.
  std::string in_path, out_path, lexicon_path, vocab_path;
  std::string perspective = "visual", axis = "TB", format = "json";
  std::uint64_t seed = 0;

  // parse
  auto* cmd_parse = app.add_subcommand("parse", "Parse a raw caption corpus into a dataset");
  std::string parse_report_path;
  cmd_parse->add_option("--in", in_path, "Raw records JSONL")->required();
  cmd_parse->add_option("--out", out_path, "Output dataset JSONL")->required();
  cmd_parse->add_option("--lexicon", lexicon_path, "Relation lexicon JSON");
  cmd_parse->add_option("--vocab", vocab_path, "Vocabulary manifest JSON");
  cmd_parse->add_option("--axis", axis, "Spatial axis: LR, TB or FB");
  cmd_parse->add_option("--report", parse_report_path, "Parse report JSON path");

  // audit
  auto* cmd_audit = app.add_subcommand("audit", "Skew report under both perspectives");
  bool uniform_weights = false, allow_repeat = false;
  cmd_audit->add_option("--in", in_path, "Dataset JSONL")->required();
  cmd_audit->add_option("--out", out_path, "Output path (stdout when omitted)");
  cmd_audit->add_option("--lexicon", lexicon_path, "Relation lexicon JSON");
  cmd_audit->add_option("--vocab", vocab_path, "Vocabulary manifest JSON");
  cmd_audit->add_option("--format", format, "json or csv");
  cmd_audit->add_flag("--uniform-weights", uniform_weights, "Weight observed concepts equally");
  cmd_audit->add_flag("--allow-repeat", allow_repeat, "Count repeated-concept tuples in coverage");

  // extract-complete
  auto* cmd_extract = app.add_subcommand("extract-complete", "Iteratively prune to a complete subsample");
  cmd_extract->add_option("--in", in_path, "Dataset JSONL")->required();
  cmd_extract->add_option("--out", out_path, "Output dataset JSONL")->required();
  cmd_extract->add_option("--perspective", perspective, "visual or linguistic");
  cmd_extract->add_option("--lexicon", lexicon_path, "Relation lexicon JSON");
  cmd_extract->add_option("--vocab", vocab_path, "Vocabulary manifest JSON");

  // sample
  auto* cmd_sample = app.add_subcommand("sample", "Build a controlled-skew train/test split");
  std::string pattern, spec_path;
  int n_concepts = 0, quota = 0, block = 0, skew = 0;
  std::vector<double> flat_targets;
  double tolerance = 0.03;
  int max_swaps = 10000;
  cmd_sample->add_option("--spec", spec_path, "JSON spec file: {\"pattern\": ...} or {\"targets\": ...}");
  cmd_sample->add_option("--pattern", pattern, "Pattern kind (e.g. latin, block_incomplete_both)");
  cmd_sample->add_option("--n", n_concepts, "Concept count for pattern mode");
  cmd_sample->add_option("--quota", quota, "Per-concept quota");
  cmd_sample->add_option("--block", block, "Block side");
  cmd_sample->add_option("--skew", skew, "Skew factor");
  cmd_sample->add_option("--targets", flat_targets, "cpl_r1 cpl_r2 blc coverage")->expected(0, 4);
  cmd_sample->add_option("--tolerance", tolerance, "Target tolerance");
  cmd_sample->add_option("--max-swaps", max_swaps, "Hill-climb swap cap");
  cmd_sample->add_option("--in", in_path, "Dataset JSONL (targets mode)");
  cmd_sample->add_option("--out", out_path, "Output directory")->required();
  cmd_sample->add_option("--seed", seed, "RNG seed");
  cmd_sample->add_option("--axis", axis, "Spatial axis for pattern-mode scenes");
  cmd_sample->add_option("--lexicon", lexicon_path, "Relation lexicon JSON");
  cmd_sample->add_option("--vocab", vocab_path, "Vocabulary manifest JSON");

  // phrase
  auto* cmd_phrase = app.add_subcommand("phrase", "Assign caption phrasings toward linguistic targets");
  cmd_phrase->add_option("--in", in_path, "Train dataset JSONL")->required();
  cmd_phrase->add_option("--out", out_path, "Output directory")->required();
  cmd_phrase->add_option("--spec", spec_path, "JSON spec file with {\"targets\": ...}");
  cmd_phrase->add_option("--targets", flat_targets, "cpl_r1 cpl_r2 blc coverage")->expected(0, 4);
  cmd_phrase->add_option("--tolerance", tolerance, "Target tolerance");
  cmd_phrase->add_option("--max-swaps", max_swaps, "Hill-climb flip cap");
  cmd_phrase->add_option("--seed", seed, "RNG seed");
  cmd_phrase->add_option("--lexicon", lexicon_path, "Relation lexicon JSON");
  cmd_phrase->add_option("--vocab", vocab_path, "Vocabulary manifest JSON");

  // gen
  auto* cmd_gen = app.add_subcommand("gen", "Render a split into an image corpus");
  std::string train_path, test_path, atlas_sprite, atlas_manifest, layout_name = "vertical";
  int procedural_n = 0, cell_size = 32;
  cmd_gen->add_option("--train", train_path, "Train dataset JSONL")->required();
  cmd_gen->add_option("--test", test_path, "Test dataset JSONL");
  cmd_gen->add_option("--out", out_path, "Output directory")->required();
  cmd_gen->add_option("--layout", layout_name, "vertical or horizontal");
  cmd_gen->add_option("--atlas-sprite", atlas_sprite, "Sprite grid PNG");
  cmd_gen->add_option("--atlas-manifest", atlas_manifest, "Atlas manifest JSON");
  cmd_gen->add_option("--procedural-n", procedural_n, "Generate a procedural atlas of this size");
  cmd_gen->add_option("--cell-size", cell_size, "Glyph cell size in pixels");
  cmd_gen->add_option("--seed", seed, "RNG seed (procedural atlas + manifest)");
  cmd_gen->add_option("--lexicon", lexicon_path, "Relation lexicon JSON");
  cmd_gen->add_option("--vocab", vocab_path, "Vocabulary manifest JSON");

  // eval
  auto* cmd_eval = app.add_subcommand("eval", "Score generated images against ground truth");
  std::string generated_path, truth_path;
  double blank_threshold = kDefaultBlankThreshold;
  cmd_eval->add_option("--generated", generated_path, "Generated manifest JSONL")->required();
  cmd_eval->add_option("--truth", truth_path, "Ground-truth manifest JSONL")->required();
  cmd_eval->add_option("--out", out_path, "Output directory");
  cmd_eval->add_option("--layout", layout_name, "vertical or horizontal");
  cmd_eval->add_option("--atlas-sprite", atlas_sprite, "Sprite grid PNG");
  cmd_eval->add_option("--atlas-manifest", atlas_manifest, "Atlas manifest JSON");
  cmd_eval->add_option("--procedural-n", procedural_n, "Procedural atlas size");
  cmd_eval->add_option("--cell-size", cell_size, "Glyph cell size in pixels");
  cmd_eval->add_option("--seed", seed, "Procedural atlas seed");
  cmd_eval->add_option("--blank-threshold", blank_threshold, "BLANK score threshold");

  // gap
  auto* cmd_gap = app.add_subcommand("gap", "Accumulative train-test accuracy gap");
  bool gap_sum = false;
  cmd_gap->add_option("--curves", in_path, "CSV of step,train_acc,test_acc")->required();
  cmd_gap->add_flag("--sum", gap_sum, "Report the raw sum instead of the mean");

  // report
  auto* cmd_report = app.add_subcommand("report", "CSV tables and SVG PMD plots");
  cmd_report->add_option("--in", in_path, "Dataset JSONL")->required();
  cmd_report->add_option("--out", out_path, "Output directory")->required();
  cmd_report->add_option("--lexicon", lexicon_path, "Relation lexicon JSON");
  cmd_report->add_option("--vocab", vocab_path, "Vocabulary manifest JSON");
  cmd_report->add_flag("--uniform-weights", uniform_weights, "Weight observed concepts equally");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const char* threads_env = std::getenv("SKEWLENS_THREADS");
    (void)threads_env;  // all subcommands currently run single-threaded

    if (cmd_parse->parsed()) {
      const auto lexicon = load_lexicon_or_default(lexicon_path);
      const auto manifest = load_manifest_vocab(vocab_path);
      const auto records = read_raw_records(in_path);
      auto [dataset, report] =
          parse_corpus(records, lexicon, axis_from_string(axis), manifest ? &*manifest : nullptr);
      write_dataset_jsonl(out_path, dataset);
      json report_json = parse_report_to_json(report);
      report_json["config"] = config_json("parse", {{"in", in_path}, {"axis", axis}});
      write_text_file(parse_report_path.empty() ? out_path + ".report.json" : parse_report_path,
                      report_json.dump(2) + "\n");
      return 0;
    }

    if (cmd_audit->parsed())
      return run_audit(in_path, lexicon_path, vocab_path, format, out_path, uniform_weights,
                       allow_repeat);

    if (cmd_extract->parsed()) {
      const Dataset dataset = load_dataset(in_path, lexicon_path, vocab_path);
      const Dataset pruned =
          extract_complete_subsample(dataset, perspective_from_string(perspective));
      write_dataset_jsonl(out_path, pruned);
      if (pruned.scenes.empty())
        std::cerr << "warning: complete-subsample extraction emptied the dataset\n";
      return 0;
    }

    if (cmd_sample->parsed()) {
      fs::create_directories(out_path);
      json spec_file;
      if (!spec_path.empty()) spec_file = json::parse(read_text_file(spec_path));
      const bool pattern_mode = !pattern.empty() || spec_file.contains("pattern");
      const auto lexicon = load_lexicon_or_default(lexicon_path);
      json achieved_out;

      if (pattern_mode) {
        PatternSpec spec;
        if (spec_file.contains("pattern")) {
          const json& p = spec_file.at("pattern");
          spec.kind = pattern_kind_from_string(p.at("kind").get<std::string>());
          spec.block = p.value("block", 0);
          spec.quota = p.value("quota", 0);
          spec.skew = p.value("skew", 0);
          spec.seed = p.value("seed", seed);
          n_concepts = p.value("n", n_concepts);
        } else {
          spec.kind = pattern_kind_from_string(pattern);
          spec.block = block;
          spec.quota = quota;
          spec.skew = skew;
          spec.seed = seed;
        }
        ConceptVocabulary concepts;
        if (!vocab_path.empty()) {
          concepts = read_vocab_manifest(vocab_path).first;
        } else {
          if (n_concepts < 2) throw Error("pattern mode needs --n or a --vocab manifest");
          concepts = ConceptVocabulary(default_concept_names(n_concepts));
        }
        const Universe universe(concepts, lexicon.roles_for_axis(axis_from_string(axis)), false);
        const Mask mask = generate_pattern_mask(universe, spec);
        const auto axis_entries = lexicon.entries_for_axis(axis_from_string(axis));
        const SplitResult split = split_from_mask(universe, mask, axis_entries.front().phrase);
        write_dataset_jsonl((fs::path(out_path) / "train.jsonl").string(), split.train);
        write_dataset_jsonl((fs::path(out_path) / "test.jsonl").string(), split.test);
        achieved_out = {
            {"config", config_json("sample", {{"pattern", to_string(spec.kind)},
                                              {"n", n_concepts},
                                              {"quota", spec.quota},
                                              {"block", spec.block},
                                              {"skew", spec.skew},
                                              {"seed", spec.seed},
                                              {"axis", axis}})},
            {"achieved", skew_report_to_json(split.achieved)},
        };
      } else {
        if (in_path.empty()) throw Error("targets mode needs --in");
        const Dataset dataset = load_dataset(in_path, lexicon_path, vocab_path);
        const TargetSpec targets = parse_targets(spec_path, flat_targets, tolerance);
        const SubsampleResult result = subsample_to_targets(dataset, targets, seed, max_swaps);
        write_dataset_jsonl((fs::path(out_path) / "train.jsonl").string(), result.data);
        if (!result.within_tolerance)
          std::cerr << "warning: targets not met within tolerance; best effort returned\n";
        achieved_out = {
            {"config", config_json("sample", {{"targets",
                                               {{"cpl_r1", targets.cpl_r1},
                                                {"cpl_r2", targets.cpl_r2},
                                                {"blc", targets.blc},
                                                {"coverage", targets.coverage},
                                                {"tolerance", targets.tolerance}}},
                                              {"seed", seed}})},
            {"achieved", skew_report_to_json(result.achieved)},
            {"within_tolerance", result.within_tolerance},
        };
      }
      write_text_file((fs::path(out_path) / "achieved.json").string(),
                      achieved_out.dump(2) + "\n");
      return 0;
    }

    if (cmd_phrase->parsed()) {
      fs::create_directories(out_path);
      const auto lexicon = load_lexicon_or_default(lexicon_path);
      const Dataset train = load_dataset(in_path, lexicon_path, vocab_path);
      const TargetSpec targets = parse_targets(spec_path, flat_targets, tolerance);
      const PhrasingResult result = assign_phrasings(train, lexicon, targets, seed, max_swaps);
      write_dataset_jsonl((fs::path(out_path) / "train.jsonl").string(), result.data);
      if (!result.within_tolerance)
        std::cerr << "warning: linguistic targets not met within tolerance\n";
      const json achieved_out = {
          {"config", config_json("phrase", {{"in", in_path}, {"seed", seed}})},
          {"achieved", skew_report_to_json(result.achieved)},
          {"within_tolerance", result.within_tolerance},
      };
      write_text_file((fs::path(out_path) / "achieved.json").string(),
                      achieved_out.dump(2) + "\n");
      return 0;
    }

    if (cmd_gen->parsed()) {
      const Layout layout = layout_from_string(layout_name);
      SplitResult split;
      split.train = load_dataset(train_path, lexicon_path, vocab_path);
      if (!test_path.empty()) split.test = load_dataset(test_path, lexicon_path, vocab_path);
      const Universe universe(split.train.concept_vocab, split.train.vis_vocab, false);
      split.achieved = skew_report(split.train, &universe, Perspective::kVisual);
      const GlyphAtlas atlas =
          load_atlas(atlas_sprite, atlas_manifest, procedural_n, seed, cell_size,
                     procedural_n == 0 && atlas_sprite.empty()
                         ? split.train.concept_vocab.concepts()
                         : std::vector<std::string>{});
      emit_dataset(split, atlas, layout, out_path, seed);
      return 0;
    }

    if (cmd_eval->parsed()) {
      const Layout layout = layout_from_string(layout_name);
      const GlyphAtlas atlas = load_atlas(atlas_sprite, atlas_manifest, procedural_n, seed,
                                          cell_size, {});
      const EvalReport report =
          evaluate_images(generated_path, truth_path, atlas, layout, blank_threshold);
      json report_json = {
          {"config", config_json("eval", {{"generated", generated_path},
                                          {"truth", truth_path},
                                          {"blank_threshold", blank_threshold}})},
          {"total", report.total},
          {"both_correct", report.both_correct},
          {"accuracy", report.accuracy()},
          {"errors", report.errors},
      };
      std::ostringstream confusion_csv;
      confusion_csv << "truth,predicted,count\n";
      for (const auto& [key, count] : report.confusion)
        confusion_csv << key.first << ',' << key.second << ',' << count << '\n';
      if (out_path.empty()) {
        std::cout << report_json.dump(2) << "\n";
      } else {
        fs::create_directories(out_path);
        write_text_file((fs::path(out_path) / "eval.json").string(), report_json.dump(2) + "\n");
        write_text_file((fs::path(out_path) / "confusion.csv").string(), confusion_csv.str());
      }
      return 0;
    }

    if (cmd_gap->parsed()) {
      const double value = accuracy_gap(read_curves_csv(in_path), gap_sum);
      std::cout << value << "\n";
      return 0;
    }

    if (cmd_report->parsed()) {
      fs::create_directories(out_path);
      const Dataset dataset = load_dataset(in_path, lexicon_path, vocab_path);
      const Universe universe(dataset.concept_vocab, dataset.vis_vocab, false);
      const SkewReport visual =
          skew_report(dataset, &universe, Perspective::kVisual, uniform_weights);
      const SkewReport linguistic =
          skew_report(dataset, nullptr, Perspective::kLinguistic, uniform_weights);

      std::ostringstream csv;
      csv << "perspective," << skew_report_csv_header(dataset, Perspective::kVisual) << "\n";
      csv << "visual," << skew_report_csv_row(visual, dataset.vis_vocab.positions()) << "\n";
      csv << "linguistic," << skew_report_csv_row(linguistic, dataset.ling_vocab.positions())
          << "\n";
      write_text_file((fs::path(out_path) / "metrics.csv").string(), csv.str());

      const json full = {
          {"config", config_json("report", {{"in", in_path}})},
          {"visual", skew_report_to_json(visual)},
          {"linguistic", skew_report_to_json(linguistic)},
          {"pmd_visual", pmd_to_json(pmd(dataset, Perspective::kVisual))},
          {"pmd_linguistic", pmd_to_json(pmd(dataset, Perspective::kLinguistic))},
      };
      write_text_file((fs::path(out_path) / "metrics.json").string(), full.dump(2) + "\n");
      write_text_file((fs::path(out_path) / "pmd_visual.svg").string(),
                      pmd_svg(pmd(dataset, Perspective::kVisual), "PMD (visual roles)"));
      write_text_file((fs::path(out_path) / "pmd_linguistic.svg").string(),
                      pmd_svg(pmd(dataset, Perspective::kLinguistic), "PMD (linguistic roles)"));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return 1;
  }
  return 2;
}
