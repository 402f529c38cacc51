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

// End-to-end acceptance checks. Each criterion prints a single PASS/FAIL
// line; the process exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "helpers.hpp"
#include "skewlens/evaluator.hpp"
#include "skewlens/io.hpp"
#include "skewlens/metrics.hpp"
#include "skewlens/sampler.hpp"
#include "skewlens/synthgen.hpp"

using namespace skewlens;
namespace fs = std::filesystem;
using skewlens::testing::random_dataset;
using skewlens::testing::stacked_dataset;
using skewlens::testing::top_bottom;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& label, bool ok, const std::string& detail = "") {
  std::printf("criterion %2d: %s — %s%s%s\n", criterion, ok ? "PASS" : "FAIL", label.c_str(),
              detail.empty() ? "" : " — ", detail.c_str());
  if (!ok) ++g_failures;
}

fs::path temp_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("skewlens_accept_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

Universe icon_universe(int n, const RoleVocabulary& roles = top_bottom()) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "icon%03d", i);
    names.emplace_back(buf);
  }
  return Universe(ConceptVocabulary(names), roles, false);
}

Dataset full_pool(const Universe& universe, const std::string& phrase) {
  Dataset pool;
  pool.concept_vocab = universe.concept_vocab();
  pool.vis_vocab = universe.role_vocab();
  pool.ling_vocab = RoleVocabulary::linguistic_binary();
  for (const auto& [i, j] : universe.tuples())
    pool.scenes.push_back(scene_from_tuple(universe, i, j, phrase));
  return pool;
}

// ---------------------------------------------------------------------------
// 1. Metric oracle equivalence.

double oracle_completeness_at(const Dataset& d, const std::string& position, Perspective p) {
  int supported = 0;
  for (const auto& name : d.concept_vocab.concepts()) {
    bool seen = false;
    for (const auto& scene : d.scenes)
      for (std::size_t k = 0; k < scene.pairs.size(); ++k)
        if (scene.pairs[k].filler == name && scene.role_of(k, p) == position) seen = true;
    if (seen) ++supported;
  }
  return static_cast<double>(supported) / static_cast<double>(d.concept_vocab.size());
}

double oracle_completeness(const Dataset& d, Perspective p) {
  long long total = 0;
  for (const auto& scene : d.scenes) total += static_cast<long long>(scene.pairs.size());
  double result = 0.0;
  for (const auto& position : d.roles(p).positions()) {
    long long occ = 0;
    for (const auto& scene : d.scenes)
      for (std::size_t k = 0; k < scene.pairs.size(); ++k)
        if (scene.role_of(k, p) == position) ++occ;
    result += (static_cast<double>(occ) / total) * oracle_completeness_at(d, position, p);
  }
  return result;
}

double oracle_balance(const Dataset& d, Perspective p) {
  const auto& positions = d.roles(p).positions();
  long long total = 0;
  for (const auto& scene : d.scenes) total += static_cast<long long>(scene.pairs.size());
  double result = 0.0;
  for (const auto& name : d.concept_vocab.concepts()) {
    std::vector<long long> counts(positions.size(), 0);
    long long occ = 0;
    for (const auto& scene : d.scenes)
      for (std::size_t k = 0; k < scene.pairs.size(); ++k)
        if (scene.pairs[k].filler == name) {
          ++occ;
          for (std::size_t r = 0; r < positions.size(); ++r)
            if (scene.role_of(k, p) == positions[r]) ++counts[r];
        }
    if (occ == 0) continue;
    double h = 0.0;
    for (long long c : counts) {
      if (c == 0) continue;
      const double prob = static_cast<double>(c) / occ;
      h -= prob * std::log(prob);
    }
    result += (static_cast<double>(occ) / total) * h /
              std::log(static_cast<double>(positions.size()));
  }
  return result;
}

double oracle_coverage(const Dataset& d, const Universe& universe) {
  std::set<std::pair<std::string, std::string>> unique;
  const auto& positions = d.vis_vocab.positions();
  for (const auto& scene : d.scenes) {
    std::string first, second;
    for (const auto& pair : scene.pairs)
      (pair.visual_role == positions[0] ? first : second) = pair.filler;
    unique.insert({first, second});
  }
  return static_cast<double>(unique.size()) / static_cast<double>(universe.size());
}

void criterion_1() {
  std::mt19937_64 rng(11);
  bool ok = true;
  for (int trial = 0; trial < 200 && ok; ++trial) {
    const Dataset d = random_dataset(rng, 6, 40);
    const Universe universe(d.concept_vocab, d.vis_vocab, false);
    for (Perspective p : {Perspective::kVisual, Perspective::kLinguistic}) {
      for (const auto& position : d.roles(p).positions())
        ok = ok && std::abs(completeness_at(d, position, p) -
                            oracle_completeness_at(d, position, p)) < 1e-9;
      ok = ok && std::abs(completeness(d, p) - oracle_completeness(d, p)) < 1e-9;
      ok = ok && std::abs(balance(d, p) - oracle_balance(d, p)) < 1e-9;
    }
    ok = ok && std::abs(coverage(d, universe) - oracle_coverage(d, universe)) < 1e-9;
  }
  report(1, "metric oracle equivalence on 200 random datasets", ok);
}

// ---------------------------------------------------------------------------
// 2. Pattern regime reproduction.

void criterion_2() {
  bool ok = true;
  std::string detail;
  for (int n : {30, 90}) {
    const Universe universe = icon_universe(n);

    // Complete and balanced: deterministic and seeded circulants.
    for (int variant = 0; variant < 3 && ok; ++variant) {
      PatternSpec spec;
      spec.kind = variant == 0 ? PatternKind::kLatinCompleteBalanced
                               : PatternKind::kRandomCompleteBalanced;
      spec.quota = 10;
      spec.seed = static_cast<std::uint64_t>(variant);
      const SplitResult split =
          split_from_mask(universe, generate_pattern_mask(universe, spec), "on top of");
      ok = split.achieved.completeness == 1.0 && split.achieved.balance >= 0.99;
      if (!ok) detail = "complete-balanced regime failed at N=" + std::to_string(n);
    }

    // Both positions incomplete.
    if (ok) {
      PatternSpec spec;
      spec.kind = PatternKind::kBlockIncompleteBoth;
      spec.block = 2 * n / 3;
      const SplitResult split =
          split_from_mask(universe, generate_pattern_mask(universe, spec), "on top of");
      ok = split.achieved.completeness_per_position.at("top") < 1.0 &&
           split.achieved.completeness_per_position.at("bottom") < 1.0;
      if (!ok) detail = "block_incomplete_both regime failed at N=" + std::to_string(n);
    }

    // Exactly one position incomplete.
    if (ok) {
      PatternSpec spec;
      spec.kind = PatternKind::kBlockIncompleteOne;
      spec.block = 2 * n / 3;
      const SplitResult split =
          split_from_mask(universe, generate_pattern_mask(universe, spec), "on top of");
      const double top = split.achieved.completeness_per_position.at("top");
      const double bottom = split.achieved.completeness_per_position.at("bottom");
      ok = (top < 1.0) != (bottom < 1.0);
      if (!ok) detail = "block_incomplete_one regime failed at N=" + std::to_string(n);
    }

    // Complete but unbalanced, balance strictly increasing across skews.
    if (ok) {
      std::vector<double> balances;
      for (int skew : {7, 3, 2}) {
        PatternSpec spec;
        spec.kind = PatternKind::kBandedUnbalanced;
        spec.skew = skew;
        const SplitResult split =
            split_from_mask(universe, generate_pattern_mask(universe, spec), "on top of");
        ok = ok && split.achieved.completeness == 1.0;
        balances.push_back(split.achieved.balance);
      }
      ok = ok && balances[0] < balances[1] && balances[1] < balances[2];
      if (!ok) detail = "banded regime failed at N=" + std::to_string(n);
    }
    if (!ok) break;
  }
  report(2, "pattern generators reproduce the four skew regimes", ok, detail);
}

// ---------------------------------------------------------------------------
// 3. Property-tuple reproduction on a 15-concept universe.

void criterion_3() {
  const Universe universe = icon_universe(15);
  const Dataset pool = full_pool(universe, "on top of");
  const std::vector<std::array<int, 4>> rows = {
      {100, 50, 63, 47},  {80, 73, 77, 50},   {87, 87, 75, 49},
      {100, 100, 73, 44}, {100, 100, 88, 49}, {100, 100, 100, 48},
  };
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  for (const auto& row : rows) {
    TargetSpec targets;
    targets.cpl_r1 = row[0] / 100.0;
    targets.cpl_r2 = row[1] / 100.0;
    targets.blc = row[2] / 100.0;
    targets.coverage = row[3] / 100.0;
    const SubsampleResult result = subsample_to_targets(pool, targets, 17);
    const double cpl1 = result.achieved.completeness_per_position.at("top") * 100.0;
    const double cpl2 = result.achieved.completeness_per_position.at("bottom") * 100.0;
    const double blc = result.achieved.balance * 100.0;
    const double cov = result.achieved.coverage * 100.0;
    const bool row_ok = std::abs(cpl1 - row[0]) <= 3.0 && std::abs(cpl2 - row[1]) <= 3.0 &&
                        std::abs(blc - row[2]) <= 3.0 && std::abs(cov - row[3]) <= 3.0;
    if (!row_ok && detail.empty()) {
      char buf[160];
      std::snprintf(buf, sizeof(buf),
                    "target (%d,%d,%d,%d) achieved (%.1f,%.1f,%.1f,%.1f)", row[0], row[1],
                    row[2], row[3], cpl1, cpl2, blc, cov);
      detail = buf;
    }
    ok = ok && row_ok;
  }
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - start);
  if (elapsed.count() >= 30) {
    ok = false;
    if (detail.empty()) detail = "runtime " + std::to_string(elapsed.count()) + "s exceeds 30s";
  }
  report(3, "subsampler hits all six property-tuple rows within 3 points", ok, detail);
}

// ---------------------------------------------------------------------------
// 4. Linguistic reproduction over a visually perfect split.

Dataset visually_perfect_split_30() {
  // Even-indexed concepts exchange with odd-indexed ones in both directions
  // (8 partners each way) and additionally among themselves (circulant of
  // 12): every concept is complete and exactly balanced visually, while the
  // even concepts carry enough mass to steer the linguistic metrics.
  const Universe universe = icon_universe(30);
  const int half = 15;
  Mask mask(30 * 30, 0);
  auto set_cell = [&mask](int i, int j) { mask[static_cast<std::size_t>(i) * 30 + j] = 1; };
  for (int t = 0; t < half; ++t) {
    for (int k = 0; k < 8; ++k) {
      set_cell(2 * t, 2 * ((t + k) % half) + 1);
      set_cell(2 * t + 1, 2 * ((t + k) % half));
    }
    for (int k = 1; k <= 12; ++k) set_cell(2 * t, 2 * ((t + k) % half));
  }
  return split_from_mask(universe, mask, "on top of").train;
}

void criterion_4() {
  const Dataset train = visually_perfect_split_30();
  const SkewReport visual_before = skew_report(train, nullptr, Perspective::kVisual);
  bool ok = visual_before.completeness == 1.0 &&
            std::abs(visual_before.balance - 1.0) < 1e-9;
  std::string detail = ok ? "" : "base split is not visually perfect";

  const Universe universe(train.concept_vocab, train.vis_vocab, false);
  const double cov = coverage(train, universe) * 100.0;
  const auto lexicon = RelationLexicon::default_lexicon();
  const std::vector<std::array<int, 4>> rows = {{50, 100, 63, 47}, {100, 100, 88, 49}};
  for (const auto& row : rows) {
    if (!ok) break;
    TargetSpec targets;
    targets.cpl_r1 = row[0] / 100.0;
    targets.cpl_r2 = row[1] / 100.0;
    targets.blc = row[2] / 100.0;
    const PhrasingResult result = assign_phrasings(train, lexicon, targets, 23);
    const SkewReport visual_after = skew_report(result.data, nullptr, Perspective::kVisual);
    const bool visual_unchanged =
        skew_report_to_json(visual_after).dump() == skew_report_to_json(visual_before).dump();
    const double cpl_s = result.achieved.completeness_per_position.at("subject") * 100.0;
    const double cpl_o = result.achieved.completeness_per_position.at("object") * 100.0;
    const double blc = result.achieved.balance * 100.0;
    const bool row_ok = visual_unchanged && std::abs(cpl_s - row[0]) <= 3.0 &&
                        std::abs(cpl_o - row[1]) <= 3.0 && std::abs(blc - row[2]) <= 3.0 &&
                        std::abs(cov - row[3]) <= 3.0;
    if (!row_ok) {
      char buf[160];
      std::snprintf(buf, sizeof(buf),
                    "target (%d,%d,%d,%d) achieved (%.1f,%.1f,%.1f,%.1f)%s", row[0], row[1],
                    row[2], row[3], cpl_s, cpl_o, blc, cov,
                    visual_unchanged ? "" : ", visual report changed");
      detail = buf;
    }
    ok = ok && row_ok;
  }
  report(4, "phrasing hits the linguistic rows with visual metrics untouched", ok, detail);
}

// ---------------------------------------------------------------------------
// 5. Complete-subsample extraction.

void criterion_5() {
  bool ok = true;
  // Hand-traced fixtures.
  {
    const auto d = stacked_dataset({"a", "b", "c"}, {{"a", "b"}, {"b", "a"}, {"a", "c"}});
    const Dataset pruned = extract_complete_subsample(d, Perspective::kVisual);
    ok = pruned.scenes.size() == 2 &&
         pruned.concept_vocab.concepts() == std::vector<std::string>{"a", "b"};
  }
  {
    const auto chain = stacked_dataset({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
    ok = ok && extract_complete_subsample(chain, Perspective::kVisual).scenes.empty();
  }
  // Fuzz.
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100 && ok; ++trial) {
    const Dataset d = random_dataset(rng);
    const Dataset once = extract_complete_subsample(d, Perspective::kVisual);
    const Dataset twice = extract_complete_subsample(once, Perspective::kVisual);
    ok = once.scenes.size() == twice.scenes.size() && once.scenes.size() <= d.scenes.size();
    std::set<std::string> parent;
    for (const auto& scene : d.scenes) parent.insert(visual_tuple_key(scene, d.vis_vocab));
    for (const auto& scene : once.scenes)
      ok = ok && parent.count(visual_tuple_key(scene, once.vis_vocab)) == 1;
    if (!once.scenes.empty())
      for (const auto& position : once.vis_vocab.positions())
        ok = ok && completeness_at(once, position, Perspective::kVisual) == 1.0;
  }
  report(5, "complete-subsample extraction: fixtures and 100-corpus fuzz", ok);
}

// ---------------------------------------------------------------------------
// 6. Render/evaluate round trip for both layouts.

void criterion_6() {
  bool ok = true;
  std::string detail;
  for (Layout layout : {Layout::kVertical, Layout::kHorizontal}) {
    const bool vertical = layout == Layout::kVertical;
    const RoleVocabulary roles =
        vertical ? top_bottom() : RoleVocabulary(Perspective::kVisual, {"left", "right"});
    const Universe universe = icon_universe(30, roles);
    PatternSpec spec;
    spec.kind = PatternKind::kLatinCompleteBalanced;
    spec.quota = 2;
    const SplitResult split = split_from_mask(universe, generate_pattern_mask(universe, spec),
                                              vertical ? "on top of" : "to the left of");
    const GlyphAtlas atlas = procedural_glyphs(split.train.concept_vocab.concepts(), 31);
    const fs::path dir = temp_dir(std::string("roundtrip_") + to_string(layout));
    const EmitManifest manifest = emit_dataset(split, atlas, layout, dir.string(), 31);

    const EvalReport clean =
        evaluate_images(manifest.train_manifest, manifest.train_manifest, atlas, layout);
    ok = ok && clean.both_correct == clean.total && clean.total > 0;

    // Swapped and blanked variants of every train image.
    const int cell = atlas.cell_size();
    const fs::path swapped_dir = temp_dir(std::string("swapped_") + to_string(layout));
    const fs::path blanked_dir = temp_dir(std::string("blanked_") + to_string(layout));
    fs::create_directories(swapped_dir / "train");
    fs::create_directories(blanked_dir / "train");
    for (const auto& entry : fs::directory_iterator(dir / "train")) {
      const GrayImage image = read_png(entry.path().string());
      GrayImage swapped = image;
      GrayImage blanked = image;
      for (int y = 0; y < cell; ++y)
        for (int x = 0; x < cell; ++x) {
          if (vertical) {
            swapped.at(x, y) = image.at(x, y + cell);
            swapped.at(x, y + cell) = image.at(x, y);
            blanked.at(x, y + cell) = 255;
          } else {
            swapped.at(x, y) = image.at(x + cell, y);
            swapped.at(x + cell, y) = image.at(x, y);
            blanked.at(x + cell, y) = 255;
          }
        }
      write_png((swapped_dir / "train" / entry.path().filename()).string(), swapped);
      write_png((blanked_dir / "train" / entry.path().filename()).string(), blanked);
    }
    const std::string manifest_text = read_text_file(manifest.train_manifest);
    write_text_file((swapped_dir / "train.jsonl").string(), manifest_text);
    write_text_file((blanked_dir / "train.jsonl").string(), manifest_text);

    const EvalReport swapped = evaluate_images((swapped_dir / "train.jsonl").string(),
                                               manifest.train_manifest, atlas, layout);
    const EvalReport blanked = evaluate_images((blanked_dir / "train.jsonl").string(),
                                               manifest.train_manifest, atlas, layout);
    ok = ok && swapped.errors.at("flipped") == swapped.total &&
         blanked.errors.at("blank") == blanked.total;
    if (!ok && detail.empty()) detail = std::string("layout ") + to_string(layout);
  }
  report(6, "render/evaluate round trip: correct, flipped and blank are exact", ok, detail);
}

// ---------------------------------------------------------------------------
// 7. Noise robustness.

void criterion_7() {
  const GlyphAtlas atlas = procedural_glyphs(30, 13);
  std::mt19937_64 rng(37);
  int correct = 0;
  const int trials = 1000;
  for (int t = 0; t < trials; ++t) {
    const std::size_t target = rng() % atlas.size();
    GrayImage noisy = atlas.glyph(target);
    for (auto& p : noisy.pixels)
      if (rng() % 100 < 5) p = (rng() % 2 == 0) ? 0 : 255;
    if (classify_crop(noisy, atlas).predicted == atlas.names()[target]) ++correct;
  }
  report(7, "crop classifier tops 99% under 5% salt-and-pepper noise",
         correct >= trials * 99 / 100,
         std::to_string(correct) + "/" + std::to_string(trials));
}

// ---------------------------------------------------------------------------
// 8. Accuracy-gap analytic cases.

void criterion_8() {
  AccuracyCurvePair identical;
  for (int i = 1; i <= 6; ++i) identical.checkpoints.push_back({i, 0.4, 0.4});
  AccuracyCurvePair constant;
  for (int i = 1; i <= 6; ++i) constant.checkpoints.push_back({i, 1.0, 0.0});
  AccuracyCurvePair step;
  for (int i = 1; i <= 10; ++i)
    step.checkpoints.push_back({i, i >= 5 ? 1.0 : 0.0, i >= 8 ? 1.0 : 0.0});
  const bool ok = accuracy_gap(identical) == 0.0 && accuracy_gap(constant) == 100.0 &&
                  std::abs(accuracy_gap(step) - 30.0) < 1e-12;
  report(8, "accuracy gap analytic fixtures (0.0 / 100.0 / 30.0)", ok);
}

// ---------------------------------------------------------------------------
// 9. Determinism.

void criterion_9() {
  bool ok = true;
  // Masks.
  const Universe universe = icon_universe(12);
  PatternSpec spec;
  spec.kind = PatternKind::kRandomCompleteBalanced;
  spec.quota = 4;
  spec.seed = 41;
  ok = generate_pattern_mask(universe, spec) == generate_pattern_mask(universe, spec);

  // Subsampled datasets.
  const Dataset pool = full_pool(icon_universe(10), "on top of");
  TargetSpec targets{0.9, 0.9, 0.8, 0.5, 0.05};
  const auto sub_a = subsample_to_targets(pool, targets, 5);
  const auto sub_b = subsample_to_targets(pool, targets, 5);
  const auto fingerprint = [](const Dataset& d) {
    std::string out;
    for (const auto& scene : d.scenes) out += scene_to_json(scene).dump() + "\n";
    return out;
  };
  ok = ok && fingerprint(sub_a.data) == fingerprint(sub_b.data) &&
       skew_report_to_json(sub_a.achieved).dump() == skew_report_to_json(sub_b.achieved).dump();

  // Images and manifests.
  PatternSpec latin;
  latin.kind = PatternKind::kLatinCompleteBalanced;
  latin.quota = 3;
  const Universe small = icon_universe(8);
  const SplitResult split =
      split_from_mask(small, generate_pattern_mask(small, latin), "on top of");
  const GlyphAtlas atlas = procedural_glyphs(split.train.concept_vocab.concepts(), 43);
  const fs::path dir_a = temp_dir("det_a");
  const fs::path dir_b = temp_dir("det_b");
  emit_dataset(split, atlas, Layout::kVertical, dir_a.string(), 43);
  emit_dataset(split, atlas, Layout::kVertical, dir_b.string(), 43);
  for (const auto& entry : fs::recursive_directory_iterator(dir_a)) {
    if (!entry.is_regular_file()) continue;
    const fs::path rel = fs::relative(entry.path(), dir_a);
    ok = ok && read_text_file(entry.path().string()) == read_text_file((dir_b / rel).string());
  }
  report(9, "identical configs and seeds reproduce artifacts byte-exactly", ok);
}

// ---------------------------------------------------------------------------
// 10. Metric invariance suite.

void criterion_10() {
  std::mt19937_64 rng(53);
  bool ok = true;
  for (int trial = 0; trial < 100 && ok; ++trial) {
    const Dataset d = random_dataset(rng);
    const Universe universe(d.concept_vocab, d.vis_vocab, false);

    Dataset doubled = d;
    for (const auto& scene : d.scenes) doubled.scenes.push_back(scene);
    Dataset reversed = d;
    std::reverse(reversed.scenes.begin(), reversed.scenes.end());

    // Bijective renaming: cyclic shift of concept names.
    const auto& names = d.concept_vocab.concepts();
    std::vector<std::string> renamed_names = names;
    std::rotate(renamed_names.begin(), renamed_names.begin() + 1, renamed_names.end());
    Dataset renamed = d;
    renamed.concept_vocab = ConceptVocabulary(renamed_names);
    for (auto& scene : renamed.scenes)
      for (auto& pair : scene.pairs) {
        const int idx = d.concept_vocab.index_of(pair.filler);
        pair.filler = renamed_names[idx];
      }
    const Universe renamed_universe(renamed.concept_vocab, renamed.vis_vocab, false);

    for (Perspective p : {Perspective::kVisual, Perspective::kLinguistic}) {
      const double base_cpl = completeness(d, p);
      const double base_blc = balance(d, p);
      for (const Dataset* variant : {&doubled, &reversed, &renamed}) {
        ok = ok && std::abs(completeness(*variant, p) - base_cpl) < 1e-12 &&
             std::abs(balance(*variant, p) - base_blc) < 1e-12;
      }
    }
    const double base_cov = coverage(d, universe);
    ok = ok && std::abs(coverage(doubled, universe) - base_cov) < 1e-12 &&
         std::abs(coverage(reversed, universe) - base_cov) < 1e-12 &&
         std::abs(coverage(renamed, renamed_universe) - base_cov) < 1e-12;
  }
  report(10, "duplication, permutation and renaming invariance on 100 datasets", ok);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
