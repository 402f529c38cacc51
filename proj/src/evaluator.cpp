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

#include "skewlens/evaluator.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "skewlens/io.hpp"

namespace skewlens {

using nlohmann::json;
namespace fs = std::filesystem;

CropJudgment classify_crop(const GrayImage& image, const GlyphAtlas& atlas,
                           double blank_threshold) {
  if (image.width != atlas.cell_size() || image.height != atlas.cell_size())
    throw Error("crop dimensions do not match the atlas cell size");
  CropJudgment judgment;
  double best = -2.0;
  for (std::size_t i = 0; i < atlas.size(); ++i) {
    const double score = normalized_cross_correlation(image, atlas.glyph(i));
    if (score > best) {
      best = score;
      judgment.predicted = atlas.names()[i];
    }
  }
  judgment.score = best;
  if (best < blank_threshold) judgment.predicted.clear();
  return judgment;
}

namespace {

std::vector<json> read_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open: " + path);
  std::vector<json> records;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    records.push_back(json::parse(line));
  }
  return records;
}

}  // namespace

EvalReport evaluate_images(const std::string& generated_manifest,
                           const std::string& ground_truth_manifest, const GlyphAtlas& atlas,
                           Layout layout, double blank_threshold) {
  const auto generated = read_jsonl(generated_manifest);
  const auto truth = read_jsonl(ground_truth_manifest);
  if (generated.size() != truth.size())
    throw Error("manifest sizes differ: " + std::to_string(generated.size()) + " vs " +
                std::to_string(truth.size()));

  const auto [first_role, second_role] = layout_roles(layout);
  const int cell = atlas.cell_size();
  const bool vertical = layout == Layout::kVertical;
  const fs::path base = fs::path(generated_manifest).parent_path();

  EvalReport report;
  for (const char* key : {"flipped", "blank", "duplicate", "wrong_object", "mixed"})
    report.errors[key] = 0;

  for (std::size_t idx = 0; idx < generated.size(); ++idx) {
    const Scene gt = scene_from_json(truth[idx]);
    std::string expected_first, expected_second;
    for (const auto& pair : gt.pairs) {
      if (pair.visual_role == first_role) expected_first = pair.filler;
      if (pair.visual_role == second_role) expected_second = pair.filler;
    }
    if (expected_first.empty() || expected_second.empty())
      throw Error("ground truth roles do not match the " + to_string(layout) + " layout");

    const std::string image_rel = generated[idx].at("image").get<std::string>();
    const fs::path image_path =
        fs::path(image_rel).is_absolute() ? fs::path(image_rel) : base / image_rel;
    const GrayImage image = read_png(image_path.string());
    if (image.width != (vertical ? cell : 2 * cell) || image.height != (vertical ? 2 * cell : cell))
      throw Error("image dimensions do not match the layout: " + image_path.string());

    const GrayImage first_crop =
        vertical ? crop(image, 0, 0, cell, cell) : crop(image, 0, 0, cell, cell);
    const GrayImage second_crop =
        vertical ? crop(image, 0, cell, cell, cell) : crop(image, cell, 0, cell, cell);
    const CropJudgment first = classify_crop(first_crop, atlas, blank_threshold);
    const CropJudgment second = classify_crop(second_crop, atlas, blank_threshold);

    ++report.confusion[{expected_first, first.blank() ? "BLANK" : first.predicted}];
    ++report.confusion[{expected_second, second.blank() ? "BLANK" : second.predicted}];
    ++report.total;

    const bool first_ok = first.predicted == expected_first;
    const bool second_ok = second.predicted == expected_second;
    if (first_ok && second_ok) {
      ++report.both_correct;
    } else if (first.blank() || second.blank()) {
      ++report.errors["blank"];
    } else if (first.predicted == expected_second && second.predicted == expected_first &&
               expected_first != expected_second) {
      ++report.errors["flipped"];
    } else if (first.predicted == second.predicted && expected_first != expected_second) {
      ++report.errors["duplicate"];
    } else if (first_ok || second_ok) {
      ++report.errors["mixed"];
    } else {
      ++report.errors["wrong_object"];
    }
  }
  return report;
}

AccuracyCurvePair read_curves_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open: " + path);
  AccuracyCurvePair curves;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("step", 0) == 0) continue;  // header
    std::istringstream row(line);
    std::string field;
    Checkpoint cp;
    if (!std::getline(row, field, ',')) throw Error("malformed curve row: " + line);
    cp.step = std::stoll(field);
    if (!std::getline(row, field, ',')) throw Error("malformed curve row: " + line);
    cp.train_accuracy = std::stod(field);
    if (!std::getline(row, field, ',')) throw Error("malformed curve row: " + line);
    cp.test_accuracy = std::stod(field);
    curves.checkpoints.push_back(cp);
  }
  for (std::size_t i = 1; i < curves.checkpoints.size(); ++i)
    if (curves.checkpoints[i].step <= curves.checkpoints[i - 1].step)
      throw Error("checkpoint steps must be strictly increasing");
  return curves;
}

double accuracy_gap(const AccuracyCurvePair& curves, bool use_sum) {
  if (curves.checkpoints.empty()) throw Error("accuracy gap of an empty curve is undefined");
  double sum = 0.0;
  for (const auto& cp : curves.checkpoints) sum += cp.train_accuracy - cp.test_accuracy;
  const double value = use_sum ? sum : sum / static_cast<double>(curves.checkpoints.size());
  return value * 100.0;
}

}  // namespace skewlens
