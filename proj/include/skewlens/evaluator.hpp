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

#ifndef SKEWLENS_EVALUATOR_HPP
#define SKEWLENS_EVALUATOR_HPP

#include <map>
#include <string>
#include <vector>

#include "skewlens/image.hpp"
#include "skewlens/synthgen.hpp"

namespace skewlens {

inline constexpr double kDefaultBlankThreshold = 0.5;

struct CropJudgment {
  // Empty predicted concept means BLANK.
  std::string predicted;
  double score = 0.0;
  bool blank() const { return predicted.empty(); }
};

enum class ErrorKind { kFlipped, kBlank, kDuplicate, kWrongObject, kMixed };

struct EvalReport {
  long long total = 0;
  long long both_correct = 0;
  std::map<std::string, long long> errors;  // flipped / blank / duplicate / wrong_object
  // (truth concept, predicted concept) -> count, over individual crops.
  std::map<std::pair<std::string, std::string>, long long> confusion;

  double accuracy() const {
    return total == 0 ? 0.0 : static_cast<double>(both_correct) / static_cast<double>(total);
  }
};

// Argmax of normalized cross-correlation against every glyph kernel.
CropJudgment classify_crop(const GrayImage& crop, const GlyphAtlas& atlas,
                           double blank_threshold = kDefaultBlankThreshold);

// Splits each generated image at the center line, classifies both crops and
// scores them against the ground-truth scene roles.
EvalReport evaluate_images(const std::string& generated_manifest,
                           const std::string& ground_truth_manifest, const GlyphAtlas& atlas,
                           Layout layout, double blank_threshold = kDefaultBlankThreshold);

struct Checkpoint {
  long long step = 0;
  double train_accuracy = 0.0;
  double test_accuracy = 0.0;
};

struct AccuracyCurvePair {
  std::vector<Checkpoint> checkpoints;
};

AccuracyCurvePair read_curves_csv(const std::string& path);

// Train-test accuracy gap in percentage points: mean per-checkpoint
// difference by default, raw sum with use_sum.
double accuracy_gap(const AccuracyCurvePair& curves, bool use_sum = false);

}  // namespace skewlens

#endif  // SKEWLENS_EVALUATOR_HPP
