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

#ifndef SKEWLENS_SAMPLER_HPP
#define SKEWLENS_SAMPLER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "skewlens/core.hpp"
#include "skewlens/metrics.hpp"
#include "skewlens/parser.hpp"

namespace skewlens {

enum class PatternKind {
  kBlockIncompleteBoth,
  kBlockIncompleteOne,
  kBandedUnbalanced,
  kQuotaUnbalanced,
  kLatinCompleteBalanced,
  kRandomCompleteBalanced,
};

std::string to_string(PatternKind kind);
PatternKind pattern_kind_from_string(const std::string& s);

struct PatternSpec {
  PatternKind kind = PatternKind::kLatinCompleteBalanced;
  int block = 0;  // block side for the incomplete kinds
  int quota = 0;  // per-concept appearances for the balanced kinds, base row quota for quota_unbalanced
  int skew = 0;   // heavy/light ratio (banded), quota spread (quota_unbalanced)
  std::uint64_t seed = 0;
};

// N x N boolean grid, row-major. Cell (i, j) marks the tuple with concept i
// filling the first position and concept j the second.
using Mask = std::vector<std::uint8_t>;

Mask generate_pattern_mask(const Universe& universe, const PatternSpec& spec);

struct SplitResult {
  Dataset train;
  Dataset test;
  Mask mask;
  SkewReport achieved;  // visual report of the train side
};

// train = masked tuples, test = complement.
SplitResult split_from_mask(const Universe& universe, const Mask& mask,
                            const std::string& phrase = "");

// Largest subset in which every surviving concept is bound to every position,
// obtained by iterated pruning. The result's concept vocabulary is the set of
// survivors; it may be empty.
Dataset extract_complete_subsample(const Dataset& dataset, Perspective p);

struct TargetSpec {
  double cpl_r1 = 1.0;
  double cpl_r2 = 1.0;
  double blc = 1.0;
  double coverage = 1.0;
  double tolerance = 0.03;
};

struct SubsampleResult {
  Dataset data;
  SkewReport achieved;  // visual metrics over the observed concept set
  bool within_tolerance = false;
};

// Draws a subsample whose (CPL(r1), CPL(r2), BLC, Coverage) approach the
// targets. Metrics of the result are evaluated over its observed concept
// vocabulary. Support-informed seeding plus a first-improvement swap climb;
// best-effort (within_tolerance = false) when the cap is hit first.
SubsampleResult subsample_to_targets(const Dataset& dataset, const TargetSpec& targets,
                                     std::uint64_t seed, int max_swaps = 10000);

struct PhrasingResult {
  Dataset data;
  SkewReport achieved;  // linguistic metrics
  bool within_tolerance = false;
};

// Chooses one of the two symmetric caption phrasings per scene so the
// linguistic metrics approach the targets; visual bindings are untouched.
PhrasingResult assign_phrasings(const Dataset& train, const RelationLexicon& lexicon,
                                const TargetSpec& targets, std::uint64_t seed,
                                int max_flips = 10000);

}  // namespace skewlens

#endif  // SKEWLENS_SAMPLER_HPP
