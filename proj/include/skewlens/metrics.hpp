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

#ifndef SKEWLENS_METRICS_HPP
#define SKEWLENS_METRICS_HPP

#include <map>
#include <string>
#include <vector>

#include "skewlens/core.hpp"

namespace skewlens {

/// Completeness, balance, coverage and occurrence weights under one perspective.
struct SkewReport {
  Perspective perspective = Perspective::kVisual;
  std::map<std::string, double> completeness_per_position;
  double completeness = 0.0;
  std::map<std::string, double> balance_per_concept;
  double balance = 0.0;
  double coverage = -1.0;  // -1 when no universe was supplied
  std::map<std::string, double> position_weights;
  std::map<std::string, double> concept_weights;
  std::vector<std::string> unobserved_concepts;
};

/// Probability mass distribution of concept occurrences.
struct PMD {
  // Sorted by descending mass, ties by concept name.
  std::vector<std::pair<std::string, double>> macro;
  std::map<std::string, std::vector<std::pair<std::string, double>>> per_role;
};

// Fraction of the declared concept vocabulary ever bound to `position`.
double completeness_at(const Dataset& dataset, const std::string& position, Perspective p);

// Expectation of completeness_at over empirical position frequencies.
double completeness(const Dataset& dataset, Perspective p);

// Normalized entropy of the concept's observed position multiset; 0 for
// never-observed concepts.
double balance_of(const Dataset& dataset, const std::string& concept_id, Perspective p);

// Expectation of balance_of over empirical concept frequencies. With
// uniform_weights, observed concepts are weighted equally instead.
double balance(const Dataset& dataset, Perspective p, bool uniform_weights = false);

// |deduplicate(dataset)| / |universe|.
double coverage(const Dataset& dataset, const Universe& universe);

PMD pmd(const Dataset& dataset, Perspective p);

SkewReport skew_report(const Dataset& dataset, const Universe* universe, Perspective p,
                       bool uniform_weights = false);

}  // namespace skewlens

#endif  // SKEWLENS_METRICS_HPP
