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

#include "skewlens/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace skewlens {

namespace {

// concept index x role index occurrence counts over all filler slots.
std::vector<std::vector<long long>> count_table(const Dataset& dataset, Perspective p) {
  const auto& roles = dataset.roles(p);
  std::vector<std::vector<long long>> counts(dataset.concept_vocab.size(),
                                             std::vector<long long>(roles.size(), 0));
  for (const auto& scene : dataset.scenes) {
    for (std::size_t k = 0; k < scene.pairs.size(); ++k) {
      const int ci = dataset.concept_vocab.index_of(scene.pairs[k].filler);
      const int ri = roles.index_of(scene.role_of(k, p));
      if (ci < 0) throw Error("scene filler outside declared vocabulary: " + scene.pairs[k].filler);
      if (ri < 0) throw Error("scene role outside declared vocabulary: " + scene.role_of(k, p));
      ++counts[ci][ri];
    }
  }
  return counts;
}

double normalized_entropy(const std::vector<long long>& counts) {
  long long total = 0;
  for (long long c : counts) total += c;
  if (total == 0) return 0.0;
  double entropy = 0.0;
  for (long long c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / static_cast<double>(total);
    entropy -= p * std::log(p);
  }
  return entropy / std::log(static_cast<double>(counts.size()));
}

}  // namespace

double completeness_at(const Dataset& dataset, const std::string& position, Perspective p) {
  const auto& roles = dataset.roles(p);
  if (!roles.contains(position)) throw Error("unknown position: " + position);
  long long supported = 0;
  for (const auto& concept_id : dataset.concept_vocab.concepts())
    if (unbind_dataset(dataset, concept_id, p).count(position) > 0) ++supported;
  return static_cast<double>(supported) / static_cast<double>(dataset.concept_vocab.size());
}

double completeness(const Dataset& dataset, Perspective p) {
  if (dataset.scenes.empty()) throw Error("completeness of an empty dataset is undefined");
  const auto counts = count_table(dataset, p);
  const auto& roles = dataset.roles(p);
  std::vector<long long> role_occurrences(roles.size(), 0);
  long long total = 0;
  for (const auto& row : counts)
    for (std::size_t r = 0; r < row.size(); ++r) {
      role_occurrences[r] += row[r];
      total += row[r];
    }
  double result = 0.0;
  for (std::size_t r = 0; r < roles.size(); ++r) {
    const double weight = static_cast<double>(role_occurrences[r]) / static_cast<double>(total);
    if (weight > 0.0) result += weight * completeness_at(dataset, roles.positions()[r], p);
  }
  return result;
}

double balance_of(const Dataset& dataset, const std::string& concept_id, Perspective p) {
  const int ci = dataset.concept_vocab.index_of(concept_id);
  if (ci < 0) throw Error("unknown concept: " + concept_id);
  return normalized_entropy(count_table(dataset, p)[ci]);
}

double balance(const Dataset& dataset, Perspective p, bool uniform_weights) {
  if (dataset.scenes.empty()) throw Error("balance of an empty dataset is undefined");
  const auto counts = count_table(dataset, p);
  long long total = 0;
  std::vector<long long> per_concept(counts.size(), 0);
  for (std::size_t c = 0; c < counts.size(); ++c)
    for (long long n : counts[c]) {
      per_concept[c] += n;
      total += n;
    }
  long long observed = 0;
  for (long long n : per_concept)
    if (n > 0) ++observed;
  double result = 0.0;
  for (std::size_t c = 0; c < counts.size(); ++c) {
    if (per_concept[c] == 0) continue;
    const double weight = uniform_weights
                              ? 1.0 / static_cast<double>(observed)
                              : static_cast<double>(per_concept[c]) / static_cast<double>(total);
    result += weight * normalized_entropy(counts[c]);
  }
  return result;
}

double coverage(const Dataset& dataset, const Universe& universe) {
  const Dataset unique = deduplicate(dataset);
  for (const auto& scene : unique.scenes) {
    if (scene.pairs.size() != 2) throw Error("coverage requires binary scenes");
    int first = -1, second = -1;
    for (const auto& pair : scene.pairs) {
      const int ci = universe.concept_vocab().index_of(pair.filler);
      const int ri = universe.role_vocab().index_of(pair.visual_role);
      if (ci < 0 || ri < 0) throw Error("scene outside universe: " + pair.filler);
      (ri == 0 ? first : second) = ci;
    }
    if (!universe.contains(first, second)) throw Error("scene outside universe");
  }
  return static_cast<double>(unique.scenes.size()) / static_cast<double>(universe.size());
}

PMD pmd(const Dataset& dataset, Perspective p) {
  if (dataset.scenes.empty()) throw Error("pmd of an empty dataset is undefined");
  const auto counts = count_table(dataset, p);
  const auto& roles = dataset.roles(p);
  const auto& concepts = dataset.concept_vocab.concepts();

  long long total = 0;
  std::vector<long long> per_concept(counts.size(), 0);
  std::vector<long long> per_role(roles.size(), 0);
  for (std::size_t c = 0; c < counts.size(); ++c)
    for (std::size_t r = 0; r < roles.size(); ++r) {
      per_concept[c] += counts[c][r];
      per_role[r] += counts[c][r];
      total += counts[c][r];
    }

  std::vector<std::size_t> order(concepts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (per_concept[a] != per_concept[b]) return per_concept[a] > per_concept[b];
    return concepts[a] < concepts[b];
  });

  PMD out;
  for (std::size_t i : order)
    out.macro.emplace_back(concepts[i], static_cast<double>(per_concept[i]) / total);
  for (std::size_t r = 0; r < roles.size(); ++r) {
    auto& dist = out.per_role[roles.positions()[r]];
    if (per_role[r] == 0) continue;
    for (std::size_t i : order)
      dist.emplace_back(concepts[i], static_cast<double>(counts[i][r]) / per_role[r]);
  }
  return out;
}

SkewReport skew_report(const Dataset& dataset, const Universe* universe, Perspective p,
                       bool uniform_weights) {
  SkewReport report;
  report.perspective = p;
  const auto& roles = dataset.roles(p);
  const auto counts = count_table(dataset, p);

  long long total = 0;
  std::vector<long long> per_concept(counts.size(), 0);
  std::vector<long long> per_role(roles.size(), 0);
  for (std::size_t c = 0; c < counts.size(); ++c)
    for (std::size_t r = 0; r < roles.size(); ++r) {
      per_concept[c] += counts[c][r];
      per_role[r] += counts[c][r];
      total += counts[c][r];
    }
  if (total == 0) throw Error("skew report of an empty dataset is undefined");

  for (std::size_t r = 0; r < roles.size(); ++r) {
    const auto& position = roles.positions()[r];
    report.completeness_per_position[position] = completeness_at(dataset, position, p);
    report.position_weights[position] = static_cast<double>(per_role[r]) / total;
  }
  report.completeness = completeness(dataset, p);

  for (std::size_t c = 0; c < counts.size(); ++c) {
    const auto& concept_id = dataset.concept_vocab.concepts()[c];
    report.balance_per_concept[concept_id] = normalized_entropy(counts[c]);
    report.concept_weights[concept_id] = static_cast<double>(per_concept[c]) / total;
    if (per_concept[c] == 0) report.unobserved_concepts.push_back(concept_id);
  }
  report.balance = balance(dataset, p, uniform_weights);
  if (universe != nullptr) report.coverage = coverage(dataset, *universe);
  return report;
}

}  // namespace skewlens
