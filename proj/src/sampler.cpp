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

#include "skewlens/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <unordered_set>

namespace skewlens {

namespace {

// Seeded RNG with explicit index draws, stable across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  std::size_t below(std::size_t n) { return n == 0 ? 0 : engine_() % n; }
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

double binary_entropy(long long a, long long b) {
  const long long total = a + b;
  if (total == 0 || a == 0 || b == 0) return 0.0;
  const double pa = static_cast<double>(a) / total;
  const double pb = static_cast<double>(b) / total;
  return -(pa * std::log(pa) + pb * std::log(pb)) / std::log(2.0);
}

void set_cell(Mask& mask, int n, int i, int j) { mask[static_cast<std::size_t>(i) * n + j] = 1; }

Mask banded_unbalanced_mask(int n, int skew) {
  // Even-index concepts are first-position heavy (skew appearances vs one),
  // odd-index concepts are the mirror image. Completeness holds for every
  // concept; per-concept balance is H(skew, 1).
  if (n % 2 != 0) throw Error("banded_unbalanced requires an even concept count");
  const int half = n / 2;
  if (skew < 1 || skew > half) throw Error("banded_unbalanced: skew must be in [1, N/2]");
  Mask mask(static_cast<std::size_t>(n) * n, 0);
  for (int t = 0; t < half; ++t) {
    for (int k = 0; k < skew; ++k) set_cell(mask, n, 2 * t, 2 * ((t + k) % half) + 1);
    set_cell(mask, n, 2 * t + 1, 2 * ((t + 1) % half));
  }
  return mask;
}

Mask quota_unbalanced_mask(int n, int quota, int skew) {
  if (quota < 1) throw Error("quota_unbalanced: quota must be at least 1");
  if (quota + skew > n - 1) throw Error("quota_unbalanced: quota + skew exceeds N - 1");
  Mask mask(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    const int row_quota = quota + (n > 1 ? (i * skew) / (n - 1) : 0);
    for (int k = 1; k <= row_quota; ++k) set_cell(mask, n, i, (i + k) % n);
  }
  return mask;
}

Mask circulant_mask(int n, int quota, const std::vector<int>& order) {
  Mask mask(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 1; k <= quota; ++k) set_cell(mask, n, order[i], order[(i + k) % n]);
  return mask;
}

}  // namespace

std::string to_string(PatternKind kind) {
  switch (kind) {
    case PatternKind::kBlockIncompleteBoth: return "block_incomplete_both";
    case PatternKind::kBlockIncompleteOne: return "block_incomplete_one";
    case PatternKind::kBandedUnbalanced: return "banded_unbalanced";
    case PatternKind::kQuotaUnbalanced: return "quota_unbalanced";
    case PatternKind::kLatinCompleteBalanced: return "latin_complete_balanced";
    case PatternKind::kRandomCompleteBalanced: return "random_complete_balanced";
  }
  return "latin_complete_balanced";
}

PatternKind pattern_kind_from_string(const std::string& s) {
  if (s == "block_incomplete_both") return PatternKind::kBlockIncompleteBoth;
  if (s == "block_incomplete_one") return PatternKind::kBlockIncompleteOne;
  if (s == "banded_unbalanced") return PatternKind::kBandedUnbalanced;
  if (s == "quota_unbalanced") return PatternKind::kQuotaUnbalanced;
  if (s == "latin" || s == "latin_complete_balanced") return PatternKind::kLatinCompleteBalanced;
  if (s == "random" || s == "random_complete_balanced") return PatternKind::kRandomCompleteBalanced;
  throw Error("unknown pattern kind: " + s);
}

Mask generate_pattern_mask(const Universe& universe, const PatternSpec& spec) {
  const int n = static_cast<int>(universe.concept_vocab().size());
  switch (spec.kind) {
    case PatternKind::kBlockIncompleteBoth: {
      if (spec.block < 2 || spec.block > n) throw Error("block size must be in [2, N]");
      Mask mask(static_cast<std::size_t>(n) * n, 0);
      for (int i = 0; i < spec.block; ++i)
        for (int j = 0; j < spec.block; ++j)
          if (i != j) set_cell(mask, n, i, j);
      return mask;
    }
    case PatternKind::kBlockIncompleteOne: {
      if (spec.block < 2 || spec.block > n) throw Error("block size must be in [2, N]");
      Mask mask(static_cast<std::size_t>(n) * n, 0);
      for (int i = 0; i < spec.block; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) set_cell(mask, n, i, j);
      return mask;
    }
    case PatternKind::kBandedUnbalanced:
      return banded_unbalanced_mask(n, spec.skew);
    case PatternKind::kQuotaUnbalanced:
      return quota_unbalanced_mask(n, spec.quota, spec.skew);
    case PatternKind::kLatinCompleteBalanced: {
      if (spec.quota < 1 || spec.quota > n - 1) throw Error("quota must be in [1, N - 1]");
      std::vector<int> identity(n);
      for (int i = 0; i < n; ++i) identity[i] = i;
      return circulant_mask(n, spec.quota, identity);
    }
    case PatternKind::kRandomCompleteBalanced: {
      if (spec.quota < 1 || spec.quota > n - 1) throw Error("quota must be in [1, N - 1]");
      Rng rng(spec.seed);
      std::vector<int> order(n);
      for (int i = 0; i < n; ++i) order[i] = i;
      rng.shuffle(order);
      return circulant_mask(n, spec.quota, order);
    }
  }
  throw Error("unknown pattern kind");
}

SplitResult split_from_mask(const Universe& universe, const Mask& mask,
                            const std::string& phrase) {
  const int n = static_cast<int>(universe.concept_vocab().size());
  if (mask.size() != static_cast<std::size_t>(n) * n)
    throw Error("mask dimensions do not match the universe");

  SplitResult result;
  result.mask = mask;
  for (Dataset* side : {&result.train, &result.test}) {
    side->concept_vocab = universe.concept_vocab();
    side->vis_vocab = universe.role_vocab();
    side->ling_vocab = RoleVocabulary::linguistic_binary();
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const bool masked = mask[static_cast<std::size_t>(i) * n + j] != 0;
      if (!universe.contains(i, j)) {
        if (masked) throw Error("mask marks a tuple outside the universe");
        continue;
      }
      (masked ? result.train : result.test).scenes.push_back(scene_from_tuple(universe, i, j, phrase));
    }
  }
  if (result.train.scenes.empty()) throw Error("mask produces an empty training set");
  if (result.test.scenes.empty()) throw Error("mask produces an empty testing set");
  result.achieved = skew_report(result.train, &universe, Perspective::kVisual);
  return result;
}

Dataset extract_complete_subsample(const Dataset& dataset, Perspective p) {
  const auto& roles = dataset.roles(p);
  std::unordered_set<std::string> alive(dataset.concept_vocab.concepts().begin(),
                                        dataset.concept_vocab.concepts().end());
  std::vector<Scene> scenes = dataset.scenes;

  bool changed = true;
  while (changed) {
    changed = false;
    // Support of each living concept over the surviving scenes.
    std::unordered_map<std::string, std::set<std::string>> support;
    for (const auto& scene : scenes)
      for (std::size_t k = 0; k < scene.pairs.size(); ++k)
        support[scene.pairs[k].filler].insert(scene.role_of(k, p));
    for (auto it = alive.begin(); it != alive.end();) {
      if (support[*it].size() < roles.size()) {
        it = alive.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
    if (!changed) break;
    std::vector<Scene> kept;
    for (auto& scene : scenes) {
      const bool ok = std::all_of(scene.pairs.begin(), scene.pairs.end(),
                                  [&](const RoleFillerPair& pr) { return alive.count(pr.filler) > 0; });
      if (ok) kept.push_back(std::move(scene));
    }
    scenes = std::move(kept);
  }

  Dataset out;
  out.ling_vocab = dataset.ling_vocab;
  out.vis_vocab = dataset.vis_vocab;
  std::vector<std::string> survivors;
  for (const auto& concept_id : dataset.concept_vocab.concepts())
    if (alive.count(concept_id) > 0) survivors.push_back(concept_id);
  out.concept_vocab = ConceptVocabulary(survivors);
  out.scenes = std::move(scenes);
  return out;
}

namespace {

struct PoolCell {
  int first = 0;   // concept index at positions[0]
  int second = 0;  // concept index at positions[1]
  std::size_t scene = 0;
};

struct SupportPlan {
  int observed = 0;
  int first_support = 0;
  int second_support = 0;
  std::size_t sample_size = 0;
  double deviation = 0.0;
};

// Enumerates (observed-vocabulary size, per-position support sizes) whose
// implied metrics are closest to the targets, best first.
std::vector<SupportPlan> rank_support_plans(int max_concepts, const TargetSpec& targets) {
  std::vector<SupportPlan> plans;
  for (int o = 2; o <= max_concepts; ++o) {
    const double universe_size = static_cast<double>(o) * (o - 1);
    auto k = static_cast<std::size_t>(std::llround(targets.coverage * universe_size));
    if (k < 1) continue;
    for (int b1 = 2; b1 <= o; ++b1) {
      for (int b2 = 2; b2 <= o; ++b2) {
        if (b1 + b2 < o) continue;  // some concept would be unobserved
        const int overlap = b1 + b2 - o;
        const std::size_t capacity = static_cast<std::size_t>(b1) * b2 - overlap;
        if (k > capacity) continue;
        if (k < static_cast<std::size_t>(std::max(b1, b2))) continue;
        SupportPlan plan;
        plan.observed = o;
        plan.first_support = b1;
        plan.second_support = b2;
        plan.sample_size = k;
        plan.deviation = std::abs(static_cast<double>(b1) / o - targets.cpl_r1) +
                         std::abs(static_cast<double>(b2) / o - targets.cpl_r2) +
                         std::abs(static_cast<double>(k) / universe_size - targets.coverage);
        plans.push_back(plan);
      }
    }
  }
  std::stable_sort(plans.begin(), plans.end(), [](const SupportPlan& a, const SupportPlan& b) {
    if (a.deviation != b.deviation) return a.deviation < b.deviation;
    return a.observed > b.observed;
  });
  return plans;
}

// Objective state for the subsample climb. Counts are indexed by declared
// concept index.
struct SubsampleState {
  std::vector<long long> first_count;
  std::vector<long long> second_count;
  std::size_t sample_size = 0;

  double objective(const TargetSpec& targets) const {
    long long observed = 0, first_supported = 0, second_supported = 0;
    double balance_sum = 0.0;
    for (std::size_t c = 0; c < first_count.size(); ++c) {
      const long long total = first_count[c] + second_count[c];
      if (total == 0) continue;
      ++observed;
      if (first_count[c] > 0) ++first_supported;
      if (second_count[c] > 0) ++second_supported;
      balance_sum += static_cast<double>(total) * binary_entropy(first_count[c], second_count[c]);
    }
    if (observed < 2) return 1e9;
    const double slots = 2.0 * static_cast<double>(sample_size);
    const double cpl1 = static_cast<double>(first_supported) / observed;
    const double cpl2 = static_cast<double>(second_supported) / observed;
    const double blc = balance_sum / slots;
    const double cov =
        static_cast<double>(sample_size) / (static_cast<double>(observed) * (observed - 1));
    const double coverage_penalty =
        std::max(0.0, std::abs(cov - targets.coverage) - targets.tolerance);
    return std::abs(cpl1 - targets.cpl_r1) + std::abs(cpl2 - targets.cpl_r2) +
           std::abs(blc - targets.blc) + 10.0 * coverage_penalty;
  }

  void add(const PoolCell& cell, int delta) {
    first_count[cell.first] += delta;
    second_count[cell.second] += delta;
  }
};

Dataset dataset_from_selection(const Dataset& parent, const std::vector<Scene>& pool_scenes,
                               const std::vector<std::size_t>& selected) {
  Dataset out;
  out.ling_vocab = parent.ling_vocab;
  out.vis_vocab = parent.vis_vocab;
  std::unordered_set<std::string> observed;
  for (std::size_t idx : selected)
    for (const auto& pair : pool_scenes[idx].pairs) observed.insert(pair.filler);
  std::vector<std::string> vocab;
  for (const auto& concept_id : parent.concept_vocab.concepts())
    if (observed.count(concept_id) > 0) vocab.push_back(concept_id);
  out.concept_vocab = ConceptVocabulary(vocab);
  std::vector<std::size_t> order = selected;
  std::sort(order.begin(), order.end());
  for (std::size_t idx : order) out.scenes.push_back(pool_scenes[idx]);
  return out;
}

}  // namespace

SubsampleResult subsample_to_targets(const Dataset& dataset, const TargetSpec& targets,
                                     std::uint64_t seed, int max_swaps) {
  const Dataset pool = deduplicate(dataset);
  if (pool.scenes.empty()) throw Error("cannot subsample an empty dataset");
  const auto& positions = dataset.vis_vocab.positions();
  if (positions.size() != 2) throw Error("subsampling requires binary visual roles");

  // Tuple view of the deduplicated pool.
  std::vector<PoolCell> cells(pool.scenes.size());
  std::vector<bool> observed_mask(dataset.concept_vocab.size(), false);
  for (std::size_t s = 0; s < pool.scenes.size(); ++s) {
    const Scene& scene = pool.scenes[s];
    if (scene.pairs.size() != 2) throw Error("subsampling requires binary scenes");
    cells[s].scene = s;
    for (const auto& pair : scene.pairs) {
      const int ci = dataset.concept_vocab.index_of(pair.filler);
      if (ci < 0) throw Error("scene filler outside declared vocabulary: " + pair.filler);
      (pair.visual_role == positions[0] ? cells[s].first : cells[s].second) = ci;
      observed_mask[ci] = true;
    }
  }
  std::vector<int> observed_concepts;
  for (std::size_t c = 0; c < observed_mask.size(); ++c)
    if (observed_mask[c]) observed_concepts.push_back(static_cast<int>(c));

  Rng rng(seed);
  const auto plans = rank_support_plans(static_cast<int>(observed_concepts.size()), targets);
  if (plans.empty()) throw Error("target coverage is not attainable on this dataset");

  double best_objective = 1e18;
  std::vector<std::size_t> best_selection;
  const int kPlanAttempts = 8;
  int attempts = 0;
  for (const auto& plan : plans) {
    if (attempts >= kPlanAttempts) break;
    std::vector<int> perm = observed_concepts;
    rng.shuffle(perm);
    std::vector<bool> in_first(dataset.concept_vocab.size(), false);
    std::vector<bool> in_second(dataset.concept_vocab.size(), false);
    for (int i = 0; i < plan.first_support; ++i) in_first[perm[i]] = true;
    for (int i = plan.observed - plan.second_support; i < plan.observed; ++i)
      in_second[perm[i]] = true;

    std::vector<std::size_t> avail;
    for (std::size_t idx = 0; idx < cells.size(); ++idx)
      if (in_first[cells[idx].first] && in_second[cells[idx].second]) avail.push_back(idx);
    if (avail.size() < plan.sample_size) continue;
    ++attempts;

    // Seed the sample: cover every supported concept in its position first,
    // then fill at random.
    rng.shuffle(avail);
    std::vector<bool> selected(cells.size(), false);
    std::vector<bool> row_covered(dataset.concept_vocab.size(), false);
    std::vector<bool> col_covered(dataset.concept_vocab.size(), false);
    std::vector<std::size_t> chosen;
    for (std::size_t idx : avail) {
      if (chosen.size() >= plan.sample_size) break;
      const bool needed = (!row_covered[cells[idx].first]) || (!col_covered[cells[idx].second]);
      if (!needed) continue;
      selected[idx] = true;
      row_covered[cells[idx].first] = true;
      col_covered[cells[idx].second] = true;
      chosen.push_back(idx);
    }
    for (std::size_t idx : avail) {
      if (chosen.size() >= plan.sample_size) break;
      if (selected[idx]) continue;
      selected[idx] = true;
      chosen.push_back(idx);
    }

    SubsampleState state;
    state.first_count.assign(dataset.concept_vocab.size(), 0);
    state.second_count.assign(dataset.concept_vocab.size(), 0);
    state.sample_size = chosen.size();
    for (std::size_t idx : chosen) state.add(cells[idx], +1);

    double current = state.objective(targets);
    std::vector<std::size_t> inside = chosen;
    std::vector<std::size_t> outside;
    for (std::size_t idx : avail)
      if (!selected[idx]) outside.push_back(idx);

    // First-improvement swap climb in seeded-shuffled order.
    int swaps = 0;
    long long evaluations = 0;
    const long long kMaxEvaluations = 4000000;
    bool improved = true;
    while (improved && swaps < max_swaps && evaluations < kMaxEvaluations) {
      improved = false;
      rng.shuffle(inside);
      rng.shuffle(outside);
      for (std::size_t a = 0; a < inside.size() && !improved; ++a) {
        for (std::size_t b = 0; b < outside.size() && !improved; ++b) {
          state.add(cells[inside[a]], -1);
          state.add(cells[outside[b]], +1);
          ++evaluations;
          const double candidate = state.objective(targets);
          if (candidate < current - 1e-12) {
            std::swap(inside[a], outside[b]);
            current = candidate;
            ++swaps;
            improved = true;
          } else {
            state.add(cells[outside[b]], -1);
            state.add(cells[inside[a]], +1);
          }
        }
      }
    }

    if (current < best_objective) {
      best_objective = current;
      best_selection = inside;
    }
    if (current < 1e-9) break;
  }
  if (best_selection.empty()) throw Error("target coverage is not attainable on this dataset");

  SubsampleResult result;
  result.data = dataset_from_selection(dataset, pool.scenes, best_selection);
  const Universe observed_universe(result.data.concept_vocab, result.data.vis_vocab, false);
  result.achieved = skew_report(result.data, &observed_universe, Perspective::kVisual);
  const double cov = result.achieved.coverage;
  result.within_tolerance =
      std::abs(result.achieved.completeness_per_position.at(positions[0]) - targets.cpl_r1) <=
          targets.tolerance &&
      std::abs(result.achieved.completeness_per_position.at(positions[1]) - targets.cpl_r2) <=
          targets.tolerance &&
      std::abs(result.achieved.balance - targets.blc) <= targets.tolerance &&
      std::abs(cov - targets.coverage) <= targets.tolerance;
  return result;
}

namespace {

struct PhraseState {
  std::vector<long long> subject_count;
  std::vector<long long> object_count;
  std::size_t scenes = 0;

  double objective(const TargetSpec& targets) const {
    long long subj_supported = 0, obj_supported = 0;
    double balance_sum = 0.0;
    const auto n = static_cast<long long>(subject_count.size());
    for (std::size_t c = 0; c < subject_count.size(); ++c) {
      if (subject_count[c] > 0) ++subj_supported;
      if (object_count[c] > 0) ++obj_supported;
      balance_sum += static_cast<double>(subject_count[c] + object_count[c]) *
                     binary_entropy(subject_count[c], object_count[c]);
    }
    const double slots = 2.0 * static_cast<double>(scenes);
    const double cpl1 = static_cast<double>(subj_supported) / static_cast<double>(n);
    const double cpl2 = static_cast<double>(obj_supported) / static_cast<double>(n);
    const double blc = balance_sum / slots;
    return std::abs(cpl1 - targets.cpl_r1) + std::abs(cpl2 - targets.cpl_r2) +
           std::abs(blc - targets.blc);
  }
};

}  // namespace

PhrasingResult assign_phrasings(const Dataset& train, const RelationLexicon& lexicon,
                                const TargetSpec& targets, std::uint64_t seed, int max_flips) {
  if (train.scenes.empty()) throw Error("cannot phrase an empty dataset");
  const std::size_t n = train.concept_vocab.size();

  // Current subject/object concept per scene; a flip swaps them and replaces
  // the phrase with its symmetric partner.
  struct SceneView {
    int subject = 0;
    int object = 0;
    bool flipped = false;
  };
  std::vector<SceneView> views(train.scenes.size());
  for (std::size_t s = 0; s < train.scenes.size(); ++s) {
    const Scene& scene = train.scenes[s];
    if (scene.pairs.size() != 2) throw Error("phrasing requires binary scenes");
    lexicon.symmetric_partner(scene.relation_phrase);  // validates the phrase
    for (const auto& pair : scene.pairs) {
      const int ci = train.concept_vocab.index_of(pair.filler);
      if (ci < 0) throw Error("scene filler outside declared vocabulary: " + pair.filler);
      (pair.linguistic_role == "subject" ? views[s].subject : views[s].object) = ci;
    }
  }

  Rng rng(seed);
  // Orientation seeding: prefer subjects drawn from a concept subset of the
  // target completeness size. Heavily-occurring concepts go first — scenes
  // pairing two of them force both to surface as subjects eventually, so a
  // small subject pool is only reachable when it absorbs the heavy hitters.
  std::vector<long long> occurrences(n, 0);
  for (const auto& view : views) {
    ++occurrences[view.subject];
    ++occurrences[view.object];
  }
  std::vector<int> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
  rng.shuffle(perm);
  std::stable_sort(perm.begin(), perm.end(),
                   [&occurrences](int a, int b) { return occurrences[a] > occurrences[b]; });
  const auto subject_pool =
      static_cast<std::size_t>(std::clamp<long long>(
          std::llround(targets.cpl_r1 * static_cast<double>(n)), 1, static_cast<long long>(n)));
  std::vector<bool> preferred(n, false);
  for (std::size_t i = 0; i < subject_pool; ++i) preferred[perm[i]] = true;

  PhraseState state;
  state.subject_count.assign(n, 0);
  state.object_count.assign(n, 0);
  state.scenes = views.size();
  for (auto& view : views) {
    const bool subj_ok = preferred[view.subject];
    const bool obj_ok = preferred[view.object];
    if (obj_ok && !subj_ok) {
      std::swap(view.subject, view.object);
      view.flipped = true;
    } else if (subj_ok == obj_ok && rng.below(2) == 1) {
      std::swap(view.subject, view.object);
      view.flipped = true;
    }
    ++state.subject_count[view.subject];
    ++state.object_count[view.object];
  }

  double current = state.objective(targets);
  std::vector<std::size_t> order(views.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

  int flips = 0;
  bool improved = true;
  while (improved && flips < max_flips) {
    improved = false;
    rng.shuffle(order);
    for (std::size_t idx : order) {
      auto& view = views[idx];
      --state.subject_count[view.subject];
      --state.object_count[view.object];
      ++state.subject_count[view.object];
      ++state.object_count[view.subject];
      const double candidate = state.objective(targets);
      if (candidate < current - 1e-12) {
        std::swap(view.subject, view.object);
        view.flipped = !view.flipped;
        current = candidate;
        ++flips;
        improved = true;
        break;
      }
      --state.subject_count[view.object];
      --state.object_count[view.subject];
      ++state.subject_count[view.subject];
      ++state.object_count[view.object];
    }
  }

  PhrasingResult result;
  result.data = train;
  for (std::size_t s = 0; s < views.size(); ++s) {
    if (!views[s].flipped) continue;
    Scene& scene = result.data.scenes[s];
    scene.relation_phrase = lexicon.symmetric_partner(scene.relation_phrase).phrase;
    for (auto& pair : scene.pairs)
      pair.linguistic_role = pair.linguistic_role == "subject" ? "object" : "subject";
  }
  result.achieved = skew_report(result.data, nullptr, Perspective::kLinguistic);
  const auto& subject_cpl = result.achieved.completeness_per_position.at("subject");
  const auto& object_cpl = result.achieved.completeness_per_position.at("object");
  result.within_tolerance = std::abs(subject_cpl - targets.cpl_r1) <= targets.tolerance &&
                            std::abs(object_cpl - targets.cpl_r2) <= targets.tolerance &&
                            std::abs(result.achieved.balance - targets.blc) <= targets.tolerance;
  return result;
}

}  // namespace skewlens
