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

#include "skewlens/core.hpp"

#include <algorithm>
#include <unordered_set>

namespace skewlens {

std::string to_string(Perspective p) {
  return p == Perspective::kVisual ? "visual" : "linguistic";
}

Perspective perspective_from_string(const std::string& s) {
  if (s == "visual") return Perspective::kVisual;
  if (s == "linguistic") return Perspective::kLinguistic;
  throw Error("unknown perspective: " + s);
}

ConceptVocabulary::ConceptVocabulary(std::vector<std::string> concepts)
    : concepts_(std::move(concepts)) {
  for (std::size_t i = 0; i < concepts_.size(); ++i) {
    if (!index_.emplace(concepts_[i], static_cast<int>(i)).second)
      throw Error("duplicate concept: " + concepts_[i]);
  }
}

int ConceptVocabulary::index_of(const std::string& concept_id) const {
  auto it = index_.find(concept_id);
  return it == index_.end() ? -1 : it->second;
}

RoleVocabulary::RoleVocabulary(Perspective perspective, std::vector<std::string> positions)
    : perspective_(perspective), positions_(std::move(positions)) {
  if (positions_.size() < 2) throw Error("role vocabulary needs at least 2 positions");
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    if (!index_.emplace(positions_[i], static_cast<int>(i)).second)
      throw Error("duplicate role: " + positions_[i]);
  }
}

RoleVocabulary RoleVocabulary::linguistic_binary() {
  return RoleVocabulary(Perspective::kLinguistic, {"subject", "object"});
}

int RoleVocabulary::index_of(const std::string& role) const {
  auto it = index_.find(role);
  return it == index_.end() ? -1 : it->second;
}

void validate_scene(const Scene& scene, const ConceptVocabulary& concepts,
                    const RoleVocabulary& ling, const RoleVocabulary& vis) {
  std::unordered_set<std::string> seen_ling, seen_vis;
  for (const auto& pair : scene.pairs) {
    if (!concepts.contains(pair.filler)) throw Error("unknown concept: " + pair.filler);
    if (!ling.contains(pair.linguistic_role))
      throw Error("unknown linguistic role: " + pair.linguistic_role);
    if (!vis.contains(pair.visual_role))
      throw Error("unknown visual role: " + pair.visual_role);
    if (!seen_ling.insert(pair.linguistic_role).second)
      throw Error("duplicate linguistic role in scene: " + pair.linguistic_role);
    if (!seen_vis.insert(pair.visual_role).second)
      throw Error("duplicate visual role in scene: " + pair.visual_role);
  }
}

void Dataset::validate() const {
  for (const auto& scene : scenes) validate_scene(scene, concept_vocab, ling_vocab, vis_vocab);
}

Universe::Universe(ConceptVocabulary concepts, RoleVocabulary roles, bool allow_repeat)
    : concepts_(std::move(concepts)), roles_(std::move(roles)), allow_repeat_(allow_repeat) {
  if (roles_.size() != 2) throw Error("only binary relations (M = 2) are supported");
  if (concepts_.size() < 2) throw Error("universe needs at least 2 concepts");
}

std::size_t Universe::size() const {
  const std::size_t n = concepts_.size();
  return allow_repeat_ ? n * n : n * (n - 1);
}

std::vector<std::pair<int, int>> Universe::tuples() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(size());
  const int n = static_cast<int>(concepts_.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (allow_repeat_ || i != j) out.emplace_back(i, j);
  return out;
}

bool Universe::contains(int first, int second) const {
  const int n = static_cast<int>(concepts_.size());
  if (first < 0 || second < 0 || first >= n || second >= n) return false;
  return allow_repeat_ || first != second;
}

Universe make_universe(const ConceptVocabulary& concepts, const RoleVocabulary& roles,
                       bool allow_repeat) {
  return Universe(concepts, roles, allow_repeat);
}

Scene bind(const std::vector<std::string>& fillers, const std::vector<std::string>& roles,
           const ConceptVocabulary& concepts, const RoleVocabulary& role_vocab,
           const std::string& phrase) {
  if (fillers.size() != roles.size())
    throw Error("bind: filler/role length mismatch (" + std::to_string(fillers.size()) + " vs " +
                std::to_string(roles.size()) + ")");
  std::unordered_set<std::string> seen;
  for (const auto& role : roles) {
    if (!role_vocab.contains(role)) throw Error("bind: unknown role: " + role);
    if (!seen.insert(role).second) throw Error("bind: duplicate role: " + role);
  }
  for (const auto& filler : fillers)
    if (!concepts.contains(filler)) throw Error("bind: unknown concept: " + filler);

  const auto ling = RoleVocabulary::linguistic_binary();
  Scene scene;
  scene.relation_phrase = phrase;
  for (std::size_t k = 0; k < fillers.size(); ++k) {
    RoleFillerPair pair;
    pair.filler = fillers[k];
    if (role_vocab.perspective() == Perspective::kVisual) {
      pair.visual_role = roles[k];
      pair.linguistic_role = k < ling.size() ? ling.positions()[k] : "";
    } else {
      pair.linguistic_role = roles[k];
      pair.visual_role = "";
    }
    scene.pairs.push_back(std::move(pair));
  }
  return scene;
}

std::optional<std::string> unbind(const Scene& scene, const std::string& filler, Perspective p) {
  for (std::size_t k = 0; k < scene.pairs.size(); ++k)
    if (scene.pairs[k].filler == filler) return scene.role_of(k, p);
  return std::nullopt;
}

std::set<std::string> unbind_dataset(const Dataset& dataset, const std::string& concept_id,
                                     Perspective p) {
  if (!dataset.concept_vocab.contains(concept_id)) throw Error("unknown concept: " + concept_id);
  std::set<std::string> roles;
  for (const auto& scene : dataset.scenes)
    if (auto role = unbind(scene, concept_id, p)) roles.insert(*role);
  return roles;
}

std::string visual_tuple_key(const Scene& scene, const RoleVocabulary& vis_vocab) {
  // Pairs keyed in role-vocabulary order so caption phrasing does not matter.
  std::string key;
  for (const auto& position : vis_vocab.positions()) {
    key += position;
    key += '=';
    for (const auto& pair : scene.pairs)
      if (pair.visual_role == position) key += pair.filler;
    key += ';';
  }
  return key;
}

Dataset deduplicate(const Dataset& dataset) {
  Dataset out = dataset;
  out.scenes.clear();
  std::unordered_set<std::string> seen;
  for (const auto& scene : dataset.scenes)
    if (seen.insert(visual_tuple_key(scene, dataset.vis_vocab)).second) out.scenes.push_back(scene);
  return out;
}

Scene scene_from_tuple(const Universe& universe, int first, int second,
                       const std::string& phrase) {
  if (!universe.contains(first, second))
    throw Error("tuple (" + std::to_string(first) + ", " + std::to_string(second) +
                ") outside universe");
  const auto& concepts = universe.concept_vocab().concepts();
  const auto& positions = universe.role_vocab().positions();
  return bind({concepts[first], concepts[second]}, {positions[0], positions[1]},
              universe.concept_vocab(), universe.role_vocab(), phrase);
}

}  // namespace skewlens
