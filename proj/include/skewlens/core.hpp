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

#ifndef SKEWLENS_CORE_HPP
#define SKEWLENS_CORE_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace skewlens {

/// Raised on violated preconditions or malformed inputs.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

enum class Perspective { kLinguistic, kVisual };

std::string to_string(Perspective p);
Perspective perspective_from_string(const std::string& s);

/// Ordered set of unique concept identifiers.
class ConceptVocabulary {
 public:
  ConceptVocabulary() = default;
  explicit ConceptVocabulary(std::vector<std::string> concepts);

  const std::vector<std::string>& concepts() const { return concepts_; }
  std::size_t size() const { return concepts_.size(); }
  // -1 if absent.
  int index_of(const std::string& concept_id) const;
  bool contains(const std::string& concept_id) const { return index_of(concept_id) >= 0; }

 private:
  std::vector<std::string> concepts_;
  std::unordered_map<std::string, int> index_;
};

/// Ordered set of unique role identifiers under one perspective.
class RoleVocabulary {
 public:
  RoleVocabulary() = default;
  RoleVocabulary(Perspective perspective, std::vector<std::string> positions);

  static RoleVocabulary linguistic_binary();  // {subject, object}

  Perspective perspective() const { return perspective_; }
  const std::vector<std::string>& positions() const { return positions_; }
  std::size_t size() const { return positions_.size(); }
  int index_of(const std::string& role) const;
  bool contains(const std::string& role) const { return index_of(role) >= 0; }

 private:
  Perspective perspective_ = Perspective::kVisual;
  std::vector<std::string> positions_;
  std::unordered_map<std::string, int> index_;
};

struct RoleFillerPair {
  std::string filler;
  std::string linguistic_role;
  std::string visual_role;
};

/// One image's role-filler bindings under both role vocabularies.
struct Scene {
  std::vector<RoleFillerPair> pairs;
  std::string relation_phrase;
  std::string source_id;

  std::size_t arity() const { return pairs.size(); }
  const std::string& role_of(std::size_t k, Perspective p) const {
    return p == Perspective::kVisual ? pairs[k].visual_role : pairs[k].linguistic_role;
  }
};

// Scene validity: distinct roles per perspective, fillers in vocabulary.
void validate_scene(const Scene& scene, const ConceptVocabulary& concepts,
                    const RoleVocabulary& ling, const RoleVocabulary& vis);

/// Ordered multiset of scenes with declared vocabularies.
struct Dataset {
  std::vector<Scene> scenes;
  ConceptVocabulary concept_vocab;
  RoleVocabulary ling_vocab;
  RoleVocabulary vis_vocab;

  const RoleVocabulary& roles(Perspective p) const {
    return p == Perspective::kVisual ? vis_vocab : ling_vocab;
  }
  std::size_t size() const { return scenes.size(); }
  void validate() const;
};

/// All ordered concept assignments to the positions of a binary role vocabulary.
class Universe {
 public:
  Universe() = default;
  Universe(ConceptVocabulary concepts, RoleVocabulary roles, bool allow_repeat);

  const ConceptVocabulary& concept_vocab() const { return concepts_; }
  const RoleVocabulary& role_vocab() const { return roles_; }
  bool allow_repeat() const { return allow_repeat_; }

  std::size_t size() const;
  // Enumerates (first-position concept index, second-position concept index)
  // in row-major order.
  std::vector<std::pair<int, int>> tuples() const;
  bool contains(int first, int second) const;

 private:
  ConceptVocabulary concepts_;
  RoleVocabulary roles_;
  bool allow_repeat_ = false;
};

Universe make_universe(const ConceptVocabulary& concepts, const RoleVocabulary& roles,
                       bool allow_repeat);

// Binds fillers to the given visual roles; linguistic roles default to
// caption order (first filler = subject).
Scene bind(const std::vector<std::string>& fillers, const std::vector<std::string>& roles,
           const ConceptVocabulary& concepts, const RoleVocabulary& role_vocab,
           const std::string& phrase = "");

// Role the filler is bound to under the chosen perspective; nullopt if the
// filler does not occur in the scene.
std::optional<std::string> unbind(const Scene& scene, const std::string& filler, Perspective p);

// Union of unbind over all scenes, null results excluded.
std::set<std::string> unbind_dataset(const Dataset& dataset, const std::string& concept_id,
                                     Perspective p);

// Visual scene tuple (f_1, r_1, f_2, r_2) in role-vocabulary order; used as
// the deduplication key.
std::string visual_tuple_key(const Scene& scene, const RoleVocabulary& vis_vocab);

// Keeps the first occurrence of each visual tuple, order preserved.
Dataset deduplicate(const Dataset& dataset);

// Scene for a universe cell: concept `first` fills positions[0], `second`
// fills positions[1]; linguistic roles follow position order.
Scene scene_from_tuple(const Universe& universe, int first, int second,
                       const std::string& phrase = "");

}  // namespace skewlens

#endif  // SKEWLENS_CORE_HPP
