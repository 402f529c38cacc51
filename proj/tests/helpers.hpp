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

#ifndef SKEWLENS_TESTS_HELPERS_HPP
#define SKEWLENS_TESTS_HELPERS_HPP

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "skewlens/core.hpp"

namespace skewlens::testing {

inline RoleVocabulary top_bottom() {
  return RoleVocabulary(Perspective::kVisual, {"top", "bottom"});
}

// Vertically stacked scenes from (top filler, bottom filler) pairs; captions
// phrased top-as-subject.
inline Dataset stacked_dataset(const std::vector<std::string>& concepts,
                               const std::vector<std::pair<std::string, std::string>>& pairs) {
  Dataset dataset;
  dataset.concept_vocab = ConceptVocabulary(concepts);
  dataset.vis_vocab = top_bottom();
  dataset.ling_vocab = RoleVocabulary::linguistic_binary();
  for (const auto& [top, bottom] : pairs)
    dataset.scenes.push_back(
        bind({top, bottom}, {"top", "bottom"}, dataset.concept_vocab, dataset.vis_vocab,
             "on top of"));
  return dataset;
}

// Random binary dataset over a small vocabulary; scene orientation (which
// filler is the caption subject) randomized independently of the visual roles.
inline Dataset random_dataset(std::mt19937_64& rng, int max_concepts = 6, int max_scenes = 40) {
  const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_concepts - 1));
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("c" + std::to_string(i));

  Dataset dataset;
  dataset.concept_vocab = ConceptVocabulary(names);
  dataset.vis_vocab = top_bottom();
  dataset.ling_vocab = RoleVocabulary::linguistic_binary();
  const int scenes = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_scenes));
  for (int s = 0; s < scenes; ++s) {
    const int i = static_cast<int>(rng() % n);
    int j = static_cast<int>(rng() % (n - 1));
    if (j >= i) ++j;
    Scene scene = bind({names[i], names[j]}, {"top", "bottom"}, dataset.concept_vocab,
                       dataset.vis_vocab, "on top of");
    if (rng() % 2 == 0) {
      // Same stack described bottom-up.
      scene.relation_phrase = "at the bottom of";
      scene.pairs[0].linguistic_role = "object";
      scene.pairs[1].linguistic_role = "subject";
    }
    dataset.scenes.push_back(std::move(scene));
  }
  return dataset;
}

}  // namespace skewlens::testing

#endif  // SKEWLENS_TESTS_HELPERS_HPP
