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

#ifndef SKEWLENS_SYNTHGEN_HPP
#define SKEWLENS_SYNTHGEN_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "skewlens/core.hpp"
#include "skewlens/image.hpp"
#include "skewlens/sampler.hpp"

namespace skewlens {

enum class AtlasProvenance { kAtlasFile, kProcedural };
enum class Layout { kVertical, kHorizontal };

std::string to_string(Layout layout);
Layout layout_from_string(const std::string& s);

// Visual role names of a layout's first (top/left) and second cell.
std::pair<std::string, std::string> layout_roles(Layout layout);

/// Concept-indexed fixed-size glyph bitmaps.
class GlyphAtlas {
 public:
  GlyphAtlas() = default;
  GlyphAtlas(std::vector<std::string> names, std::vector<GrayImage> glyphs,
             AtlasProvenance provenance);

  int cell_size() const { return glyphs_.empty() ? 0 : glyphs_.front().width; }
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const GrayImage& glyph(const std::string& concept_id) const;
  const GrayImage& glyph(std::size_t index) const { return glyphs_[index]; }
  AtlasProvenance provenance() const { return provenance_; }
  std::string digest() const;

 private:
  std::vector<std::string> names_;
  std::vector<GrayImage> glyphs_;
  std::unordered_map<std::string, std::size_t> index_;
  AtlasProvenance provenance_ = AtlasProvenance::kProcedural;
};

// Max pairwise similarity before two glyphs count as duplicates.
inline constexpr double kGlyphDistinctnessNcc = 0.95;

// Sprite grid + JSON manifest {"cell_size": int, "names": [...]} (row-major).
GlyphAtlas load_glyph_atlas(const std::string& sprite_path, const std::string& manifest_path);

// Deterministic high-contrast glyphs: seeded 8x8 binary patterns upscaled to
// cell_size. Names default to icon000, icon001, ...
GlyphAtlas procedural_glyphs(int n, std::uint64_t seed, int cell_size = 32);
GlyphAtlas procedural_glyphs(const std::vector<std::string>& names, std::uint64_t seed,
                             int cell_size = 32);

struct RenderedScene {
  GrayImage image;
  Scene scene;
  Layout layout = Layout::kVertical;
};

// First-cell glyph is the top/left-role filler; white background.
RenderedScene render_scene(const Scene& scene, const GlyphAtlas& atlas, Layout layout);

struct EmitManifest {
  std::string out_dir;
  std::string train_manifest;  // JSONL, one {"image", "caption", ...record} per scene
  std::string test_manifest;
  std::size_t train_images = 0;
  std::size_t test_images = 0;
  std::string atlas_digest;
};

// Renders both sides of the split into <out>/train and <out>/test, writes the
// per-side manifests and a top-level manifest.json recording seed, atlas
// digest and the train split's visual metrics.
EmitManifest emit_dataset(const SplitResult& split, const GlyphAtlas& atlas, Layout layout,
                          const std::string& out_dir, std::uint64_t seed = 0);

}  // namespace skewlens

#endif  // SKEWLENS_SYNTHGEN_HPP
