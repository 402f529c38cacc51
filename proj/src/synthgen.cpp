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

#include "skewlens/synthgen.hpp"

#include <bit>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include <nlohmann/json.hpp>

#include "skewlens/io.hpp"
#include "skewlens/metrics.hpp"

namespace skewlens {

using nlohmann::json;
namespace fs = std::filesystem;

std::string to_string(Layout layout) {
  return layout == Layout::kVertical ? "vertical" : "horizontal";
}

Layout layout_from_string(const std::string& s) {
  if (s == "vertical") return Layout::kVertical;
  if (s == "horizontal") return Layout::kHorizontal;
  throw Error("unknown layout: " + s);
}

std::pair<std::string, std::string> layout_roles(Layout layout) {
  return layout == Layout::kVertical ? std::pair<std::string, std::string>{"top", "bottom"}
                                     : std::pair<std::string, std::string>{"left", "right"};
}

GlyphAtlas::GlyphAtlas(std::vector<std::string> names, std::vector<GrayImage> glyphs,
                       AtlasProvenance provenance)
    : names_(std::move(names)), glyphs_(std::move(glyphs)), provenance_(provenance) {
  if (names_.size() != glyphs_.size()) throw Error("atlas name/glyph count mismatch");
  if (names_.size() < 2) throw Error("atlas needs at least 2 glyphs");
  const int cell = glyphs_.front().width;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (glyphs_[i].width != cell || glyphs_[i].height != cell)
      throw Error("glyph '" + names_[i] + "' is not " + std::to_string(cell) + "x" +
                  std::to_string(cell));
    if (!index_.emplace(names_[i], i).second) throw Error("duplicate concept: " + names_[i]);
  }
  for (std::size_t i = 0; i < glyphs_.size(); ++i) {
    for (std::size_t j = i + 1; j < glyphs_.size(); ++j) {
      if (normalized_cross_correlation(glyphs_[i], glyphs_[j]) >= kGlyphDistinctnessNcc)
        throw Error("glyphs '" + names_[i] + "' and '" + names_[j] + "' are nearly identical");
    }
  }
}

const GrayImage& GlyphAtlas::glyph(const std::string& concept_id) const {
  auto it = index_.find(concept_id);
  if (it == index_.end()) throw Error("no glyph for concept: " + concept_id);
  return glyphs_[it->second];
}

std::string GlyphAtlas::digest() const {
  std::uint64_t hash = 1469598103934665603ull;
  auto mix = [&hash](std::uint64_t value) {
    hash ^= value;
    hash *= 1099511628211ull;
  };
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (char c : names_[i]) mix(static_cast<std::uint8_t>(c));
    for (std::uint8_t p : glyphs_[i].pixels) mix(p);
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

GlyphAtlas load_glyph_atlas(const std::string& sprite_path, const std::string& manifest_path) {
  const json manifest = json::parse(read_text_file(manifest_path));
  const int cell = manifest.value("cell_size", 32);
  const auto names = manifest.at("names").get<std::vector<std::string>>();
  const GrayImage sprite = read_png(sprite_path);
  if (cell <= 0 || sprite.width % cell != 0 || sprite.height % cell != 0)
    throw Error("sprite dimensions are not a multiple of the cell size");
  const int columns = sprite.width / cell;
  const int rows = sprite.height / cell;
  if (names.size() > static_cast<std::size_t>(columns) * rows)
    throw Error("manifest names more cells than the sprite contains");
  std::vector<GrayImage> glyphs;
  for (std::size_t i = 0; i < names.size(); ++i) {
    const int row = static_cast<int>(i) / columns;
    const int col = static_cast<int>(i) % columns;
    glyphs.push_back(crop(sprite, col * cell, row * cell, cell, cell));
  }
  return GlyphAtlas(names, std::move(glyphs), AtlasProvenance::kAtlasFile);
}

namespace {

// 8x8 binary pattern scaled to the cell size; dark pixels on white.
GrayImage pattern_glyph(std::uint64_t bits, int cell_size) {
  GrayImage glyph(cell_size, cell_size, 255);
  for (int y = 0; y < cell_size; ++y) {
    for (int x = 0; x < cell_size; ++x) {
      const int py = y * 8 / cell_size;
      const int px = x * 8 / cell_size;
      if ((bits >> (py * 8 + px)) & 1ull) glyph.at(x, y) = 0;
    }
  }
  return glyph;
}

}  // namespace

GlyphAtlas procedural_glyphs(const std::vector<std::string>& names, std::uint64_t seed,
                             int cell_size) {
  if (names.size() < 2) throw Error("procedural atlas needs at least 2 glyphs");
  if (cell_size < 8) throw Error("cell size must be at least 8");
  if (names.size() > 10000) throw Error("procedural atlas bounded to 10000 glyphs");

  std::mt19937_64 rng(seed);
  std::vector<GrayImage> glyphs;
  for (std::size_t i = 0; i < names.size(); ++i) {
    const int kMaxAttempts = 10000;
    bool placed = false;
    for (int attempt = 0; attempt < kMaxAttempts && !placed; ++attempt) {
      const std::uint64_t bits = rng();
      const int dark = std::popcount(bits);
      if (dark < 20 || dark > 44) continue;  // keep contrast and variance
      GrayImage candidate = pattern_glyph(bits, cell_size);
      placed = true;
      for (const auto& existing : glyphs) {
        if (normalized_cross_correlation(candidate, existing) >= kGlyphDistinctnessNcc) {
          placed = false;
          break;
        }
      }
      if (placed) glyphs.push_back(std::move(candidate));
    }
    if (!placed) throw Error("could not generate " + std::to_string(names.size()) +
                             " mutually distinct glyphs");
  }
  return GlyphAtlas(names, std::move(glyphs), AtlasProvenance::kProcedural);
}

GlyphAtlas procedural_glyphs(int n, std::uint64_t seed, int cell_size) {
  if (n < 2) throw Error("procedural atlas needs at least 2 glyphs");
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "icon%03d", i);
    names.emplace_back(buf);
  }
  return procedural_glyphs(names, seed, cell_size);
}

RenderedScene render_scene(const Scene& scene, const GlyphAtlas& atlas, Layout layout) {
  if (scene.pairs.size() != 2) throw Error("rendering requires binary scenes");
  const auto [first_role, second_role] = layout_roles(layout);
  const std::string* first_filler = nullptr;
  const std::string* second_filler = nullptr;
  for (const auto& pair : scene.pairs) {
    if (pair.visual_role == first_role) first_filler = &pair.filler;
    if (pair.visual_role == second_role) second_filler = &pair.filler;
  }
  if (first_filler == nullptr || second_filler == nullptr)
    throw Error("scene roles do not match the " + to_string(layout) + " layout axis");

  const int cell = atlas.cell_size();
  RenderedScene rendered;
  rendered.scene = scene;
  rendered.layout = layout;
  const bool vertical = layout == Layout::kVertical;
  rendered.image = GrayImage(vertical ? cell : 2 * cell, vertical ? 2 * cell : cell, 255);
  const GrayImage& first = atlas.glyph(*first_filler);
  const GrayImage& second = atlas.glyph(*second_filler);
  for (int y = 0; y < cell; ++y) {
    for (int x = 0; x < cell; ++x) {
      rendered.image.at(x, y) = first.at(x, y);
      if (vertical)
        rendered.image.at(x, y + cell) = second.at(x, y);
      else
        rendered.image.at(x + cell, y) = second.at(x, y);
    }
  }
  return rendered;
}

namespace {

std::size_t emit_side(const Dataset& side, const GlyphAtlas& atlas, Layout layout,
                      const fs::path& image_dir, const fs::path& manifest_path,
                      const fs::path& base_dir) {
  fs::create_directories(image_dir);
  std::ofstream manifest(manifest_path);
  if (!manifest) throw Error("cannot open for writing: " + manifest_path.string());
  std::size_t count = 0;
  for (const auto& scene : side.scenes) {
    char name[32];
    std::snprintf(name, sizeof(name), "%06zu.png", count);
    const fs::path image_path = image_dir / name;
    write_png(image_path.string(), render_scene(scene, atlas, layout).image);
    json record = scene_to_json(scene);
    record["image"] = fs::relative(image_path, base_dir).generic_string();
    manifest << record.dump() << '\n';
    ++count;
  }
  return count;
}

}  // namespace

EmitManifest emit_dataset(const SplitResult& split, const GlyphAtlas& atlas, Layout layout,
                          const std::string& out_dir, std::uint64_t seed) {
  if (split.train.scenes.empty()) throw Error("cannot emit an empty training split");
  const fs::path base(out_dir);
  fs::create_directories(base);

  EmitManifest result;
  result.out_dir = out_dir;
  result.atlas_digest = atlas.digest();
  result.train_manifest = (base / "train.jsonl").string();
  result.test_manifest = (base / "test.jsonl").string();
  result.train_images =
      emit_side(split.train, atlas, layout, base / "train", result.train_manifest, base);
  result.test_images =
      emit_side(split.test, atlas, layout, base / "test", result.test_manifest, base);

  json manifest = {
      {"seed", seed},
      {"layout", to_string(layout)},
      {"atlas_digest", result.atlas_digest},
      {"train_images", result.train_images},
      {"test_images", result.test_images},
      {"train_metrics", skew_report_to_json(split.achieved)},
  };
  write_text_file((base / "manifest.json").string(), manifest.dump(2) + "\n");
  return result;
}

}  // namespace skewlens
