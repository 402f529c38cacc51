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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "helpers.hpp"
#include "skewlens/io.hpp"
#include "skewlens/parser.hpp"
#include "skewlens/sampler.hpp"
#include "skewlens/synthgen.hpp"

using namespace skewlens;
namespace fs = std::filesystem;
using skewlens::testing::top_bottom;

namespace {

fs::path temp_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("skewlens_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

SplitResult small_split(int n, int quota, const std::string& phrase = "on top of") {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "icon%03d", i);
    names.emplace_back(buf);
  }
  RoleVocabulary roles = phrase == "on top of"
                             ? top_bottom()
                             : RoleVocabulary(Perspective::kVisual, {"left", "right"});
  const Universe universe(ConceptVocabulary(names), roles, false);
  PatternSpec spec;
  spec.kind = PatternKind::kLatinCompleteBalanced;
  spec.quota = quota;
  return split_from_mask(universe, generate_pattern_mask(universe, spec), phrase);
}

}  // namespace

TEST_CASE("procedural glyphs are deterministic and pairwise distinct") {
  const GlyphAtlas atlas = procedural_glyphs(30, 7);
  CHECK(atlas.size() == 30);
  CHECK(atlas.cell_size() == 32);
  for (std::size_t i = 0; i < atlas.size(); ++i)
    for (std::size_t j = i + 1; j < atlas.size(); ++j)
      CHECK(normalized_cross_correlation(atlas.glyph(i), atlas.glyph(j)) <
            kGlyphDistinctnessNcc);
  CHECK(procedural_glyphs(30, 7).digest() == atlas.digest());
  CHECK(procedural_glyphs(30, 8).digest() != atlas.digest());
  CHECK_THROWS_AS(procedural_glyphs(1, 7), Error);
}

TEST_CASE("atlas rejects mismatched and near-identical glyphs") {
  GrayImage a(32, 32, 255);
  a.at(4, 4) = 0;
  GrayImage b = a;
  CHECK_THROWS_AS(GlyphAtlas({"x", "y"}, {a, b}, AtlasProvenance::kProcedural), Error);
  GrayImage small(16, 16, 255);
  CHECK_THROWS_AS(GlyphAtlas({"x", "y"}, {a, small}, AtlasProvenance::kProcedural), Error);
}

TEST_CASE("sprite atlas round-trips through a grid PNG") {
  const GlyphAtlas atlas = procedural_glyphs(6, 3);
  const int cell = atlas.cell_size();
  GrayImage sprite(cell * 3, cell * 2, 255);
  for (int i = 0; i < 6; ++i) {
    const int ox = (i % 3) * cell, oy = (i / 3) * cell;
    for (int y = 0; y < cell; ++y)
      for (int x = 0; x < cell; ++x) sprite.at(ox + x, oy + y) = atlas.glyph(i).at(x, y);
  }
  const fs::path dir = temp_dir("sprite");
  write_png((dir / "sprite.png").string(), sprite);
  write_text_file((dir / "atlas.json").string(),
                  "{\"cell_size\": 32, \"names\": [\"a\",\"b\",\"c\",\"d\",\"e\",\"f\"]}\n");
  const GlyphAtlas loaded =
      load_glyph_atlas((dir / "sprite.png").string(), (dir / "atlas.json").string());
  CHECK(loaded.size() == 6);
  CHECK(loaded.glyph("b").pixels == atlas.glyph(1).pixels);
}

TEST_CASE("render_scene places the top-role glyph in the first cell") {
  const GlyphAtlas atlas = procedural_glyphs({"a", "b"}, 5);
  ConceptVocabulary vocab({"a", "b"});
  const Scene scene = bind({"a", "b"}, {"top", "bottom"}, vocab, top_bottom(), "on top of");
  const RenderedScene rendered = render_scene(scene, atlas, Layout::kVertical);
  CHECK(rendered.image.width == 32);
  CHECK(rendered.image.height == 64);
  CHECK(crop(rendered.image, 0, 0, 32, 32).pixels == atlas.glyph("a").pixels);
  CHECK(crop(rendered.image, 0, 32, 32, 32).pixels == atlas.glyph("b").pixels);
  CHECK_THROWS_AS(render_scene(scene, atlas, Layout::kHorizontal), Error);
}

TEST_CASE("horizontal layout is 64x32 with the left glyph first") {
  const GlyphAtlas atlas = procedural_glyphs({"a", "b"}, 5);
  ConceptVocabulary vocab({"a", "b"});
  RoleVocabulary lr(Perspective::kVisual, {"left", "right"});
  const Scene scene = bind({"a", "b"}, {"left", "right"}, vocab, lr, "to the left of");
  const RenderedScene rendered = render_scene(scene, atlas, Layout::kHorizontal);
  CHECK(rendered.image.width == 64);
  CHECK(rendered.image.height == 32);
  CHECK(crop(rendered.image, 0, 0, 32, 32).pixels == atlas.glyph("a").pixels);
  CHECK(crop(rendered.image, 32, 0, 32, 32).pixels == atlas.glyph("b").pixels);
}

TEST_CASE("swapping roles mirrors the cell arrangement") {
  const GlyphAtlas atlas = procedural_glyphs({"a", "b"}, 5);
  ConceptVocabulary vocab({"a", "b"});
  const Scene fwd = bind({"a", "b"}, {"top", "bottom"}, vocab, top_bottom(), "on top of");
  const Scene rev = bind({"b", "a"}, {"top", "bottom"}, vocab, top_bottom(), "on top of");
  const GrayImage fwd_img = render_scene(fwd, atlas, Layout::kVertical).image;
  const GrayImage rev_img = render_scene(rev, atlas, Layout::kVertical).image;
  CHECK(crop(fwd_img, 0, 0, 32, 32).pixels == crop(rev_img, 0, 32, 32, 32).pixels);
  CHECK(crop(fwd_img, 0, 32, 32, 32).pixels == crop(rev_img, 0, 0, 32, 32).pixels);
}

TEST_CASE("emit_dataset writes both sides plus manifests") {
  const SplitResult split = small_split(6, 2);
  const GlyphAtlas atlas = procedural_glyphs(split.train.concept_vocab.concepts(), 1);
  const fs::path dir = temp_dir("emit");
  const EmitManifest manifest = emit_dataset(split, atlas, Layout::kVertical, dir.string(), 1);
  CHECK(manifest.train_images == split.train.scenes.size());
  CHECK(manifest.test_images == split.test.scenes.size());
  CHECK(fs::exists(dir / "train" / "000000.png"));
  CHECK(fs::exists(dir / "manifest.json"));

  // Every emitted caption re-parses to the originating scene.
  const auto lexicon = RelationLexicon::default_lexicon();
  std::ifstream in(manifest.train_manifest);
  std::string line;
  std::size_t index = 0;
  while (std::getline(in, line)) {
    const auto record = nlohmann::json::parse(line);
    const Scene parsed = parse_template_caption(record.at("caption").get<std::string>(), lexicon,
                                                split.train.concept_vocab);
    CHECK(visual_tuple_key(parsed, split.train.vis_vocab) ==
          visual_tuple_key(split.train.scenes[index], split.train.vis_vocab));
    ++index;
  }
  CHECK(index == manifest.train_images);
}

TEST_CASE("emit_dataset is byte-identical across reruns") {
  const SplitResult split = small_split(5, 2);
  const GlyphAtlas atlas = procedural_glyphs(split.train.concept_vocab.concepts(), 9);
  const fs::path dir_a = temp_dir("emit_a");
  const fs::path dir_b = temp_dir("emit_b");
  emit_dataset(split, atlas, Layout::kVertical, dir_a.string(), 9);
  emit_dataset(split, atlas, Layout::kVertical, dir_b.string(), 9);
  for (const auto& entry : fs::recursive_directory_iterator(dir_a)) {
    if (!entry.is_regular_file()) continue;
    const fs::path rel = fs::relative(entry.path(), dir_a);
    CHECK(read_text_file(entry.path().string()) == read_text_file((dir_b / rel).string()));
  }
}

TEST_CASE("empty training split cannot be emitted") {
  SplitResult split;
  const GlyphAtlas atlas = procedural_glyphs(2, 0);
  CHECK_THROWS_AS(emit_dataset(split, atlas, Layout::kVertical,
                               temp_dir("emit_empty").string(), 0),
                  Error);
}
