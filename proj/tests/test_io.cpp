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

#include <nlohmann/json.hpp>

#include "helpers.hpp"
#include "skewlens/image.hpp"
#include "skewlens/io.hpp"
#include "skewlens/metrics.hpp"
#include "skewlens/svg.hpp"

using namespace skewlens;
namespace fs = std::filesystem;
using skewlens::testing::stacked_dataset;

namespace {

fs::path temp_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("skewlens_io_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("scene json carries caption, roles and visual map") {
  const auto d = stacked_dataset({"book", "cup"}, {{"book", "cup"}});
  const auto record = scene_to_json(d.scenes[0]);
  CHECK(record.at("caption") == "a book is on top of a cup");
  CHECK(record.at("subject") == "book");
  CHECK(record.at("object") == "cup");
  CHECK(record.at("relation") == "on top of");
  CHECK(record.at("visual").at("book") == "top");
  const Scene back = scene_from_json(record);
  CHECK(visual_tuple_key(back, d.vis_vocab) == visual_tuple_key(d.scenes[0], d.vis_vocab));
}

TEST_CASE("dataset jsonl round-trips scenes, vocab and role order") {
  const auto d = stacked_dataset({"book", "cup", "phone"},
                                 {{"book", "cup"}, {"cup", "phone"}, {"phone", "book"}});
  const fs::path dir = temp_dir("jsonl");
  const std::string path = (dir / "data.jsonl").string();
  write_dataset_jsonl(path, d);
  const Dataset back = read_dataset_jsonl(path, RelationLexicon::default_lexicon());
  REQUIRE(back.scenes.size() == d.scenes.size());
  CHECK(back.concept_vocab.concepts() == d.concept_vocab.concepts());
  CHECK(back.vis_vocab.positions() == d.vis_vocab.positions());
  for (std::size_t i = 0; i < d.scenes.size(); ++i)
    CHECK(visual_tuple_key(back.scenes[i], back.vis_vocab) ==
          visual_tuple_key(d.scenes[i], d.vis_vocab));
}

TEST_CASE("manifest vocabulary overrides the observed union") {
  const auto d = stacked_dataset({"book", "cup"}, {{"book", "cup"}});
  const fs::path dir = temp_dir("manifest");
  write_dataset_jsonl((dir / "data.jsonl").string(), d);
  auto widened = stacked_dataset({"book", "cup", "phone"}, {});
  write_vocab_manifest((dir / "vocab.json").string(), widened);
  const auto [concepts, roles] = read_vocab_manifest((dir / "vocab.json").string());
  CHECK(concepts.size() == 3);
  CHECK(roles.positions() == std::vector<std::string>{"top", "bottom"});
  const Dataset back =
      read_dataset_jsonl((dir / "data.jsonl").string(), RelationLexicon::default_lexicon(),
                         &concepts);
  CHECK(back.concept_vocab.size() == 3);
}

TEST_CASE("lexicon file round-trips") {
  const fs::path dir = temp_dir("lexicon");
  const auto lexicon = RelationLexicon::default_lexicon();
  write_lexicon((dir / "lexicon.json").string(), lexicon);
  const RelationLexicon back = read_lexicon((dir / "lexicon.json").string());
  REQUIRE(back.entries().size() == lexicon.entries().size());
  CHECK(back.symmetric_partner("on top of").phrase == "at the bottom of");
}

TEST_CASE("raw records keep malformed lines as skippable placeholders") {
  const fs::path dir = temp_dir("raw");
  write_text_file((dir / "raw.jsonl").string(),
                  "{\"caption\": \"a cup is on top of a bowl\", \"image_id\": \"i1\"}\n"
                  "not json at all\n");
  const auto records = read_raw_records((dir / "raw.jsonl").string());
  REQUIRE(records.size() == 2);
  CHECK(records[0].caption == "a cup is on top of a bowl");
  CHECK(records[1].caption.empty());
}

TEST_CASE("csv row formats integer percentages in role order") {
  const auto d = stacked_dataset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  const Universe universe(d.concept_vocab, d.vis_vocab, false);
  const SkewReport report = skew_report(d, &universe, Perspective::kVisual);
  CHECK(skew_report_csv_header(d, Perspective::kVisual) == "CPL(top),CPL(bottom),BLC,Cov");
  CHECK(skew_report_csv_row(report, d.vis_vocab.positions()) == "67,67,33,50");
  const SkewReport no_universe = skew_report(d, nullptr, Perspective::kVisual);
  CHECK(skew_report_csv_row(no_universe, d.vis_vocab.positions()) == "67,67,33,-");
}

TEST_CASE("skew report json keeps full precision and optional coverage") {
  const auto d = stacked_dataset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  const auto report_json = skew_report_to_json(skew_report(d, nullptr, Perspective::kVisual));
  CHECK(report_json.at("completeness").get<double>() == doctest::Approx(2.0 / 3));
  CHECK_FALSE(report_json.contains("coverage"));
}

TEST_CASE("png io round-trips gray images") {
  GrayImage image(17, 9, 200);
  image.at(3, 2) = 0;
  image.at(16, 8) = 50;
  const fs::path dir = temp_dir("png");
  write_png((dir / "img.png").string(), image);
  const GrayImage back = read_png((dir / "img.png").string());
  CHECK(back.width == 17);
  CHECK(back.height == 9);
  CHECK(back.pixels == image.pixels);
  CHECK(image_digest(back) == image_digest(image));
}

TEST_CASE("ncc and crop behave on simple fixtures") {
  GrayImage a(4, 4, 255);
  a.at(0, 0) = 0;
  GrayImage b = a;
  CHECK(normalized_cross_correlation(a, b) == doctest::Approx(1.0));
  GrayImage flat(4, 4, 128);
  CHECK(normalized_cross_correlation(a, flat) == 0.0);
  const GrayImage sub = crop(a, 0, 0, 2, 2);
  CHECK(sub.width == 2);
  CHECK(sub.at(0, 0) == 0);
  CHECK(sub.at(1, 1) == 255);
}

TEST_CASE("pmd svg renders one panel per role") {
  const auto d = stacked_dataset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  const std::string svg = pmd_svg(pmd(d, Perspective::kVisual), "test plot");
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("macro") != std::string::npos);
  CHECK(svg.find("top") != std::string::npos);
  CHECK(svg.find("bottom") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("parse report json reconciles counts") {
  ParseReport report;
  report.total = 5;
  report.parsed = 3;
  report.skipped = 2;
  report.skip_reasons["no spatial phrase"] = 2;
  const auto j = parse_report_to_json(report);
  CHECK(j.at("total") == 5);
  CHECK(j.at("parsed").get<long long>() + j.at("skipped").get<long long>() ==
        j.at("total").get<long long>());
}
