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

#include "skewlens/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace skewlens {

using nlohmann::json;

namespace {

const RoleFillerPair& pair_with_role(const Scene& scene, const std::string& ling_role) {
  for (const auto& pair : scene.pairs)
    if (pair.linguistic_role == ling_role) return pair;
  throw Error("scene has no '" + ling_role + "' pair");
}

int percent(double ratio) { return static_cast<int>(std::lround(ratio * 100.0)); }

}  // namespace

json scene_to_json(const Scene& scene) {
  const auto& subject = pair_with_role(scene, "subject");
  const auto& object = pair_with_role(scene, "object");
  json visual = json::object();
  for (const auto& pair : scene.pairs) visual[pair.filler] = pair.visual_role;
  json record = {
      {"caption", render_caption(scene)}, {"subject", subject.filler},
      {"object", object.filler},          {"relation", scene.relation_phrase},
      {"visual", visual},
  };
  if (!scene.source_id.empty()) record["source_id"] = scene.source_id;
  return record;
}

Scene scene_from_json(const json& record) {
  Scene scene;
  scene.relation_phrase = record.at("relation").get<std::string>();
  scene.source_id = record.value("source_id", "");
  const auto subject = record.at("subject").get<std::string>();
  const auto object = record.at("object").get<std::string>();
  const auto& visual = record.at("visual");
  scene.pairs.push_back({subject, "subject", visual.at(subject).get<std::string>()});
  scene.pairs.push_back({object, "object", visual.at(object).get<std::string>()});
  return scene;
}

void write_dataset_jsonl(const std::string& path, const Dataset& dataset) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open for writing: " + path);
  for (const auto& scene : dataset.scenes) out << scene_to_json(scene).dump() << '\n';
}

Dataset read_dataset_jsonl(const std::string& path, const RelationLexicon& lexicon,
                           const ConceptVocabulary* manifest_vocab) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open: " + path);

  Dataset dataset;
  dataset.ling_vocab = RoleVocabulary::linguistic_binary();
  std::vector<std::string> observed_concepts;
  std::set<std::string> observed_concepts_set;
  std::vector<std::string> role_order;
  std::set<std::string> role_set;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::exception& e) {
      throw Error(path + ":" + std::to_string(lineno) + ": invalid JSON: " + e.what());
    }
    Scene scene = scene_from_json(record);
    if (role_order.empty()) {
      if (const LexiconEntry* entry = lexicon.find(scene.relation_phrase)) {
        // Lexicon order defines r1/r2 for this axis.
        const auto axis_roles = lexicon.roles_for_axis(entry->axis);
        role_order = axis_roles.positions();
        role_set.insert(role_order.begin(), role_order.end());
      }
    }
    for (const auto& pair : scene.pairs) {
      if (observed_concepts_set.insert(pair.filler).second)
        observed_concepts.push_back(pair.filler);
      if (role_set.insert(pair.visual_role).second) role_order.push_back(pair.visual_role);
    }
    dataset.scenes.push_back(std::move(scene));
  }
  dataset.concept_vocab =
      manifest_vocab != nullptr ? *manifest_vocab : ConceptVocabulary(observed_concepts);
  if (role_order.size() < 2) role_order = {"top", "bottom"};
  dataset.vis_vocab = RoleVocabulary(Perspective::kVisual, role_order);
  return dataset;
}

void write_vocab_manifest(const std::string& path, const Dataset& dataset) {
  json manifest = {
      {"concepts", dataset.concept_vocab.concepts()},
      {"visual_roles", dataset.vis_vocab.positions()},
      {"linguistic_roles", dataset.ling_vocab.positions()},
  };
  write_text_file(path, manifest.dump(2) + "\n");
}

std::pair<ConceptVocabulary, RoleVocabulary> read_vocab_manifest(const std::string& path) {
  const json manifest = json::parse(read_text_file(path));
  ConceptVocabulary concepts(manifest.at("concepts").get<std::vector<std::string>>());
  RoleVocabulary roles(Perspective::kVisual,
                       manifest.at("visual_roles").get<std::vector<std::string>>());
  return {std::move(concepts), std::move(roles)};
}

RelationLexicon read_lexicon(const std::string& path) {
  const json data = json::parse(read_text_file(path));
  std::vector<LexiconEntry> entries;
  for (const auto& item : data) {
    LexiconEntry entry;
    entry.phrase = item.at("phrase").get<std::string>();
    entry.axis = axis_from_string(item.at("axis").get<std::string>());
    entry.subject_visual_role = item.at("subject_visual_role").get<std::string>();
    entry.object_visual_role = item.at("object_visual_role").get<std::string>();
    entries.push_back(std::move(entry));
  }
  return RelationLexicon(std::move(entries));
}

void write_lexicon(const std::string& path, const RelationLexicon& lexicon) {
  json data = json::array();
  for (const auto& entry : lexicon.entries()) {
    data.push_back({{"phrase", entry.phrase},
                    {"axis", to_string(entry.axis)},
                    {"subject_visual_role", entry.subject_visual_role},
                    {"object_visual_role", entry.object_visual_role}});
  }
  write_text_file(path, data.dump(2) + "\n");
}

std::vector<RawRecord> read_raw_records(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open: " + path);
  std::vector<RawRecord> records;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      const json record = json::parse(line);
      records.push_back({record.at("caption").get<std::string>(), record.value("image_id", "")});
    } catch (const json::exception&) {
      // Counted downstream as a skipped record.
      records.push_back({"", ""});
    }
  }
  return records;
}

json skew_report_to_json(const SkewReport& report) {
  json out = {
      {"perspective", to_string(report.perspective)},
      {"completeness_per_position", report.completeness_per_position},
      {"completeness", report.completeness},
      {"balance_per_concept", report.balance_per_concept},
      {"balance", report.balance},
      {"position_weights", report.position_weights},
      {"concept_weights", report.concept_weights},
      {"unobserved_concepts", report.unobserved_concepts},
  };
  if (report.coverage >= 0.0) out["coverage"] = report.coverage;
  return out;
}

json pmd_to_json(const PMD& pmd) {
  auto dist_to_json = [](const std::vector<std::pair<std::string, double>>& dist) {
    json out = json::array();
    for (const auto& [concept_id, mass] : dist) out.push_back({{"concept", concept_id}, {"p", mass}});
    return out;
  };
  json per_role = json::object();
  for (const auto& [role, dist] : pmd.per_role) per_role[role] = dist_to_json(dist);
  return {{"macro", dist_to_json(pmd.macro)}, {"per_role", per_role}};
}

json parse_report_to_json(const ParseReport& report) {
  return {{"total", report.total},
          {"parsed", report.parsed},
          {"skipped", report.skipped},
          {"skip_reasons", report.skip_reasons}};
}

std::string skew_report_csv_header(const Dataset& dataset, Perspective p) {
  const auto& positions = dataset.roles(p).positions();
  std::ostringstream out;
  out << "CPL(" << positions[0] << "),CPL(" << positions[1] << "),BLC,Cov";
  return out.str();
}

std::string skew_report_csv_row(const SkewReport& report,
                                const std::vector<std::string>& positions) {
  if (positions.size() != 2) throw Error("csv row expects binary role vocabularies");
  std::ostringstream out;
  out << percent(report.completeness_per_position.at(positions[0])) << ','
      << percent(report.completeness_per_position.at(positions[1])) << ','
      << percent(report.balance) << ',';
  if (report.coverage >= 0.0)
    out << percent(report.coverage);
  else
    out << "-";
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open for writing: " + path);
  out << content;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace skewlens
