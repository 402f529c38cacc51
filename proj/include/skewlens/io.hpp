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

#ifndef SKEWLENS_IO_HPP
#define SKEWLENS_IO_HPP

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "skewlens/core.hpp"
#include "skewlens/metrics.hpp"
#include "skewlens/parser.hpp"

namespace skewlens {

// Canonical dataset record:
// {"caption", "subject", "object", "relation", "visual": {concept: role}, "source_id"?}
nlohmann::json scene_to_json(const Scene& scene);
Scene scene_from_json(const nlohmann::json& record);

void write_dataset_jsonl(const std::string& path, const Dataset& dataset);

// Role order is recovered from the lexicon when possible, else from the
// sorted observed roles; concept vocabulary from the manifest when given,
// else the observed union.
Dataset read_dataset_jsonl(const std::string& path, const RelationLexicon& lexicon,
                           const ConceptVocabulary* manifest_vocab = nullptr);

// {"concepts": [...], "visual_roles": [...], "linguistic_roles": [...]}
void write_vocab_manifest(const std::string& path, const Dataset& dataset);
std::pair<ConceptVocabulary, RoleVocabulary> read_vocab_manifest(const std::string& path);

RelationLexicon read_lexicon(const std::string& path);
void write_lexicon(const std::string& path, const RelationLexicon& lexicon);

std::vector<RawRecord> read_raw_records(const std::string& path);

nlohmann::json skew_report_to_json(const SkewReport& report);
nlohmann::json pmd_to_json(const PMD& pmd);
nlohmann::json parse_report_to_json(const ParseReport& report);

// Fig-style table row: CPL(r1), CPL(r2), BLC, Cov as integer percent.
std::string skew_report_csv_header(const Dataset& dataset, Perspective p);
std::string skew_report_csv_row(const SkewReport& report, const std::vector<std::string>& positions);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace skewlens

#endif  // SKEWLENS_IO_HPP
