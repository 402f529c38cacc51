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

#ifndef SKEWLENS_PARSER_HPP
#define SKEWLENS_PARSER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skewlens/core.hpp"

namespace skewlens {

enum class Axis { kLR, kTB, kFB };

std::string to_string(Axis axis);
Axis axis_from_string(const std::string& s);

struct LexiconEntry {
  std::string phrase;
  Axis axis = Axis::kTB;
  std::string subject_visual_role;
  std::string object_visual_role;
};

/// Maps surface relation phrases to visual role assignments.
class RelationLexicon {
 public:
  RelationLexicon() = default;
  explicit RelationLexicon(std::vector<LexiconEntry> entries);

  // "on top of"/"at the bottom of", "to the left of"/"to the right of",
  // "in front of"/"behind".
  static RelationLexicon default_lexicon();

  const std::vector<LexiconEntry>& entries() const { return entries_; }
  const LexiconEntry* find(const std::string& phrase) const;
  // Entry on the same axis with swapped roles; throws if absent.
  const LexiconEntry& symmetric_partner(const std::string& phrase) const;
  // Role vocabulary for one axis, ordered (subject role of the axis's first
  // entry, its partner role), e.g. {top, bottom}.
  RoleVocabulary roles_for_axis(Axis axis) const;
  std::vector<LexiconEntry> entries_for_axis(Axis axis) const;

 private:
  std::vector<LexiconEntry> entries_;
};

struct ParseReport {
  long long total = 0;
  long long parsed = 0;
  long long skipped = 0;
  std::map<std::string, long long> skip_reasons;
};

struct RawRecord {
  std::string caption;
  std::string image_id;
};

// (subject visual role, object visual role) for a relation phrase.
std::pair<std::string, std::string> visual_bindings_for(const std::string& relation_phrase,
                                                        const RelationLexicon& lexicon);

// Strict template parse: "a(an) <noun> is <relation> a(an) <noun>".
Scene parse_template_caption(const std::string& text, const RelationLexicon& lexicon,
                             const ConceptVocabulary& concepts);

// Lexicon substring match with deterministic article-delimited noun
// extraction. nullopt with a reason on unparseable captions.
std::optional<Scene> parse_wild_caption(const std::string& text, const RelationLexicon& lexicon,
                                        Axis axis, std::string* skip_reason);

// Parses every record on the requested axis. With a manifest vocabulary,
// scenes with out-of-vocabulary nouns are skipped; otherwise the vocabulary
// is the union of observed nouns.
std::pair<Dataset, ParseReport> parse_corpus(const std::vector<RawRecord>& records,
                                             const RelationLexicon& lexicon, Axis axis,
                                             const ConceptVocabulary* manifest_vocab = nullptr);

// "a(an) <subject> is <relation> a(an) <object>" from the scene's recorded
// phrasing; article chosen by leading vowel.
std::string render_caption(const Scene& scene);

}  // namespace skewlens

#endif  // SKEWLENS_PARSER_HPP
