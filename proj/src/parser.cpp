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

#include "skewlens/parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace skewlens {

namespace {

const std::set<std::string> kArticles = {"a", "an", "the"};
// Tokens dropped from the tail of a subject span, so "a book is <relation>"
// yields the noun "book".
const std::set<std::string> kCopulas = {"is", "are", "was", "were", "sits", "sitting",
                                        "stands", "standing", "placed", "positioned"};

std::string lowercase(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::vector<std::string> tokenize(const std::string& s) {
  std::vector<std::string> tokens;
  std::istringstream in(s);
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

std::string join(const std::vector<std::string>& tokens, std::size_t begin, std::size_t end) {
  std::string out;
  for (std::size_t i = begin; i < end; ++i) {
    if (!out.empty()) out += ' ';
    out += tokens[i];
  }
  return out;
}

std::string strip_punct(std::string s) {
  while (!s.empty() && std::ispunct(static_cast<unsigned char>(s.back()))) s.pop_back();
  while (!s.empty() && std::ispunct(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  return s;
}

bool is_word_boundary(const std::string& text, std::size_t pos) {
  if (pos == 0 || pos >= text.size()) return true;
  return !std::isalnum(static_cast<unsigned char>(text[pos - 1]));
}

bool is_word_boundary_after(const std::string& text, std::size_t end) {
  if (end >= text.size()) return true;
  return !std::isalnum(static_cast<unsigned char>(text[end]));
}

struct PhraseMatch {
  std::size_t begin = 0;
  std::size_t end = 0;
  const LexiconEntry* entry = nullptr;
};

// All word-boundary matches of the axis's phrases; matches subsumed by a
// longer match at the same spot are discarded ("behind" inside another
// phrase, overlapping alternatives).
std::vector<PhraseMatch> find_phrase_matches(const std::string& text,
                                             const std::vector<LexiconEntry>& entries) {
  std::vector<PhraseMatch> matches;
  for (const auto& entry : entries) {
    std::size_t pos = 0;
    while ((pos = text.find(entry.phrase, pos)) != std::string::npos) {
      if (is_word_boundary(text, pos) && is_word_boundary_after(text, pos + entry.phrase.size()))
        matches.push_back({pos, pos + entry.phrase.size(), &entry});
      ++pos;
    }
  }
  std::sort(matches.begin(), matches.end(), [](const PhraseMatch& a, const PhraseMatch& b) {
    if (a.begin != b.begin) return a.begin < b.begin;
    return a.end > b.end;
  });
  std::vector<PhraseMatch> kept;
  for (const auto& m : matches) {
    if (!kept.empty() && m.begin < kept.back().end) continue;  // overlap
    kept.push_back(m);
  }
  return kept;
}

std::string extract_subject(const std::string& left_text, std::string* reason) {
  auto tokens = tokenize(left_text);
  while (!tokens.empty() && kCopulas.count(strip_punct(tokens.back())) > 0) tokens.pop_back();
  std::size_t begin = 0;
  for (std::size_t i = tokens.size(); i > 0; --i) {
    if (kArticles.count(strip_punct(tokens[i - 1])) > 0) {
      begin = i;
      break;
    }
  }
  for (auto& t : tokens) t = strip_punct(t);
  const std::string noun = join(tokens, begin, tokens.size());
  if (noun.empty() && reason != nullptr) *reason = "unknown structure";
  return noun;
}

std::string extract_object(const std::string& right_text, std::string* reason) {
  auto tokens = tokenize(right_text);
  std::size_t begin = 0;
  if (!tokens.empty() && kArticles.count(strip_punct(tokens[0])) > 0) begin = 1;
  // The span ends at the first token carrying trailing punctuation.
  std::size_t end = begin;
  while (end < tokens.size()) {
    const bool stop = std::ispunct(static_cast<unsigned char>(tokens[end].back())) != 0;
    tokens[end] = strip_punct(tokens[end]);
    ++end;
    if (stop) break;
  }
  const std::string noun = join(tokens, begin, end);
  if (noun.empty() && reason != nullptr) *reason = "unknown structure";
  return noun;
}

Scene make_binary_scene(const std::string& subject, const std::string& object,
                        const LexiconEntry& entry, const std::string& source_id) {
  Scene scene;
  scene.relation_phrase = entry.phrase;
  scene.source_id = source_id;
  scene.pairs.push_back({subject, "subject", entry.subject_visual_role});
  scene.pairs.push_back({object, "object", entry.object_visual_role});
  return scene;
}

}  // namespace

std::string to_string(Axis axis) {
  switch (axis) {
    case Axis::kLR: return "LR";
    case Axis::kTB: return "TB";
    case Axis::kFB: return "FB";
  }
  return "TB";
}

Axis axis_from_string(const std::string& s) {
  if (s == "LR") return Axis::kLR;
  if (s == "TB") return Axis::kTB;
  if (s == "FB") return Axis::kFB;
  throw Error("unknown axis: " + s);
}

RelationLexicon::RelationLexicon(std::vector<LexiconEntry> entries)
    : entries_(std::move(entries)) {
  std::set<std::string> phrases;
  for (const auto& entry : entries_) {
    if (!phrases.insert(entry.phrase).second) throw Error("duplicate phrase: " + entry.phrase);
    if (entry.subject_visual_role == entry.object_visual_role)
      throw Error("entry maps both nouns to the same visual role: " + entry.phrase);
  }
}

RelationLexicon RelationLexicon::default_lexicon() {
  return RelationLexicon({
      {"on top of", Axis::kTB, "top", "bottom"},
      {"at the bottom of", Axis::kTB, "bottom", "top"},
      {"to the left of", Axis::kLR, "left", "right"},
      {"to the right of", Axis::kLR, "right", "left"},
      {"in front of", Axis::kFB, "front", "behind"},
      {"behind", Axis::kFB, "behind", "front"},
  });
}

const LexiconEntry* RelationLexicon::find(const std::string& phrase) const {
  for (const auto& entry : entries_)
    if (entry.phrase == phrase) return &entry;
  return nullptr;
}

const LexiconEntry& RelationLexicon::symmetric_partner(const std::string& phrase) const {
  const LexiconEntry* self = find(phrase);
  if (self == nullptr) throw Error("unknown phrase: " + phrase);
  for (const auto& entry : entries_) {
    if (entry.axis == self->axis && entry.subject_visual_role == self->object_visual_role &&
        entry.object_visual_role == self->subject_visual_role)
      return entry;
  }
  throw Error("no symmetric partner for phrase: " + phrase);
}

RoleVocabulary RelationLexicon::roles_for_axis(Axis axis) const {
  for (const auto& entry : entries_) {
    if (entry.axis == axis)
      return RoleVocabulary(Perspective::kVisual,
                            {entry.subject_visual_role, entry.object_visual_role});
  }
  throw Error("no lexicon entry for axis " + to_string(axis));
}

std::vector<LexiconEntry> RelationLexicon::entries_for_axis(Axis axis) const {
  std::vector<LexiconEntry> out;
  for (const auto& entry : entries_)
    if (entry.axis == axis) out.push_back(entry);
  return out;
}

std::pair<std::string, std::string> visual_bindings_for(const std::string& relation_phrase,
                                                        const RelationLexicon& lexicon) {
  const LexiconEntry* entry = lexicon.find(relation_phrase);
  if (entry == nullptr) throw Error("unknown phrase: " + relation_phrase);
  return {entry->subject_visual_role, entry->object_visual_role};
}

Scene parse_template_caption(const std::string& text, const RelationLexicon& lexicon,
                             const ConceptVocabulary& concepts) {
  const std::string caption = lowercase(text);
  const auto matches = find_phrase_matches(caption, lexicon.entries());
  if (matches.empty()) throw Error("no relation phrase in caption: " + text);
  const auto& match = matches.front();

  std::string reason;
  const std::string subject = extract_subject(caption.substr(0, match.begin), &reason);
  const std::string object = extract_object(caption.substr(match.end), &reason);
  if (subject.empty() || object.empty()) throw Error("malformed template caption: " + text);
  if (!concepts.contains(subject)) throw Error("noun not in vocabulary: " + subject);
  if (!concepts.contains(object)) throw Error("noun not in vocabulary: " + object);
  return make_binary_scene(subject, object, *match.entry, "");
}

std::optional<Scene> parse_wild_caption(const std::string& text, const RelationLexicon& lexicon,
                                        Axis axis, std::string* skip_reason) {
  const std::string caption = lowercase(text);
  // Matches hold pointers into this list; it must outlive them.
  const auto axis_entries = lexicon.entries_for_axis(axis);
  const auto matches = find_phrase_matches(caption, axis_entries);
  if (matches.empty()) {
    if (skip_reason != nullptr) *skip_reason = "no spatial phrase";
    return std::nullopt;
  }
  if (matches.size() > 1) {
    if (skip_reason != nullptr) *skip_reason = "multiple phrases";
    return std::nullopt;
  }
  const auto& match = matches.front();
  std::string reason = "unknown structure";
  const std::string subject = extract_subject(caption.substr(0, match.begin), &reason);
  const std::string object = extract_object(caption.substr(match.end), &reason);
  if (subject.empty() || object.empty() || subject == object) {
    if (skip_reason != nullptr) *skip_reason = "unknown structure";
    return std::nullopt;
  }
  return make_binary_scene(subject, object, *lexicon.find(match.entry->phrase), "");
}

std::pair<Dataset, ParseReport> parse_corpus(const std::vector<RawRecord>& records,
                                             const RelationLexicon& lexicon, Axis axis,
                                             const ConceptVocabulary* manifest_vocab) {
  Dataset dataset;
  dataset.ling_vocab = RoleVocabulary::linguistic_binary();
  dataset.vis_vocab = lexicon.roles_for_axis(axis);

  ParseReport report;
  std::vector<std::string> observed;
  std::set<std::string> observed_set;
  for (const auto& record : records) {
    ++report.total;
    std::string reason;
    auto scene = parse_wild_caption(record.caption, lexicon, axis, &reason);
    if (scene.has_value() && manifest_vocab != nullptr) {
      for (const auto& pair : scene->pairs) {
        if (!manifest_vocab->contains(pair.filler)) {
          reason = "noun outside manifest";
          scene.reset();
          break;
        }
      }
    }
    if (!scene.has_value()) {
      ++report.skipped;
      ++report.skip_reasons[reason];
      continue;
    }
    scene->source_id = record.image_id;
    for (const auto& pair : scene->pairs)
      if (observed_set.insert(pair.filler).second) observed.push_back(pair.filler);
    dataset.scenes.push_back(std::move(*scene));
    ++report.parsed;
  }
  dataset.concept_vocab =
      manifest_vocab != nullptr ? *manifest_vocab : ConceptVocabulary(observed);
  return {std::move(dataset), report};
}

std::string render_caption(const Scene& scene) {
  const RoleFillerPair* subject = nullptr;
  const RoleFillerPair* object = nullptr;
  for (const auto& pair : scene.pairs) {
    if (pair.linguistic_role == "subject") subject = &pair;
    if (pair.linguistic_role == "object") object = &pair;
  }
  if (subject == nullptr || object == nullptr || scene.relation_phrase.empty())
    throw Error("scene is missing linguistic roles or a relation phrase");
  auto article = [](const std::string& noun) {
    static const std::string vowels = "aeiou";
    return !noun.empty() && vowels.find(noun[0]) != std::string::npos ? "an " : "a ";
  };
  return article(subject->filler) + subject->filler + " is " + scene.relation_phrase + " " +
         article(object->filler) + object->filler;
}

}  // namespace skewlens
