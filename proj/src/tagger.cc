// Copyright 2026 The HMT Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hmt/tagger.h"

#include <algorithm>
#include <array>
#include <ostream>

#include "hmt/corpus.h"
#include "hmt/text.h"

namespace hmt {
namespace {

constexpr std::array<std::string_view, kFeatureCount> kFeatureNames = {
    "ergative_marked",  "plural_marked",  "question_particle_initial",
    "question_particle_medial", "aux_present", "aux_past",
    "aux_continuous",   "first_person",   "second_person",
    "third_person",     "conjunction",    "case_marker",
    "perfective"};

constexpr std::string_view kQuestionParticle = "question_particle";

}  // namespace

std::string_view feature_name(Feature f) {
  return kFeatureNames[static_cast<std::size_t>(f)];
}

std::optional<Feature> parse_feature(std::string_view name) {
  for (std::size_t i = 0; i < kFeatureNames.size(); ++i) {
    if (kFeatureNames[i] == name) return static_cast<Feature>(i);
  }
  return std::nullopt;
}

std::vector<Feature> FeatureSet::list() const {
  std::vector<Feature> out;
  for (int i = 0; i < kFeatureCount; ++i) {
    if (has(static_cast<Feature>(i))) out.push_back(static_cast<Feature>(i));
  }
  return out;
}

bool is_marker_feature(Feature f) {
  switch (f) {
    case Feature::kErgativeMarked:
    case Feature::kQuestionParticleInitial:
    case Feature::kQuestionParticleMedial:
    case Feature::kAuxPresent:
    case Feature::kAuxPast:
    case Feature::kAuxContinuous:
    case Feature::kConjunction:
    case Feature::kCaseMarker:
      return true;
    default:
      return false;
  }
}

void FunctionWordTable::add(const std::string& surface, std::string_view flag,
                            std::optional<std::string> gloss) {
  FunctionWord& word = words_[surface];
  if (flag == kQuestionParticle) {
    word.question_particle = true;
  } else {
    std::optional<Feature> f = parse_feature(flag);
    if (!f) throw std::invalid_argument("unknown feature flag '" +
                                        std::string(flag) + "'");
    word.flags.set(*f);
  }
  if (gloss && !word.gloss) word.gloss = gloss;
  lines_.push_back({surface, std::string(flag), std::move(gloss)});
}

const FunctionWord* FunctionWordTable::find(std::string_view surface) const {
  auto it = words_.find(std::string(surface));
  return it == words_.end() ? nullptr : &it->second;
}

FunctionWordTable FunctionWordTable::parse(std::istream& in) {
  FunctionWordTable table;
  for_each_table_line(in, [&](std::size_t line,
                              const std::vector<std::string_view>& fields) {
    if (fields.size() != 2 && fields.size() != 3) {
      throw FormatError(line, "expected surface<TAB>feature_flag[<TAB>gloss]");
    }
    if (fields[0].empty()) throw FormatError(line, "empty surface");
    std::optional<std::string> gloss;
    if (fields.size() == 3 && !fields[2].empty()) {
      gloss = ascii_lower(fields[2]);
    }
    try {
      table.add(nfc(fields[0]), fields[1], std::move(gloss));
    } catch (const std::invalid_argument& e) {
      throw FormatError(line, e.what());
    }
  });
  return table;
}

FunctionWordTable FunctionWordTable::load(const std::filesystem::path& path) {
  return load_table(path, [](std::istream& in) { return parse(in); });
}

void FunctionWordTable::write(std::ostream& out) const {
  for (const Line& l : lines_) {
    out << l.surface << '\t' << l.flag;
    if (l.gloss) out << '\t' << *l.gloss;
    out << '\n';
  }
}

std::string_view rule_id(ProperNounRule rule) {
  switch (rule) {
    case ProperNounRule::kOov: return "R1";
    case ProperNounRule::kErgativeAgent: return "R2";
    case ProperNounRule::kCopularIdentity: return "R3";
  }
  return "?";
}

ProperNounRules ProperNounRules::parse(std::istream& in) {
  ProperNounRules rules;
  rules.order.clear();
  for_each_table_line(in, [&](std::size_t,
                              const std::vector<std::string_view>& fields) {
    std::string_view id = fields[0];
    if (!id.empty() && id.front() == '!') return;
    for (auto r : {ProperNounRule::kOov, ProperNounRule::kErgativeAgent,
                   ProperNounRule::kCopularIdentity}) {
      if (rule_id(r) == id) {
        if (std::find(rules.order.begin(), rules.order.end(), r) ==
            rules.order.end()) {
          rules.order.push_back(r);
        }
        return;
      }
    }
    rules.unknown.emplace_back(id);
  });
  return rules;
}

ProperNounRules ProperNounRules::load(const std::filesystem::path& path) {
  return load_table(path, [](std::istream& in) { return parse(in); });
}

void ProperNounRules::write(std::ostream& out) const {
  for (ProperNounRule r : order) out << rule_id(r) << '\n';
}

std::optional<Tag> TaggedUnit::tag() const {
  if (const Candidate* c = chosen_candidate()) return c->tag;
  if (!candidates.empty()) return candidates.front().tag;
  return std::nullopt;
}

std::vector<Sense> lookup(std::string_view word, const Lexicon& lexicon) {
  std::span<const Sense> senses = lexicon.lookup(word);
  return {senses.begin(), senses.end()};
}

namespace {

void make_name(TaggedUnit& unit, const TaggerResources& res,
               std::optional<ProperNounRule> rule,
               std::vector<std::string>* warnings) {
  LenientTransliteration t = transliterate_lenient(unit.surface(), res.translit);
  if (warnings) {
    for (char32_t c : t.uncovered) {
      warnings->push_back("no transliteration for " + codepoint_name(c) +
                          " in '" + unit.surface() + "'");
    }
  }
  unit.candidates = {{t.text, Tag::kName}};
  unit.chosen = 0;
  unit.name_rule = rule;
}

// Index of the next non-punctuation unit after `i`.
std::optional<std::size_t> next_unit(const std::vector<TaggedUnit>& units,
                                     std::size_t i) {
  for (std::size_t j = i + 1; j < units.size(); ++j) {
    if (units[j].kind != UnitKind::kPunctuation) return j;
  }
  return std::nullopt;
}

bool precedes_ergative(const std::vector<TaggedUnit>& units, std::size_t i) {
  auto j = next_unit(units, i);
  return j && units[*j].kind == UnitKind::kMarker &&
         units[*j].features.has(Feature::kErgativeMarked);
}

void apply_oov(std::vector<TaggedUnit>& units, const TaggerResources& res,
               std::vector<std::string>* warnings) {
  for (TaggedUnit& u : units) {
    if (u.kind == UnitKind::kContent && !u.in_lexicon && !u.function_word) {
      make_name(u, res, ProperNounRule::kOov, warnings);
    }
  }
}

// The agent of "X ने" is a name when the same surface also occurs elsewhere
// in the sentence outside an agent position (that occurrence keeps its
// dictionary sense).
void apply_ergative_agent(std::vector<TaggedUnit>& units,
                          const TaggerResources& res,
                          std::vector<std::string>* warnings) {
  std::vector<std::size_t> agents;
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (units[i].kind != UnitKind::kContent || !precedes_ergative(units, i)) {
      continue;
    }
    for (std::size_t j = 0; j < units.size(); ++j) {
      if (j != i && units[j].kind == UnitKind::kContent &&
          units[j].surface() == units[i].surface() &&
          !precedes_ergative(units, j)) {
        agents.push_back(i);
        break;
      }
    }
  }
  for (std::size_t i : agents) {
    make_name(units[i], res, ProperNounRule::kErgativeAgent, warnings);
  }
}

// "मैं X Y Z हूँ": out-of-vocabulary or nominal words between a first-person
// pronoun and a first-person present auxiliary form a name.
void apply_copular_identity(std::vector<TaggedUnit>& units,
                            const TaggerResources& res,
                            std::vector<std::string>* warnings) {
  for (std::size_t p = 0; p < units.size(); ++p) {
    const TaggedUnit& pron = units[p];
    const bool is_pron =
        std::any_of(pron.candidates.begin(), pron.candidates.end(),
                    [](const Candidate& c) { return c.tag == Tag::kPron; });
    if (pron.kind != UnitKind::kContent || !is_pron ||
        !pron.features.has(Feature::kFirstPerson)) {
      continue;
    }
    std::optional<std::size_t> aux;
    for (std::size_t a = p + 1; a < units.size(); ++a) {
      if (units[a].kind == UnitKind::kMarker &&
          units[a].features.has(Feature::kAuxPresent) &&
          units[a].features.has(Feature::kFirstPerson)) {
        aux = a;
        break;
      }
    }
    if (!aux) continue;
    for (std::size_t k = p + 1; k < *aux; ++k) {
      TaggedUnit& u = units[k];
      if (u.kind != UnitKind::kContent) continue;
      const bool nominal =
          std::any_of(u.candidates.begin(), u.candidates.end(),
                      [](const Candidate& c) { return c.tag && is_nominal(*c.tag); });
      if (!u.in_lexicon || nominal) {
        make_name(u, res, ProperNounRule::kCopularIdentity, warnings);
      }
    }
    return;
  }
}

}  // namespace

void identify_proper_nouns(std::vector<TaggedUnit>& units,
                           const TaggerResources& res,
                           std::span<const ProperNounRule> order,
                           std::vector<std::string>* warnings) {
  for (ProperNounRule rule : order) {
    switch (rule) {
      case ProperNounRule::kOov:
        apply_oov(units, res, warnings);
        break;
      case ProperNounRule::kErgativeAgent:
        apply_ergative_agent(units, res, warnings);
        break;
      case ProperNounRule::kCopularIdentity:
        apply_copular_identity(units, res, warnings);
        break;
    }
  }
}

std::vector<TaggedUnit> tag_sentence(std::span<const Segment> segments,
                                     const TaggerResources& res,
                                     std::vector<std::string>* warnings) {
  std::vector<TaggedUnit> units;
  units.reserve(segments.size());
  std::size_t word_position = 0;
  for (const Segment& seg : segments) {
    TaggedUnit u;
    u.source = seg;
    if (seg.kind == SegmentKind::kExampleMatch) {
      u.kind = UnitKind::kBlock;
      u.candidates = {{*seg.translation, std::nullopt}};
      u.chosen = 0;
      ++word_position;
      units.push_back(std::move(u));
      continue;
    }
    if (seg.is_punctuation()) {
      u.kind = UnitKind::kPunctuation;
      units.push_back(std::move(u));
      continue;
    }
    const std::string& surface = seg.tokens.front().surface;
    const FunctionWord* fw = res.function_words.find(surface);
    if (fw) {
      u.function_word = true;
      u.features = fw->flags;
      if (fw->question_particle) {
        u.features.set(word_position == 0 ? Feature::kQuestionParticleInitial
                                          : Feature::kQuestionParticleMedial);
      }
      const std::vector<Feature> flags = u.features.list();
      if (std::any_of(flags.begin(), flags.end(), is_marker_feature)) {
        u.kind = UnitKind::kMarker;
        u.gloss = fw->gloss;
      }
    }
    if (u.kind == UnitKind::kContent) {
      for (const Sense& s : res.lexicon.lookup(surface)) {
        u.candidates.push_back({s.english, s.tag});
      }
      u.in_lexicon = !u.candidates.empty();
    }
    ++word_position;
    units.push_back(std::move(u));
  }

  identify_proper_nouns(units, res, res.rules.order, warnings);

  for (TaggedUnit& u : units) {
    if (u.kind != UnitKind::kContent) continue;
    if (u.candidates.empty()) make_name(u, res, std::nullopt, warnings);
    if (u.candidates.size() == 1) u.chosen = 0;
  }
  return units;
}

}  // namespace hmt
