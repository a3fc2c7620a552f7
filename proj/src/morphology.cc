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

#include "hmt/morphology.h"

#include <algorithm>
#include <array>
#include <ostream>

#include "hmt/corpus.h"
#include "hmt/text.h"

namespace hmt {
namespace {

// Short stressed CVC verbs; a phonological rule would need stress data.
constexpr std::array<std::string_view, 24> kDoublingVerbs = {
    "beg", "chat", "cut",  "dig",  "drop", "get", "hit",  "hop",
    "jog", "nod",  "plan", "put",  "rob",  "rub", "run",  "set",
    "shop", "sit", "stop", "swim", "begin", "admit", "prefer", "travel"};

bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

std::string_view tense_name(Tense t) {
  switch (t) {
    case Tense::kSimplePresent: return "SimplePresent";
    case Tense::kPresentContinuous: return "PresentContinuous";
    case Tense::kSimplePast: return "SimplePast";
    case Tense::kPastContinuous: return "PastContinuous";
  }
  return "?";
}

bool is_continuous(Tense t) {
  return t == Tense::kPresentContinuous || t == Tense::kPastContinuous;
}

bool is_past(Tense t) {
  return t == Tense::kSimplePast || t == Tense::kPastContinuous;
}

TenseInfo detect_tense(std::span<const TaggedUnit> units) {
  FeatureSet all;
  std::optional<Person> person;
  for (const TaggedUnit& u : units) {
    all |= u.features;
    if (person) continue;
    if (u.features.has(Feature::kFirstPerson)) {
      person = Person::kFirst;
    } else if (u.features.has(Feature::kSecondPerson)) {
      person = Person::kSecond;
    } else if (u.features.has(Feature::kThirdPerson)) {
      person = Person::kThird;
    }
  }
  TenseInfo info;
  const bool cont = all.has(Feature::kAuxContinuous);
  if (all.has(Feature::kAuxPresent)) {
    info.tense = cont ? Tense::kPresentContinuous : Tense::kSimplePresent;
  } else if (all.has(Feature::kAuxPast)) {
    info.tense = cont ? Tense::kPastContinuous : Tense::kSimplePast;
  } else if (all.has(Feature::kPerfective)) {
    info.tense = Tense::kSimplePast;
  }
  info.person = person.value_or(Person::kThird);
  info.number = all.has(Feature::kPluralMarked) ? Number::kPlural
                                                : Number::kSingular;
  return info;
}

std::string_view linking_verb(const TenseInfo& info) {
  const bool plural_like =
      info.number == Number::kPlural || info.person == Person::kSecond;
  if (is_past(info.tense)) return plural_like ? "were" : "was";
  if (plural_like) return "are";
  return info.person == Person::kFirst ? "am" : "is";
}

Morphology::Morphology(std::vector<IrregularVerb> irregulars)
    : irregulars_(std::move(irregulars)) {
  for (std::size_t i = 0; i < irregulars_.size(); ++i) {
    by_lemma_.emplace(irregulars_[i].lemma, i);
  }
  for (std::size_t i = 0; i < irregulars_.size(); ++i) {
    by_form_.emplace(irregulars_[i].past, i);
    by_form_.emplace(irregulars_[i].past_participle, i);
  }
}

Morphology Morphology::parse(std::istream& in) {
  std::vector<IrregularVerb> verbs;
  for_each_table_line(in, [&](std::size_t line,
                              const std::vector<std::string_view>& f) {
    if (f.size() != 3 || f[0].empty() || f[1].empty() || f[2].empty()) {
      throw FormatError(line, "expected lemma<TAB>past<TAB>past_participle");
    }
    verbs.push_back({ascii_lower(f[0]), ascii_lower(f[1]), ascii_lower(f[2])});
  });
  return Morphology(std::move(verbs));
}

Morphology Morphology::load(const std::filesystem::path& path) {
  return load_table(path, [](std::istream& in) { return parse(in); });
}

void Morphology::write(std::ostream& out) const {
  for (const IrregularVerb& v : irregulars_) {
    out << v.lemma << '\t' << v.past << '\t' << v.past_participle << '\n';
  }
}

const IrregularVerb* Morphology::irregular(std::string_view lemma) const {
  auto it = by_lemma_.find(lemma);
  return it == by_lemma_.end() ? nullptr : &irregulars_[it->second];
}

std::string Morphology::lemma_of(std::string_view word) const {
  if (by_lemma_.count(word)) return std::string(word);
  auto it = by_form_.find(word);
  return it == by_form_.end() ? std::string(word) : irregulars_[it->second].lemma;
}

bool doubles_final_consonant(std::string_view lemma) {
  return std::find(kDoublingVerbs.begin(), kDoublingVerbs.end(), lemma) !=
         kDoublingVerbs.end();
}

std::string Morphology::present_participle(std::string_view lemma) const {
  std::string base(lemma);
  if (base == "be" || base.size() < 2) return base + "ing";
  if (ends_with(base, "ie")) return base.substr(0, base.size() - 2) + "ying";
  if (base.back() == 'e' && !ends_with(base, "ee") && !ends_with(base, "oe") &&
      !ends_with(base, "ye")) {
    return base.substr(0, base.size() - 1) + "ing";
  }
  if (doubles_final_consonant(base)) return base + base.back() + "ing";
  return base + "ing";
}

std::string Morphology::past(std::string_view lemma) const {
  if (const IrregularVerb* v = irregular(lemma)) return v->past;
  std::string base(lemma);
  if (base.empty()) return base;
  if (base.back() == 'e') return base + "d";
  if (base.size() >= 2 && base.back() == 'y' && !is_vowel(base[base.size() - 2])) {
    return base.substr(0, base.size() - 1) + "ied";
  }
  if (doubles_final_consonant(base)) return base + base.back() + "ed";
  return base + "ed";
}

std::string Morphology::third_singular(std::string_view lemma) const {
  std::string base(lemma);
  if (base == "be") return "is";
  if (base == "have") return "has";
  if (base.empty()) return base;
  if (ends_with(base, "s") || ends_with(base, "x") || ends_with(base, "z") ||
      ends_with(base, "ch") || ends_with(base, "sh") || ends_with(base, "o")) {
    return base + "es";
  }
  if (base.size() >= 2 && base.back() == 'y' && !is_vowel(base[base.size() - 2])) {
    return base.substr(0, base.size() - 1) + "ies";
  }
  return base + "s";
}

std::string_view Morphology::do_support(const TenseInfo& info) const {
  if (is_past(info.tense)) return "did";
  if (info.person == Person::kThird && info.number == Number::kSingular) {
    return "does";
  }
  return "do";
}

std::string inflect_verb(std::string_view lemma, const TenseInfo& info,
                         const Morphology& morphology) {
  std::vector<std::string> words = split_words(lemma);
  if (words.empty()) return std::string(lemma);
  std::string& head = words.front();
  if (is_continuous(info.tense)) {
    head = morphology.present_participle(head);
  } else if (head == "be") {
    head = std::string(linking_verb(info));
  } else if (info.tense == Tense::kSimplePast) {
    head = morphology.past(head);
  } else if (info.person == Person::kThird && info.number == Number::kSingular) {
    head = morphology.third_singular(head);
  }
  return join(words, " ");
}

}  // namespace hmt
