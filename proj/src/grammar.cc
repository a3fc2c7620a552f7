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

#include "hmt/grammar.h"

#include <algorithm>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "hmt/corpus.h"
#include "hmt/text.h"

namespace hmt {

std::string_view sentence_form_name(SentenceForm form) {
  switch (form) {
    case SentenceForm::kDeclarative: return "declarative";
    case SentenceForm::kYesNoQuestion: return "yes_no_question";
    case SentenceForm::kWhQuestion: return "wh_question";
  }
  return "?";
}

std::optional<SentenceForm> parse_sentence_form(std::string_view name) {
  for (auto f : {SentenceForm::kDeclarative, SentenceForm::kYesNoQuestion,
                 SentenceForm::kWhQuestion}) {
    if (sentence_form_name(f) == name) return f;
  }
  return std::nullopt;
}

bool PatternAtom::matches(const TaggedUnit& unit) const {
  switch (kind) {
    case Kind::kTag:
      return unit.kind == UnitKind::kContent && unit.tag() == tag;
    case Kind::kBlock:
      return unit.kind == UnitKind::kBlock;
    case Kind::kContent:
      return unit.is_content_like();
    case Kind::kMarker:
      return unit.kind == UnitKind::kMarker;
    case Kind::kAux:
      return unit.kind == UnitKind::kMarker &&
             (unit.features.has(Feature::kAuxPresent) ||
              unit.features.has(Feature::kAuxPast) ||
              unit.features.has(Feature::kAuxContinuous));
    case Kind::kFeature:
      return unit.features.has(feature);
  }
  return false;
}

bool PatternAtom::can_match_content() const {
  switch (kind) {
    case Kind::kTag:
    case Kind::kBlock:
    case Kind::kContent:
      return true;
    case Kind::kMarker:
    case Kind::kAux:
      return false;
    case Kind::kFeature:
      return !is_marker_feature(feature);
  }
  return false;
}

bool PatternElement::matches(const TaggedUnit& unit) const {
  if (wildcard) return true;
  return std::any_of(alternatives.begin(), alternatives.end(),
                     [&](const std::vector<PatternAtom>& conj) {
                       return std::all_of(conj.begin(), conj.end(),
                                          [&](const PatternAtom& a) {
                                            return a.matches(unit);
                                          });
                     });
}

bool PatternElement::can_match_content() const {
  if (wildcard) return true;
  return std::any_of(alternatives.begin(), alternatives.end(),
                     [](const std::vector<PatternAtom>& conj) {
                       return std::all_of(conj.begin(), conj.end(),
                                          [](const PatternAtom& a) {
                                            return a.can_match_content();
                                          });
                     });
}

namespace {

PatternAtom parse_atom(std::string_view text) {
  PatternAtom atom;
  if (auto tag = parse_tag(text)) {
    atom.kind = PatternAtom::Kind::kTag;
    atom.tag = *tag;
  } else if (text == "BLOCK") {
    atom.kind = PatternAtom::Kind::kBlock;
  } else if (text == "CONTENT") {
    atom.kind = PatternAtom::Kind::kContent;
  } else if (text == "MARKER") {
    atom.kind = PatternAtom::Kind::kMarker;
  } else if (text == "AUX") {
    atom.kind = PatternAtom::Kind::kAux;
  } else if (auto f = parse_feature(text)) {
    atom.kind = PatternAtom::Kind::kFeature;
    atom.feature = *f;
  } else {
    throw std::invalid_argument("unknown pattern atom '" + std::string(text) + "'");
  }
  return atom;
}

PatternElement parse_element(std::string_view text) {
  PatternElement element;
  if (text == "*") {
    element.wildcard = true;
    element.quantifier = PatternElement::Quantifier::kStar;
    return element;
  }
  switch (text.back()) {
    case '?': element.quantifier = PatternElement::Quantifier::kOptional; break;
    case '+': element.quantifier = PatternElement::Quantifier::kPlus; break;
    case '*': element.quantifier = PatternElement::Quantifier::kStar; break;
    default: break;
  }
  if (element.quantifier != PatternElement::Quantifier::kOne) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw std::invalid_argument("empty pattern element");
  for (std::string_view alt : split(text, '|')) {
    std::vector<PatternAtom> conj;
    for (std::string_view atom : split(alt, '&')) conj.push_back(parse_atom(atom));
    element.alternatives.push_back(std::move(conj));
  }
  return element;
}

std::pair<std::size_t, std::size_t> bounds(const PatternElement& e) {
  constexpr auto kMany = std::numeric_limits<std::size_t>::max();
  switch (e.quantifier) {
    case PatternElement::Quantifier::kOne: return {1, 1};
    case PatternElement::Quantifier::kOptional: return {0, 1};
    case PatternElement::Quantifier::kPlus: return {1, kMany};
    case PatternElement::Quantifier::kStar: return {0, kMany};
  }
  return {1, 1};
}

bool match_from(const GrammarRule& rule, std::span<const TaggedUnit> units,
                std::size_t element, std::size_t pos, Captures& captures) {
  if (element == rule.pattern.size()) return pos == units.size();
  const PatternElement& e = rule.pattern[element];
  const auto [min_count, max_count] = bounds(e);
  std::size_t run = 0;
  while (run < max_count && pos + run < units.size() &&
         e.matches(units[pos + run])) {
    ++run;
  }
  if (run < min_count) return false;
  for (std::size_t n = run + 1; n-- > min_count;) {
    captures[element] = {pos, pos + n};
    if (match_from(rule, units, element + 1, pos + n, captures)) return true;
  }
  return false;
}

}  // namespace

GrammarRule parse_rule(std::string_view id, std::string_view pattern,
                       std::string_view templ, std::string_view form) {
  GrammarRule rule;
  rule.id = std::string(id);
  rule.pattern_text = std::string(pattern);
  rule.template_text = std::string(templ);
  if (rule.id.empty()) throw std::invalid_argument("empty rule id");
  auto parsed_form = parse_sentence_form(form);
  if (!parsed_form) {
    throw std::invalid_argument("unknown sentence form '" + std::string(form) + "'");
  }
  rule.form = *parsed_form;
  for (const std::string& e : split_words(pattern)) {
    rule.pattern.push_back(parse_element(e));
  }
  if (rule.pattern.empty()) throw std::invalid_argument("empty pattern");

  std::vector<int> references(rule.pattern.size(), 0);
  for (const std::string& s : split_words(templ)) {
    TemplateSlot slot;
    if (s == "LINKING_VERB") {
      slot.kind = TemplateSlot::Kind::kLinkingVerb;
    } else if (s == "QUESTION_AUX") {
      slot.kind = TemplateSlot::Kind::kQuestionAux;
    } else if (s.size() > 1 && s[0] == '$' &&
               std::all_of(s.begin() + 1, s.end(), ::isdigit)) {
      const std::size_t n = std::stoul(s.substr(1));
      if (n < 1 || n > rule.pattern.size()) {
        throw std::invalid_argument("template reference " + s + " out of range");
      }
      slot.capture = n - 1;
      if (++references[slot.capture] > 1) {
        throw std::invalid_argument("template references " + s + " twice");
      }
    } else {
      throw std::invalid_argument("unknown template slot '" + s + "'");
    }
    rule.slots.push_back(slot);
  }
  for (std::size_t i = 0; i < rule.pattern.size(); ++i) {
    if (rule.pattern[i].can_match_content() && references[i] == 0) {
      throw std::invalid_argument("element $" + std::to_string(i + 1) +
                                  " can match words but is not in the template");
    }
  }
  return rule;
}

std::optional<Captures> match_rule(const GrammarRule& rule,
                                   std::span<const TaggedUnit> units) {
  Captures captures(rule.pattern.size());
  if (match_from(rule, units, 0, 0, captures)) return captures;
  return std::nullopt;
}

RuleSet RuleSet::parse(std::istream& in) {
  std::vector<GrammarRule> rules;
  for_each_table_line(in, [&](std::size_t line,
                              const std::vector<std::string_view>& f) {
    if (f.size() != 4) {
      throw FormatError(line, "expected id<TAB>pattern<TAB>template<TAB>form");
    }
    try {
      rules.push_back(parse_rule(f[0], f[1], f[2], f[3]));
    } catch (const std::invalid_argument& e) {
      throw FormatError(line, e.what());
    }
  });
  return RuleSet(std::move(rules));
}

RuleSet RuleSet::load(const std::filesystem::path& path) {
  return load_table(path, [](std::istream& in) { return parse(in); });
}

void RuleSet::write(std::ostream& out) const {
  for (const GrammarRule& r : rules_) {
    out << r.id << '\t' << r.pattern_text << '\t' << r.template_text << '\t'
        << sentence_form_name(r.form) << '\n';
  }
}

const GrammarRule& fallback_rule() {
  static const GrammarRule rule = parse_rule("fallback", "*", "$1", "declarative");
  return rule;
}

std::vector<TaggedUnit> rule_view(std::span<const TaggedUnit> units) {
  std::vector<TaggedUnit> view;
  view.reserve(units.size());
  for (const TaggedUnit& u : units) {
    if (u.kind != UnitKind::kPunctuation) view.push_back(u);
  }
  return view;
}

const GrammarRule& select_rule(std::span<const TaggedUnit> units,
                               const RuleSet& rules) {
  const std::vector<TaggedUnit> view = rule_view(units);
  std::optional<SentenceForm> forced;
  for (const TaggedUnit& u : view) {
    if (u.features.has(Feature::kQuestionParticleInitial)) {
      forced = SentenceForm::kYesNoQuestion;
    } else if (u.features.has(Feature::kQuestionParticleMedial) && !forced) {
      forced = SentenceForm::kWhQuestion;
    }
  }
  if (forced) {
    for (const GrammarRule& r : rules.rules()) {
      if (r.form == *forced && match_rule(r, view)) return r;
    }
  }
  for (const GrammarRule& r : rules.rules()) {
    if (match_rule(r, view)) return r;
  }
  return fallback_rule();
}

}  // namespace hmt
