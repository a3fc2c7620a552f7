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

#ifndef HMT_GRAMMAR_H_
#define HMT_GRAMMAR_H_

// Tag-pattern grammar rules.
//
// A pattern is a space-separated list of elements matched against the whole
// unit sequence of a sentence (punctuation excluded). Each element is one
// capture group, numbered from 1:
//
//   element  := '*' | alt [ '?' | '+' | '*' ]
//   alt      := conj ( '|' conj )*
//   conj     := atom ( '&' atom )*
//   atom     := PRON | ANIMT | VERB | ADJ | ADV | NOUN | NAME   chosen tag
//             | BLOCK        an example-database match
//             | CONTENT      any word or block
//             | MARKER       any function-word marker
//             | AUX          a marker carrying an aux_* flag
//             | feature      any flag name, e.g. ergative_marked
//
// A bare '*' matches any run of units. Quantified elements are greedy.
//
// A template lists `$N` capture references and the literal slots
// LINKING_VERB and QUESTION_AUX. Every element that can match a word must be
// referenced exactly once, so no content is lost; marker-only elements may
// be left out, which drops them.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hmt/tagger.h"

namespace hmt {

enum class SentenceForm { kDeclarative, kYesNoQuestion, kWhQuestion };

std::string_view sentence_form_name(SentenceForm form);
std::optional<SentenceForm> parse_sentence_form(std::string_view name);

struct PatternAtom {
  enum class Kind { kTag, kBlock, kContent, kMarker, kAux, kFeature };
  Kind kind = Kind::kContent;
  Tag tag = Tag::kNoun;
  Feature feature = Feature::kErgativeMarked;

  bool matches(const TaggedUnit& unit) const;
  bool can_match_content() const;
};

struct PatternElement {
  enum class Quantifier { kOne, kOptional, kPlus, kStar };
  bool wildcard = false;
  std::vector<std::vector<PatternAtom>> alternatives;  // OR of ANDs
  Quantifier quantifier = Quantifier::kOne;

  bool matches(const TaggedUnit& unit) const;
  bool can_match_content() const;
};

struct TemplateSlot {
  enum class Kind { kCapture, kLinkingVerb, kQuestionAux };
  Kind kind = Kind::kCapture;
  std::size_t capture = 0;  // 0-based element index
};

struct GrammarRule {
  std::string id;
  std::vector<PatternElement> pattern;
  std::vector<TemplateSlot> slots;
  SentenceForm form = SentenceForm::kDeclarative;
  std::string pattern_text;
  std::string template_text;
};

// Half-open unit ranges, one per pattern element.
using Captures = std::vector<std::pair<std::size_t, std::size_t>>;

// Throws std::invalid_argument on syntax errors or unreferenced content
// elements.
GrammarRule parse_rule(std::string_view id, std::string_view pattern,
                       std::string_view templ, std::string_view form);

// Anchored match over `units`.
std::optional<Captures> match_rule(const GrammarRule& rule,
                                   std::span<const TaggedUnit> units);

class RuleSet {
 public:
  RuleSet() = default;
  explicit RuleSet(std::vector<GrammarRule> rules) : rules_(std::move(rules)) {}

  // `id<TAB>pattern<TAB>template<TAB>sentence_form`, in priority order.
  static RuleSet parse(std::istream& in);
  static RuleSet load(const std::filesystem::path& path);
  void write(std::ostream& out) const;

  const std::vector<GrammarRule>& rules() const { return rules_; }
  bool empty() const { return rules_.empty(); }

 private:
  std::vector<GrammarRule> rules_;
};

// `* -> $1`, used when no rule in a set matches.
const GrammarRule& fallback_rule();

// Units without punctuation, the sequence rules are matched against.
std::vector<TaggedUnit> rule_view(std::span<const TaggedUnit> units);

// First rule in file order matching the whole sequence. A sentence-initial
// question particle restricts the search to yes/no-question rules and a
// medial one to wh-question rules, when any of those match.
const GrammarRule& select_rule(std::span<const TaggedUnit> units,
                               const RuleSet& rules);

}  // namespace hmt

#endif  // HMT_GRAMMAR_H_
