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

#include "hmt/transfer.h"

#include <cctype>

#include "hmt/text.h"

namespace hmt {
namespace {

bool has_slot(const GrammarRule& rule, TemplateSlot::Kind kind) {
  for (const TemplateSlot& s : rule.slots) {
    if (s.kind == kind) return true;
  }
  return false;
}

std::string strip_final_punctuation(std::string text) {
  while (!text.empty() && (text.back() == '.' || text.back() == '!' ||
                           text.back() == '?' || text.back() == ' ')) {
    text.pop_back();
  }
  return text;
}

std::string capitalize_words(const std::string& text) {
  std::string out = text;
  bool start = true;
  for (char& c : out) {
    if (start && std::islower(static_cast<unsigned char>(c))) {
      c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    start = c == ' ';
  }
  return out;
}

// Participle for a continuous question, bare lemma under do-support.
std::string question_verb(const std::string& lemma, const TenseInfo& info,
                          const Morphology& morphology) {
  if (!is_continuous(info.tense)) return lemma;
  const std::size_t space = lemma.find(' ');
  if (space == std::string::npos) return morphology.present_participle(lemma);
  return morphology.present_participle(lemma.substr(0, space)) +
         lemma.substr(space);
}

}  // namespace

std::size_t main_verb_index(std::span<const TaggedUnit> units) {
  std::size_t found = units.size();
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (units[i].kind == UnitKind::kContent && units[i].tag() == Tag::kVerb) {
      found = i;
    }
  }
  return found;
}

RenderedSentence rearrange(std::span<const TaggedUnit> units,
                           const GrammarRule& rule, const TenseInfo& info,
                           const Morphology& morphology) {
  RenderedSentence out;
  const std::vector<TaggedUnit> view = rule_view(units);
  if (view.empty()) return out;

  std::optional<Captures> captures = match_rule(rule, view);
  const GrammarRule* used = &rule;
  if (!captures) {
    used = &fallback_rule();
    captures = match_rule(*used, view);
  }
  out.trace.emplace_back("Rule", used->id);
  out.trace.emplace_back("Tense", std::string(tense_name(info.tense)));

  const std::size_t verb = main_verb_index(view);
  const bool has_verb = verb < view.size();
  const bool question = has_slot(*used, TemplateSlot::Kind::kQuestionAux);

  auto render_unit = [&](std::size_t i) -> std::string {
    const TaggedUnit& u = view[i];
    if (u.kind == UnitKind::kMarker) return u.gloss.value_or("");
    const Candidate* c = u.chosen_candidate();
    if (c == nullptr && !u.candidates.empty()) c = &u.candidates.front();
    if (c == nullptr) return "";
    if (u.kind == UnitKind::kBlock) return strip_final_punctuation(c->english);
    if (i == verb) {
      const std::string lemma = morphology.lemma_of(c->english);
      if (question) return question_verb(lemma, info, morphology);
      std::string v = inflect_verb(lemma, info, morphology);
      if (is_continuous(info.tense)) {
        v = std::string(linking_verb(info)) + " " + v;
      }
      return v;
    }
    if (u.tag() == Tag::kName) return capitalize_words(c->english);
    return c->english;
  };

  std::vector<std::string> words;
  auto push = [&](const std::string& piece) {
    for (std::string& w : split_words(piece)) words.push_back(std::move(w));
  };
  for (const TemplateSlot& slot : used->slots) {
    switch (slot.kind) {
      case TemplateSlot::Kind::kCapture: {
        const auto [begin, end] = (*captures)[slot.capture];
        for (std::size_t i = begin; i < end; ++i) push(render_unit(i));
        break;
      }
      case TemplateSlot::Kind::kLinkingVerb:
        if (!has_verb) push(std::string(linking_verb(info)));
        break;
      case TemplateSlot::Kind::kQuestionAux:
        if (!has_verb || is_continuous(info.tense)) {
          push(std::string(linking_verb(info)));
        } else {
          push(std::string(morphology.do_support(info)));
        }
        break;
    }
  }
  out.trace.emplace_back("Ordered", join(words, " "));

  for (std::string& w : words) {
    if (w == "i") w = "I";
  }
  std::string text = join(words, " ");
  if (text.empty()) return out;
  text[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  text += used->form == SentenceForm::kDeclarative ? "." : "?";
  out.text = std::move(text);
  out.trace.emplace_back("Output", out.text);
  return out;
}

}  // namespace hmt
