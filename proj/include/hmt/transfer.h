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

#ifndef HMT_TRANSFER_H_
#define HMT_TRANSFER_H_

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hmt/grammar.h"
#include "hmt/morphology.h"
#include "hmt/tagger.h"

namespace hmt {

using Trace = std::vector<std::pair<std::string, std::string>>;

struct RenderedSentence {
  std::string text;
  Trace trace;  // (stage, representation)
};

// Index into `units` of the main verb: the last word whose chosen tag is
// VERB, or units.size() if there is none.
std::size_t main_verb_index(std::span<const TaggedUnit> units);

// Fills `rule`'s template from the units. Markers render their gloss or
// vanish; blocks render their stored translation without its final
// punctuation; the main verb is inflected for `info`. Question rules front
// an auxiliary (QUESTION_AUX) and leave the verb as a participle or bare
// lemma. LINKING_VERB renders only when there is no main verb. The result is
// capitalized sentence-initially and on NAME words and ends in "." or "?".
// Empty input renders as empty text.
RenderedSentence rearrange(std::span<const TaggedUnit> units,
                           const GrammarRule& rule, const TenseInfo& info,
                           const Morphology& morphology);

}  // namespace hmt

#endif  // HMT_TRANSFER_H_
