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

#ifndef HMT_TESTS_UNIT_BUILDERS_H_
#define HMT_TESTS_UNIT_BUILDERS_H_

// Hand-built tagged units for grammar and transfer tests.

#include <initializer_list>
#include <string>

#include "hmt/tagger.h"

namespace hmt::testing {

inline TaggedUnit word(const std::string& english, Tag tag,
                       FeatureSet features = {}) {
  TaggedUnit u;
  u.source.tokens = {{english, TokenKind::kWord}};
  u.kind = UnitKind::kContent;
  u.candidates = {{english, tag}};
  u.chosen = 0;
  u.features = features;
  return u;
}

inline TaggedUnit marker(const std::string& surface, FeatureSet features,
                         std::optional<std::string> gloss = std::nullopt) {
  TaggedUnit u;
  u.source.tokens = {{surface, TokenKind::kWord}};
  u.kind = UnitKind::kMarker;
  u.features = features;
  u.gloss = std::move(gloss);
  return u;
}

inline TaggedUnit block(const std::string& english) {
  TaggedUnit u;
  u.source.kind = SegmentKind::kExampleMatch;
  u.source.tokens = {{"X", TokenKind::kWord}};
  u.source.translation = english;
  u.kind = UnitKind::kBlock;
  u.candidates = {{english, std::nullopt}};
  u.chosen = 0;
  return u;
}

inline TaggedUnit punctuation(const std::string& mark) {
  TaggedUnit u;
  u.source.tokens = {{mark, TokenKind::kPunctuation}};
  u.kind = UnitKind::kPunctuation;
  return u;
}

}  // namespace hmt::testing

#endif  // HMT_TESTS_UNIT_BUILDERS_H_
