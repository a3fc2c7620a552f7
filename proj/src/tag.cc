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

#include "hmt/tag.h"

namespace hmt {

std::string_view tag_name(Tag tag) {
  switch (tag) {
    case Tag::kPron: return "PRON";
    case Tag::kAnimt: return "ANIMT";
    case Tag::kVerb: return "VERB";
    case Tag::kAdj: return "ADJ";
    case Tag::kAdv: return "ADV";
    case Tag::kNoun: return "NOUN";
    case Tag::kName: return "NAME";
  }
  return "?";
}

std::optional<Tag> parse_tag(std::string_view name) {
  for (Tag t : kAllTags) {
    if (tag_name(t) == name) return t;
  }
  return std::nullopt;
}

bool is_nominal(Tag tag) {
  return tag == Tag::kNoun || tag == Tag::kAnimt || tag == Tag::kName;
}

}  // namespace hmt
