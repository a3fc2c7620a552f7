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

#ifndef HMT_TAG_H_
#define HMT_TAG_H_

#include <array>
#include <optional>
#include <string_view>

namespace hmt {

// The closed tag inventory used by the dictionary and the grammar rules.
enum class Tag { kPron, kAnimt, kVerb, kAdj, kAdv, kNoun, kName };

inline constexpr std::array<Tag, 7> kAllTags = {
    Tag::kPron, Tag::kAnimt, Tag::kVerb, Tag::kAdj,
    Tag::kAdv,  Tag::kNoun,  Tag::kName};

std::string_view tag_name(Tag tag);

// Accepts the upper-case names ("PRON", "NAME", ...).
std::optional<Tag> parse_tag(std::string_view name);

// NOUN, ANIMT and NAME.
bool is_nominal(Tag tag);

}  // namespace hmt

#endif  // HMT_TAG_H_
