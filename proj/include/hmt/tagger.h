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

#ifndef HMT_TAGGER_H_
#define HMT_TAGGER_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hmt/example_index.h"
#include "hmt/lexicon.h"
#include "hmt/tag.h"
#include "hmt/transliterate.h"

namespace hmt {

// Morphosyntactic flags attached to units. The first ten are the core set;
// conjunction, case_marker and perfective are used by the fixture rules for
// "और", "का/से/को" and perfective verb forms such as "किया".
enum class Feature : std::uint8_t {
  kErgativeMarked,
  kPluralMarked,
  kQuestionParticleInitial,
  kQuestionParticleMedial,
  kAuxPresent,
  kAuxPast,
  kAuxContinuous,
  kFirstPerson,
  kSecondPerson,
  kThirdPerson,
  kConjunction,
  kCaseMarker,
  kPerfective,
};
inline constexpr int kFeatureCount = 13;

std::string_view feature_name(Feature f);
std::optional<Feature> parse_feature(std::string_view name);

class FeatureSet {
 public:
  FeatureSet() = default;
  FeatureSet(std::initializer_list<Feature> features) {
    for (Feature f : features) set(f);
  }
  void set(Feature f) { bits_ |= bit(f); }
  void reset(Feature f) { bits_ &= ~bit(f); }
  bool has(Feature f) const { return (bits_ & bit(f)) != 0; }
  bool empty() const { return bits_ == 0; }
  FeatureSet& operator|=(FeatureSet other) {
    bits_ |= other.bits_;
    return *this;
  }
  std::vector<Feature> list() const;
  friend bool operator==(FeatureSet, FeatureSet) = default;

 private:
  static std::uint32_t bit(Feature f) {
    return 1u << static_cast<unsigned>(f);
  }
  std::uint32_t bits_ = 0;
};

// Flags that turn a word into a marker unit rather than a content word.
bool is_marker_feature(Feature f);

struct FunctionWord {
  FeatureSet flags;
  bool question_particle = false;  // resolved to initial/medial by position
  std::optional<std::string> gloss;
};

// `surface<TAB>feature_flag[<TAB>english gloss]`. A surface may appear on
// several lines; its flags accumulate. `question_particle` is accepted as a
// flag and resolved per sentence.
class FunctionWordTable {
 public:
  static FunctionWordTable parse(std::istream& in);
  static FunctionWordTable load(const std::filesystem::path& path);

  void add(const std::string& surface, std::string_view flag,
           std::optional<std::string> gloss);
  const FunctionWord* find(std::string_view surface) const;
  void write(std::ostream& out) const;

 private:
  struct Line {
    std::string surface;
    std::string flag;
    std::optional<std::string> gloss;
  };
  std::map<std::string, FunctionWord> words_;
  std::vector<Line> lines_;
};

enum class ProperNounRule {
  kOov,              // R1
  kErgativeAgent,    // R2
  kCopularIdentity,  // R3
};

std::string_view rule_id(ProperNounRule rule);

// One rule id per line; the line order is the application order. A leading
// '!' disables a rule. Unknown ids are kept in `unknown` and ignored.
struct ProperNounRules {
  std::vector<ProperNounRule> order = {ProperNounRule::kOov,
                                       ProperNounRule::kErgativeAgent,
                                       ProperNounRule::kCopularIdentity};
  std::vector<std::string> unknown;

  static ProperNounRules parse(std::istream& in);
  static ProperNounRules load(const std::filesystem::path& path);
  void write(std::ostream& out) const;
};

enum class UnitKind { kContent, kMarker, kBlock, kPunctuation };

struct Candidate {
  std::string english;
  std::optional<Tag> tag;  // empty for example blocks
  friend bool operator==(const Candidate&, const Candidate&) = default;
};

struct TaggedUnit {
  Segment source;
  UnitKind kind = UnitKind::kContent;
  std::vector<Candidate> candidates;
  std::optional<std::size_t> chosen;
  FeatureSet features;
  std::optional<std::string> gloss;  // marker rendering, e.g. "and"
  bool in_lexicon = false;
  bool function_word = false;
  std::optional<ProperNounRule> name_rule;

  const std::string& surface() const { return source.tokens.front().surface; }
  const Candidate* chosen_candidate() const {
    return chosen ? &candidates[*chosen] : nullptr;
  }
  // Chosen candidate's tag, else the first candidate's.
  std::optional<Tag> tag() const;
  bool is_content_like() const {
    return kind == UnitKind::kContent || kind == UnitKind::kBlock;
  }
};

std::vector<Sense> lookup(std::string_view word, const Lexicon& lexicon);

struct TaggerResources {
  const Lexicon& lexicon;
  const TransliterationTable& translit;
  const FunctionWordTable& function_words;
  const ProperNounRules& rules;
};

// Applies the proper-noun rules in `order`. A fired rule replaces the unit's
// candidates with the single (transliteration, NAME) candidate.
void identify_proper_nouns(std::vector<TaggedUnit>& units,
                           const TaggerResources& res,
                           std::span<const ProperNounRule> order,
                           std::vector<std::string>* warnings = nullptr);

// Segments -> tagged units, one per segment and in the same order. Function
// words become marker units; out-of-vocabulary words fall back to a
// transliterated NAME candidate. Units with one candidate have it chosen;
// ambiguous ones are left for disambiguation.
std::vector<TaggedUnit> tag_sentence(std::span<const Segment> segments,
                                     const TaggerResources& res,
                                     std::vector<std::string>* warnings = nullptr);

}  // namespace hmt

#endif  // HMT_TAGGER_H_
