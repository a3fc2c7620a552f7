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

#ifndef HMT_MORPHOLOGY_H_
#define HMT_MORPHOLOGY_H_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hmt/tagger.h"

namespace hmt {

enum class Tense { kSimplePresent, kPresentContinuous, kSimplePast, kPastContinuous };
enum class Person { kFirst, kSecond, kThird };
enum class Number { kSingular, kPlural };

struct TenseInfo {
  Tense tense = Tense::kSimplePresent;
  Person person = Person::kThird;
  Number number = Number::kSingular;
  friend bool operator==(const TenseInfo&, const TenseInfo&) = default;
};

std::string_view tense_name(Tense t);
bool is_continuous(Tense t);
bool is_past(Tense t);

// Tense from the auxiliary flags of all units; person from the leftmost unit
// carrying a person flag; plural if any unit is plural-marked. Defaults to
// simple present, third person singular.
TenseInfo detect_tense(std::span<const TaggedUnit> units);

// am / is / are / was / were.
std::string_view linking_verb(const TenseInfo& info);

struct IrregularVerb {
  std::string lemma;
  std::string past;
  std::string past_participle;
};

class Morphology {
 public:
  Morphology() = default;
  explicit Morphology(std::vector<IrregularVerb> irregulars);

  // `lemma<TAB>past<TAB>past_participle`.
  static Morphology parse(std::istream& in);
  static Morphology load(const std::filesystem::path& path);
  void write(std::ostream& out) const;

  const IrregularVerb* irregular(std::string_view lemma) const;
  // Maps a listed past or participle form back to its lemma ("did" -> "do");
  // any other word is returned unchanged.
  std::string lemma_of(std::string_view word) const;

  std::string present_participle(std::string_view lemma) const;
  std::string past(std::string_view lemma) const;
  std::string third_singular(std::string_view lemma) const;
  // do / does / did for questions without another auxiliary.
  std::string_view do_support(const TenseInfo& info) const;

  const std::vector<IrregularVerb>& irregulars() const { return irregulars_; }

 private:
  std::vector<IrregularVerb> irregulars_;
  std::map<std::string, std::size_t, std::less<>> by_lemma_;
  std::map<std::string, std::size_t, std::less<>> by_form_;
};

// Verbs that double their final consonant before -ing and -ed.
bool doubles_final_consonant(std::string_view lemma);

// Continuous -> lemma+ing; simple past -> irregular form or lemma+ed;
// simple present third singular -> lemma+s/es; otherwise the lemma. In a
// phrasal verb ("look after") only the first word is inflected.
std::string inflect_verb(std::string_view lemma, const TenseInfo& info,
                         const Morphology& morphology);

}  // namespace hmt

#endif  // HMT_MORPHOLOGY_H_
