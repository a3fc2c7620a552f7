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

#ifndef HMT_PIPELINE_H_
#define HMT_PIPELINE_H_

// End-to-end translation: segmentation against the example database, word
// translation and tagging, n-gram/lexical disambiguation, and rule-based
// rearrangement.

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hmt/config.h"
#include "hmt/corpus.h"
#include "hmt/example_index.h"
#include "hmt/grammar.h"
#include "hmt/lex_table.h"
#include "hmt/lexicon.h"
#include "hmt/morphology.h"
#include "hmt/ngram_model.h"
#include "hmt/tagger.h"
#include "hmt/transfer.h"
#include "hmt/transliterate.h"

namespace hmt {

inline constexpr int kSchemaVersion = 1;

inline constexpr const char* kStageSegmentation = "Segmentation";
inline constexpr const char* kStageTagging = "Translation+Tagging";
inline constexpr const char* kStageDisambiguation = "Disambiguation";
inline constexpr const char* kStageRearrangement = "Rearrangement";

struct TranslationResult {
  std::string source;
  std::string output;
  std::vector<Segment> segments;
  std::vector<TaggedUnit> units;  // after disambiguation
  std::string rule_id;
  Trace trace;  // the four stages above, in order; empty unless requested
  std::vector<std::string> warnings;
};

// Rejects per source file, keyed by path.
using RejectReport = std::map<std::filesystem::path, std::vector<Reject>>;

// Everything translation needs. Immutable after construction, so one bundle
// may serve any number of concurrent translate() calls.
class Bundle {
 public:
  // Loads the sources named by `config`, trains the language model on the
  // English side of the parallel corpus and the lexical table on the pairs.
  // Throws LoadError for missing or malformed curated files.
  static Bundle build(const PipelineConfig& config, RejectReport* rejects = nullptr);

  // Writes every component as text. Rebuilding from identical inputs
  // writes identical files.
  void save(const std::filesystem::path& dir) const;
  static Bundle load(const std::filesystem::path& dir);

  TranslationResult translate(std::string_view sentence, bool trace = false) const;

  const std::vector<DictionaryEntry>& dictionary() const { return dictionary_; }
  const Lexicon& lexicon() const { return lexicon_; }
  const ExampleIndex& examples() const { return examples_; }
  const TransliterationTable& translit() const { return translit_; }
  const FunctionWordTable& function_words() const { return function_words_; }
  const ProperNounRules& noun_rules() const { return noun_rules_; }
  const RuleSet& grammar() const { return grammar_; }
  const Morphology& morphology() const { return morphology_; }
  const NGramModel& lm() const { return lm_; }
  const TranslationTable& lex() const { return lex_; }
  int em_iters() const { return em_iters_; }

  TaggerResources tagger_resources() const {
    return {lexicon_, translit_, function_words_, noun_rules_};
  }

 private:
  Bundle() = default;

  std::vector<DictionaryEntry> dictionary_;
  Lexicon lexicon_;
  ExampleIndex examples_;
  TransliterationTable translit_;
  FunctionWordTable function_words_;
  ProperNounRules noun_rules_;
  RuleSet grammar_;
  Morphology morphology_;
  NGramModel lm_{2, 1.0};
  TranslationTable lex_;
  int em_iters_ = 0;
};

// Bracketed single-line renderings of intermediate results, as in traces.
std::string format_segments(std::span<const Segment> segments);
std::string format_units(std::span<const TaggedUnit> units, bool chosen_only);

}  // namespace hmt

#endif  // HMT_PIPELINE_H_
