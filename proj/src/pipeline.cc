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

#include "hmt/pipeline.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include "hmt/disambiguate.h"
#include "hmt/text.h"
#include "hmt/tokenizer.h"

namespace hmt {
namespace {

constexpr const char* kManifest = "bundle.manifest";

template <typename T>
std::vector<T> keep_entries(LoadResult<T> result, const std::filesystem::path& path,
                            RejectReport* rejects) {
  if (rejects != nullptr) (*rejects)[path] = std::move(result.rejects);
  return std::move(result.entries);
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw LoadError(path, "cannot write file");
  return out;
}

std::string shortest(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::map<std::string, std::string> read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError(path, "cannot open file");
  std::map<std::string, std::string> values;
  std::string line;
  while (std::getline(in, line)) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    values[std::string(trim(std::string_view(line).substr(0, eq)))] =
        std::string(trim(std::string_view(line).substr(eq + 1)));
  }
  return values;
}

}  // namespace

Bundle Bundle::build(const PipelineConfig& config, RejectReport* rejects) {
  config.validate();
  Bundle b;
  b.dictionary_ = keep_entries(load_dictionary(config.dictionary_path()),
                               config.dictionary_path(), rejects);
  b.lexicon_ = Lexicon(b.dictionary_);
  b.examples_ = build_index(keep_entries(load_examples(config.examples_path()),
                                         config.examples_path(), rejects));
  const std::vector<ParallelPair> pairs = keep_entries(
      load_parallel(config.parallel_path()), config.parallel_path(), rejects);
  b.translit_ = TransliterationTable::load(config.translit_path());
  b.function_words_ = FunctionWordTable::load(config.function_words_path());
  b.noun_rules_ = ProperNounRules::load(config.proper_noun_rules_path());
  b.grammar_ = RuleSet::load(config.grammar_rules_path());
  b.morphology_ = Morphology::load(config.irregular_verbs_path());

  std::vector<std::vector<std::string>> english;
  english.reserve(pairs.size());
  for (const ParallelPair& p : pairs) english.push_back(english_tokens(p.english));
  b.lm_ = train_lm(english, config.lm_order, config.lm_k);
  b.lex_ = train_lex(std::span<const ParallelPair>(pairs), config.em_iters);
  b.em_iters_ = config.em_iters;
  return b;
}

void Bundle::save(const std::filesystem::path& dir) const {
  std::filesystem::create_directories(dir);
  {
    auto out = open_out(dir / "dictionary.tsv");
    write_dictionary(out, dictionary_);
  }
  {
    auto out = open_out(dir / "examples.tsv");
    write_examples(out, examples_.entries());
  }
  {
    auto out = open_out(dir / "translit.tsv");
    translit_.write(out);
  }
  {
    auto out = open_out(dir / "function_words.tsv");
    function_words_.write(out);
  }
  {
    auto out = open_out(dir / "proper_noun_rules.txt");
    noun_rules_.write(out);
  }
  {
    auto out = open_out(dir / "grammar_rules.tsv");
    grammar_.write(out);
  }
  {
    auto out = open_out(dir / "irregular_verbs.tsv");
    morphology_.write(out);
  }
  {
    auto out = open_out(dir / "lm.counts");
    lm_.write(out);
  }
  {
    auto out = open_out(dir / "lex.table");
    lex_.write(out);
  }
  auto out = open_out(dir / kManifest);
  out << "schema_version=" << kSchemaVersion << '\n'
      << "lm_order=" << lm_.order() << '\n'
      << "lm_k=" << shortest(lm_.k()) << '\n'
      << "em_iters=" << em_iters_ << '\n';
}

Bundle Bundle::load(const std::filesystem::path& dir) {
  const auto manifest = read_manifest(dir / kManifest);
  const auto version = manifest.find("schema_version");
  if (version == manifest.end() || version->second != std::to_string(kSchemaVersion)) {
    throw LoadError(dir / kManifest, "unsupported schema_version");
  }
  Bundle b;
  b.dictionary_ = load_dictionary(dir / "dictionary.tsv").entries;
  b.lexicon_ = Lexicon(b.dictionary_);
  b.examples_ = build_index(load_examples(dir / "examples.tsv").entries);
  b.translit_ = TransliterationTable::load(dir / "translit.tsv");
  b.function_words_ = FunctionWordTable::load(dir / "function_words.tsv");
  b.noun_rules_ = ProperNounRules::load(dir / "proper_noun_rules.txt");
  b.grammar_ = RuleSet::load(dir / "grammar_rules.tsv");
  b.morphology_ = Morphology::load(dir / "irregular_verbs.tsv");
  b.lm_ = NGramModel::load(dir / "lm.counts");
  b.lex_ = TranslationTable::load(dir / "lex.table");
  if (auto it = manifest.find("em_iters"); it != manifest.end()) {
    b.em_iters_ = std::stoi(it->second);
  }
  return b;
}

TranslationResult Bundle::translate(std::string_view sentence, bool trace) const {
  TranslationResult r;
  r.source = std::string(sentence);
  const std::vector<Token> tokens = tokenize(sentence);
  if (tokens.empty()) return r;

  r.segments = segment(tokens, examples_);
  if (trace) r.trace.emplace_back(kStageSegmentation, format_segments(r.segments));

  r.units = tag_sentence(r.segments, tagger_resources(), &r.warnings);
  if (trace) r.trace.emplace_back(kStageTagging, format_units(r.units, false));

  disambiguate_units(r.units, lm_, lex_);
  if (trace) r.trace.emplace_back(kStageDisambiguation, format_units(r.units, true));

  const TenseInfo info = detect_tense(r.units);
  const GrammarRule& rule = select_rule(r.units, grammar_);
  RenderedSentence rendered = rearrange(r.units, rule, info, morphology_);
  r.rule_id = rule.id;
  r.output = std::move(rendered.text);
  if (trace) {
    r.trace.emplace_back(kStageRearrangement,
                         "[" + r.rule_id + ", " + std::string(tense_name(info.tense)) +
                             "] " + r.output);
  }
  return r;
}

std::string format_segments(std::span<const Segment> segments) {
  std::string out = "[";
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (i > 0) out += ", ";
    out += "'" + segments[i].surface() + "'";
  }
  return out + "]";
}

std::string format_units(std::span<const TaggedUnit> units, bool chosen_only) {
  std::string out = "[";
  for (std::size_t i = 0; i < units.size(); ++i) {
    const TaggedUnit& u = units[i];
    if (i > 0) out += ", ";
    switch (u.kind) {
      case UnitKind::kPunctuation:
        out += u.surface();
        break;
      case UnitKind::kMarker: {
        std::vector<std::string> flags;
        for (Feature f : u.features.list()) flags.emplace_back(feature_name(f));
        out += "'" + u.surface() + "'<" + join(flags, ",") + ">";
        break;
      }
      case UnitKind::kBlock:
        out += "'" + u.candidates.front().english + "'<BLOCK>";
        break;
      case UnitKind::kContent: {
        std::vector<std::string> shown;
        for (std::size_t c = 0; c < u.candidates.size(); ++c) {
          if (chosen_only && u.chosen && *u.chosen != c) continue;
          const Candidate& cand = u.candidates[c];
          shown.push_back("'" + cand.english + "'<" +
                          std::string(cand.tag ? tag_name(*cand.tag) : "?") + ">");
        }
        out += join(shown, "|");
        break;
      }
    }
  }
  return out + "]";
}

}  // namespace hmt
