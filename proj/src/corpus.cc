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

#include "hmt/corpus.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <tuple>
#include <unordered_set>

#include "hmt/text.h"
#include "hmt/tokenizer.h"

namespace hmt {

std::string_view category_name(ExampleCategory category) {
  switch (category) {
    case ExampleCategory::kIdiom: return "idiom";
    case ExampleCategory::kPhrase: return "phrase";
    case ExampleCategory::kFullSentence: return "full_sentence";
  }
  return "?";
}

std::optional<ExampleCategory> parse_example_category(std::string_view name) {
  for (auto c : {ExampleCategory::kIdiom, ExampleCategory::kPhrase,
                 ExampleCategory::kFullSentence}) {
    if (category_name(c) == name) return c;
  }
  return std::nullopt;
}

namespace {

// Calls `fn(line_number, fields)` for every nonblank line and collects the
// reject reason it returns, if any.
template <typename T, typename Fn>
LoadResult<T> parse_lines(std::istream& in, Fn fn) {
  LoadResult<T> result;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    ++result.nonblank_lines;
    std::vector<std::string_view> fields = split(line, '\t');
    for (auto& f : fields) f = trim(f);
    std::optional<std::string> reason = fn(fields, result.entries);
    if (reason) result.rejects.push_back({line_number, std::move(*reason)});
  }
  return result;
}

std::string field_count_reason(std::size_t expected, std::size_t found) {
  return "expected " + std::to_string(expected) +
         " tab-separated fields, found " + std::to_string(found);
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError(path, "cannot open file");
  return in;
}

}  // namespace

LoadResult<DictionaryEntry> parse_dictionary(std::istream& in) {
  std::set<std::tuple<std::string, std::string, Tag>> seen;
  return parse_lines<DictionaryEntry>(
      in, [&](const std::vector<std::string_view>& fields,
              std::vector<DictionaryEntry>& out) -> std::optional<std::string> {
        if (fields.size() != 3 && fields.size() != 4) {
          return field_count_reason(3, fields.size());
        }
        if (fields[0].empty()) return "empty hindi field";
        if (fields[1].empty()) return "empty english field";
        std::optional<Tag> tag = parse_tag(fields[2]);
        if (!tag) return "unknown tag '" + std::string(fields[2]) + "'";
        DictionaryEntry entry{nfc(fields[0]), ascii_lower(nfc(fields[1])), *tag,
                              std::nullopt};
        if (fields.size() == 4) {
          if (fields[3] == "regular") {
            entry.inflection = InflectionClass::kRegular;
          } else if (fields[3] == "irregular") {
            entry.inflection = InflectionClass::kIrregular;
          } else {
            return "unknown inflection class '" + std::string(fields[3]) + "'";
          }
        }
        if (!seen.emplace(entry.hindi, entry.english, entry.tag).second) {
          return "duplicate entry";
        }
        out.push_back(std::move(entry));
        return std::nullopt;
      });
}

LoadResult<ExampleEntry> parse_examples(std::istream& in) {
  std::set<std::vector<std::string>> seen;
  return parse_lines<ExampleEntry>(
      in, [&](const std::vector<std::string_view>& fields,
              std::vector<ExampleEntry>& out) -> std::optional<std::string> {
        if (fields.size() != 3) return field_count_reason(3, fields.size());
        std::vector<std::string> tokens = word_surfaces(tokenize(fields[0]));
        if (tokens.empty()) return "empty hindi phrase";
        if (fields[1].empty()) return "empty english text";
        std::optional<ExampleCategory> category =
            parse_example_category(fields[2]);
        if (!category) return "unknown category '" + std::string(fields[2]) + "'";
        if (!seen.insert(tokens).second) return "duplicate hindi phrase";
        out.push_back({std::move(tokens), nfc(fields[1]), *category});
        return std::nullopt;
      });
}

LoadResult<ParallelPair> parse_parallel(std::istream& in) {
  return parse_lines<ParallelPair>(
      in, [](const std::vector<std::string_view>& fields,
             std::vector<ParallelPair>& out) -> std::optional<std::string> {
        if (fields.size() != 2) return field_count_reason(2, fields.size());
        if (fields[0].empty()) return "empty hindi sentence";
        if (fields[1].empty()) return "empty english sentence";
        out.push_back({nfc(fields[0]), nfc(fields[1])});
        return std::nullopt;
      });
}

LoadResult<DictionaryEntry> load_dictionary(const std::filesystem::path& path) {
  std::ifstream in = open_or_throw(path);
  return parse_dictionary(in);
}

LoadResult<ExampleEntry> load_examples(const std::filesystem::path& path) {
  std::ifstream in = open_or_throw(path);
  return parse_examples(in);
}

LoadResult<ParallelPair> load_parallel(const std::filesystem::path& path) {
  std::ifstream in = open_or_throw(path);
  return parse_parallel(in);
}

void write_dictionary(std::ostream& out,
                      std::span<const DictionaryEntry> entries) {
  for (const DictionaryEntry& e : entries) {
    out << e.hindi << '\t' << e.english << '\t' << tag_name(e.tag);
    if (e.inflection) {
      out << '\t'
          << (*e.inflection == InflectionClass::kRegular ? "regular"
                                                         : "irregular");
    }
    out << '\n';
  }
}

void write_examples(std::ostream& out, std::span<const ExampleEntry> entries) {
  for (const ExampleEntry& e : entries) {
    out << join(e.hindi_tokens, " ") << '\t' << e.english << '\t'
        << category_name(e.category) << '\n';
  }
}

void write_parallel(std::ostream& out, std::span<const ParallelPair> pairs) {
  for (const ParallelPair& p : pairs) {
    out << p.hindi << '\t' << p.english << '\n';
  }
}

std::filesystem::path write_rejects_report(const std::filesystem::path& input,
                                           std::span<const Reject> rejects) {
  std::filesystem::path report = input;
  report += ".rejects";
  std::ofstream out(report, std::ios::binary | std::ios::trunc);
  if (!out) throw LoadError(report, "cannot write rejects report");
  for (const Reject& r : rejects) out << r.line << '\t' << r.reason << '\n';
  return report;
}

CorpusStats corpus_stats(std::span<const ParallelPair> pairs) {
  CorpusStats stats;
  std::unordered_set<std::string> hindi_types;
  std::unordered_set<std::string> english_types;
  auto count_side = [](const std::string& sentence,
                       std::unordered_set<std::string>& types,
                       std::uint64_t& tokens, std::uint64_t& characters,
                       std::uint64_t& short_count, std::uint64_t& long_count) {
    std::vector<std::string> words = word_surfaces(tokenize(sentence));
    tokens += words.size();
    characters += codepoint_count(sentence);
    for (auto& w : words) types.insert(std::move(w));
    (words.size() <= 10 ? short_count : long_count) += 1;
  };
  for (const ParallelPair& p : pairs) {
    ++stats.sentences;
    count_side(p.hindi, hindi_types, stats.tokens.hindi, stats.characters.hindi,
               stats.short_sentences.hindi, stats.long_sentences.hindi);
    count_side(p.english, english_types, stats.tokens.english,
               stats.characters.english, stats.short_sentences.english,
               stats.long_sentences.english);
  }
  stats.types = {hindi_types.size(), english_types.size()};
  return stats;
}

}  // namespace hmt
