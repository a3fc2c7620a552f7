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

#ifndef HMT_CORPUS_H_
#define HMT_CORPUS_H_

// Loading and validation of the three knowledge sources: the bilingual
// dictionary, the example (idiom/phrase) database and the parallel corpus.
// All files are UTF-8 TSV without a header. Malformed lines never abort a
// load; they are collected as rejects with their 1-based line numbers.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hmt/tag.h"

namespace hmt {

enum class InflectionClass { kRegular, kIrregular };

struct DictionaryEntry {
  std::string hindi;    // NFC
  std::string english;  // lower case
  Tag tag = Tag::kNoun;
  std::optional<InflectionClass> inflection;

  friend bool operator==(const DictionaryEntry&,
                         const DictionaryEntry&) = default;
};

enum class ExampleCategory { kIdiom, kPhrase, kFullSentence };

std::string_view category_name(ExampleCategory category);
std::optional<ExampleCategory> parse_example_category(std::string_view name);

struct ExampleEntry {
  std::vector<std::string> hindi_tokens;  // word tokens only
  std::string english;
  ExampleCategory category = ExampleCategory::kPhrase;

  friend bool operator==(const ExampleEntry&, const ExampleEntry&) = default;
};

struct ParallelPair {
  std::string hindi;
  std::string english;

  friend bool operator==(const ParallelPair&, const ParallelPair&) = default;
};

struct Reject {
  std::size_t line = 0;
  std::string reason;
};

template <typename T>
struct LoadResult {
  std::vector<T> entries;
  std::vector<Reject> rejects;
  std::size_t nonblank_lines = 0;
};

// A file that cannot be opened at all.
class LoadError : public std::runtime_error {
 public:
  LoadError(std::filesystem::path path, const std::string& what)
      : std::runtime_error(path.string() + ": " + what),
        path_(std::move(path)) {}
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

// A malformed line in a curated configuration table (transliteration,
// function words, grammar rules, irregular verbs). Unlike the corpora, these
// files are small and hand-edited, so one bad line fails the whole load.
class FormatError : public std::runtime_error {
 public:
  FormatError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Opens `path` and runs `parse(stream)`, converting a FormatError into a
// LoadError that names the path.
template <typename Parse>
auto load_table(const std::filesystem::path& path, Parse parse);

// `hindi<TAB>english<TAB>tag[<TAB>regular|irregular]`. Duplicate triples
// are reported as rejects; the first occurrence is kept.
LoadResult<DictionaryEntry> parse_dictionary(std::istream& in);
LoadResult<DictionaryEntry> load_dictionary(const std::filesystem::path& path);

// `hindi phrase<TAB>english text<TAB>idiom|phrase|full_sentence`. Entries
// whose token sequence was already seen are rejected as duplicates.
LoadResult<ExampleEntry> parse_examples(std::istream& in);
LoadResult<ExampleEntry> load_examples(const std::filesystem::path& path);

// `hindi<TAB>english`.
LoadResult<ParallelPair> parse_parallel(std::istream& in);
LoadResult<ParallelPair> load_parallel(const std::filesystem::path& path);

void write_dictionary(std::ostream& out, std::span<const DictionaryEntry> entries);
void write_examples(std::ostream& out, std::span<const ExampleEntry> entries);
void write_parallel(std::ostream& out, std::span<const ParallelPair> pairs);

// Writes `line_number<TAB>reason` lines to `<input>.rejects`.
std::filesystem::path write_rejects_report(const std::filesystem::path& input,
                                           std::span<const Reject> rejects);

struct SideCounts {
  std::uint64_t hindi = 0;
  std::uint64_t english = 0;
  friend bool operator==(const SideCounts&, const SideCounts&) = default;
};

// Token and type counts use the word tokens of the shared tokenizer. Types
// are exact-codepoint on the Hindi side and case-sensitive on the English
// side. Characters are Unicode codepoints of the raw sentence. A sentence is
// short when its word count is at most 10, judged per side.
struct CorpusStats {
  SideCounts tokens;
  SideCounts types;
  SideCounts characters;
  std::uint64_t sentences = 0;
  SideCounts short_sentences;
  SideCounts long_sentences;
  friend bool operator==(const CorpusStats&, const CorpusStats&) = default;
};

CorpusStats corpus_stats(std::span<const ParallelPair> pairs);

// Reads the lines of a curated table: trims trailing CR, skips blank lines
// and `#` comments. Calls `fn(line_number, fields)`.
template <typename Fn>
void for_each_table_line(std::istream& in, Fn fn);

}  // namespace hmt

#include "hmt/corpus_inl.h"

#endif  // HMT_CORPUS_H_
