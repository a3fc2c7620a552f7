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

#include "hmt/config.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <string_view>

#include "hmt/text.h"

namespace hmt {
namespace {

std::filesystem::path or_default(const std::filesystem::path& explicit_path,
                                 const std::filesystem::path& data_dir,
                                 std::string_view name) {
  return (explicit_path.empty() ? data_dir / name : explicit_path).lexically_normal();
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError("bad value for " + std::string(key) + ": '" +
                      std::string(value) + "'");
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
  const std::string v = ascii_lower(value);
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("bad value for " + std::string(key) + ": '" +
                    std::string(value) + "'");
}

}  // namespace

std::filesystem::path PipelineConfig::dictionary_path() const {
  return or_default(dictionary, data_dir, "dictionary.tsv");
}
std::filesystem::path PipelineConfig::examples_path() const {
  return or_default(examples, data_dir, "examples.tsv");
}
std::filesystem::path PipelineConfig::parallel_path() const {
  return or_default(parallel, data_dir, "parallel.tsv");
}
std::filesystem::path PipelineConfig::translit_path() const {
  return or_default(translit, data_dir, "translit.tsv");
}
std::filesystem::path PipelineConfig::function_words_path() const {
  return or_default(function_words, data_dir, "function_words.tsv");
}
std::filesystem::path PipelineConfig::grammar_rules_path() const {
  return or_default(grammar_rules, data_dir, "grammar_rules.tsv");
}
std::filesystem::path PipelineConfig::irregular_verbs_path() const {
  return or_default(irregular_verbs, data_dir, "irregular_verbs.tsv");
}
std::filesystem::path PipelineConfig::proper_noun_rules_path() const {
  return or_default(proper_noun_rules, data_dir, "proper_noun_rules.txt");
}

void PipelineConfig::validate() const {
  if (lm_order < 1) throw ConfigError("lm_order must be positive");
  if (!(lm_k > 0)) throw ConfigError("lm_k must be positive");
  if (em_iters < 1) throw ConfigError("em_iters must be positive");
  if (threads < 1) throw ConfigError("threads must be positive");
}

PipelineConfig parse_config(std::istream& in, const std::filesystem::path& base_dir,
                            PipelineConfig config) {
  std::string raw;
  std::size_t line_number = 0;
  while (std::getline(in, raw)) {
    ++line_number;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_number) + ": expected key = value");
    }
    const std::string_view key = trim(line.substr(0, eq));
    std::string_view value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    auto path = [&] { return base_dir / std::filesystem::path(std::string(value)); };

    if (key == "data_dir") config.data_dir = path();
    else if (key == "bundle_dir") config.bundle_dir = path();
    else if (key == "dictionary") config.dictionary = path();
    else if (key == "examples") config.examples = path();
    else if (key == "parallel") config.parallel = path();
    else if (key == "translit") config.translit = path();
    else if (key == "function_words") config.function_words = path();
    else if (key == "grammar_rules") config.grammar_rules = path();
    else if (key == "irregular_verbs") config.irregular_verbs = path();
    else if (key == "proper_noun_rules") config.proper_noun_rules = path();
    else if (key == "lm_order") config.lm_order = parse_number<int>(key, value);
    else if (key == "lm_k") config.lm_k = parse_number<double>(key, value);
    else if (key == "em_iters") config.em_iters = parse_number<int>(key, value);
    else if (key == "trace") config.trace = parse_bool(key, value);
    else if (key == "threads") config.threads = parse_number<int>(key, value);
    else throw ConfigError("unknown key '" + std::string(key) + "'");
  }
  return config;
}

PipelineConfig load_config(const std::filesystem::path& path, PipelineConfig config) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string() + ": cannot open file");
  try {
    return parse_config(in, path.parent_path(), std::move(config));
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

}  // namespace hmt
