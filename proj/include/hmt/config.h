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

#ifndef HMT_CONFIG_H_
#define HMT_CONFIG_H_

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace hmt {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Knowledge-source paths and training knobs. An empty source path means the
// default file name inside data_dir.
struct PipelineConfig {
  std::filesystem::path data_dir = ".";
  std::filesystem::path bundle_dir = "bundle";
  std::filesystem::path dictionary;
  std::filesystem::path examples;
  std::filesystem::path parallel;
  std::filesystem::path translit;
  std::filesystem::path function_words;
  std::filesystem::path grammar_rules;
  std::filesystem::path irregular_verbs;
  std::filesystem::path proper_noun_rules;
  int lm_order = 2;
  double lm_k = 1.0;
  int em_iters = 5;
  bool trace = false;
  int threads = 1;

  std::filesystem::path dictionary_path() const;
  std::filesystem::path examples_path() const;
  std::filesystem::path parallel_path() const;
  std::filesystem::path translit_path() const;
  std::filesystem::path function_words_path() const;
  std::filesystem::path grammar_rules_path() const;
  std::filesystem::path irregular_verbs_path() const;
  std::filesystem::path proper_noun_rules_path() const;

  // Throws ConfigError for non-positive knobs.
  void validate() const;
};

// `key = value` lines; `#` starts a comment. Relative paths are resolved
// against `base_dir`. Throws ConfigError on unknown keys or bad values.
PipelineConfig parse_config(std::istream& in, const std::filesystem::path& base_dir,
                            PipelineConfig config = {});
PipelineConfig load_config(const std::filesystem::path& path,
                           PipelineConfig config = {});

}  // namespace hmt

#endif  // HMT_CONFIG_H_
