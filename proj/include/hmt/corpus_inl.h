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

#ifndef HMT_CORPUS_INL_H_
#define HMT_CORPUS_INL_H_

#include <fstream>
#include <istream>
#include <string>

#include "hmt/text.h"

namespace hmt {

template <typename Parse>
auto load_table(const std::filesystem::path& path, Parse parse) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError(path, "cannot open file");
  try {
    return parse(in);
  } catch (const FormatError& e) {
    throw LoadError(path, e.what());
  }
}

template <typename Fn>
void for_each_table_line(std::istream& in, Fn fn) {
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view trimmed = trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    std::vector<std::string_view> fields = split(line, '\t');
    for (auto& f : fields) f = trim(f);
    fn(line_number, fields);
  }
}

}  // namespace hmt

#endif  // HMT_CORPUS_INL_H_
