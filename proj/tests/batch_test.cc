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

#include <stdexcept>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "hmt/batch.h"

namespace hmt {
namespace {

std::vector<std::string> numbered(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

std::string shout(const std::string& s) {
  if (s.size() > 1 && s.back() == '7') throw std::runtime_error("bad " + s);
  return "<" + s + ">";
}

TEST(BatchTest, OrderIsPreserved) {
  const auto inputs = numbered(100);
  const auto items = run_batch(inputs, shout, 4);
  ASSERT_EQ(items.size(), inputs.size());
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (items[i].error) continue;
    EXPECT_EQ(items[i].output, "<" + inputs[i] + ">");
  }
}

TEST(BatchTest, ErrorsAreCapturedPerItem) {
  const auto items = run_batch(numbered(30), shout, 3);
  EXPECT_FALSE(items[7].error.has_value());
  ASSERT_TRUE(items[17].error.has_value());
  EXPECT_EQ(*items[17].error, "bad 17");
  EXPECT_EQ(items[17].output, "");
  EXPECT_FALSE(items[18].error.has_value());
}

TEST(BatchTest, ParallelMatchesSerialReference) {
  const auto inputs = numbered(257);
  const auto serial = run_batch_serial(inputs, shout);
  for (int threads : {1, 2, 3, 8}) {
    EXPECT_EQ(run_batch(inputs, shout, threads), serial) << threads;
  }
}

TEST(BatchTest, EmptyInput) {
  EXPECT_TRUE(run_batch({}, shout, 4).empty());
  EXPECT_TRUE(run_batch_serial({}, shout).empty());
}

}  // namespace
}  // namespace hmt
