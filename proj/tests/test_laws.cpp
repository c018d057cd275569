// Copyright 2026 The ogame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

namespace ogame {
namespace {

TEST(Laws, NamesAreUnique) {
  std::set<std::string> names;
  for (const auto& l : all_laws()) names.insert(l.name);
  EXPECT_EQ(names.size(), all_laws().size());
  EXPECT_EQ(names.size(), 30u);
}

TEST(Laws, AllHoldOnSmallRun) {
  LawOptions opt;
  opt.instances = 40;
  for (const auto& r : run_laws(opt)) {
    EXPECT_TRUE(r.passed) << r.name << ": " << r.counterexample;
    EXPECT_EQ(r.instances, 40u);
  }
}

TEST(Laws, OtherSeedsHold) {
  for (std::uint64_t seed : {1u, 99u}) {
    LawOptions opt;
    opt.seed = seed;
    opt.instances = 15;
    for (const auto& r : run_laws(opt)) EXPECT_TRUE(r.passed) << r.name << ": " << r.counterexample;
  }
}

TEST(Laws, CorruptedCompositionIsCaught) {
  LawOptions opt;
  opt.instances = 100;
  opt.corrupt_compose = true;
  std::size_t failed = 0;
  for (const auto& r : run_laws(opt)) {
    if (r.name.rfind("lens.", 0) != 0) continue;
    EXPECT_FALSE(r.passed) << r.name;
    EXPECT_FALSE(r.counterexample.empty());
    failed += !r.passed;
  }
  EXPECT_EQ(failed, 6u);
}

TEST(Laws, CounterexamplesShrink) {
  LawOptions opt;
  opt.instances = 100;
  opt.corrupt_compose = true;
  const auto laws = all_laws();
  auto r = run_law(laws.front(), opt);
  ASSERT_FALSE(r.passed);
  // The smallest atom bound already fails, so no carrier has three atoms.
  EXPECT_EQ(r.counterexample.find("D3"), std::string::npos) << r.counterexample;
}

TEST(Laws, Deterministic) {
  LawOptions opt;
  opt.instances = 10;
  opt.corrupt_compose = true;
  auto a = run_laws(opt), b = run_laws(opt);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].passed, b[i].passed);
    EXPECT_EQ(a[i].counterexample, b[i].counterexample);
  }
}

}  // namespace
}  // namespace ogame
