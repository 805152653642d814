// Copyright 2026 The coinrig Authors
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

#include <gtest/gtest.h>

#include "coinrig/rigidity.hpp"
#include "coinrig/theorems.hpp"

namespace coinrig {
namespace {

TEST(Parallel, CrossValidationMatchesSerial) {
  XvalOptions opt;
  opt.samples = 60;
  opt.seed = 9;
  opt.exec = Execution::serial;
  const auto serial = cross_validate(opt);
  opt.exec = Execution::parallel;
  const auto parallel = cross_validate(opt);
  EXPECT_EQ(serial.samples, parallel.samples);
  EXPECT_EQ(serial.samples_per_t, parallel.samples_per_t);
  EXPECT_EQ(serial.independent_cases, parallel.independent_cases);
  EXPECT_EQ(serial.queries, parallel.queries);
  EXPECT_EQ(serial.mismatches, parallel.mismatches);
}

TEST(Parallel, GenericRankMatchesSerial) {
  for (const auto& f : fixtures()) {
    for (int d = 2; d <= 3; ++d) {
      const auto spec = CoincidenceSpec::of(f.T);
      const auto a = generic_rank(f.graph, spec, d, 4, 5, RankMethod::automatic, Execution::serial);
      const auto b = generic_rank(f.graph, spec, d, 4, 5, RankMethod::automatic, Execution::parallel);
      EXPECT_EQ(a.rank, b.rank) << f.name << " d=" << d;
      EXPECT_EQ(a.independent, b.independent);
    }
  }
}

TEST(Parallel, ConjectureSearchMatchesSerial) {
  const auto a = conjecture_search(7, 4, 40, 3, Execution::serial);
  const auto b = conjecture_search(7, 4, 40, 3, Execution::parallel);
  EXPECT_EQ(a.tested, b.tested);
  EXPECT_EQ(a.quarantined, b.quarantined);
  EXPECT_EQ(a.candidates.size(), b.candidates.size());
}

}  // namespace
}  // namespace coinrig
