// Copyright 2026 The paracomp Authors.
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

#include <doctest.h>

#include "paracomp/naturalness.h"
#include "test_util.h"
#include "unnat_oracle.h"

using namespace paracomp;

TEST_SUITE("naturalness") {

TEST_CASE("dialectal base over gender-marked persons") {
  const Paradigm p = testing::make({{"PERS", {"2", "3"}}, {"NUM", {"s", "p"}}, {"GEN", {"m", "f"}}},
                                   {"ta-", "ta- -i", "ta- -u", "ta- -u", "ya-", "ta-", "ya- -u",
                                    "ya- -u"});
  CHECK(unnaturalness(p) == 4);
  CHECK(oracle::brute_force_unnaturalness(p) == 4);
}

TEST_CASE("dialectal base over the full product space") {
  // First-person forms are shared by both genders, adding one per class.
  const Paradigm p = testing::dialectal();
  CHECK(unnaturalness(p) == 6);
  CHECK(oracle::brute_force_unnaturalness(p) == 6);
}

TEST_CASE("extremes") {
  const std::vector<Category> cats{{"A", {"x", "y", "z"}}, {"B", {"p", "q"}}};
  CHECK(unnaturalness(testing::make(cats, {"a", "b", "c", "d", "e", "f"})) == 0);
  // One class spanning everything: (3-1) + (2-1).
  CHECK(unnaturalness(testing::make(cats, {"a", "a", "a", "a", "a", "a"})) == 3);
}

TEST_CASE("agrees with the brute-force oracle on random paradigms") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const Paradigm p = testing::random_paradigm(rng, 4, 4, 1 + trial % 8);
    REQUIRE(unnaturalness(p) == oracle::brute_force_unnaturalness(p));
    CHECK(unnaturalness(p, syncretism_partition(p)) == unnaturalness(p));
  }
}

}  // TEST_SUITE
