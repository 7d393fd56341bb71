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

#include <cmath>

#include "oracle_values.h"
#include "paracomp/stats.h"
#include "test_util.h"

using namespace paracomp;
using namespace paracomp::stats;
using testing::error_of;

TEST_SUITE("stats") {

TEST_CASE("textbook t-test") {
  const std::vector<double> x{1.2, 0.8, 1.0, 1.4, 0.6};
  const auto r = one_sample_ttest(x);
  CHECK(r.mean == doctest::Approx(1.0));
  CHECK(r.sd == doctest::Approx(0.316227766).epsilon(1e-9));
  CHECK(r.t == doctest::Approx(7.0710678).epsilon(1e-7));
  CHECK(r.p == doctest::Approx(0.0021).epsilon(0.01));
  CHECK(r.n == 5);
}

TEST_CASE("t-test edge cases") {
  const auto sym = one_sample_ttest(std::vector<double>{-1.0, 1.0});
  CHECK(sym.t == 0.0);
  CHECK(sym.p == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(error_of([] { one_sample_ttest(std::vector<double>{1, 1, 1, 1}); }) ==
        ErrorKind::kZeroVariance);
  CHECK(error_of([] { one_sample_ttest(std::vector<double>{1}); }) == ErrorKind::kInvalidArgument);
}

TEST_CASE("t-test matches the reference implementation") {
  for (const auto& c : oracle::kTTest) {
    const auto r = one_sample_ttest(c.x);
    CHECK(std::abs(r.t - c.t) < 1e-6);
    CHECK(std::abs(r.p - c.p) < 1e-4);
    // Much tighter in practice.
    CHECK(std::abs(r.p - c.p) <= 1e-10 * std::max(1.0, c.p));
  }
}

TEST_CASE("student t tails") {
  CHECK(students_t_two_sided(0.0, 4.0) == doctest::Approx(1.0));
  CHECK(students_t_two_sided(2.0, 1e6) == doctest::Approx(0.0455).epsilon(1e-3));
  CHECK(students_t_two_sided(-3.0, 5.0) == students_t_two_sided(3.0, 5.0));
}

TEST_CASE("ranks average ties") {
  CHECK(average_ranks(std::vector<double>{10, 20, 20, 5}) == std::vector<double>{2, 3.5, 3.5, 1});
}

TEST_CASE("spearman examples") {
  const std::vector<double> u{1, 2, 3, 4};
  CHECK(spearman(u, std::vector<double>{1.0, 3.0, 2.0, 4.0}) == doctest::Approx(0.8));
  CHECK(spearman(u, std::vector<double>{1, 5, 9, 20}) == doctest::Approx(1.0));
  CHECK(spearman(u, std::vector<double>{4, 3, 2, 1}) == doctest::Approx(-1.0));
  CHECK(error_of([&] { spearman(u, std::vector<double>{2, 2, 2, 2}); }) ==
        ErrorKind::kDegenerateSample);
  CHECK(error_of([&] { pearson(u, std::vector<double>{1, 2}); }) == ErrorKind::kDegenerateSample);
}

TEST_CASE("spearman and pearson match the reference implementation") {
  for (const auto& c : oracle::kSpearman) {
    const double rho = spearman(c.x, c.y);
    CHECK(std::abs(rho - c.rho) < 1e-12);
    CHECK(std::abs(correlation_p_value(rho, c.x.size()) - c.p) < 1e-9);
    CHECK(std::abs(pearson(c.x, c.y) - c.pearson) < 1e-12);
  }
}

TEST_CASE("spearman is invariant under monotone transforms") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> n(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> x(12), y(12), fx, gy;
    for (auto& v : x) v = n(rng);
    for (auto& v : y) v = n(rng);
    for (double v : x) fx.push_back(std::exp(v));
    for (double v : y) gy.push_back(v * v * v + 2 * v);
    CHECK(spearman(x, y) == doctest::Approx(spearman(fx, gy)).epsilon(1e-12));
  }
}

}  // TEST_SUITE
