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
#include "paracomp/counterfactual.h"
#include "paracomp/ib_measures.h"
#include "test_util.h"

using namespace paracomp;

TEST_SUITE("ib_measures") {

const std::vector<Category> kFour{{"A", {"x", "y"}}, {"B", {"p", "q"}}};

TEST_CASE("complexity closed forms") {
  const auto u4 = NeedDistribution::uniform(4);
  CHECK(ib_complexity(testing::make(kFour, {"a", "a", "a", "a"}), u4) == 0.0);
  CHECK(std::abs(ib_complexity(testing::make(kFour, {"a", "b", "c", "d"}), u4) - 2.0) < 1e-12);
  CHECK(std::abs(ib_complexity(testing::make(kFour, {"a", "a", "b", "b"}), u4) - 1.0) < 1e-12);
}

TEST_CASE("complexity matches the independent reference on the arabic paradigm") {
  const Paradigm p = testing::arabic();
  const auto need = read_need_file(testing::data_path("classical_arabic_need.tsv"), p);
  CHECK(std::abs(ib_complexity(p, need) - oracle::kArabicComplexityBits) < 1e-12);
  CHECK(std::abs(ib_accuracy(p, need) - oracle::kArabicAccuracyNats) < 1e-12);
}

TEST_CASE("listener posteriors") {
  const std::vector<Category> two{{"A", {"x", "y"}}};
  const auto post = listener_posterior(testing::make(two, {"a", "a"}), NeedDistribution({0.75, 0.25}));
  REQUIRE(post.posteriors().size() == 1);
  const auto& s = post.posteriors()[0].support;
  REQUIRE(s.size() == 2);
  CHECK(s[0].second == doctest::Approx(0.75));
  CHECK(s[1].second == doctest::Approx(0.25));

  const auto inj = listener_posterior(testing::make(kFour, {"a", "b", "c", "d"}),
                                      NeedDistribution::uniform(4));
  for (std::size_t i = 0; i < 4; ++i) {
    REQUIRE(inj.posteriors()[i].support.size() == 1);
    CHECK(inj.posteriors()[i].support[0].first == i);
    CHECK(inj.posteriors()[i].support[0].second == 1.0);
  }
}

TEST_CASE("posterior of the first-person dual/plural form") {
  const Paradigm p = testing::arabic();
  const auto need = read_need_file(testing::data_path("classical_arabic_need.tsv"), p);
  const auto post = listener_posterior(p, need);
  const auto& fp = post.for_form(Form::from_text("na-12u3-u"));
  double mass = 0.0;
  for (const auto& [t, q] : fp.support) mass += need[t];
  double total = 0.0;
  for (const auto& [t, q] : fp.support) {
    CHECK(q == doctest::Approx(need[t] / mass).epsilon(1e-14));
    CHECK(meaning_at(p.schema(), t).values[0] == 0);
    total += q;
  }
  CHECK(std::abs(total - 1.0) < 1e-9);
}

TEST_CASE("dead forms are skipped and counted") {
  const std::vector<Category> three{{"A", {"x", "y", "z"}}};
  const Paradigm p = testing::make(three, {"a", "b", "b"});
  const NeedDistribution need({1.0, 0.0, 0.0});
  const auto post = listener_posterior(p, need);
  CHECK(post.dead_forms() == 1);
  CHECK(testing::error_of([&] { post.for_form(Form::from_text("b")); }) == ErrorKind::kDeadForm);
  CHECK(testing::error_of([&] { post.for_form(Form::from_text("zz")); }) ==
        ErrorKind::kInvalidArgument);
  const auto acc = ib_accuracy_detailed(p, need);
  CHECK(acc.dead_forms == 1);
  CHECK(acc.nats == 0.0);
}

TEST_CASE("accuracy boundary cases") {
  CHECK(std::abs(ib_accuracy(testing::make(kFour, {"a", "b", "c", "d"}),
                             NeedDistribution::uniform(4))) < 1e-12);
  const std::vector<Category> two{{"A", {"x", "y"}}};
  const Paradigm constant = testing::make(two, {"a", "a"});
  CHECK(std::abs(ib_accuracy(constant, NeedDistribution::uniform(2)) - oracle::kTwoPointAccuracy) <
        1e-9);
  CHECK(std::abs(ib_accuracy(constant, NeedDistribution::uniform(2), 2.0) -
                 oracle::kTwoPointAccuracyGamma2) < 1e-9);
  // A syncretic class whose extra member has zero need behaves like a singleton.
  CHECK(ib_accuracy(constant, NeedDistribution({1.0, 0.0})) == 0.0);
  CHECK(ib_accuracy(testing::make(kFour, {"a", "a", "c", "d"}), NeedDistribution::uniform(4)) < 0.0);
}

TEST_CASE("form-only permutations leave both measures unchanged") {
  const Paradigm p = testing::arabic();
  const auto need = read_need_file(testing::data_path("classical_arabic_need.tsv"), p);
  const double c = ib_complexity(p, need);
  const double a = ib_accuracy(p, need);
  for (const auto& r : sample_form_only(p, 50, 9)) {
    CHECK(ib_complexity(r.paradigm, need) == c);
    CHECK(ib_accuracy(r.paradigm, need) == a);
  }
}

TEST_CASE("properties on random paradigms and merges") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> w(0.0, 1.0);
  int merges = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Paradigm p = testing::random_paradigm(rng, 3, 3, 6);
    std::vector<double> raw(p.size());
    for (auto& x : raw) x = w(rng) < 0.1 ? 0.0 : w(rng);
    raw[0] += 0.01;
    const NeedDistribution need(raw);
    std::size_t support = 0;
    for (double x : need.weights()) support += x > 0.0;
    const double c = ib_complexity(p, need);
    const double a = ib_accuracy(p, need);
    CHECK(c >= 0.0);
    CHECK(c <= std::log2(static_cast<double>(support)) + 1e-12);
    CHECK(a <= 0.0);
    const auto forms = p.distinct_forms();
    if (forms.size() < 2) continue;
    // Merge two classes by giving the second the first one's form.
    std::vector<Form> cells = p.cells();
    for (auto& f : cells) {
      if (f == forms[1]) f = forms[0];
    }
    const Paradigm merged = p.with_cells("m", cells);
    CHECK(ib_complexity(merged, need) <= c + 1e-12);
    CHECK(ib_accuracy(merged, need) <= 0.0);
    ++merges;
  }
  CHECK(merges > 100);
}

}  // TEST_SUITE
