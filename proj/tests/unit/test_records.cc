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

#include "paracomp/records.h"
#include "test_util.h"

using namespace paracomp;

TEST_SUITE("records") {

TEST_CASE("permutation entries round trip") {
  const Paradigm p = testing::arabic();
  std::vector<ParadigmEntry> entries{attested_entry(p, "h")};
  for (const auto& r : enumerate_structural(p)) entries.push_back(permutation_entry(r, "h"));
  for (const auto& r : sample_form_only(p, 10, 1)) entries.push_back(permutation_entry(r, "h"));
  for (const auto& e : entries) {
    const nlohmann::json j = entry_to_json(e);
    const ParadigmEntry back = entry_from_json(nlohmann::json::parse(j.dump()));
    CHECK(back.kind == e.kind);
    CHECK(back.base_id == e.base_id);
    CHECK(back.paradigm.id() == e.paradigm.id());
    CHECK(back.paradigm.language() == "Classical Arabic");
    CHECK(back.paradigm.same_cells(e.paradigm));
    CHECK(back.spec.has_value() == e.spec.has_value());
    if (e.spec) {
      CHECK(*back.spec == *e.spec);
      if (const auto* s = std::get_if<StructuralSpec>(&*back.spec)) {
        CHECK(apply_structural(p, *s).same_cells(e.paradigm));
      } else {
        CHECK(apply_form_only(p, std::get<FormOnlySpec>(*back.spec)).same_cells(e.paradigm));
      }
    }
    CHECK(entry_to_json(back).dump() == j.dump());
  }
  CHECK(entry_to_json(entries[0]).at("spec").is_null());
  CHECK(entry_to_json(entries[0]).at("kind") == "attested");
  CHECK(entry_to_json(entries[1]).at("kind") == "structural");
  CHECK(entry_to_json(entries.back()).at("kind") == "form_only");
}

TEST_CASE("efficiency records round trip") {
  EfficiencyRecord r;
  r.paradigm_id = "x/s0001";
  r.base_id = "x";
  r.kind = RecordKind::kStructural;
  r.cetl_mean = 1.0 / 3.0;
  r.cetl_sd = 0.125;
  r.cetl_runs = 5;
  r.ib_complexity_bits = 2.7246819954309;
  r.accuracy_nats = -0.09;
  r.unnat = 9;
  r.unnat_base = 7;
  r.config_hash = "abc";
  const auto j = record_to_json(r);
  CHECK(j.contains("ib_complexity_bits"));
  CHECK(j.contains("ib_accuracy_nats"));
  const auto back = record_from_json(nlohmann::json::parse(j.dump()));
  CHECK(*back.cetl_mean == *r.cetl_mean);
  CHECK(back.ib_complexity_bits == r.ib_complexity_bits);
  CHECK(back.unnat_base == 7);
  CHECK(record_to_json(back).dump() == j.dump());

  EfficiencyRecord skipped = r;
  skipped.cetl_mean.reset();
  skipped.cetl_sd.reset();
  CHECK_FALSE(record_from_json(record_to_json(skipped)).cetl_mean.has_value());

  EfficiencyRecord bad = r;
  bad.kind = RecordKind::kAttested;
  CHECK(testing::error_of([&] { record_from_json(record_to_json(bad)); }) == ErrorKind::kParse);
}

TEST_CASE("cetl result json carries seeds and hash") {
  CetlResult r;
  r.paradigm_id = "p";
  r.runs = {{3, {1.0, 0.5}}, {4, {2.0, 1.0}}};
  r.cetl_mean = 1.125;
  r.cetl_sd = 0.5;
  r.config_hash = "h";
  const auto j = cetl_result_to_json(r);
  CHECK(j.at("runs") == 2);
  CHECK(j.at("seeds") == nlohmann::json::array({3, 4}));
  CHECK(j.at("config_hash") == "h");
}

}  // TEST_SUITE
