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

// JSON-lines interchange between pipeline stages.

#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "paracomp/cetl.h"
#include "paracomp/counterfactual.h"
#include "paracomp/evaluation.h"
#include "paracomp/paradigm.h"

namespace paracomp {

// One line of a permutations file. The attested source is written first with
// kind "attested" and a null spec.
struct ParadigmEntry {
  RecordKind kind = RecordKind::kAttested;
  std::string base_id;
  Paradigm paradigm;
  std::optional<PermutationSpec> spec;
  std::string config_hash;
};

nlohmann::json spec_to_json(const FeatureSchema& schema, const PermutationSpec& spec);
PermutationSpec spec_from_json(const FeatureSchema& schema, const nlohmann::json& j);

// {id, base_id, kind, language, family, schema, spec, cells, config_hash};
// cells use the paradigm TSV row syntax.
nlohmann::json entry_to_json(const ParadigmEntry& entry);
ParadigmEntry entry_from_json(const nlohmann::json& j);

ParadigmEntry attested_entry(const Paradigm& p, const std::string& config_hash);
ParadigmEntry permutation_entry(const PermutationRecord& r, const std::string& config_hash);

nlohmann::json record_to_json(const EfficiencyRecord& r);
EfficiencyRecord record_from_json(const nlohmann::json& j);

// {paradigm_id, cetl_mean, cetl_sd, runs, seeds, diverged, config_hash}
nlohmann::json cetl_result_to_json(const CetlResult& r);

// Reads every non-empty line as JSON.
std::vector<nlohmann::json> read_jsonl(const std::string& path);

}  // namespace paracomp
