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

#include "paracomp/records.h"

#include <fstream>

#include "paracomp/error.h"
#include "text_util.h"

namespace paracomp {

using nlohmann::json;

json spec_to_json(const FeatureSchema& schema, const PermutationSpec& spec) {
  if (const auto* s = std::get_if<StructuralSpec>(&spec)) {
    json perms = json::array();
    for (const auto& vp : s->permutations) {
      const auto& cat = schema.category(vp.category);
      json map = json::object();
      for (std::size_t v = 0; v < vp.mapping.size(); ++v) {
        map[cat.values[v]] = cat.values[static_cast<std::size_t>(vp.mapping[v])];
      }
      perms.push_back({{"category", cat.name}, {"map", map}});
    }
    json slice = json::object();
    for (const auto& c : s->slice) {
      const auto& cat = schema.category(c.category);
      slice[cat.name] = cat.values[static_cast<std::size_t>(c.value)];
    }
    return {{"type", "structural"}, {"permutations", perms}, {"slice", slice},
            {"label", describe(schema, *s)}};
  }
  const auto& f = std::get<FormOnlySpec>(spec);
  json map = json::array();
  for (const auto& [from, to] : f.mapping) map.push_back({from.text(), to.text()});
  return {{"type", "form_only"}, {"map", map}};
}

PermutationSpec spec_from_json(const FeatureSchema& schema, const json& j) {
  const auto type = j.at("type").get<std::string>();
  if (type == "form_only") {
    FormOnlySpec f;
    for (const auto& pair : j.at("map")) {
      f.mapping.emplace_back(Form::from_text(pair.at(0).get<std::string>()),
                             Form::from_text(pair.at(1).get<std::string>()));
    }
    return f;
  }
  if (type != "structural") throw Error(ErrorKind::kParse, "unknown spec type " + type);
  auto category = [&](const std::string& name) {
    const auto c = schema.find_category(name);
    if (!c) throw Error(ErrorKind::kUnknownValue, "unknown category " + name);
    return *c;
  };
  auto value = [&](std::size_t c, const std::string& label) {
    const auto v = schema.find_value(c, label);
    if (!v) throw Error(ErrorKind::kUnknownValue, "unknown value " + label);
    return *v;
  };
  StructuralSpec s;
  for (const auto& p : j.at("permutations")) {
    ValuePermutation vp;
    vp.category = category(p.at("category").get<std::string>());
    vp.mapping.resize(schema.category(vp.category).values.size());
    for (std::size_t v = 0; v < vp.mapping.size(); ++v) vp.mapping[v] = static_cast<int>(v);
    for (const auto& [from, to] : p.at("map").items()) {
      vp.mapping[static_cast<std::size_t>(value(vp.category, from))] =
          value(vp.category, to.get<std::string>());
    }
    s.permutations.push_back(std::move(vp));
  }
  for (const auto& [name, label] : j.at("slice").items()) {
    const auto c = category(name);
    s.slice.push_back({c, value(c, label.get<std::string>())});
  }
  return s;
}

json entry_to_json(const ParadigmEntry& e) {
  const auto& p = e.paradigm;
  json cells = json::array();
  for (std::size_t i = 0; i < p.size(); ++i) cells.push_back(cell_row(p, i));
  json j;
  j["id"] = p.id();
  j["base_id"] = e.base_id;
  j["kind"] = to_string(e.kind);
  j["language"] = p.language();
  j["family"] = p.family();
  j["schema"] = schema_header(p.schema());
  j["spec"] = e.spec ? spec_to_json(p.schema(), *e.spec) : json(nullptr);
  j["cells"] = cells;
  j["config_hash"] = e.config_hash;
  return j;
}

ParadigmEntry entry_from_json(const json& j) {
  std::string text = j.at("schema").get<std::string>() + "\n";
  text += "#id\t" + j.at("id").get<std::string>() + "\n";
  for (const auto& row : j.at("cells")) text += row.get<std::string>() + "\n";
  Paradigm parsed = parse_paradigm(text);
  Paradigm p(parsed.id(), j.value("language", ""), j.value("family", ""), parsed.schema(),
             parsed.cells());
  std::optional<PermutationSpec> spec;
  if (j.contains("spec") && !j.at("spec").is_null()) spec = spec_from_json(p.schema(), j.at("spec"));
  return {record_kind_from_string(j.at("kind").get<std::string>()),
          j.at("base_id").get<std::string>(), std::move(p), std::move(spec),
          j.value("config_hash", "")};
}

ParadigmEntry attested_entry(const Paradigm& p, const std::string& config_hash) {
  return {RecordKind::kAttested, p.id(), p, std::nullopt, config_hash};
}

ParadigmEntry permutation_entry(const PermutationRecord& r, const std::string& config_hash) {
  const auto kind =
      r.kind() == PermutationKind::kStructural ? RecordKind::kStructural : RecordKind::kFormOnly;
  return {kind, r.base_id, r.paradigm, r.spec, config_hash};
}

json record_to_json(const EfficiencyRecord& r) {
  json j;
  j["paradigm_id"] = r.paradigm_id;
  j["base_id"] = r.base_id;
  j["language"] = r.language;
  j["family"] = r.family;
  j["kind"] = to_string(r.kind);
  j["cetl_mean"] = r.cetl_mean ? json(*r.cetl_mean) : json(nullptr);
  j["cetl_sd"] = r.cetl_sd ? json(*r.cetl_sd) : json(nullptr);
  j["cetl_runs"] = r.cetl_runs;
  j["ib_complexity_bits"] = r.ib_complexity_bits;
  j["ib_accuracy_nats"] = r.accuracy_nats;
  j["unnat"] = r.unnat;
  j["unnat_base"] = r.unnat_base;
  j["config_hash"] = r.config_hash;
  return j;
}

EfficiencyRecord record_from_json(const json& j) {
  EfficiencyRecord r;
  r.paradigm_id = j.at("paradigm_id").get<std::string>();
  r.base_id = j.at("base_id").get<std::string>();
  r.language = j.value("language", "");
  r.family = j.value("family", "");
  r.kind = record_kind_from_string(j.at("kind").get<std::string>());
  if (j.contains("cetl_mean") && !j.at("cetl_mean").is_null()) r.cetl_mean = j.at("cetl_mean").get<double>();
  if (j.contains("cetl_sd") && !j.at("cetl_sd").is_null()) r.cetl_sd = j.at("cetl_sd").get<double>();
  r.cetl_runs = j.value("cetl_runs", 0);
  r.ib_complexity_bits = j.at("ib_complexity_bits").get<double>();
  r.accuracy_nats = j.at("ib_accuracy_nats").get<double>();
  r.unnat = j.at("unnat").get<int>();
  r.unnat_base = j.at("unnat_base").get<int>();
  r.config_hash = j.value("config_hash", "");
  if (r.kind == RecordKind::kAttested && r.base_id != r.paradigm_id) {
    throw Error(ErrorKind::kParse, "attested record " + r.paradigm_id + " names another base");
  }
  return r;
}

json cetl_result_to_json(const CetlResult& r) {
  json seeds = json::array();
  for (const auto& run : r.runs) seeds.push_back(run.seed);
  return {{"paradigm_id", r.paradigm_id}, {"cetl_mean", r.cetl_mean}, {"cetl_sd", r.cetl_sd},
          {"runs", r.runs.size()},        {"seeds", seeds},           {"diverged", r.diverged},
          {"config_hash", r.config_hash}};
}

std::vector<json> read_jsonl(const std::string& path) {
  std::vector<json> out;
  const auto text = read_text_file(path);
  std::size_t line_no = 0;
  for (const auto line : detail::split_lines(text)) {
    ++line_no;
    if (detail::trim(line).empty()) continue;
    try {
      out.push_back(json::parse(line));
    } catch (const json::exception& e) {
      throw Error(ErrorKind::kParse, path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace paracomp
