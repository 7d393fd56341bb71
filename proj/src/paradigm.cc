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

#include "paracomp/paradigm.h"

#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "paracomp/error.h"
#include "text_util.h"

namespace paracomp {

FeatureSchema::FeatureSchema(std::vector<Category> categories)
    : categories_(std::move(categories)) {
  if (categories_.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "schema has no categories");
  }
  std::set<std::string> names;
  num_meanings_ = 1;
  for (const auto& c : categories_) {
    if (c.name.empty()) throw Error(ErrorKind::kInvalidArgument, "empty category name");
    if (!names.insert(c.name).second) {
      throw Error(ErrorKind::kInvalidArgument, "duplicate category " + c.name);
    }
    if (c.values.empty()) {
      throw Error(ErrorKind::kInvalidArgument, "category " + c.name + " has no values");
    }
    std::set<std::string> labels;
    for (const auto& v : c.values) {
      if (v.empty()) throw Error(ErrorKind::kInvalidArgument, "empty value label in " + c.name);
      if (!labels.insert(v).second) {
        throw Error(ErrorKind::kInvalidArgument,
                    "duplicate value " + v + " in category " + c.name);
      }
    }
    num_meanings_ *= c.values.size();
  }
}

std::optional<std::size_t> FeatureSchema::find_category(std::string_view name) const {
  for (std::size_t i = 0; i < categories_.size(); ++i) {
    if (categories_[i].name == name) return i;
  }
  return std::nullopt;
}

std::optional<int> FeatureSchema::find_value(std::size_t category,
                                             std::string_view label) const {
  const auto& values = categories_.at(category).values;
  for (std::size_t v = 0; v < values.size(); ++v) {
    if (values[v] == label) return static_cast<int>(v);
  }
  return std::nullopt;
}

std::size_t meaning_index(const FeatureSchema& schema, const Meaning& m) {
  if (m.values.size() != schema.num_categories()) {
    throw Error(ErrorKind::kSchemaMismatch, "meaning length differs from schema");
  }
  std::size_t index = 0;
  for (std::size_t i = 0; i < m.values.size(); ++i) {
    const auto k = schema.category(i).values.size();
    if (m.values[i] < 0 || static_cast<std::size_t>(m.values[i]) >= k) {
      throw Error(ErrorKind::kSchemaMismatch, "value index out of range");
    }
    index = index * k + static_cast<std::size_t>(m.values[i]);
  }
  return index;
}

Meaning meaning_at(const FeatureSchema& schema, std::size_t index) {
  Meaning m;
  m.values.resize(schema.num_categories());
  for (std::size_t i = schema.num_categories(); i-- > 0;) {
    const auto k = schema.category(i).values.size();
    m.values[i] = static_cast<int>(index % k);
    index /= k;
  }
  return m;
}

std::vector<Meaning> all_meanings(const FeatureSchema& schema) {
  std::vector<Meaning> out;
  out.reserve(schema.num_meanings());
  for (std::size_t i = 0; i < schema.num_meanings(); ++i) out.push_back(meaning_at(schema, i));
  return out;
}

std::string meaning_label(const FeatureSchema& schema, const Meaning& m) {
  std::string out;
  for (std::size_t i = 0; i < m.values.size(); ++i) {
    if (i) out += ' ';
    out += schema.category(i).values.at(static_cast<std::size_t>(m.values[i]));
  }
  return out;
}

Form Form::from_text(std::string_view text) {
  Form f;
  f.tokens = detail::split_code_points(detail::strip_whitespace(text));
  return f;
}

std::string Form::text() const {
  std::string out;
  for (const auto& t : tokens) out += t;
  return out;
}

Paradigm::Paradigm(std::string id, std::string language, std::string family,
                   FeatureSchema schema, std::vector<Form> cells)
    : id_(std::move(id)),
      language_(std::move(language)),
      family_(std::move(family)),
      schema_(std::move(schema)),
      cells_(std::move(cells)) {
  if (cells_.size() != schema_.num_meanings() || cells_.empty()) {
    throw Error(ErrorKind::kMissingCell, "paradigm " + id_ + " does not cover the meaning space");
  }
}

const Form& Paradigm::form(const Meaning& m) const {
  return cells_.at(meaning_index(schema_, m));
}

std::vector<Form> Paradigm::distinct_forms() const {
  std::vector<Form> out;
  std::set<Form> seen;
  for (const auto& f : cells_) {
    if (seen.insert(f).second) out.push_back(f);
  }
  return out;
}

Paradigm Paradigm::with_cells(std::string id, std::vector<Form> cells) const {
  return Paradigm(std::move(id), language_, family_, schema_, std::move(cells));
}

SyncretismPartition syncretism_partition(const Paradigm& p) {
  SyncretismPartition out;
  out.class_of.resize(p.size());
  std::map<Form, std::size_t> index;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& f = p.form_at(i);
    auto [it, inserted] = index.emplace(f, out.classes.size());
    if (inserted) out.classes.push_back({f, {}});
    out.classes[it->second].members.push_back(i);
    out.class_of[i] = it->second;
  }
  return out;
}

NeedDistribution::NeedDistribution(std::vector<double> raw_weights) {
  double total = 0.0;
  for (double w : raw_weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw Error(ErrorKind::kNegativeWeight, "need weight must be finite and nonnegative");
    }
    total += w;
  }
  if (!(total > 0.0)) throw Error(ErrorKind::kEmptySupport, "all need weights are zero");
  for (double& w : raw_weights) w /= total;
  weights_ = std::move(raw_weights);
}

NeedDistribution NeedDistribution::uniform(std::size_t n) {
  return NeedDistribution(std::vector<double>(n, 1.0));
}

std::string schema_header(const FeatureSchema& schema) {
  std::string out = "#schema";
  for (const auto& c : schema.categories()) {
    out += '\t';
    out += c.name;
    out += '=';
    for (std::size_t v = 0; v < c.values.size(); ++v) {
      if (v) out += ',';
      out += c.values[v];
    }
  }
  return out;
}

FeatureSchema parse_schema_header(std::string_view line) {
  const auto fields = detail::split(line, '\t');
  if (fields.empty() || fields[0] != "#schema") {
    throw Error(ErrorKind::kParse, "first line must start with #schema");
  }
  std::vector<Category> cats;
  for (std::size_t i = 1; i < fields.size(); ++i) {
    const auto field = detail::trim(fields[i]);
    if (field.empty()) continue;
    const auto eq = field.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::kParse, "schema field without '=': " + std::string(field));
    }
    Category c;
    c.name = std::string(detail::trim(field.substr(0, eq)));
    for (auto v : detail::split(field.substr(eq + 1), ',')) {
      c.values.emplace_back(detail::trim(v));
    }
    cats.push_back(std::move(c));
  }
  return FeatureSchema(std::move(cats));
}

std::string cell_row(const Paradigm& p, std::size_t meaning_index) {
  const auto m = meaning_at(p.schema(), meaning_index);
  std::string out;
  for (std::size_t i = 0; i < m.values.size(); ++i) {
    out += p.schema().category(i).values[static_cast<std::size_t>(m.values[i])];
    out += '\t';
  }
  out += p.form_at(meaning_index).text();
  return out;
}

namespace {

Meaning parse_labels(const FeatureSchema& schema, const std::vector<std::string_view>& fields,
                     const std::vector<std::size_t>& categories) {
  Meaning m;
  m.values.assign(schema.num_categories(), 0);
  for (std::size_t j = 0; j < categories.size(); ++j) {
    const auto label = detail::trim(fields[j]);
    const auto v = schema.find_value(categories[j], label);
    if (!v) {
      throw Error(ErrorKind::kUnknownValue, "label '" + std::string(label) +
                                                "' not in category " +
                                                schema.category(categories[j]).name);
    }
    m.values[categories[j]] = *v;
  }
  return m;
}

}  // namespace

Paradigm parse_paradigm(std::string_view text, std::string default_id) {
  const auto lines = detail::split_lines(text);
  std::size_t li = 0;
  while (li < lines.size() && detail::trim(lines[li]).empty()) ++li;
  if (li == lines.size()) throw Error(ErrorKind::kParse, "empty paradigm file");
  const FeatureSchema schema = parse_schema_header(lines[li++]);

  std::string id = std::move(default_id);
  std::string language;
  std::string family;
  std::vector<std::optional<Form>> cells(schema.num_meanings());
  std::vector<std::size_t> order(schema.num_categories());
  std::iota(order.begin(), order.end(), std::size_t{0});

  for (; li < lines.size(); ++li) {
    const auto line = lines[li];
    if (detail::trim(line).empty()) continue;
    if (line.front() == '#') {
      const auto fields = detail::split(line, '\t');
      const auto value = fields.size() > 1 ? std::string(detail::trim(fields[1])) : std::string();
      if (fields[0] == "#id") id = value;
      else if (fields[0] == "#language") language = value;
      else if (fields[0] == "#family") family = value;
      continue;
    }
    const auto fields = detail::split(line, '\t');
    if (fields.size() <= schema.num_categories()) {
      throw Error(ErrorKind::kParse, "line " + std::to_string(li + 1) + ": missing form column");
    }
    const Meaning m = parse_labels(schema, fields, order);
    std::string form_text;
    for (std::size_t j = schema.num_categories(); j < fields.size(); ++j) {
      form_text += fields[j];
    }
    auto& slot = cells[meaning_index(schema, m)];
    if (slot) {
      throw Error(ErrorKind::kDuplicateCell, "cell " + meaning_label(schema, m) + " given twice");
    }
    slot = Form::from_text(form_text);
  }

  std::vector<Form> out;
  out.reserve(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!cells[i]) {
      throw Error(ErrorKind::kMissingCell,
                  "no row for cell " + meaning_label(schema, meaning_at(schema, i)));
    }
    out.push_back(std::move(*cells[i]));
  }
  return Paradigm(std::move(id), std::move(language), std::move(family), schema, std::move(out));
}

std::string serialize_paradigm(const Paradigm& p) {
  std::string out = schema_header(p.schema()) + "\n";
  out += "#id\t" + p.id() + "\n";
  if (!p.language().empty()) out += "#language\t" + p.language() + "\n";
  if (!p.family().empty()) out += "#family\t" + p.family() + "\n";
  for (std::size_t i = 0; i < p.size(); ++i) out += cell_row(p, i) + "\n";
  return out;
}

NeedDistribution parse_need(std::string_view text, const Paradigm& p) {
  const auto& schema = p.schema();
  std::vector<std::size_t> proj;
  bool have_header = false;
  std::map<Meaning, double> rows;  // keyed on the projected coordinates only

  for (const auto line : detail::split_lines(text)) {
    if (detail::trim(line).empty()) continue;
    const auto fields = detail::split(line, '\t');
    if (line.front() == '#') {
      if (fields[0] != "#proj") continue;
      have_header = true;
      proj.clear();
      for (std::size_t j = 1; j < fields.size(); ++j) {
        const auto name = detail::trim(fields[j]);
        if (name.empty()) continue;
        const auto c = schema.find_category(name);
        if (!c) throw Error(ErrorKind::kUnknownValue, "unknown category " + std::string(name));
        proj.push_back(*c);
      }
      continue;
    }
    if (!have_header) throw Error(ErrorKind::kParse, "need rows before #proj header");
    if (fields.size() != proj.size() + 1) {
      throw Error(ErrorKind::kParse, "need row has wrong number of columns");
    }
    const Meaning key = parse_labels(schema, fields, proj);
    const double w = detail::parse_double(detail::trim(fields.back()));
    if (!(w >= 0.0)) throw Error(ErrorKind::kNegativeWeight, "negative need weight");
    if (!rows.emplace(key, w).second) {
      throw Error(ErrorKind::kDuplicateCell, "need row repeated");
    }
  }
  if (rows.empty()) return NeedDistribution::uniform(p.size());

  // Each full meaning takes its projection's weight divided by the number of
  // meanings sharing that projection.
  std::size_t share = 1;
  std::vector<bool> projected(schema.num_categories(), false);
  for (auto c : proj) projected[c] = true;
  for (std::size_t c = 0; c < schema.num_categories(); ++c) {
    if (!projected[c]) share *= schema.category(c).values.size();
  }
  std::vector<double> raw(p.size(), 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    Meaning key = meaning_at(schema, i);
    for (std::size_t c = 0; c < key.values.size(); ++c) {
      if (!projected[c]) key.values[c] = 0;
    }
    if (auto it = rows.find(key); it != rows.end()) {
      raw[i] = it->second / static_cast<double>(share);
    }
  }
  return NeedDistribution(std::move(raw));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kParse, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Paradigm read_paradigm_file(const std::string& path) {
  std::string stem = path;
  if (auto slash = stem.find_last_of('/'); slash != std::string::npos) stem = stem.substr(slash + 1);
  if (auto dot = stem.find_last_of('.'); dot != std::string::npos) stem = stem.substr(0, dot);
  return parse_paradigm(read_text_file(path), stem);
}

NeedDistribution read_need_file(const std::string& path, const Paradigm& p) {
  return parse_need(read_text_file(path), p);
}

}  // namespace paracomp
