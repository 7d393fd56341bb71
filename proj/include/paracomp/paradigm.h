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

// Feature schemas, meanings, forms, paradigms and need distributions, plus the
// tab-separated on-disk formats for paradigms and need tables.

#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace paracomp {

struct Category {
  std::string name;
  std::vector<std::string> values;

  bool operator==(const Category&) const = default;
};

// Ordered categorical feature space. Meanings are enumerated in mixed-radix
// order with the first category most significant.
class FeatureSchema {
 public:
  FeatureSchema() = default;
  explicit FeatureSchema(std::vector<Category> categories);

  std::size_t num_categories() const { return categories_.size(); }
  const Category& category(std::size_t i) const { return categories_.at(i); }
  const std::vector<Category>& categories() const { return categories_; }

  std::optional<std::size_t> find_category(std::string_view name) const;
  std::optional<int> find_value(std::size_t category, std::string_view label) const;

  // Size of the full Cartesian product of category values.
  std::size_t num_meanings() const { return num_meanings_; }

  bool operator==(const FeatureSchema& other) const {
    return categories_ == other.categories_;
  }

 private:
  std::vector<Category> categories_;
  std::size_t num_meanings_ = 0;
};

// One value index per schema category, in schema order.
struct Meaning {
  std::vector<int> values;

  auto operator<=>(const Meaning&) const = default;
};

std::size_t meaning_index(const FeatureSchema& schema, const Meaning& m);
Meaning meaning_at(const FeatureSchema& schema, std::size_t index);
std::vector<Meaning> all_meanings(const FeatureSchema& schema);
// Space-separated value labels, e.g. "2 p m G".
std::string meaning_label(const FeatureSchema& schema, const Meaning& m);

// Grapheme sequence. Tokens are single UTF-8 code points; an empty form is a
// zero-marked cell.
struct Form {
  std::vector<std::string> tokens;

  // Splits into code points after removing whitespace.
  static Form from_text(std::string_view text);
  std::string text() const;

  auto operator<=>(const Form&) const = default;
};

class Paradigm {
 public:
  Paradigm(std::string id, std::string language, std::string family,
           FeatureSchema schema, std::vector<Form> cells);

  const std::string& id() const { return id_; }
  const std::string& language() const { return language_; }
  const std::string& family() const { return family_; }
  const FeatureSchema& schema() const { return schema_; }

  std::size_t size() const { return cells_.size(); }
  const Form& form_at(std::size_t meaning_index) const { return cells_.at(meaning_index); }
  const Form& form(const Meaning& m) const;
  const std::vector<Form>& cells() const { return cells_; }

  // Distinct forms in order of first occurrence over meaning indices.
  std::vector<Form> distinct_forms() const;

  Paradigm with_cells(std::string id, std::vector<Form> cells) const;

  bool same_cells(const Paradigm& other) const {
    return schema_ == other.schema_ && cells_ == other.cells_;
  }

 private:
  std::string id_;
  std::string language_;
  std::string family_;
  FeatureSchema schema_;
  std::vector<Form> cells_;
};

struct SyncretismClass {
  Form form;
  std::vector<std::size_t> members;  // meaning indices, ascending
};

// Classes are ordered by first occurrence, so two paradigms with the same
// partition of meanings yield identical `class_of` vectors.
struct SyncretismPartition {
  std::vector<SyncretismClass> classes;
  std::vector<std::size_t> class_of;  // meaning index -> class index

  bool same_partition(const SyncretismPartition& other) const {
    return class_of == other.class_of;
  }
};

SyncretismPartition syncretism_partition(const Paradigm& p);

// Normalized probability weighting over a paradigm's meaning space, indexed
// by meaning index.
class NeedDistribution {
 public:
  NeedDistribution() = default;
  // Normalizes `raw_weights`; throws NegativeWeight or EmptySupport.
  explicit NeedDistribution(std::vector<double> raw_weights);

  static NeedDistribution uniform(std::size_t n);

  std::size_t size() const { return weights_.size(); }
  double operator[](std::size_t meaning_index) const { return weights_[meaning_index]; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> weights_;
};

// Paradigm TSV. First line `#schema<TAB>CAT=v1,v2<TAB>...`; optional
// `#id`, `#language`, `#family` lines; then one row per cell with the value
// labels in schema order followed by the form.
Paradigm parse_paradigm(std::string_view text, std::string default_id = "paradigm");
std::string serialize_paradigm(const Paradigm& p);
std::string schema_header(const FeatureSchema& schema);
FeatureSchema parse_schema_header(std::string_view line);
// One cell row without trailing newline: labels then the form text.
std::string cell_row(const Paradigm& p, std::size_t meaning_index);

// Need TSV. Header `#proj<TAB>CAT<TAB>...` names the projected categories;
// rows give labels for those categories then a nonnegative weight.
// Categories absent from the projection share mass uniformly. An empty file
// yields the uniform distribution.
NeedDistribution parse_need(std::string_view text, const Paradigm& p);

Paradigm read_paradigm_file(const std::string& path);
NeedDistribution read_need_file(const std::string& path, const Paradigm& p);
std::string read_text_file(const std::string& path);

}  // namespace paracomp
