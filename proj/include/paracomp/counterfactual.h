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

// Counterfactual paradigms: structural permutations relocate cell contents by
// permuting feature values; form-only permutations relabel which form
// realizes each syncretism class.

#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "paracomp/paradigm.h"

namespace paracomp {

// mapping[v] is the value that v is sent to.
struct ValuePermutation {
  std::size_t category = 0;
  std::vector<int> mapping;

  bool is_identity() const;
  bool operator==(const ValuePermutation&) const = default;
};

struct SliceConstraint {
  std::size_t category = 0;
  int value = 0;

  bool operator==(const SliceConstraint&) const = default;
};

struct StructuralSpec {
  std::vector<ValuePermutation> permutations;
  std::vector<SliceConstraint> slice;  // empty = whole paradigm

  bool operator==(const StructuralSpec&) const = default;
};

// Bijection over the base paradigm's distinct forms, as pairs (from, to).
struct FormOnlySpec {
  std::vector<std::pair<Form, Form>> mapping;

  bool operator==(const FormOnlySpec&) const = default;
};

using PermutationSpec = std::variant<StructuralSpec, FormOnlySpec>;

enum class PermutationKind { kStructural, kFormOnly };

struct PermutationRecord {
  PermutationSpec spec;
  Paradigm paradigm;
  std::string base_id;

  PermutationKind kind() const {
    return std::holds_alternative<StructuralSpec>(spec) ? PermutationKind::kStructural
                                                        : PermutationKind::kFormOnly;
  }
};

// Each meaning in the slice takes the base form of sigma(meaning), with sigma
// applying the value permutations coordinatewise. Throws IdentitySpec if no
// cell changes and InvalidArgument for malformed specs.
Paradigm apply_structural(const Paradigm& p, const StructuralSpec& spec,
                          std::string id = {});

// Throws NotABijection unless the mapping is a bijection on exactly the
// distinct forms of `p`, and IdentitySpec for the identity.
Paradigm apply_form_only(const Paradigm& p, const FormOnlySpec& spec, std::string id = {});

enum class SlicePolicy { kNone, kWithSlices };

struct StructuralOptions {
  int max_categories = 2;  // 1 or 2
  SlicePolicy slices = SlicePolicy::kWithSlices;
  std::size_t cap = 2000;  // 0 = unlimited
  std::uint64_t seed = 0;
};

// Single-category permutations, simultaneous two-category permutations, and
// (with slices) single-category transpositions restricted to one value of
// another category. Deduplicated by resulting cell map; no-ops dropped. When
// more candidates exist than `cap`, a seeded uniform subset is taken; output
// keeps enumeration order.
std::vector<PermutationRecord> enumerate_structural(const Paradigm& p,
                                                    const StructuralOptions& options = {});

// Up to `n` distinct non-identity form bijections sampled without
// replacement. Throws DegenerateParadigm for fewer than two distinct forms.
std::vector<PermutationRecord> sample_form_only(const Paradigm& p, std::size_t n,
                                                std::uint64_t seed);

std::string describe(const FeatureSchema& schema, const StructuralSpec& spec);

}  // namespace paracomp
