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

#include "paracomp/counterfactual.h"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>

#include "paracomp/error.h"
#include "random_util.h"

namespace paracomp {

bool ValuePermutation::is_identity() const {
  for (std::size_t v = 0; v < mapping.size(); ++v) {
    if (mapping[v] != static_cast<int>(v)) return false;
  }
  return true;
}

namespace {

bool is_bijection(const std::vector<int>& mapping) {
  std::vector<bool> hit(mapping.size(), false);
  for (int to : mapping) {
    if (to < 0 || static_cast<std::size_t>(to) >= mapping.size() || hit[to]) return false;
    hit[to] = true;
  }
  return true;
}

void validate(const FeatureSchema& schema, const StructuralSpec& spec) {
  std::vector<bool> permuted(schema.num_categories(), false);
  bool any_change = false;
  for (const auto& vp : spec.permutations) {
    if (vp.category >= schema.num_categories()) {
      throw Error(ErrorKind::kInvalidArgument, "permutation category out of range");
    }
    if (permuted[vp.category]) {
      throw Error(ErrorKind::kInvalidArgument, "category permuted twice");
    }
    permuted[vp.category] = true;
    if (vp.mapping.size() != schema.category(vp.category).values.size() ||
        !is_bijection(vp.mapping)) {
      throw Error(ErrorKind::kNotABijection,
                  "value permutation on " + schema.category(vp.category).name);
    }
    any_change = any_change || !vp.is_identity();
  }
  for (const auto& s : spec.slice) {
    if (s.category >= schema.num_categories() || s.value < 0 ||
        static_cast<std::size_t>(s.value) >= schema.category(s.category).values.size()) {
      throw Error(ErrorKind::kInvalidArgument, "slice value out of range");
    }
    if (permuted[s.category]) {
      throw Error(ErrorKind::kInvalidArgument, "slice fixes a permuted category");
    }
  }
  if (!any_change) throw Error(ErrorKind::kIdentitySpec, "all value permutations are identities");
}

// No validation and no no-op check; used by the enumerator.
std::vector<Form> permuted_cells(const Paradigm& p, const StructuralSpec& spec) {
  const auto& schema = p.schema();
  std::vector<Form> cells = p.cells();
  for (std::size_t i = 0; i < p.size(); ++i) {
    Meaning m = meaning_at(schema, i);
    bool in_slice = true;
    for (const auto& s : spec.slice) in_slice = in_slice && m.values[s.category] == s.value;
    if (!in_slice) continue;
    for (const auto& vp : spec.permutations) {
      m.values[vp.category] = vp.mapping[static_cast<std::size_t>(m.values[vp.category])];
    }
    cells[i] = p.form(m);
  }
  return cells;
}

std::string record_id(const std::string& base, char tag, std::size_t n) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "/%c%04zu", tag, n);
  return base + buf;
}

// Non-identity permutations of {0..k-1} in lexicographic order.
std::vector<std::vector<int>> nonidentity_permutations(std::size_t k) {
  if (k > 8) {
    throw Error(ErrorKind::kInvalidArgument,
                "category with more than 8 values is too large to enumerate");
  }
  std::vector<std::vector<int>> out;
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  while (std::next_permutation(perm.begin(), perm.end())) out.push_back(perm);
  return out;
}

class StructuralCandidates {
 public:
  StructuralCandidates(const FeatureSchema& schema, const StructuralOptions& options)
      : schema_(schema) {
    const std::size_t nc = schema.num_categories();
    for (std::size_t c = 0; c < nc; ++c) {
      perms_.push_back(nonidentity_permutations(schema.category(c).values.size()));
    }
    for (std::size_t c = 0; c < nc; ++c) {
      for (std::size_t i = 0; i < perms_[c].size(); ++i) singles_.push_back({c, i});
    }
    if (options.max_categories >= 2) {
      for (std::size_t c1 = 0; c1 < nc; ++c1) {
        for (std::size_t c2 = c1 + 1; c2 < nc; ++c2) {
          if (!perms_[c1].empty() && !perms_[c2].empty()) pairs_.push_back({c1, c2});
        }
      }
    }
    if (options.slices == SlicePolicy::kWithSlices) {
      for (std::size_t c = 0; c < nc; ++c) {
        const int k = static_cast<int>(schema.category(c).values.size());
        for (int a = 0; a < k; ++a) {
          for (int b = a + 1; b < k; ++b) {
            for (std::size_t d = 0; d < nc; ++d) {
              if (d == c) continue;
              const int kd = static_cast<int>(schema.category(d).values.size());
              for (int v = 0; v < kd; ++v) sliced_.push_back({c, a, b, d, v});
            }
          }
        }
      }
    }
    pair_total_ = 0;
    for (const auto& [c1, c2] : pairs_) {
      pair_offsets_.push_back(pair_total_);
      pair_total_ += perms_[c1].size() * perms_[c2].size();
    }
  }

  std::size_t size() const { return singles_.size() + pair_total_ + sliced_.size(); }

  StructuralSpec at(std::size_t index) const {
    StructuralSpec spec;
    if (index < singles_.size()) {
      const auto [c, i] = singles_[index];
      spec.permutations.push_back({c, perms_[c][i]});
      return spec;
    }
    index -= singles_.size();
    if (index < pair_total_) {
      const auto it = std::upper_bound(pair_offsets_.begin(), pair_offsets_.end(), index);
      const std::size_t pi = static_cast<std::size_t>(it - pair_offsets_.begin()) - 1;
      const auto [c1, c2] = pairs_[pi];
      const std::size_t local = index - pair_offsets_[pi];
      const std::size_t n2 = perms_[c2].size();
      spec.permutations.push_back({c1, perms_[c1][local / n2]});
      spec.permutations.push_back({c2, perms_[c2][local % n2]});
      return spec;
    }
    index -= pair_total_;
    const auto& s = sliced_.at(index);
    std::vector<int> mapping(schema_.category(s.category).values.size());
    std::iota(mapping.begin(), mapping.end(), 0);
    std::swap(mapping[static_cast<std::size_t>(s.a)], mapping[static_cast<std::size_t>(s.b)]);
    spec.permutations.push_back({s.category, std::move(mapping)});
    spec.slice.push_back({s.slice_category, s.slice_value});
    return spec;
  }

 private:
  struct Sliced {
    std::size_t category;
    int a, b;
    std::size_t slice_category;
    int slice_value;
  };

  const FeatureSchema& schema_;
  std::vector<std::vector<std::vector<int>>> perms_;
  std::vector<std::pair<std::size_t, std::size_t>> singles_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::vector<std::size_t> pair_offsets_;
  std::size_t pair_total_ = 0;
  std::vector<Sliced> sliced_;
};

}  // namespace

Paradigm apply_structural(const Paradigm& p, const StructuralSpec& spec, std::string id) {
  validate(p.schema(), spec);
  auto cells = permuted_cells(p, spec);
  if (cells == p.cells()) throw Error(ErrorKind::kIdentitySpec, "permutation changes no cell");
  if (id.empty()) id = p.id() + "/structural";
  return p.with_cells(std::move(id), std::move(cells));
}

Paradigm apply_form_only(const Paradigm& p, const FormOnlySpec& spec, std::string id) {
  const auto forms = p.distinct_forms();
  std::map<Form, Form> mapping;
  std::set<Form> targets;
  const std::set<Form> domain(forms.begin(), forms.end());
  for (const auto& [from, to] : spec.mapping) {
    if (!domain.count(from) || !domain.count(to) || !mapping.emplace(from, to).second ||
        !targets.insert(to).second) {
      throw Error(ErrorKind::kNotABijection, "form mapping is not a bijection on the paradigm's forms");
    }
  }
  if (mapping.size() != domain.size()) {
    throw Error(ErrorKind::kNotABijection, "form mapping does not cover every distinct form");
  }
  bool identity = true;
  for (const auto& [from, to] : mapping) identity = identity && from == to;
  if (identity) throw Error(ErrorKind::kIdentitySpec, "form mapping is the identity");

  std::vector<Form> cells;
  cells.reserve(p.size());
  for (const auto& f : p.cells()) cells.push_back(mapping.at(f));
  if (id.empty()) id = p.id() + "/form_only";
  return p.with_cells(std::move(id), std::move(cells));
}

std::vector<PermutationRecord> enumerate_structural(const Paradigm& p,
                                                    const StructuralOptions& options) {
  if (options.max_categories < 1 || options.max_categories > 2) {
    throw Error(ErrorKind::kInvalidArgument, "max_categories must be 1 or 2");
  }
  const StructuralCandidates candidates(p.schema(), options);
  const std::size_t total = candidates.size();
  const bool sampled = options.cap != 0 && total > options.cap;

  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (sampled) {
    std::mt19937_64 rng(options.seed);
    detail::shuffle(order, rng);
  }

  std::set<std::vector<Form>> seen{p.cells()};
  std::vector<std::pair<std::size_t, std::vector<Form>>> kept;
  for (std::size_t index : order) {
    if (sampled && kept.size() == options.cap) break;
    auto cells = permuted_cells(p, candidates.at(index));
    if (!seen.insert(cells).second) continue;
    kept.emplace_back(index, std::move(cells));
  }
  std::sort(kept.begin(), kept.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<PermutationRecord> out;
  out.reserve(kept.size());
  for (auto& [index, cells] : kept) {
    auto paradigm = p.with_cells(record_id(p.id(), 's', out.size()), std::move(cells));
    out.push_back({candidates.at(index), std::move(paradigm), p.id()});
  }
  return out;
}

std::vector<PermutationRecord> sample_form_only(const Paradigm& p, std::size_t n,
                                                std::uint64_t seed) {
  const auto forms = p.distinct_forms();
  const std::size_t k = forms.size();
  if (k < 2) {
    throw Error(ErrorKind::kDegenerateParadigm,
                "paradigm " + p.id() + " has fewer than two distinct forms");
  }
  // Number of non-identity bijections, saturating well above any sample size.
  std::size_t available = 1;
  for (std::size_t i = 2; i <= k && available <= n + 1; ++i) available *= i;
  available -= 1;

  std::vector<std::vector<std::size_t>> chosen;
  if (available <= n) {
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    while (std::next_permutation(perm.begin(), perm.end())) chosen.push_back(perm);
  } else {
    std::mt19937_64 rng(seed);
    std::set<std::vector<std::size_t>> seen;
    std::vector<std::size_t> identity(k);
    std::iota(identity.begin(), identity.end(), std::size_t{0});
    seen.insert(identity);
    while (chosen.size() < n) {
      auto perm = identity;
      detail::shuffle(perm, rng);
      if (seen.insert(perm).second) chosen.push_back(std::move(perm));
    }
  }

  std::vector<PermutationRecord> out;
  out.reserve(chosen.size());
  for (const auto& perm : chosen) {
    FormOnlySpec spec;
    for (std::size_t i = 0; i < k; ++i) spec.mapping.emplace_back(forms[i], forms[perm[i]]);
    auto paradigm = apply_form_only(p, spec, record_id(p.id(), 'f', out.size()));
    out.push_back({std::move(spec), std::move(paradigm), p.id()});
  }
  return out;
}

std::string describe(const FeatureSchema& schema, const StructuralSpec& spec) {
  std::string out;
  for (const auto& vp : spec.permutations) {
    const auto& cat = schema.category(vp.category);
    if (!out.empty()) out += ' ';
    out += cat.name + "[";
    bool first = true;
    for (std::size_t v = 0; v < vp.mapping.size(); ++v) {
      if (vp.mapping[v] == static_cast<int>(v)) continue;
      if (!first) out += ',';
      first = false;
      out += cat.values[v] + ">" + cat.values[static_cast<std::size_t>(vp.mapping[v])];
    }
    out += "]";
  }
  for (const auto& s : spec.slice) {
    const auto& cat = schema.category(s.category);
    out += " @" + cat.name + "=" + cat.values[static_cast<std::size_t>(s.value)];
  }
  return out;
}

}  // namespace paracomp
