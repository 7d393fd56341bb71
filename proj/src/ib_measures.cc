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

#include "paracomp/ib_measures.h"

#include <cmath>

#include "numeric_util.h"
#include "paracomp/error.h"

namespace paracomp {

namespace {

double class_mass(const SyncretismClass& cls, const NeedDistribution& need) {
  std::vector<double> w;
  w.reserve(cls.members.size());
  for (auto t : cls.members) w.push_back(need[t]);
  return detail::sorted_sum(std::move(w));
}

void check_sizes(const Paradigm& p, const NeedDistribution& need) {
  if (need.size() != p.size()) {
    throw Error(ErrorKind::kSchemaMismatch, "need distribution does not match paradigm " + p.id());
  }
}

}  // namespace

std::size_t ListenerPosterior::dead_forms() const {
  std::size_t n = 0;
  for (const auto& fp : posteriors_) n += fp.dead();
  return n;
}

const FormPosterior& ListenerPosterior::for_form(const Form& w) const {
  for (const auto& fp : posteriors_) {
    if (fp.form == w) {
      if (fp.dead()) throw Error(ErrorKind::kDeadForm, "form '" + w.text() + "' has zero need");
      return fp;
    }
  }
  throw Error(ErrorKind::kInvalidArgument, "form '" + w.text() + "' not in paradigm");
}

double ib_complexity(const Paradigm& p, const NeedDistribution& need) {
  check_sizes(p, need);
  const auto partition = syncretism_partition(p);
  std::vector<double> terms;
  for (const auto& cls : partition.classes) {
    const double mass = class_mass(cls, need);
    if (mass > 0.0) terms.push_back(-mass * std::log2(mass));
  }
  const double bits = detail::sorted_sum(std::move(terms));
  return bits < 0.0 ? 0.0 : bits;
}

ListenerPosterior listener_posterior(const Paradigm& p, const NeedDistribution& need) {
  check_sizes(p, need);
  const auto partition = syncretism_partition(p);
  std::vector<FormPosterior> out;
  out.reserve(partition.classes.size());
  for (const auto& cls : partition.classes) {
    FormPosterior fp{cls.form, {}};
    const double mass = class_mass(cls, need);
    if (mass > 0.0) {
      for (auto t : cls.members) {
        if (need[t] > 0.0) fp.support.emplace_back(t, need[t] / mass);
      }
    }
    out.push_back(std::move(fp));
  }
  return ListenerPosterior(std::move(out));
}

AccuracyResult ib_accuracy_detailed(const Paradigm& p, const NeedDistribution& need,
                                    double gamma) {
  const auto posterior = listener_posterior(p, need);
  const auto universe = all_meanings(p.schema());
  const auto m = meaning_distribution_table(universe, gamma);
  const std::size_t n = universe.size();

  AccuracyResult result;
  std::vector<double> reconstructed(n);
  std::vector<double> expectation;
  std::vector<double> terms;
  for (const auto& fp : posterior.posteriors()) {
    if (fp.dead()) {
      ++result.dead_forms;
      continue;
    }
    for (std::size_t u = 0; u < n; ++u) {
      terms.clear();
      for (const auto& [t, q] : fp.support) terms.push_back(q * m[t][u]);
      reconstructed[u] = detail::sorted_sum(terms);
    }
    // Members with zero need carry no weight in the expectation.
    for (const auto& [t, q] : fp.support) {
      terms.clear();
      for (std::size_t u = 0; u < n; ++u) {
        const double r = reconstructed[u];
        if (r > 0.0) terms.push_back(r * std::log(r / m[t][u]));
      }
      expectation.push_back(need[t] * detail::sorted_sum(terms));
    }
  }
  result.nats = -detail::sorted_sum(std::move(expectation));
  return result;
}

}  // namespace paracomp
