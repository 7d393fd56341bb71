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

#include "paracomp/meaning_space.h"

#include <algorithm>
#include <cmath>

#include "numeric_util.h"
#include "paracomp/error.h"

namespace paracomp {

int hamming(const Meaning& u, const Meaning& t) {
  if (u.values.size() != t.values.size()) {
    throw Error(ErrorKind::kSchemaMismatch, "meanings from different schemas");
  }
  int d = 0;
  for (std::size_t i = 0; i < u.values.size(); ++i) d += u.values[i] != t.values[i];
  return d;
}

std::vector<double> meaning_distribution(const Meaning& t, std::span<const Meaning> universe,
                                         double gamma) {
  if (std::find(universe.begin(), universe.end(), t) == universe.end()) {
    throw Error(ErrorKind::kInvalidArgument, "target meaning is not in the universe");
  }
  std::vector<double> probs(universe.size());
  for (std::size_t i = 0; i < universe.size(); ++i) {
    probs[i] = std::exp(-gamma * hamming(universe[i], t));
  }
  const double z = detail::sorted_sum(probs);
  for (double& p : probs) p /= z;
  return probs;
}

std::vector<std::vector<double>> meaning_distribution_table(std::span<const Meaning> universe,
                                                            double gamma) {
  std::vector<std::vector<double>> table;
  table.reserve(universe.size());
  for (const auto& t : universe) table.push_back(meaning_distribution(t, universe, gamma));
  return table;
}

}  // namespace paracomp
