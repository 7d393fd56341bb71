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

#include "paracomp/naturalness.h"

#include <vector>

namespace paracomp {

int unnaturalness(const Paradigm& p) { return unnaturalness(p, syncretism_partition(p)); }

int unnaturalness(const Paradigm& p, const SyncretismPartition& partition) {
  const auto& schema = p.schema();
  int score = 0;
  for (const auto& cls : partition.classes) {
    for (std::size_t c = 0; c < schema.num_categories(); ++c) {
      std::vector<bool> seen(schema.category(c).values.size(), false);
      int distinct = 0;
      for (auto idx : cls.members) {
        const auto v = static_cast<std::size_t>(meaning_at(schema, idx).values[c]);
        if (!seen[v]) {
          seen[v] = true;
          ++distinct;
        }
      }
      score += distinct - 1;
    }
  }
  return score;
}

}  // namespace paracomp
