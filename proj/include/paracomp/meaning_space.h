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

// Listener-side semantics: categorical Hamming distance between meanings and
// the exponential meaning distribution m_t(u) ∝ exp(-gamma * d(u, t)).

#pragma once

#include <span>
#include <vector>

#include "paracomp/paradigm.h"

namespace paracomp {

inline constexpr double kDefaultGamma = 1.0;

// Number of categories on which `u` and `t` differ. Throws SchemaMismatch
// when the meanings have different lengths.
int hamming(const Meaning& u, const Meaning& t);

// Probabilities aligned with `universe`. `t` must be an element of it.
std::vector<double> meaning_distribution(const Meaning& t, std::span<const Meaning> universe,
                                         double gamma = kDefaultGamma);

// Row i is m_{universe[i]}; computed once per schema and reused by the
// accuracy computation.
std::vector<std::vector<double>> meaning_distribution_table(std::span<const Meaning> universe,
                                                            double gamma = kDefaultGamma);

}  // namespace paracomp
