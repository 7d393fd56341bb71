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

#pragma once

#include "paracomp/paradigm.h"

namespace paracomp {

// Sum over syncretism classes and feature categories of (number of distinct
// values of the category among the class members - 1). Zero for paradigms
// without syncretism.
int unnaturalness(const Paradigm& p);
int unnaturalness(const Paradigm& p, const SyncretismPartition& partition);

}  // namespace paracomp
