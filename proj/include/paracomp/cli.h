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

#include <cstdint>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "paracomp/cetl.h"
#include "paracomp/counterfactual.h"
#include "paracomp/evaluation.h"

namespace paracomp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitNumeric = 3;

enum class Kinds { kBoth, kStructural, kFormOnly };

std::string to_string(Kinds k);
Kinds kinds_from_string(const std::string& s);

struct RunConfig {
  std::string out_dir;  // empty: $PARACOMP_OUT_DIR, else "."
  std::string need;     // empty: uniform need
  int jobs = 1;

  Kinds kinds = Kinds::kBoth;
  std::size_t n_form_only = 50;
  std::uint64_t seed = 0;
  int max_categories = 2;
  bool slices = true;
  std::size_t cap = 2000;

  double gamma = 1.0;
  bool skip_cetl = false;
  Tolerances eps;
  TrainConfig train;

  // Fields that change results. Paths and `jobs` are excluded.
  nlohmann::json hashed_json() const;
  std::string hash() const;

  nlohmann::json to_json() const;
  // Overlays the keys present in `j`; unknown keys are rejected.
  void merge_json(const nlohmann::json& j);
  void validate() const;

  std::string resolved_out_dir() const;
};

// Maps an exception to an exit code and writes a one-line message to `err`.
int report_error(const std::exception& e, std::ostream& err);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace paracomp::cli
