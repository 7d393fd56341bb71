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

// Comparative analyses over scored paradigms: verdicts of counterfactuals
// against their attested baseline, Perf summaries, model comparison,
// complexity/unnaturalness correlations and significance tests.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace paracomp {

enum class RecordKind { kAttested, kStructural, kFormOnly };

std::string to_string(RecordKind kind);
RecordKind record_kind_from_string(const std::string& s);

struct EfficiencyRecord {
  std::string paradigm_id;
  std::string base_id;
  std::string language;
  std::string family;
  RecordKind kind = RecordKind::kAttested;
  std::optional<double> cetl_mean;  // absent when CETL scoring was skipped
  std::optional<double> cetl_sd;
  int cetl_runs = 0;
  double ib_complexity_bits = 0.0;
  double accuracy_nats = 0.0;
  int unnat = 0;
  int unnat_base = 0;
  std::string config_hash;
};

enum class Measure { kCetl, kIb };
enum class Verdict { kCorrect, kIncorrect, kMixed };

std::string to_string(Measure m);
std::string to_string(Verdict v);

// Equality tolerances: `cetl` for CETL means, `ib` for IB complexity and
// accuracy.
struct Tolerances {
  double cetl = 1e-6;
  double ib = 1e-9;
};

enum class Comparison { kWorse, kEqual, kBetter };

// Complexity: higher is worse. Accuracy: lower is worse.
Comparison compare_complexity(double base, double cf, double eps);
Comparison compare_accuracy(double base, double cf, double eps);

// Correct: worse in both, or worse in one and equal in the other.
// Incorrect: better or equal in both. Mixed otherwise.
Verdict verdict_from(Comparison complexity, Comparison accuracy);

// Throws BaseMismatch unless cf.base_id == base.paradigm_id.
Verdict classify(const EfficiencyRecord& base, const EfficiencyRecord& cf, Measure measure,
                 const Tolerances& eps = {});

struct PerfSummary {
  double c_pct = 0.0;
  double i_pct = 0.0;
  double mixed_pct = 0.0;
  double perf = 0.0;  // c_pct - i_pct
  std::size_t n = 0;
};

PerfSummary perf(std::span<const Verdict> verdicts);

enum class ModelWinner { kCetl, kIb, kTie };
std::string to_string(ModelWinner w);

// A model wins when its Perf exceeds the other's by at least `threshold`
// percentage points.
ModelWinner compare_models(double perf_cetl, double perf_ib, double threshold = 5.0);

struct CorrelationResult {
  double spearman = 0.0;
  double spearman_p = 1.0;
  double pearson = 0.0;
  std::size_t n = 0;
};

// Correlation between complexity and unnaturalness over the structural
// records in `records`. Throws DegenerateSample for fewer than three records
// or a constant vector.
CorrelationResult naturalness_correlation(std::span<const EfficiencyRecord> records,
                                          Measure measure);

// CSV tables derived from one records file.
struct Report {
  std::string hitfail;           // C/I/Perf per family and permutation kind
  std::string model_comparison;  // per language and kind
  std::string correlation;       // per language, then per-family averages
  std::string ttest;             // relative complexity/accuracy vs 0, per family
  std::string efficiency;        // per counterfactual, relative to its base
};

// Throws MissingBaseline when a counterfactual's base is absent (or the
// input is empty) and ConfigMismatch when config hashes differ.
Report build_report(std::span<const EfficiencyRecord> records, const Tolerances& eps = {});

}  // namespace paracomp
