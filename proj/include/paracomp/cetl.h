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

// Cross-entropy training loss (CETL): the need-weighted negative
// log-likelihood of a meaning-to-form network, averaged over training epochs.
// Paradigms whose forms are easier to learn accumulate less loss.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "paracomp/paradigm.h"
#include "paracomp/seq2seq.h"

namespace paracomp {

enum class LossMode {
  kEvalPass,     // deterministic pass with dropout off after each epoch
  kAccumulated,  // losses observed during the training pass
};

enum class Exposure {
  kUniform,      // every cell once per epoch, shuffled
  kNeedSampled,  // as many draws as cells, proportional to need
};

struct TrainConfig {
  int t_max = 50;
  double dropout = 0.5;
  int batch_size = 1;
  int hidden_dim = 64;
  int embed_dim = 32;
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double adam_eps = 1e-8;
  double init_scale = 0.08;
  LossMode loss_mode = LossMode::kEvalPass;
  Exposure exposure = Exposure::kUniform;
  int runs_attested = 10;
  int runs_counterfactual = 5;
  std::uint64_t base_seed = 0;
  int max_restarts = 3;  // reseeds per run after a non-finite loss

  // Throws InvalidArgument on out-of-range values.
  void validate() const;
};

std::string to_string(LossMode m);
std::string to_string(Exposure e);
LossMode loss_mode_from_string(const std::string& s);
Exposure exposure_from_string(const std::string& s);

// Canonical JSON of every knob, and its FNV-1a 64-bit hash in hex.
std::string canonical_json(const TrainConfig& cfg);
std::string config_hash(const TrainConfig& cfg);
std::string fnv1a_hex(const std::string& text);

class Adam {
 public:
  Adam(std::vector<nn::Parameter*> params, double lr, double beta1, double beta2, double eps);
  // Applies the accumulated gradients, then zeroes them.
  void step();

 private:
  std::vector<nn::Parameter*> params_;
  std::vector<nn::Mat> m_;
  std::vector<nn::Mat> v_;
  double lr_, beta1_, beta2_, eps_;
  long t_ = 0;
};

struct RunTrajectory {
  std::uint64_t seed = 0;
  std::vector<double> losses;  // one need-weighted loss per epoch, nats

  double cetl() const;
};

// One training run. Throws NonFiniteLoss if the loss diverges.
RunTrajectory train_and_score(const Paradigm& p, const NeedDistribution& need,
                              const TrainConfig& cfg, std::uint64_t seed);

struct CetlResult {
  std::string paradigm_id;
  std::vector<RunTrajectory> runs;
  double cetl_mean = 0.0;
  double cetl_sd = 0.0;  // sample standard deviation; 0 for a single run
  int diverged = 0;      // reseeds caused by non-finite losses
  std::string config_hash;
};

int runs_for(const TrainConfig& cfg, bool is_attested);
// Seed for run `run` after `attempt` restarts.
std::uint64_t run_seed(const TrainConfig& cfg, int run, int attempt);

// Trains run `run` with reseeding on divergence. Returns false if every
// attempt diverged; `diverged` counts the failed attempts.
bool train_run(const Paradigm& p, const NeedDistribution& need, const TrainConfig& cfg, int run,
               RunTrajectory& out, int& diverged);

// Aggregates finished runs; throws AllRunsDiverged when `runs` is empty.
CetlResult summarize(const std::string& paradigm_id, std::vector<RunTrajectory> runs,
                     int diverged, const TrainConfig& cfg);

// Trains runs_attested or runs_counterfactual networks with seeds
// base_seed + i, using up to `jobs` threads.
CetlResult cetl(const Paradigm& p, const NeedDistribution& need, const TrainConfig& cfg,
                bool is_attested, int jobs = 1);

}  // namespace paracomp
