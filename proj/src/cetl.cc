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

#include "paracomp/cetl.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <numeric>

#include "paracomp/error.h"
#include "paracomp/parallel.h"
#include "random_util.h"

namespace paracomp {

void TrainConfig::validate() const {
  auto fail = [](const std::string& what) { throw Error(ErrorKind::kInvalidArgument, what); };
  if (t_max < 1) fail("t_max must be >= 1");
  if (!(dropout >= 0.0 && dropout < 1.0)) fail("dropout must lie in [0, 1)");
  if (batch_size < 1) fail("batch_size must be >= 1");
  if (hidden_dim < 1 || embed_dim < 1) fail("model dimensions must be positive");
  if (!(learning_rate > 0.0)) fail("learning rate must be positive");
  if (runs_attested < 1 || runs_counterfactual < 1) fail("runs must be >= 1");
  if (max_restarts < 0) fail("max_restarts must be >= 0");
}

std::string to_string(LossMode m) {
  return m == LossMode::kEvalPass ? "eval_pass" : "accumulated";
}

std::string to_string(Exposure e) {
  return e == Exposure::kUniform ? "uniform" : "need_sampled";
}

LossMode loss_mode_from_string(const std::string& s) {
  if (s == "eval_pass") return LossMode::kEvalPass;
  if (s == "accumulated") return LossMode::kAccumulated;
  throw Error(ErrorKind::kInvalidArgument, "unknown loss_mode " + s);
}

Exposure exposure_from_string(const std::string& s) {
  if (s == "uniform") return Exposure::kUniform;
  if (s == "need_sampled") return Exposure::kNeedSampled;
  throw Error(ErrorKind::kInvalidArgument, "unknown exposure " + s);
}

std::string canonical_json(const TrainConfig& cfg) {
  nlohmann::json j = {
      {"t_max", cfg.t_max},
      {"dropout", cfg.dropout},
      {"batch_size", cfg.batch_size},
      {"hidden_dim", cfg.hidden_dim},
      {"embed_dim", cfg.embed_dim},
      {"learning_rate", cfg.learning_rate},
      {"beta1", cfg.beta1},
      {"beta2", cfg.beta2},
      {"adam_eps", cfg.adam_eps},
      {"init_scale", cfg.init_scale},
      {"loss_mode", to_string(cfg.loss_mode)},
      {"exposure", to_string(cfg.exposure)},
      {"runs_attested", cfg.runs_attested},
      {"runs_counterfactual", cfg.runs_counterfactual},
      {"base_seed", cfg.base_seed},
      {"max_restarts", cfg.max_restarts},
  };
  return j.dump();
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string config_hash(const TrainConfig& cfg) { return fnv1a_hex(canonical_json(cfg)); }

Adam::Adam(std::vector<nn::Parameter*> params, double lr, double beta1, double beta2, double eps)
    : params_(std::move(params)), lr_(lr), beta1_(beta1), beta2_(beta2), eps_(eps) {
  for (auto* p : params_) {
    m_.push_back(nn::Mat::Zero(p->value.rows(), p->value.cols()));
    v_.push_back(nn::Mat::Zero(p->value.rows(), p->value.cols()));
  }
}

void Adam::step() {
  ++t_;
  const double c1 = 1.0 - std::pow(beta1_, static_cast<double>(t_));
  const double c2 = 1.0 - std::pow(beta2_, static_cast<double>(t_));
  for (std::size_t k = 0; k < params_.size(); ++k) {
    auto& p = *params_[k];
    m_[k] = beta1_ * m_[k] + (1.0 - beta1_) * p.grad;
    v_[k] = beta2_ * v_[k] + (1.0 - beta2_) * p.grad.cwiseAbs2();
    p.value.array() -= lr_ * (m_[k].array() / c1) / ((v_[k].array() / c2).sqrt() + eps_);
    p.zero_grad();
  }
}

double RunTrajectory::cetl() const {
  if (losses.empty()) return 0.0;
  return std::accumulate(losses.begin(), losses.end(), 0.0) / static_cast<double>(losses.size());
}

namespace {

double checked(double loss) {
  if (!std::isfinite(loss)) throw Error(ErrorKind::kNonFiniteLoss, "training loss diverged");
  return loss;
}

std::size_t sample_index(const std::vector<double>& cumulative, std::mt19937_64& rng) {
  const double u = detail::uniform_unit(rng) * cumulative.back();
  const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
  return std::min(static_cast<std::size_t>(it - cumulative.begin()), cumulative.size() - 1);
}

}  // namespace

RunTrajectory train_and_score(const Paradigm& p, const NeedDistribution& need,
                              const TrainConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  if (need.size() != p.size()) {
    throw Error(ErrorKind::kSchemaMismatch, "need distribution does not match paradigm");
  }
  const auto vocab = nn::Vocabulary::build(p);
  std::vector<nn::Example> examples;
  examples.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    examples.push_back(nn::encode_example(p.schema(), meaning_at(p.schema(), i), p.form_at(i), vocab));
  }

  nn::ModelShape shape{static_cast<int>(vocab.input_size()), static_cast<int>(vocab.output_size()),
                       cfg.embed_dim, cfg.hidden_dim};
  nn::Seq2Seq model(shape, seed, cfg.init_scale);
  const auto params = model.parameters();
  Adam adam(params, cfg.learning_rate, cfg.beta1, cfg.beta2, cfg.adam_eps);
  // Separate stream for ordering and dropout so initialization is unaffected
  // by the training schedule.
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL);

  const std::size_t n = p.size();
  std::vector<double> cumulative(n);
  std::partial_sum(need.weights().begin(), need.weights().end(), cumulative.begin());

  RunTrajectory out;
  out.seed = seed;
  nn::Tape tape;
  std::vector<std::size_t> order(n);
  std::vector<double> loss_sum(n);
  std::vector<int> visits(n);

  for (int epoch = 0; epoch < cfg.t_max; ++epoch) {
    if (cfg.exposure == Exposure::kUniform) {
      std::iota(order.begin(), order.end(), std::size_t{0});
      detail::shuffle(order, rng);
    } else {
      for (auto& idx : order) idx = sample_index(cumulative, rng);
    }
    std::fill(loss_sum.begin(), loss_sum.end(), 0.0);
    std::fill(visits.begin(), visits.end(), 0);

    int pending = 0;
    auto flush = [&] {
      if (pending > 1) {
        for (auto* prm : params) prm->grad /= static_cast<double>(pending);
      }
      if (pending > 0) adam.step();
      pending = 0;
    };
    for (std::size_t idx : order) {
      tape.clear();
      const auto root = model.build_loss(tape, examples[idx], cfg.dropout, &rng);
      loss_sum[idx] += checked(tape.value(root)(0));
      ++visits[idx];
      tape.backward(root);
      if (++pending == cfg.batch_size) flush();
    }
    flush();

    double epoch_loss = 0.0;
    if (cfg.loss_mode == LossMode::kEvalPass) {
      for (std::size_t t = 0; t < n; ++t) {
        if (need[t] == 0.0) continue;
        tape.clear();
        const auto root = model.build_loss(tape, examples[t], 0.0, nullptr);
        epoch_loss += need[t] * checked(tape.value(root)(0));
      }
    } else {
      // Need-weighted mean over the cells visited this epoch.
      double mass = 0.0;
      for (std::size_t t = 0; t < n; ++t) {
        if (visits[t] == 0) continue;
        epoch_loss += need[t] * loss_sum[t] / visits[t];
        mass += need[t];
      }
      epoch_loss = mass > 0.0 ? epoch_loss / mass : 0.0;
    }
    out.losses.push_back(checked(epoch_loss));
  }
  return out;
}

int runs_for(const TrainConfig& cfg, bool is_attested) {
  return is_attested ? cfg.runs_attested : cfg.runs_counterfactual;
}

std::uint64_t run_seed(const TrainConfig& cfg, int run, int attempt) {
  return cfg.base_seed + static_cast<std::uint64_t>(run) +
         static_cast<std::uint64_t>(attempt) * 1000003ULL;
}

bool train_run(const Paradigm& p, const NeedDistribution& need, const TrainConfig& cfg, int run,
               RunTrajectory& out, int& diverged) {
  for (int attempt = 0; attempt <= cfg.max_restarts; ++attempt) {
    try {
      out = train_and_score(p, need, cfg, run_seed(cfg, run, attempt));
      return true;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kNonFiniteLoss) throw;
      ++diverged;
    }
  }
  return false;
}

CetlResult summarize(const std::string& paradigm_id, std::vector<RunTrajectory> runs,
                     int diverged, const TrainConfig& cfg) {
  if (runs.empty()) {
    throw Error(ErrorKind::kAllRunsDiverged, "every run diverged for paradigm " + paradigm_id);
  }
  CetlResult r;
  r.paradigm_id = paradigm_id;
  r.diverged = diverged;
  r.config_hash = config_hash(cfg);
  double sum = 0.0;
  for (const auto& run : runs) sum += run.cetl();
  r.cetl_mean = sum / static_cast<double>(runs.size());
  if (runs.size() > 1) {
    double ss = 0.0;
    for (const auto& run : runs) ss += (run.cetl() - r.cetl_mean) * (run.cetl() - r.cetl_mean);
    r.cetl_sd = std::sqrt(ss / static_cast<double>(runs.size() - 1));
  }
  r.runs = std::move(runs);
  return r;
}

CetlResult cetl(const Paradigm& p, const NeedDistribution& need, const TrainConfig& cfg,
                bool is_attested, int jobs) {
  cfg.validate();
  const int n = runs_for(cfg, is_attested);
  std::vector<RunTrajectory> slots(static_cast<std::size_t>(n));
  std::vector<int> ok(static_cast<std::size_t>(n), 0);
  std::vector<int> diverged(static_cast<std::size_t>(n), 0);
  parallel_for(static_cast<std::size_t>(n), jobs, [&](std::size_t i) {
    ok[i] = train_run(p, need, cfg, static_cast<int>(i), slots[i], diverged[i]);
  });
  std::vector<RunTrajectory> runs;
  int total_diverged = 0;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    total_diverged += diverged[i];
    if (ok[i]) runs.push_back(std::move(slots[i]));
  }
  return summarize(p.id(), std::move(runs), total_diverged, cfg);
}

}  // namespace paracomp
