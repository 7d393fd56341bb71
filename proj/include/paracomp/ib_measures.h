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

// Information Bottleneck baseline for deterministic paradigms: encoder
// complexity as the mutual information between meanings and forms, and
// accuracy as the negative expected KL divergence between the Bayesian
// listener's reconstruction and the speaker's meaning distribution.

#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "paracomp/meaning_space.h"
#include "paracomp/paradigm.h"

namespace paracomp {

// Posterior over meanings for one form. Empty `support` marks a dead form
// (its class has zero total need).
struct FormPosterior {
  Form form;
  std::vector<std::pair<std::size_t, double>> support;  // (meaning index, q_dec)

  bool dead() const { return support.empty(); }
};

class ListenerPosterior {
 public:
  explicit ListenerPosterior(std::vector<FormPosterior> posteriors)
      : posteriors_(std::move(posteriors)) {}

  const std::vector<FormPosterior>& posteriors() const { return posteriors_; }
  std::size_t dead_forms() const;
  // Throws DeadForm for a dead form and InvalidArgument for an unknown one.
  const FormPosterior& for_form(const Form& w) const;

 private:
  std::vector<FormPosterior> posteriors_;
};

// Bits. Equals the entropy of the induced form distribution.
double ib_complexity(const Paradigm& p, const NeedDistribution& need);

// Posteriors are listed in syncretism-class order.
ListenerPosterior listener_posterior(const Paradigm& p, const NeedDistribution& need);

struct AccuracyResult {
  double nats = 0.0;
  std::size_t dead_forms = 0;  // zero-need classes skipped
};

AccuracyResult ib_accuracy_detailed(const Paradigm& p, const NeedDistribution& need,
                                    double gamma = kDefaultGamma);

// -E[KL(m̂_w || m_t)] in nats over the paradigm's full meaning universe; ≤ 0.
inline double ib_accuracy(const Paradigm& p, const NeedDistribution& need,
                          double gamma = kDefaultGamma) {
  return ib_accuracy_detailed(p, need, gamma).nats;
}

}  // namespace paracomp
