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

// Character-level LSTM encoder-decoder mapping feature-label sequences to
// grapheme sequences. Two stacked layers on each side; the decoder starts
// from the encoder's final hidden and cell states, layer by layer.

#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "paracomp/autodiff.h"
#include "paracomp/paradigm.h"

namespace paracomp::nn {

// Input tokens are SOS, EOS and every value label of the schema; output
// tokens are SOS, EOS and every grapheme in the given paradigms, sorted so a
// paradigm and its permutations share one vocabulary.
class Vocabulary {
 public:
  static constexpr int kSos = 0;
  static constexpr int kEos = 1;

  static Vocabulary build(std::span<const Paradigm> paradigms);
  static Vocabulary build(const Paradigm& p) { return build(std::span(&p, 1)); }

  int input_id(const std::string& label) const;
  int output_id(const std::string& grapheme) const;
  std::size_t input_size() const { return input_.size(); }
  std::size_t output_size() const { return output_.size(); }
  // Prediction targets: every output token except SOS.
  std::size_t num_classes() const { return output_.size() - 1; }
  const std::vector<std::string>& input_tokens() const { return input_; }
  const std::vector<std::string>& output_tokens() const { return output_; }

 private:
  std::vector<std::string> input_;
  std::vector<std::string> output_;
};

struct Example {
  std::vector<int> input;   // SOS, labels..., EOS
  std::vector<int> output;  // SOS, graphemes..., EOS
};

Example encode_example(const FeatureSchema& schema, const Meaning& m, const Form& w,
                       const Vocabulary& vocab);

struct ModelShape {
  int input_vocab = 0;
  int output_vocab = 0;
  int embed_dim = 32;
  int hidden_dim = 64;
};

struct LstmLayer {
  Parameter w;  // 4H x in, gate order i, f, g, o
  Parameter u;  // 4H x H
  Parameter b;  // 4H x 1
};

class Seq2Seq {
 public:
  // Parameters drawn uniformly from [-init_scale, init_scale].
  Seq2Seq(const ModelShape& shape, std::uint64_t seed, double init_scale = 0.08);

  const ModelShape& shape() const { return shape_; }
  std::vector<Parameter*> parameters();
  std::size_t num_parameters() const;

  // Teacher-forced negative log-likelihood of example.output[1..] in nats.
  // With `rng` non-null, inverted dropout at rate `dropout` is applied to the
  // outputs of each LSTM layer that feed another computation.
  Tape::Node build_loss(Tape& tape, const Example& example, double dropout,
                        std::mt19937_64* rng);

  // Output projection over prediction classes (output id - 1).
  Parameter& projection() { return proj_w_; }
  Parameter& projection_bias() { return proj_b_; }
  Parameter& output_embedding() { return out_embed_; }

 private:
  struct State {
    Tape::Node h;
    Tape::Node c;
  };

  State lstm_step(Tape& tape, LstmLayer& layer, Tape::Node x, State prev);

  ModelShape shape_;
  Parameter in_embed_;
  Parameter out_embed_;
  LstmLayer enc_[2];
  LstmLayer dec_[2];
  Parameter proj_w_;
  Parameter proj_b_;
};

// Loss in nats. Deterministic when `dropout_on` is false.
double forward_loss(Seq2Seq& model, const Example& example, bool dropout_on = false,
                    double dropout = 0.5, std::mt19937_64* rng = nullptr);

// Max relative error between the analytic gradient and central finite
// differences over `samples` randomly chosen parameter entries; dropout off.
// Relative error is |a - n| / max(|a|, |n|, kGradCheckFloor); below the floor
// central differences are dominated by rounding of the loss.
inline constexpr double kGradCheckFloor = 1e-6;
double grad_check(Seq2Seq& model, const Example& example, double epsilon = 1e-4,
                  std::uint64_t seed = 0, std::size_t samples = 200);

}  // namespace paracomp::nn
