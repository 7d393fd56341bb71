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

#include "paracomp/seq2seq.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "paracomp/error.h"
#include "random_util.h"

namespace paracomp::nn {

Vocabulary Vocabulary::build(std::span<const Paradigm> paradigms) {
  Vocabulary v;
  v.input_ = {"<sos>", "<eos>"};
  v.output_ = {"<sos>", "<eos>"};
  std::set<std::string> labels;
  std::set<std::string> graphemes;
  for (const auto& p : paradigms) {
    for (const auto& c : p.schema().categories()) {
      for (const auto& label : c.values) {
        if (labels.insert(label).second) v.input_.push_back(label);
      }
    }
    for (const auto& f : p.cells()) graphemes.insert(f.tokens.begin(), f.tokens.end());
  }
  v.output_.insert(v.output_.end(), graphemes.begin(), graphemes.end());
  return v;
}

int Vocabulary::input_id(const std::string& label) const {
  for (std::size_t i = 2; i < input_.size(); ++i) {
    if (input_[i] == label) return static_cast<int>(i);
  }
  throw Error(ErrorKind::kUnknownToken, "input label '" + label + "'");
}

int Vocabulary::output_id(const std::string& grapheme) const {
  const auto it = std::lower_bound(output_.begin() + 2, output_.end(), grapheme);
  if (it == output_.end() || *it != grapheme) {
    throw Error(ErrorKind::kUnknownToken, "grapheme '" + grapheme + "'");
  }
  return static_cast<int>(it - output_.begin());
}

Example encode_example(const FeatureSchema& schema, const Meaning& m, const Form& w,
                       const Vocabulary& vocab) {
  Example ex;
  ex.input.push_back(Vocabulary::kSos);
  for (std::size_t c = 0; c < m.values.size(); ++c) {
    ex.input.push_back(
        vocab.input_id(schema.category(c).values.at(static_cast<std::size_t>(m.values[c]))));
  }
  ex.input.push_back(Vocabulary::kEos);
  ex.output.push_back(Vocabulary::kSos);
  for (const auto& g : w.tokens) ex.output.push_back(vocab.output_id(g));
  ex.output.push_back(Vocabulary::kEos);
  return ex;
}

namespace {

LstmLayer make_layer(const std::string& name, int in, int hidden) {
  return {Parameter(name + ".w", 4 * hidden, in), Parameter(name + ".u", 4 * hidden, hidden),
          Parameter(name + ".b", 4 * hidden, 1)};
}

Vec dropout_mask(int size, double rate, std::mt19937_64& rng) {
  const double keep = 1.0 - rate;
  Vec mask(size);
  for (int i = 0; i < size; ++i) mask(i) = detail::uniform_unit(rng) < keep ? 1.0 / keep : 0.0;
  return mask;
}

}  // namespace

Seq2Seq::Seq2Seq(const ModelShape& shape, std::uint64_t seed, double init_scale)
    : shape_(shape),
      in_embed_("in_embed", shape.embed_dim, shape.input_vocab),
      out_embed_("out_embed", shape.embed_dim, shape.output_vocab),
      enc_{make_layer("enc0", shape.embed_dim, shape.hidden_dim),
           make_layer("enc1", shape.hidden_dim, shape.hidden_dim)},
      dec_{make_layer("dec0", shape.embed_dim, shape.hidden_dim),
           make_layer("dec1", shape.hidden_dim, shape.hidden_dim)},
      proj_w_("proj.w", shape.output_vocab - 1, shape.hidden_dim),
      proj_b_("proj.b", shape.output_vocab - 1, 1) {
  if (shape.input_vocab < 3 || shape.output_vocab < 2 || shape.embed_dim < 1 ||
      shape.hidden_dim < 1) {
    throw Error(ErrorKind::kInvalidArgument, "invalid model shape");
  }
  std::mt19937_64 rng(seed);
  for (Parameter* p : parameters()) {
    for (Eigen::Index j = 0; j < p->value.cols(); ++j) {
      for (Eigen::Index i = 0; i < p->value.rows(); ++i) {
        p->value(i, j) = (2.0 * detail::uniform_unit(rng) - 1.0) * init_scale;
      }
    }
  }
}

std::vector<Parameter*> Seq2Seq::parameters() {
  std::vector<Parameter*> out{&in_embed_, &out_embed_};
  for (auto* layers : {enc_, dec_}) {
    for (int l = 0; l < 2; ++l) {
      out.push_back(&layers[l].w);
      out.push_back(&layers[l].u);
      out.push_back(&layers[l].b);
    }
  }
  out.push_back(&proj_w_);
  out.push_back(&proj_b_);
  return out;
}

std::size_t Seq2Seq::num_parameters() const {
  std::size_t n = 0;
  for (Parameter* p : const_cast<Seq2Seq*>(this)->parameters()) {
    n += static_cast<std::size_t>(p->value.size());
  }
  return n;
}

Seq2Seq::State Seq2Seq::lstm_step(Tape& tape, LstmLayer& layer, Tape::Node x, State prev) {
  const int h = shape_.hidden_dim;
  const auto z = tape.add_bias(tape.add(tape.matvec(layer.w, x), tape.matvec(layer.u, prev.h)),
                               layer.b);
  const auto i = tape.sigmoid(tape.slice(z, 0, h));
  const auto f = tape.sigmoid(tape.slice(z, h, h));
  const auto g = tape.tanh(tape.slice(z, 2 * h, h));
  const auto o = tape.sigmoid(tape.slice(z, 3 * h, h));
  const auto c = tape.add(tape.mul(f, prev.c), tape.mul(i, g));
  return {tape.mul(o, tape.tanh(c)), c};
}

Tape::Node Seq2Seq::build_loss(Tape& tape, const Example& example, double dropout,
                               std::mt19937_64* rng) {
  if (example.input.size() < 2 || example.output.size() < 2) {
    throw Error(ErrorKind::kInvalidArgument, "example must include SOS and EOS");
  }
  const int hdim = shape_.hidden_dim;
  const bool drop = rng != nullptr && dropout > 0.0;
  auto maybe_drop = [&](Tape::Node n) {
    return drop ? tape.scale(n, dropout_mask(hdim, dropout, *rng)) : n;
  };

  const auto zero = tape.constant(Vec::Zero(hdim));
  State s0{zero, zero};
  State s1{zero, zero};
  for (int tok : example.input) {
    if (tok < 0 || tok >= shape_.input_vocab) {
      throw Error(ErrorKind::kUnknownToken, "input id out of range");
    }
    s0 = lstm_step(tape, enc_[0], tape.embedding(in_embed_, tok), s0);
    s1 = lstm_step(tape, enc_[1], maybe_drop(s0.h), s1);
  }

  std::vector<Tape::Node> losses;
  losses.reserve(example.output.size() - 1);
  for (std::size_t pos = 0; pos + 1 < example.output.size(); ++pos) {
    const int prev = example.output[pos];
    const int target = example.output[pos + 1];
    if (prev < 0 || prev >= shape_.output_vocab || target < 1 || target >= shape_.output_vocab) {
      throw Error(ErrorKind::kUnknownToken, "output id out of range");
    }
    s0 = lstm_step(tape, dec_[0], tape.embedding(out_embed_, prev), s0);
    s1 = lstm_step(tape, dec_[1], maybe_drop(s0.h), s1);
    const auto logits = tape.add_bias(tape.matvec(proj_w_, maybe_drop(s1.h)), proj_b_);
    losses.push_back(tape.cross_entropy(logits, target - 1));
  }
  return tape.sum(losses);
}

double forward_loss(Seq2Seq& model, const Example& example, bool dropout_on, double dropout,
                    std::mt19937_64* rng) {
  Tape tape;
  const auto root = model.build_loss(tape, example, dropout, dropout_on ? rng : nullptr);
  const double loss = tape.value(root)(0);
  if (!std::isfinite(loss)) throw Error(ErrorKind::kNonFiniteLoss, "forward pass diverged");
  return loss;
}

double grad_check(Seq2Seq& model, const Example& example, double epsilon, std::uint64_t seed,
                  std::size_t samples) {
  auto params = model.parameters();
  for (Parameter* p : params) p->zero_grad();
  Tape tape;
  tape.backward(model.build_loss(tape, example, 0.0, nullptr));

  struct Entry {
    Parameter* param;
    Eigen::Index index;
  };
  std::vector<Entry> entries;
  for (Parameter* p : params) {
    for (Eigen::Index i = 0; i < p->value.size(); ++i) entries.push_back({p, i});
  }
  std::mt19937_64 rng(seed);
  detail::shuffle(entries, rng);
  if (entries.size() > samples) entries.resize(samples);

  double worst = 0.0;
  for (const auto& [param, index] : entries) {
    double& x = param->value.data()[index];
    const double analytic = param->grad.data()[index];
    const double original = x;
    x = original + epsilon;
    const double plus = forward_loss(model, example);
    x = original - epsilon;
    const double minus = forward_loss(model, example);
    x = original;
    const double numeric = (plus - minus) / (2.0 * epsilon);
    const double denom = std::max({std::abs(analytic), std::abs(numeric), kGradCheckFloor});
    worst = std::max(worst, std::abs(analytic - numeric) / denom);
  }
  for (Parameter* p : params) p->zero_grad();
  return worst;
}

}  // namespace paracomp::nn
