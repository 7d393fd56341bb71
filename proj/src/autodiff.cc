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

#include "paracomp/autodiff.h"

#include <cmath>

namespace paracomp::nn {

Tape::Record& Tape::push(Op op) {
  if (size_ == nodes_.size()) nodes_.emplace_back();
  Record& r = nodes_[size_++];
  r.op = op;
  r.a = r.b = -1;
  r.param = nullptr;
  r.aux = 0;
  return r;
}

Tape::Node Tape::constant(const Vec& v) {
  Record& r = push(Op::kConstant);
  r.value = v;
  return static_cast<Node>(size_ - 1);
}

Tape::Node Tape::embedding(Parameter& table, int column) {
  Record& r = push(Op::kEmbedding);
  r.param = &table;
  r.aux = column;
  r.value = table.value.col(column);
  return static_cast<Node>(size_ - 1);
}

Tape::Node Tape::matvec(Parameter& w, Node x) {
  Record& r = push(Op::kMatvec);
  r.param = &w;
  r.a = x;
  r.value.noalias() = w.value * at(x).value;
  return static_cast<Node>(size_ - 1);
}

Tape::Node Tape::add(Node a, Node b) {
  Record& r = push(Op::kAdd);
  r.a = a;
  r.b = b;
  r.value = at(a).value + at(b).value;
  return static_cast<Node>(size_ - 1);
}

Tape::Node Tape::add_bias(Node a, Parameter& bias) {
  Record& r = push(Op::kAddBias);
  r.a = a;
  r.param = &bias;
  r.value = at(a).value + bias.value.col(0);
  return static_cast<Node>(size_ - 1);
}

Tape::Node Tape::slice(Node a, int offset, int length) {
  Record& r = push(Op::kSlice);
  r.a = a;
  r.aux = offset;
  r.value = at(a).value.segment(offset, length);
  return static_cast<Node>(size_ - 1);
}

Tape::Node Tape::sigmoid(Node a) {
  Record& r = push(Op::kSigmoid);
  r.a = a;
  r.value = (1.0 + (-at(a).value.array()).exp()).inverse().matrix();
  return static_cast<Node>(size_ - 1);
}

Tape::Node Tape::tanh(Node a) {
  Record& r = push(Op::kTanh);
  r.a = a;
  r.value = at(a).value.array().tanh().matrix();
  return static_cast<Node>(size_ - 1);
}

Tape::Node Tape::mul(Node a, Node b) {
  Record& r = push(Op::kMul);
  r.a = a;
  r.b = b;
  r.value = at(a).value.cwiseProduct(at(b).value);
  return static_cast<Node>(size_ - 1);
}

Tape::Node Tape::scale(Node a, const Vec& factors) {
  Record& r = push(Op::kScale);
  r.a = a;
  r.extra = factors;
  r.value = at(a).value.cwiseProduct(factors);
  return static_cast<Node>(size_ - 1);
}

Tape::Node Tape::cross_entropy(Node logits, int target) {
  Record& r = push(Op::kCrossEntropy);
  r.a = logits;
  r.aux = target;
  const Vec& z = at(logits).value;
  const double zmax = z.maxCoeff();
  r.extra = (z.array() - zmax).exp().matrix();
  const double norm = r.extra.sum();
  r.extra /= norm;
  r.value.resize(1);
  r.value(0) = -(z(target) - zmax - std::log(norm));
  return static_cast<Node>(size_ - 1);
}

Tape::Node Tape::sum(std::span<const Node> scalars) {
  Record& r = push(Op::kSum);
  r.inputs.assign(scalars.begin(), scalars.end());
  double total = 0.0;
  for (Node n : scalars) total += at(n).value(0);
  r.value.resize(1);
  r.value(0) = total;
  return static_cast<Node>(size_ - 1);
}

void Tape::backward(Node root) {
  const auto last = static_cast<std::size_t>(root);
  for (std::size_t i = 0; i <= last; ++i) nodes_[i].grad.setZero(nodes_[i].value.size());
  nodes_[last].grad(0) = 1.0;

  for (std::size_t i = last + 1; i-- > 0;) {
    Record& r = nodes_[i];
    const Vec& g = r.grad;
    switch (r.op) {
      case Op::kConstant:
        break;
      case Op::kEmbedding:
        r.param->grad.col(r.aux) += g;
        break;
      case Op::kMatvec: {
        Record& x = at(r.a);
        r.param->grad.noalias() += g * x.value.transpose();
        x.grad.noalias() += r.param->value.transpose() * g;
        break;
      }
      case Op::kAdd:
        at(r.a).grad += g;
        at(r.b).grad += g;
        break;
      case Op::kAddBias:
        at(r.a).grad += g;
        r.param->grad.col(0) += g;
        break;
      case Op::kSlice:
        at(r.a).grad.segment(r.aux, g.size()) += g;
        break;
      case Op::kSigmoid:
        at(r.a).grad.array() += g.array() * r.value.array() * (1.0 - r.value.array());
        break;
      case Op::kTanh:
        at(r.a).grad.array() += g.array() * (1.0 - r.value.array().square());
        break;
      case Op::kMul:
        at(r.a).grad += g.cwiseProduct(at(r.b).value);
        at(r.b).grad += g.cwiseProduct(at(r.a).value);
        break;
      case Op::kScale:
        at(r.a).grad += g.cwiseProduct(r.extra);
        break;
      case Op::kCrossEntropy: {
        Vec d = r.extra * g(0);
        d(r.aux) -= g(0);
        at(r.a).grad += d;
        break;
      }
      case Op::kSum:
        for (Node n : r.inputs) at(n).grad(0) += g(0);
        break;
    }
  }
}

}  // namespace paracomp::nn
