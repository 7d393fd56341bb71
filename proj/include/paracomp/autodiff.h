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

// Minimal tape-based reverse-mode differentiation over dense vectors, with
// exactly the operations a stacked LSTM encoder-decoder needs.

#pragma once

#include <Eigen/Dense>
#include <span>
#include <string>
#include <vector>

namespace paracomp::nn {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

struct Parameter {
  std::string name;
  Mat value;
  Mat grad;

  Parameter() = default;
  Parameter(std::string n, Eigen::Index rows, Eigen::Index cols)
      : name(std::move(n)), value(Mat::Zero(rows, cols)), grad(Mat::Zero(rows, cols)) {}

  void zero_grad() { grad.setZero(); }
};

// Records operations in evaluation order. Node storage is reused across
// `clear()` calls so a training loop does not reallocate per example.
class Tape {
 public:
  using Node = int;

  void clear() { size_ = 0; }
  std::size_t size() const { return size_; }

  Node constant(const Vec& v);
  // Column `column` of `table`.
  Node embedding(Parameter& table, int column);
  Node matvec(Parameter& w, Node x);
  Node add(Node a, Node b);
  Node add_bias(Node a, Parameter& bias);
  Node slice(Node a, int offset, int length);
  Node sigmoid(Node a);
  Node tanh(Node a);
  Node mul(Node a, Node b);
  // Elementwise product with a fixed vector (dropout masks).
  Node scale(Node a, const Vec& factors);
  // Scalar -log softmax(logits)[target].
  Node cross_entropy(Node logits, int target);
  // Scalar sum of scalar nodes.
  Node sum(std::span<const Node> scalars);

  const Vec& value(Node n) const { return nodes_[static_cast<std::size_t>(n)].value; }

  // Accumulates d(root)/d(param) into every parameter reached from `root`.
  void backward(Node root);

 private:
  enum class Op {
    kConstant, kEmbedding, kMatvec, kAdd, kAddBias, kSlice, kSigmoid, kTanh,
    kMul, kScale, kCrossEntropy, kSum,
  };

  struct Record {
    Op op = Op::kConstant;
    Node a = -1;
    Node b = -1;
    Parameter* param = nullptr;
    int aux = 0;
    Vec value;
    Vec grad;
    Vec extra;             // scale factors or softmax probabilities
    std::vector<Node> inputs;  // kSum only
  };

  Record& push(Op op);
  Record& at(Node n) { return nodes_[static_cast<std::size_t>(n)]; }

  std::vector<Record> nodes_;
  std::size_t size_ = 0;
};

}  // namespace paracomp::nn
