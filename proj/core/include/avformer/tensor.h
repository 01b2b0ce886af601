// core/include/avformer/tensor.h

// Copyright 2026  avformer authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef AVFORMER_TENSOR_H_
#define AVFORMER_TENSOR_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "avformer/rng.h"
#include "avformer/status.h"

namespace avformer {

using Shape = std::vector<int>;

std::string ShapeToString(const Shape& dims);

namespace internal {
struct TensorNode;
}  // namespace internal

// Dense row-major double tensor participating in a reverse-mode gradient
// tape. The tape is built per forward pass by the free-function ops below
// and is discarded by Backward(). Tensors are value types sharing a node;
// op inputs are never mutated.
class Tensor {
 public:
  Tensor() = default;  // undefined tensor

  static Tensor Zeros(const Shape& dims, bool requires_grad = false);
  static Tensor Full(const Shape& dims, double value);
  static Tensor FromData(const Shape& dims, std::vector<double> data);
  static Tensor Scalar(double value);

  bool Defined() const { return node_ != nullptr; }
  const Shape& Dims() const;
  int Dim(int axis) const;
  int NumAxes() const;
  int64_t NumElements() const;

  const std::vector<double>& Data() const;
  // Direct mutation is reserved for parameter construction and optimizer
  // updates (the single-writer step); never call it on a tensor that is
  // part of a live tape.
  std::vector<double>& MutableData();
  double Item() const;  // value of a one-element tensor

  bool RequiresGrad() const;
  void SetRequiresGrad(bool requires_grad);
  bool HasGrad() const;
  const std::vector<double>& Grad() const;
  void ZeroGrad();

  // Reverse pass from a scalar output. Releases the tape afterwards.
  void Backward();

  // Identity test on the underlying node.
  bool SameNodeAs(const Tensor& other) const { return node_ == other.node_; }

 private:
  friend class OpBuilder;
  explicit Tensor(std::shared_ptr<internal::TensorNode> node)
      : node_(std::move(node)) {}
  std::shared_ptr<internal::TensorNode> node_;
};

// ---- Elementwise and linear algebra ----
Tensor Add(const Tensor& a, const Tensor& b);
Tensor Sub(const Tensor& a, const Tensor& b);
Tensor Mul(const Tensor& a, const Tensor& b);  // Hadamard
Tensor Scale(const Tensor& a, double s);
Tensor MatMul(const Tensor& a, const Tensor& b);  // [M,K] x [K,N]
Tensor Sigmoid(const Tensor& x);
Tensor Swish(const Tensor& x);  // x * sigmoid(x)

// Bias-style broadcasts, the only broadcasting the engine permits.
Tensor AddLastDim(const Tensor& x, const Tensor& bias);    // bias: [D]
Tensor MulLastDim(const Tensor& x, const Tensor& scale);   // scale: [D]
Tensor AddChannel(const Tensor& x, const Tensor& bias);    // axis 1, bias: [C]
Tensor MulChannel(const Tensor& x, const Tensor& scale);   // axis 1, scale: [C]

// ---- Normalization and attention primitives ----
Tensor Softmax(const Tensor& x, int axis);
Tensor LogSoftmaxLastDim(const Tensor& x);
// Per-row standardization over the last axis (mean 0, variance 1).
Tensor RowNormalize(const Tensor& x, double eps);
Tensor LayerNorm(const Tensor& x, const Tensor& gamma, const Tensor& beta,
                 double eps);

// ---- Convolutions and pooling ----
// x: [T,D], kernel: [K,D], K odd, zero "same" padding; correlation form.
Tensor DepthwiseConv1d(const Tensor& x, const Tensor& kernel);
// x: [N,C,H,W], kernel: [C,kh,kw]; stride/pad per spatial axis.
Tensor DepthwiseConv2d(const Tensor& x, const Tensor& kernel, int stride,
                       int pad);
// Unfold for convolution-as-matmul. x: [C,T,H,W] -> [C*kt*kh*kw, To*Ho*Wo].
Tensor Im2Col3d(const Tensor& x, int kt, int kh, int kw, int st, int sh,
                int sw, int pt, int ph, int pw);
// x: [N,C,H,W] -> [C*kh*kw, N*Ho*Wo].
Tensor Im2Col2d(const Tensor& x, int kh, int kw, int sh, int sw, int ph,
                int pw);
Tensor MaxPool2d(const Tensor& x, int kernel, int stride, int pad);
Tensor GlobalAvgPool2d(const Tensor& x);  // [N,C,H,W] -> [N,C]

// ---- Structure ----
Tensor Reshape(const Tensor& x, const Shape& dims);
Tensor Transpose(const Tensor& x);  // 2-D
Tensor SwapAxes(const Tensor& x, int a, int b);
Tensor Concat(const std::vector<Tensor>& xs, int axis);
Tensor Slice(const Tensor& x, int axis, int start, int len);
// Row lookup, e.g. token embeddings. table: [V,D] -> [ids.size(),D].
Tensor GatherRows(const Tensor& table, const std::vector<int>& ids);
// out[r,m] = x[r, idx[r*ncols+m]]; idx values must be valid columns of x.
Tensor GatherPerRow(const Tensor& x, const std::vector<int>& idx, int ncols);
// out[t] = mask[t] ? fill : x[t]; x: [T,D], fill: [D].
Tensor RowMask(const Tensor& x, const std::vector<uint8_t>& mask,
               const Tensor& fill);

// ---- Reductions and losses ----
Tensor Sum(const Tensor& x);
Tensor Mean(const Tensor& x);
// Mean negative picked log-prob over masked rows; zero-input mask handled
// by the caller (see masking.h).
Tensor MaskedNll(const Tensor& log_probs, const std::vector<int>& labels,
                 const std::vector<uint8_t>& mask);

// Inverted dropout; identity when !training or p == 0.
Tensor Dropout(const Tensor& x, double p, Rng* rng, bool training);

// ---- Validation harness ----
// Compares the tape gradient of a scalar function against central finite
// differences coordinate by coordinate; returns the worst relative error
// |a-n| / max(1e-8, |a|+|n|). eps must lie in [1e-5, 1e-2].
double GradCheck(const std::function<Tensor(const Tensor&)>& f,
                 const Tensor& x, double eps);

}  // namespace avformer

#endif  // AVFORMER_TENSOR_H_
