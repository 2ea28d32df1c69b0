// include/sik/nn/layers.h

// Copyright 2026  The SIK Authors

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

#ifndef SIK_NN_LAYERS_H_
#define SIK_NN_LAYERS_H_

#include <string>
#include <vector>

#include "sik/base/rng.h"
#include "sik/nn/kernels.h"
#include "sik/nn/tensor.h"

namespace sik::nn {

// Layers cache whatever the backward pass needs during Forward, so the
// call pattern per sample is Forward then (optionally) Backward. Parameter
// gradients accumulate across samples until ZeroGrad.

enum class Activation { kLinear, kRelu, kTanh, kSoftmax };

class DenseLayer {
 public:
  DenseLayer(const std::string &name, int64 in_dim, int64 out_dim,
             Activation act);

  // x: [rows x in_dim] -> [rows x out_dim]. Softmax applies row-wise.
  Tensor Forward(const Tensor &x);
  // dy is w.r.t. the activated output.
  Tensor Backward(const Tensor &dy);
  // dlogits is w.r.t. the pre-activation; used by losses (CTC) whose
  // natural gradient is in logit space. Only valid for kSoftmax/kLinear.
  Tensor BackwardFromLogits(const Tensor &dlogits);

  std::vector<Param *> Params() { return {&w_, &b_}; }
  int64 in_dim() const { return w_.value.dim(0); }
  int64 out_dim() const { return w_.value.dim(1); }
  Activation activation() const { return act_; }

 private:
  Param w_, b_;
  Activation act_;
  Tensor x_, pre_, y_;
};

class Conv3dLayer {
 public:
  Conv3dLayer(const std::string &name, std::vector<int64> kernel_shape,
              Conv3dSpec spec, bool relu);

  Tensor Forward(const Tensor &x);
  Tensor Backward(const Tensor &dy);

  std::vector<Param *> Params() { return {&kernel_, &bias_}; }
  const Conv3dSpec &spec() const { return spec_; }

 private:
  Param kernel_, bias_;
  Conv3dSpec spec_;
  bool relu_;
  Tensor x_, y_;
};

class MaxPool3dLayer {
 public:
  explicit MaxPool3dLayer(Pool3dSpec spec) : spec_(spec) {}

  Tensor Forward(const Tensor &x);
  Tensor Backward(const Tensor &dy);

 private:
  Pool3dSpec spec_;
  std::vector<int64> argmax_;
  std::vector<int64> in_shape_;
};

class DropoutLayer {
 public:
  explicit DropoutLayer(double rate);

  // Training mode iff rng is non-null; inference is the identity.
  Tensor Forward(const Tensor &x, Rng *rng);
  Tensor Backward(const Tensor &dy);

 private:
  double rate_;
  std::vector<double> mask_;  // survivor scale per element, 0 for dropped
  bool training_ = false;
};

// Unidirectional LSTM over a [T x D] sequence; returns [T x H].
// Gate layout in the 4H axis: input, forget, cell candidate, output.
class Lstm {
 public:
  Lstm(const std::string &name, int64 in_dim, int64 hidden);

  Tensor Forward(const Tensor &x);
  Tensor Backward(const Tensor &dy);

  std::vector<Param *> Params() { return {&wx_, &wh_, &b_}; }
  int64 hidden() const { return hidden_; }

 private:
  int64 hidden_;
  Param wx_, wh_, b_;
  Tensor x_, gates_, cells_, hidden_states_;  // caches, see Forward
};

// Bidirectional wrapper: runs one LSTM forward in time and one backward,
// concatenating per-timestep outputs to [T x 2H].
class BLstm {
 public:
  BLstm(const std::string &name, int64 in_dim, int64 hidden);

  Tensor Forward(const Tensor &x);
  Tensor Backward(const Tensor &dy);

  std::vector<Param *> Params();
  int64 hidden() const { return fw_.hidden(); }

 private:
  Lstm fw_, bw_;
  int64 in_dim_;
};

Tensor ReverseRows(const Tensor &x);

}  // namespace sik::nn

#endif  // SIK_NN_LAYERS_H_
