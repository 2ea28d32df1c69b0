// include/sik/nn/kernels.h

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

#ifndef SIK_NN_KERNELS_H_
#define SIK_NN_KERNELS_H_

#include <array>

#include "sik/nn/tensor.h"

namespace sik::nn {

// Compute kernels. The primary versions parallelize with OpenMP strictly
// over independent output elements, so results are bit-identical to the
// serial reference versions in nn::ref regardless of thread count.

// c = a · b, a is [m x k], b is [k x n].
void MatMul(const Tensor &a, const Tensor &b, Tensor *c);
// c = a^T · b, a is [k x m], b is [k x n].
void MatMulATB(const Tensor &a, const Tensor &b, Tensor *c);
// c = a · b^T, a is [m x k], b is [n x k].
void MatMulABT(const Tensor &a, const Tensor &b, Tensor *c);

struct Conv3dSpec {
  std::array<int64, 3> stride = {1, 1, 1};  // (st, sh, sw)

  // TensorFlow-style same padding: out = ceil(in / stride), zeros split
  // before/after with the extra zero after.
  static int64 OutDim(int64 in, int64 stride) {
    return (in + stride - 1) / stride;
  }
  static int64 PadBefore(int64 in, int64 kernel, int64 stride) {
    const int64 out = OutDim(in, stride);
    const int64 total = std::max<int64>((out - 1) * stride + kernel - in, 0);
    return total / 2;
  }
};

// x: [T x H x W x Cin], kernel: [kt x kh x kw x Cin x Cout], bias: [Cout],
// y: [T' x H' x W' x Cout].
void Conv3dForward(const Tensor &x, const Tensor &kernel, const Tensor &bias,
                   const Conv3dSpec &spec, Tensor *y);
// Gradients w.r.t. input, kernel, and bias; dkernel/dbias are accumulated
// into (callers zero them at batch start).
void Conv3dBackward(const Tensor &x, const Tensor &kernel,
                    const Conv3dSpec &spec, const Tensor &dy, Tensor *dx,
                    Tensor *dkernel, Tensor *dbias);

struct Pool3dSpec {
  std::array<int64, 3> window = {1, 2, 2};
  std::array<int64, 3> stride = {1, 2, 2};

  // Valid pooling with floor division; a window larger than the dimension
  // is clamped so small inputs still produce one output.
  static int64 OutDim(int64 in, int64 window, int64 stride) {
    const int64 w = std::min(window, in);
    return (in - w) / stride + 1;
  }
};

// argmax: flat input index of each output's maximum (first maximum wins on
// ties), shaped like y.
void MaxPool3dForward(const Tensor &x, const Pool3dSpec &spec, Tensor *y,
                      std::vector<int64> *argmax);
void MaxPool3dBackward(const std::vector<int64> &argmax, const Tensor &dy,
                       Tensor *dx);

namespace ref {
// Serial reference implementations, kept as oracles for tests and the
// kernel benchmark.
void MatMul(const Tensor &a, const Tensor &b, Tensor *c);
void Conv3dForward(const Tensor &x, const Tensor &kernel, const Tensor &bias,
                   const Conv3dSpec &spec, Tensor *y);
void Conv3dBackward(const Tensor &x, const Tensor &kernel,
                    const Conv3dSpec &spec, const Tensor &dy, Tensor *dx,
                    Tensor *dkernel, Tensor *dbias);
}  // namespace ref

}  // namespace sik::nn

#endif  // SIK_NN_KERNELS_H_
