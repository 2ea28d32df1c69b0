// include/sik/nn/tensor.h

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

#ifndef SIK_NN_TENSOR_H_
#define SIK_NN_TENSOR_H_

#include <algorithm>
#include <string>
#include <vector>

#include "sik/base/common.h"

namespace sik::nn {

// Dense row-major tensor of doubles. Kept deliberately small: the layer set
// is closed, so each layer indexes its own data directly.
struct Tensor {
  std::vector<int64> shape;
  std::vector<double> data;

  Tensor() = default;
  explicit Tensor(std::vector<int64> s) : shape(std::move(s)) {
    data.assign(NumElements(shape), 0.0);
  }

  static int64 NumElements(const std::vector<int64> &s) {
    int64 n = 1;
    for (int64 d : s) {
      SIK_REQUIRE(d > 0, "non-positive dimension ", d);
      n *= d;
    }
    return n;
  }

  int64 size() const { return static_cast<int64>(data.size()); }
  int64 rank() const { return static_cast<int64>(shape.size()); }
  int64 dim(int64 i) const { return shape[i]; }

  // Matrix accessors for rank-2 tensors.
  double &at(int64 r, int64 c) { return data[r * shape[1] + c]; }
  const double &at(int64 r, int64 c) const { return data[r * shape[1] + c]; }

  void Fill(double v) { std::fill(data.begin(), data.end(), v); }

  bool SameShape(const Tensor &other) const { return shape == other.shape; }
};

inline std::string ShapeToString(const std::vector<int64> &shape) {
  std::string s = "[";
  for (size_t i = 0; i < shape.size(); ++i) {
    if (i) s += " x ";
    s += std::to_string(shape[i]);
  }
  return s + "]";
}

// A learnable tensor paired with its gradient accumulator.
struct Param {
  std::string name;
  Tensor value;
  Tensor grad;

  Param() = default;
  Param(std::string n, std::vector<int64> shape)
      : name(std::move(n)), value(shape), grad(std::move(shape)) {}

  void ZeroGrad() { grad.Fill(0.0); }
};

}  // namespace sik::nn

#endif  // SIK_NN_TENSOR_H_
