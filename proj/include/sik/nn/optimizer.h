// include/sik/nn/optimizer.h

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

#ifndef SIK_NN_OPTIMIZER_H_
#define SIK_NN_OPTIMIZER_H_

#include <vector>

#include "sik/nn/tensor.h"

namespace sik::nn {

// Bias-corrected Adam over an externally owned parameter list.
class Adam {
 public:
  explicit Adam(std::vector<Param *> params, double lr, double beta1 = 0.9,
                double beta2 = 0.999, double eps = 1e-8);

  // One update from the currently accumulated gradients, optionally scaled
  // by 1/batch (pass the divisor used when gradients were summed).
  void Step(double grad_scale = 1.0);
  void ZeroGrad();

  double lr() const { return lr_; }
  void set_lr(double lr) { lr_ = lr; }
  int64 step_count() const { return step_; }

 private:
  std::vector<Param *> params_;
  std::vector<Tensor> m_, v_;
  double lr_, beta1_, beta2_, eps_;
  int64 step_ = 0;
};

}  // namespace sik::nn

#endif  // SIK_NN_OPTIMIZER_H_
