// src/nn/optimizer.cc

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

#include "sik/nn/optimizer.h"

#include <cmath>

namespace sik::nn {

Adam::Adam(std::vector<Param *> params, double lr, double beta1, double beta2,
           double eps)
    : params_(std::move(params)), lr_(lr), beta1_(beta1), beta2_(beta2),
      eps_(eps) {
  SIK_REQUIRE(lr > 0.0, "learning rate must be positive");
  for (Param *p : params_) {
    SIK_REQUIRE(p->value.SameShape(p->grad), "param/grad shape mismatch for ",
                p->name);
    m_.emplace_back(p->value.shape);
    v_.emplace_back(p->value.shape);
  }
}

void Adam::Step(double grad_scale) {
  ++step_;
  const double bc1 = 1.0 - std::pow(beta1_, static_cast<double>(step_));
  const double bc2 = 1.0 - std::pow(beta2_, static_cast<double>(step_));
  for (size_t pi = 0; pi < params_.size(); ++pi) {
    Param *p = params_[pi];
    for (int64 i = 0; i < p->value.size(); ++i) {
      const double g = p->grad.data[i] * grad_scale;
      m_[pi].data[i] = beta1_ * m_[pi].data[i] + (1.0 - beta1_) * g;
      v_[pi].data[i] = beta2_ * v_[pi].data[i] + (1.0 - beta2_) * g * g;
      const double mhat = m_[pi].data[i] / bc1;
      const double vhat = v_[pi].data[i] / bc2;
      p->value.data[i] -= lr_ * mhat / (std::sqrt(vhat) + eps_);
    }
  }
}

void Adam::ZeroGrad() {
  for (Param *p : params_) p->ZeroGrad();
}

}  // namespace sik::nn
