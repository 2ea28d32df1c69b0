// include/sik/nn/init.h

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

#ifndef SIK_NN_INIT_H_
#define SIK_NN_INIT_H_

#include "sik/base/rng.h"
#include "sik/nn/tensor.h"

namespace sik::nn {

// He initialization: iid N(0, 2 / fan_in).
void InitHe(Tensor *t, int64 fan_in, Rng *rng);

// Orthogonal initialization of a matrix: random normal followed by
// Gram-Schmidt, so Q^T Q = I holds on the smaller dimension within 1e-6.
void InitOrthogonal(Tensor *t, Rng *rng);

// Recurrent kernel [H x 4H] initialized as four independent H x H
// orthogonal blocks (one per gate); input kernels use He.
void InitLstmRecurrent(Tensor *wh, Rng *rng);

}  // namespace sik::nn

#endif  // SIK_NN_INIT_H_
