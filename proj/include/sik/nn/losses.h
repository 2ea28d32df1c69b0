// include/sik/nn/losses.h

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

#ifndef SIK_NN_LOSSES_H_
#define SIK_NN_LOSSES_H_

#include <vector>

#include "sik/nn/tensor.h"

namespace sik::nn {

// Number of steps a CTC path needs for the target: |target| plus one extra
// blank per adjacent repeated pair.
int64 CtcMinFrames(const std::vector<int> &target);

// log_probs: [T' x K] rows are log-distributions over classes.
// Returns -log P(target | log_probs) summed over all blank-expanded paths
// (forward-backward in log space). dlogits, when non-null, receives the
// exact gradient w.r.t. the pre-softmax logits:
//   dL/du[t][j] = softmax(u)[t][j] - occupancy[t][j] / P.
double CtcLoss(const Tensor &log_probs, const std::vector<int> &target,
               int blank, Tensor *dlogits);

// loss = (1/T) sum_t ||x_t - y_t||^2 (summed over the feature axis,
// averaged over frames). dy, when non-null, receives (2/T)(y - x).
double MseLoss(const Tensor &y, const Tensor &x, Tensor *dy);

// L_total = L_dec + lambda * L_enc. Gradients flow through the addends
// unchanged (the decoder term) and scaled by lambda (the encoder term).
double HybridLoss(double mse_dec, double ctc_enc, double lambda);

// Row-wise log-softmax of logits.
Tensor LogSoftmax(const Tensor &logits);

}  // namespace sik::nn

#endif  // SIK_NN_LOSSES_H_
