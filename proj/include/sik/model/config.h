// include/sik/model/config.h

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

#ifndef SIK_MODEL_CONFIG_H_
#define SIK_MODEL_CONFIG_H_

#include <array>
#include <vector>

#include "sik/base/common.h"

namespace sik::model {

// Encoder hyperparameters. Defaults follow the published architecture
// table; docs/architecture.md records the recomputed intermediate shapes
// (the published table lists a few inconsistent ones).
struct EncoderConfig {
  // Video input.
  int64 video_frames = 75;  // T'
  int64 height = 50;
  int64 width = 100;
  int64 channels = 3;
  // Three conv blocks, each conv -> pool -> dropout. Only the first conv
  // downsamples spatially by stride.
  std::array<int64, 3> conv_channels = {128, 256, 75};
  std::array<std::array<int64, 3>, 3> conv_kernels = {
      {{3, 5, 5}, {3, 5, 5}, {3, 3, 3}}};
  std::array<std::array<int64, 3>, 3> conv_strides = {
      {{1, 2, 2}, {1, 1, 1}, {1, 1, 1}}};
  std::array<int64, 3> pool_window = {1, 2, 2};
  std::array<int64, 3> pool_stride = {1, 2, 2};
  double dropout_rate = 0.5;
  int64 blstm_hidden = 256;  // two BLSTM layers
  int64 dense_dim = 256;
  int64 classes = 41;  // includes blank

  int64 ContextDim() const { return 2 * blstm_hidden; }
};

struct DecoderConfig {
  int64 mel_bins = 64;      // F, also the output dim
  int64 context_dim = 512;  // must equal encoder ContextDim
  int64 blstm_hidden = 256;
  int64 blstm_layers = 3;
};

// One conv block's resolved output shape.
struct StageShape {
  int64 t, h, w, c;
};

struct EncoderShapes {
  std::vector<StageShape> conv_out;  // after each conv
  std::vector<StageShape> pool_out;  // after each pool
  int64 flatten_dim = 0;             // per-timestep width fed to BLSTM 1
};

// Shape algebra for the conv stack: same-padded convolutions
// (out = ceil(in/stride)) and valid pools (out = floor((in - w)/stride)+1,
// window clamped to the dimension).
EncoderShapes ComputeEncoderShapes(const EncoderConfig &cfg);

struct TrainConfig {
  double lr = 1e-4;         // 1e-3 for the audio-only baseline
  int64 batch_size = 2;     // 32 for the audio-only baseline
  double lambda = 0.001;    // CTC weight in the hybrid loss
  int64 patience = 5;       // lr decays after this many stagnant epochs
  int64 stop_patience = 20;  // training stops after this many
  double decay_factor = 0.5;
  double improvement_threshold = 1e-4;  // absolute, on validation loss
  int64 max_epochs = 300;
  uint64 seed = 0;

  void Validate() const {
    SIK_REQUIRE(lr > 0, "lr must be positive");
    SIK_REQUIRE(batch_size >= 1, "batch_size must be >= 1");
    SIK_REQUIRE(lambda >= 0, "lambda must be non-negative");
    SIK_REQUIRE(patience >= 1 && stop_patience >= 1, "patiences must be >= 1");
    SIK_REQUIRE(decay_factor > 0 && decay_factor <= 1, "bad decay factor");
    SIK_REQUIRE(max_epochs >= 1, "max_epochs must be >= 1");
  }
};

}  // namespace sik::model

#endif  // SIK_MODEL_CONFIG_H_
