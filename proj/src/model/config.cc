// src/model/config.cc

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

#include "sik/model/config.h"

#include "sik/nn/kernels.h"

namespace sik::model {

EncoderShapes ComputeEncoderShapes(const EncoderConfig &cfg) {
  EncoderShapes s;
  StageShape cur{cfg.video_frames, cfg.height, cfg.width, cfg.channels};
  for (int64 i = 0; i < 3; ++i) {
    cur = {nn::Conv3dSpec::OutDim(cur.t, cfg.conv_strides[i][0]),
           nn::Conv3dSpec::OutDim(cur.h, cfg.conv_strides[i][1]),
           nn::Conv3dSpec::OutDim(cur.w, cfg.conv_strides[i][2]),
           cfg.conv_channels[i]};
    s.conv_out.push_back(cur);
    cur = {nn::Pool3dSpec::OutDim(cur.t, cfg.pool_window[0],
                                  cfg.pool_stride[0]),
           nn::Pool3dSpec::OutDim(cur.h, cfg.pool_window[1],
                                  cfg.pool_stride[1]),
           nn::Pool3dSpec::OutDim(cur.w, cfg.pool_window[2],
                                  cfg.pool_stride[2]),
           cur.c};
    s.pool_out.push_back(cur);
  }
  SIK_REQUIRE(cur.t == cfg.video_frames,
              "temporal length must survive the conv stack, got ", cur.t,
              " from ", cfg.video_frames);
  s.flatten_dim = cur.h * cur.w * cur.c;
  return s;
}

}  // namespace sik::model
