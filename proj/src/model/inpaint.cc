// src/model/inpaint.cc

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

#include "sik/model/inpaint.h"

#include <algorithm>

namespace sik::model {

namespace {

dsp::MelSpectrogram Composite(const nn::Tensor &y,
                              const dsp::MelSpectrogram &a,
                              const corrupt::GapMask *mask) {
  SIK_REQUIRE(y.dim(0) == a.num_frames && y.dim(1) == a.mel_bins,
              "model output shape does not match the input spectrogram");
  if (mask != nullptr) {
    SIK_REQUIRE(mask->size() == a.num_frames, "mask length ", mask->size(),
                " does not match ", a.num_frames, " frames");
  }
  dsp::MelSpectrogram out = a;
  for (int64 t = 0; t < a.num_frames; ++t) {
    if (mask != nullptr && mask->frames[t] == 1) continue;  // intact: keep a_t
    for (int64 f = 0; f < a.mel_bins; ++f)
      out.at(t, f) = std::clamp(y.at(t, f), 0.0, 1.0);
  }
  return out;
}

}  // namespace

dsp::MelSpectrogram Inpaint(AvModel *model, const dsp::MelSpectrogram &a,
                            const corrupt::VideoClip &v,
                            const corrupt::GapMask *mask) {
  Encoder::Output enc = model->encoder.Forward(VideoToTensor(v), nullptr);
  const nn::Tensor y = model->decoder.Forward(MelToTensor(a), enc.context);
  return Composite(y, a, mask);
}

dsp::MelSpectrogram InpaintAsi(AsiModel *model, const dsp::MelSpectrogram &a,
                               const corrupt::GapMask *mask) {
  const nn::Tensor y = model->Forward(MelToTensor(a));
  return Composite(y, a, mask);
}

std::string GreedyCtcDecode(const nn::Tensor &log_probs,
                            const Alphabet &alphabet) {
  SIK_REQUIRE(log_probs.rank() == 2 && log_probs.dim(1) == alphabet.classes(),
              "log_probs width must match the alphabet");
  const int blank = alphabet.blank();
  std::vector<int> labels;
  int prev = -1;
  for (int64 t = 0; t < log_probs.dim(0); ++t) {
    int arg = 0;
    for (int64 k = 1; k < log_probs.dim(1); ++k)
      if (log_probs.at(t, k) > log_probs.at(t, arg)) arg = static_cast<int>(k);
    if (arg != prev && arg != blank) labels.push_back(arg);
    prev = arg;
  }
  return alphabet.Decode(labels);
}

}  // namespace sik::model
