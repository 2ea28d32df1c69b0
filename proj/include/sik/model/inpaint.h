// include/sik/model/inpaint.h

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

#ifndef SIK_MODEL_INPAINT_H_
#define SIK_MODEL_INPAINT_H_

#include <string>

#include "sik/corrupt/mask.h"
#include "sik/model/alphabet.h"
#include "sik/model/models.h"

namespace sik::model {

// Inference-time in-painting. The raw decoder output is clamped to [0,1]
// here (training sees the linear output). With a mask, frames are
// composited as o_t = m_t * a_t + (1 - m_t) * y_t, so intact frames copy
// the input bit-exactly (informed mode); without one the clamped model
// output is returned as-is (uninformed mode).
dsp::MelSpectrogram Inpaint(AvModel *model, const dsp::MelSpectrogram &a,
                            const corrupt::VideoClip &v,
                            const corrupt::GapMask *mask);

dsp::MelSpectrogram InpaintAsi(AsiModel *model, const dsp::MelSpectrogram &a,
                               const corrupt::GapMask *mask);

// Per-step argmax, collapse repeats, drop blanks. Rows of log_probs are
// log-distributions over the alphabet (blank last).
std::string GreedyCtcDecode(const nn::Tensor &log_probs,
                            const Alphabet &alphabet);

}  // namespace sik::model

#endif  // SIK_MODEL_INPAINT_H_
