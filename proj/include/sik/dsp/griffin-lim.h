// include/sik/dsp/griffin-lim.h

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

#ifndef SIK_DSP_GRIFFIN_LIM_H_
#define SIK_DSP_GRIFFIN_LIM_H_

#include <vector>

#include "sik/dsp/stft.h"
#include "sik/dsp/waveform.h"

namespace sik::dsp {

// Phase recovery by alternating projections. Starts from zero phase (or the
// phases of init_phase when given), runs `iters` rounds of
// stft -> replace magnitude -> istft, and returns the final signal.
//
// When errors is non-null it receives the spectral-convergence error
// || |STFT(x_k)| - mag ||_F for k = 0..iters; the sequence is monotone
// non-increasing up to numerical slack.
std::vector<double> GriffinLim(const Spectrogram &mag, const StftConfig &cfg,
                               int64 iters,
                               const CSpec *init_phase = nullptr,
                               std::vector<double> *errors = nullptr);

}  // namespace sik::dsp

#endif  // SIK_DSP_GRIFFIN_LIM_H_
