// include/sik/dsp/waveform.h

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

#ifndef SIK_DSP_WAVEFORM_H_
#define SIK_DSP_WAVEFORM_H_

#include <vector>

#include "sik/base/common.h"

namespace sik::dsp {

// Mono PCM signal.  Samples are nominally in [-1, 1]; WAV output clips.
struct Waveform {
  std::vector<double> samples;
  int32 sample_rate = 0;

  int64 size() const { return static_cast<int64>(samples.size()); }
};

// Band-limited rate conversion with a windowed-sinc interpolation filter.
// Output length is round(len * target_rate / source_rate); identical rates
// return the input unchanged.
Waveform Resample(const Waveform &w, int32 target_rate);

// out[n] = in[n] - alpha*in[n-1], out[0] = in[0].  Requires 0 <= alpha < 1.
Waveform PreEmphasis(const Waveform &w, double alpha);

}  // namespace sik::dsp

#endif  // SIK_DSP_WAVEFORM_H_
