// include/sik/eval/stoi.h

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

#ifndef SIK_EVAL_STOI_H_
#define SIK_EVAL_STOI_H_

#include "sik/dsp/waveform.h"

namespace sik::eval {

// Short-time objective intelligibility of `out` against the clean `ref`.
// Both signals are resampled to 10 kHz internally and trimmed to the
// shorter length; silent reference frames (40 dB below the loudest) are
// removed from both, then normalized correlations of 15 one-third-octave
// band envelopes (first center 150 Hz) are averaged over 384 ms segments.
// The result is clamped to [0, 1]. Errors if fewer than one full segment
// of active speech remains.
double Stoi(const dsp::Waveform &ref, const dsp::Waveform &out);

}  // namespace sik::eval

#endif  // SIK_EVAL_STOI_H_
