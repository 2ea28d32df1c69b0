// include/sik/dsp/wav-io.h

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

#ifndef SIK_DSP_WAV_IO_H_
#define SIK_DSP_WAV_IO_H_

#include <string>

#include "sik/dsp/waveform.h"

namespace sik::dsp {

// PCM 16-bit little-endian mono only; anything else is rejected.
Waveform ReadWav(const std::string &path);
void WriteWav(const std::string &path, const Waveform &w);

}  // namespace sik::dsp

#endif  // SIK_DSP_WAV_IO_H_
