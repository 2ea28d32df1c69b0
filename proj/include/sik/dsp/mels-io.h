// include/sik/dsp/mels-io.h

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

#ifndef SIK_DSP_MELS_IO_H_
#define SIK_DSP_MELS_IO_H_

#include <string>

#include "sik/dsp/mel.h"

namespace sik::dsp {

// Binary spectrogram container (docs/file-formats.md): magic "MELS",
// version u32, T u32, F u32, floor_db f64, ceil_db f64, then T*F
// little-endian f32 values, row-major, time-major.
void WriteMels(const std::string &path, const MelSpectrogram &m);
MelSpectrogram ReadMels(const std::string &path);

}  // namespace sik::dsp

#endif  // SIK_DSP_MELS_IO_H_
