// include/sik/dsp/mel.h

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

#ifndef SIK_DSP_MEL_H_
#define SIK_DSP_MEL_H_

#include <vector>

#include "sik/base/common.h"
#include "sik/dsp/stft.h"

namespace sik::dsp {

// Triangular filterbank on the Mel scale. weights is row-major [F x B].
struct MelFilterbank {
  int64 mel_bins = 0;   // F
  int64 linear_bins = 0;  // B
  double f_min = 0.0;
  double f_max = 0.0;
  std::vector<double> weights;

  double at(int64 f, int64 b) const { return weights[f * linear_bins + b]; }
};

// Normalized log-Mel spectrogram. values in [0,1], row-major [T x F].
// norm_params (floor_db, ceil_db) are the absolute dB endpoints of the
// affine map, kept so inversion is exact.
struct MelSpectrogram {
  int64 num_frames = 0;  // T
  int64 mel_bins = 0;    // F
  double floor_db = -80.0;
  double ceil_db = 0.0;
  std::vector<double> values;

  double &at(int64 t, int64 f) { return values[t * mel_bins + f]; }
  const double &at(int64 t, int64 f) const { return values[t * mel_bins + f]; }
};

double HzToMel(double hz);
double MelToHz(double mel);

// F triangular filters with apexes equally spaced on the Mel scale between
// f_min and f_max. Linear bin b sits at b * (sample_rate/2) / (B-1) Hz.
MelFilterbank BuildMelFilterbank(int64 linear_bins, int64 mel_bins,
                                 int32 sample_rate, double f_min,
                                 double f_max);

// mel[t][f] = sum_b fb[f][b] * mag[t][b]; db = 20 log10(max(mel, 1e-10));
// values = clamp((db - floor_db) / (ceil_db - floor_db), 0, 1).
MelSpectrogram ToMelLogNorm(const Spectrogram &mag, const MelFilterbank &fb,
                            double floor_db, double ceil_db);

// Largest Mel-domain dB value of mag projected through fb; the corpus-level
// maximum of this quantity anchors ceil_db.
double MelPeakDb(const Spectrogram &mag, const MelFilterbank &fb);

// Undo the affine dB map (entries at exactly 0 invert to 0 magnitude), then
// solve fb x = mel per frame by projected-gradient non-negative least
// squares. Output is a non-negative [T x B] linear magnitude matrix.
Spectrogram InvertMel(const MelSpectrogram &m, const MelFilterbank &fb,
                      int64 iters = 50);

}  // namespace sik::dsp

#endif  // SIK_DSP_MEL_H_
