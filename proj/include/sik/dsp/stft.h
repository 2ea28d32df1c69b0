// include/sik/dsp/stft.h

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

#ifndef SIK_DSP_STFT_H_
#define SIK_DSP_STFT_H_

#include <complex>
#include <vector>

#include "sik/base/common.h"
#include "sik/dsp/waveform.h"

namespace sik::dsp {

struct StftConfig {
  int64 window_size = 320;  // 40 ms at 8 kHz
  int64 hop_size = 160;     // 20 ms at 8 kHz
  int64 fft_size = 510;     // gives 510/2 + 1 = 256 bins

  int64 NumBins() const { return fft_size / 2 + 1; }
  // Frame law: frames fully inside the signal, no padding.
  int64 NumFrames(int64 num_samples) const {
    if (num_samples < window_size) return 0;
    return (num_samples - window_size) / hop_size + 1;
  }
  void Validate() const;
};

// Complex spectrogram, row-major [num_frames x num_bins].
struct CSpec {
  int64 num_frames = 0;
  int64 num_bins = 0;
  std::vector<std::complex<double>> data;

  std::complex<double> &at(int64 t, int64 k) { return data[t * num_bins + k]; }
  const std::complex<double> &at(int64 t, int64 k) const {
    return data[t * num_bins + k];
  }
};

// Magnitude (or any real-valued) spectrogram, row-major [num_frames x dim].
struct Spectrogram {
  int64 num_frames = 0;
  int64 dim = 0;
  std::vector<double> data;

  double &at(int64 t, int64 k) { return data[t * dim + k]; }
  const double &at(int64 t, int64 k) const { return data[t * dim + k]; }
};

// Periodic Hann window of the given length.
std::vector<double> HannWindow(int64 size);

// Forward STFT of a real signal. One row per frame, fft_size/2 + 1 bins.
CSpec Stft(const std::vector<double> &samples, const StftConfig &cfg);

// Inverse STFT by weighted overlap-add. Output length is
// (num_frames - 1) * hop + window; errors if the window/hop pair violates
// the nonzero-overlap-add condition.
std::vector<double> Istft(const CSpec &spec, const StftConfig &cfg);

Spectrogram Magnitude(const CSpec &spec);

namespace ref {
// Serial STFT using the naive DFT. Oracle for the fast path.
CSpec StftNaive(const std::vector<double> &samples, const StftConfig &cfg);
}  // namespace ref

}  // namespace sik::dsp

#endif  // SIK_DSP_STFT_H_
