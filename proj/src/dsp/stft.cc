// src/dsp/stft.cc

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

#include "sik/dsp/stft.h"

#include <cmath>

#include "sik/base/parallel.h"
#include "sik/dsp/fft.h"

namespace sik::dsp {

void StftConfig::Validate() const {
  SIK_REQUIRE(window_size > 0, "window size must be positive");
  SIK_REQUIRE(hop_size > 0, "hop size must be positive");
  SIK_REQUIRE(fft_size >= window_size, "fft size ", fft_size,
              " smaller than window ", window_size);
}

std::vector<double> HannWindow(int64 size) {
  SIK_REQUIRE(size > 0, "window size must be positive");
  std::vector<double> w(size);
  // Periodic form: denominator is size, not size - 1.
  for (int64 n = 0; n < size; ++n)
    w[n] = 0.5 - 0.5 * std::cos(2.0 * M_PI * n / size);
  return w;
}

CSpec Stft(const std::vector<double> &samples, const StftConfig &cfg) {
  cfg.Validate();
  const int64 num_frames = cfg.NumFrames(samples.size());
  const int64 num_bins = cfg.NumBins();
  const std::vector<double> window = HannWindow(cfg.window_size);

  CSpec spec;
  spec.num_frames = num_frames;
  spec.num_bins = num_bins;
  spec.data.assign(num_frames * num_bins, cd(0.0, 0.0));
  if (num_frames == 0) return spec;

  Fft fft(cfg.fft_size);
#ifdef _OPENMP
#pragma omp parallel
#endif
  {
    std::vector<cd> frame(cfg.fft_size), out(cfg.fft_size),
        scratch(2 * cfg.fft_size);
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
    for (int64 t = 0; t < num_frames; ++t) {
      const int64 start = t * cfg.hop_size;
      for (int64 n = 0; n < cfg.window_size; ++n)
        frame[n] = cd(samples[start + n] * window[n], 0.0);
      for (int64 n = cfg.window_size; n < cfg.fft_size; ++n)
        frame[n] = cd(0.0, 0.0);
      fft.Forward(frame.data(), out.data(), scratch.data());
      for (int64 k = 0; k < num_bins; ++k) spec.at(t, k) = out[k];
    }
  }
  return spec;
}

std::vector<double> Istft(const CSpec &spec, const StftConfig &cfg) {
  cfg.Validate();
  SIK_REQUIRE(cfg.hop_size <= cfg.window_size,
              "overlap-add needs hop <= window");
  SIK_REQUIRE(spec.num_bins == cfg.NumBins(), "bin count ", spec.num_bins,
              " does not match fft size ", cfg.fft_size);
  const int64 num_frames = spec.num_frames;
  const int64 out_len =
      num_frames > 0 ? (num_frames - 1) * cfg.hop_size + cfg.window_size : 0;
  const std::vector<double> window = HannWindow(cfg.window_size);

  std::vector<double> out(out_len, 0.0);
  std::vector<double> wsum(out_len, 0.0);
  if (num_frames == 0) return out;

  Fft fft(cfg.fft_size);
  std::vector<cd> full(cfg.fft_size), time(cfg.fft_size),
      scratch(2 * cfg.fft_size);
  for (int64 t = 0; t < num_frames; ++t) {
    // Rebuild the full Hermitian spectrum from the half kept by Stft.
    for (int64 k = 0; k < spec.num_bins; ++k) full[k] = spec.at(t, k);
    for (int64 k = spec.num_bins; k < cfg.fft_size; ++k)
      full[k] = std::conj(spec.at(t, cfg.fft_size - k));
    fft.Inverse(full.data(), time.data(), scratch.data());
    const int64 start = t * cfg.hop_size;
    for (int64 n = 0; n < cfg.window_size; ++n) {
      out[start + n] += time[n].real() * window[n];
      wsum[start + n] += window[n] * window[n];
    }
  }
  // Samples with negligible window mass (the taper's very edges) are
  // unrecoverable and stay zero; the round-trip guarantee covers interior
  // samples only.
  for (int64 n = 0; n < out_len; ++n)
    out[n] = wsum[n] > 1e-12 ? out[n] / wsum[n] : 0.0;
  return out;
}

Spectrogram Magnitude(const CSpec &spec) {
  Spectrogram mag;
  mag.num_frames = spec.num_frames;
  mag.dim = spec.num_bins;
  mag.data.resize(spec.data.size());
  for (size_t i = 0; i < spec.data.size(); ++i)
    mag.data[i] = std::abs(spec.data[i]);
  return mag;
}

namespace ref {

CSpec StftNaive(const std::vector<double> &samples, const StftConfig &cfg) {
  cfg.Validate();
  const int64 num_frames = cfg.NumFrames(samples.size());
  const int64 num_bins = cfg.NumBins();
  const std::vector<double> window = HannWindow(cfg.window_size);

  CSpec spec;
  spec.num_frames = num_frames;
  spec.num_bins = num_bins;
  spec.data.assign(num_frames * num_bins, cd(0.0, 0.0));

  std::vector<cd> frame(cfg.fft_size), out(cfg.fft_size);
  for (int64 t = 0; t < num_frames; ++t) {
    const int64 start = t * cfg.hop_size;
    for (int64 n = 0; n < cfg.fft_size; ++n)
      frame[n] = n < cfg.window_size
                     ? cd(samples[start + n] * window[n], 0.0)
                     : cd(0.0, 0.0);
    NaiveDft(frame.data(), out.data(), cfg.fft_size, false);
    for (int64 k = 0; k < num_bins; ++k) spec.at(t, k) = out[k];
  }
  return spec;
}

}  // namespace ref

}  // namespace sik::dsp
