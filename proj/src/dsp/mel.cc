// src/dsp/mel.cc

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

#include "sik/dsp/mel.h"

#include <algorithm>
#include <cmath>

#include "sik/base/parallel.h"

namespace sik::dsp {

namespace {
constexpr double kLogEps = 1e-10;
}  // namespace

double HzToMel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }

double MelToHz(double mel) {
  return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

MelFilterbank BuildMelFilterbank(int64 linear_bins, int64 mel_bins,
                                 int32 sample_rate, double f_min,
                                 double f_max) {
  SIK_REQUIRE(mel_bins >= 2, "need at least 2 Mel bins, got ", mel_bins);
  SIK_REQUIRE(linear_bins >= 2, "need at least 2 linear bins");
  const double nyquist = sample_rate / 2.0;
  SIK_REQUIRE(f_min >= 0.0 && f_min < f_max && f_max <= nyquist,
              "invalid frequency range [", f_min, ", ", f_max, "] at rate ",
              sample_rate);

  MelFilterbank fb;
  fb.mel_bins = mel_bins;
  fb.linear_bins = linear_bins;
  fb.f_min = f_min;
  fb.f_max = f_max;
  fb.weights.assign(mel_bins * linear_bins, 0.0);

  // F+2 boundary points equally spaced on the Mel scale; filter f spans
  // [pts[f], pts[f+2]] with its apex at pts[f+1].
  std::vector<double> pts_hz(mel_bins + 2);
  const double mel_lo = HzToMel(f_min), mel_hi = HzToMel(f_max);
  for (int64 i = 0; i < mel_bins + 2; ++i)
    pts_hz[i] = MelToHz(mel_lo + (mel_hi - mel_lo) * i / (mel_bins + 1));

  for (int64 f = 0; f < mel_bins; ++f) {
    const double left = pts_hz[f], center = pts_hz[f + 1],
                 right = pts_hz[f + 2];
    for (int64 b = 0; b < linear_bins; ++b) {
      const double hz = b * nyquist / (linear_bins - 1);
      double w = 0.0;
      if (hz > left && hz < center)
        w = (hz - left) / (center - left);
      else if (hz >= center && hz < right)
        w = (right - hz) / (right - center);
      if (hz == center) w = 1.0;
      fb.weights[f * linear_bins + b] = w;
    }
  }
  return fb;
}

MelSpectrogram ToMelLogNorm(const Spectrogram &mag, const MelFilterbank &fb,
                            double floor_db, double ceil_db) {
  SIK_REQUIRE(ceil_db > floor_db, "degenerate dB range [", floor_db, ", ",
              ceil_db, "]");
  SIK_REQUIRE(mag.dim == fb.linear_bins, "magnitude has ", mag.dim,
              " bins, filterbank expects ", fb.linear_bins);

  MelSpectrogram out;
  out.num_frames = mag.num_frames;
  out.mel_bins = fb.mel_bins;
  out.floor_db = floor_db;
  out.ceil_db = ceil_db;
  out.values.assign(mag.num_frames * fb.mel_bins, 0.0);
  const double scale = 1.0 / (ceil_db - floor_db);
  ParallelFor(mag.num_frames, 8, [&](int64 t) {
    for (int64 f = 0; f < fb.mel_bins; ++f) {
      double mel = 0.0;
      for (int64 b = 0; b < fb.linear_bins; ++b)
        mel += fb.at(f, b) * mag.at(t, b);
      const double db = 20.0 * std::log10(std::max(mel, kLogEps));
      out.at(t, f) = std::clamp((db - floor_db) * scale, 0.0, 1.0);
    }
  });
  return out;
}

double MelPeakDb(const Spectrogram &mag, const MelFilterbank &fb) {
  SIK_REQUIRE(mag.dim == fb.linear_bins, "bin mismatch");
  double peak = kLogEps;
  for (int64 t = 0; t < mag.num_frames; ++t)
    for (int64 f = 0; f < fb.mel_bins; ++f) {
      double mel = 0.0;
      for (int64 b = 0; b < fb.linear_bins; ++b)
        mel += fb.at(f, b) * mag.at(t, b);
      peak = std::max(peak, mel);
    }
  return 20.0 * std::log10(peak);
}

Spectrogram InvertMel(const MelSpectrogram &m, const MelFilterbank &fb,
                      int64 iters) {
  SIK_REQUIRE(m.mel_bins == fb.mel_bins, "Mel bin mismatch");
  const int64 F = fb.mel_bins, B = fb.linear_bins, T = m.num_frames;

  // Largest eigenvalue of fb fb^T (same spectrum as the B x B Gram matrix)
  // by power iteration; 1/lambda_max is a safe projected-gradient step.
  std::vector<double> gram(F * F, 0.0);
  for (int64 i = 0; i < F; ++i)
    for (int64 j = 0; j < F; ++j) {
      double s = 0.0;
      for (int64 b = 0; b < B; ++b) s += fb.at(i, b) * fb.at(j, b);
      gram[i * F + j] = s;
    }
  std::vector<double> v(F, 1.0), gv(F);
  double lambda = 1.0;
  for (int64 it = 0; it < 200; ++it) {
    for (int64 i = 0; i < F; ++i) {
      double s = 0.0;
      for (int64 j = 0; j < F; ++j) s += gram[i * F + j] * v[j];
      gv[i] = s;
    }
    double norm = 0.0;
    for (int64 i = 0; i < F; ++i) norm += gv[i] * gv[i];
    norm = std::sqrt(norm);
    SIK_REQUIRE(norm > 0.0, "filterbank is identically zero");
    for (int64 i = 0; i < F; ++i) v[i] = gv[i] / norm;
    lambda = norm;
  }
  const double step = 1.0 / (lambda * 1.01);

  Spectrogram out;
  out.num_frames = T;
  out.dim = B;
  out.data.assign(T * B, 0.0);
  const double span = m.ceil_db - m.floor_db;
  ParallelFor(T, 1, [&](int64 t) {
    // Denormalize the frame. Entries at exactly 0 were at or below the dB
    // floor; treat them as true silence so zeros invert to zeros.
    std::vector<double> target(F);
    for (int64 f = 0; f < F; ++f) {
      const double val = m.at(t, f);
      target[f] =
          val <= 0.0 ? 0.0
                     : std::pow(10.0, (val * span + m.floor_db) / 20.0);
    }
    // min ||fb x - target||^2 s.t. x >= 0, from x = 0.
    std::vector<double> x(B, 0.0), resid(F);
    for (int64 it = 0; it < iters; ++it) {
      for (int64 f = 0; f < F; ++f) {
        double s = 0.0;
        for (int64 b = 0; b < B; ++b) s += fb.at(f, b) * x[b];
        resid[f] = s - target[f];
      }
      for (int64 b = 0; b < B; ++b) {
        double g = 0.0;
        for (int64 f = 0; f < F; ++f) g += fb.at(f, b) * resid[f];
        x[b] = std::max(0.0, x[b] - step * g);
      }
    }
    for (int64 b = 0; b < B; ++b) out.at(t, b) = x[b];
  });
  return out;
}

}  // namespace sik::dsp
