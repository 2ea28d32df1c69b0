// src/eval/stoi.cc

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

#include "sik/eval/stoi.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "sik/base/common.h"
#include "sik/dsp/fft.h"

namespace sik::eval {

namespace {

constexpr int32 kFsStoi = 10000;  // the metric's native rate
constexpr int64 kFrame = 256;     // 25.6 ms analysis frames
constexpr int64 kHop = 128;
constexpr int64 kFftSize = 512;
constexpr int64 kNumBands = 15;
constexpr double kFirstCenterHz = 150.0;
constexpr int64 kSegFrames = 30;     // 384 ms intelligibility segments
constexpr double kDynRangeDb = 40.0;  // silent-frame threshold below max
// Clip bound multiplier 1 + 10^(15/20): bounds the normalized degraded
// envelope at -15 dB SDR.
const double kClipFactor = 1.0 + std::pow(10.0, 15.0 / 20.0);
constexpr double kEps = 1e-20;

// hanning(N+2) with the zero endpoints dropped (the reference
// implementations' frame window).
std::vector<double> StoiWindow(int64 n) {
  std::vector<double> w(n);
  for (int64 i = 0; i < n; ++i)
    w[i] = 0.5 * (1.0 - std::cos(2.0 * M_PI * static_cast<double>(i + 1) /
                                 static_cast<double>(n + 1)));
  return w;
}

// Removes frames whose windowed reference energy sits more than 40 dB
// below the loudest frame, then rebuilds both signals by overlap-adding
// the surviving windowed frames.
void RemoveSilentFrames(std::vector<double> *x, std::vector<double> *y) {
  const std::vector<double> w = StoiWindow(kFrame);
  const int64 n = static_cast<int64>(x->size());
  SIK_REQUIRE(n >= kFrame, "stoi input shorter than one frame");
  const int64 frames = 1 + (n - kFrame) / kHop;

  std::vector<double> energy_db(frames);
  double max_db = -1e300;
  for (int64 m = 0; m < frames; ++m) {
    double e = 0;
    for (int64 i = 0; i < kFrame; ++i) {
      const double v = w[i] * (*x)[m * kHop + i];
      e += v * v;
    }
    energy_db[m] = 20.0 * std::log10(std::sqrt(e) + kEps);
    max_db = std::max(max_db, energy_db[m]);
  }

  std::vector<int64> kept;
  for (int64 m = 0; m < frames; ++m)
    if (energy_db[m] > max_db - kDynRangeDb) kept.push_back(m);
  SIK_REQUIRE(!kept.empty(), "stoi reference is entirely silent");

  const int64 out_len = (static_cast<int64>(kept.size()) - 1) * kHop + kFrame;
  std::vector<double> xs(out_len, 0.0), ys(out_len, 0.0);
  for (size_t k = 0; k < kept.size(); ++k) {
    const int64 src = kept[k] * kHop;
    const int64 dst = static_cast<int64>(k) * kHop;
    for (int64 i = 0; i < kFrame; ++i) {
      xs[dst + i] += w[i] * (*x)[src + i];
      ys[dst + i] += w[i] * (*y)[src + i];
    }
  }
  *x = std::move(xs);
  *y = std::move(ys);
}

// One-third-octave band edges snapped to the nearest FFT bin (matching the
// reference implementations' rounding). Returns per-band [lo, hi) bins.
std::vector<std::pair<int64, int64>> ThirdOctaveBands() {
  const int64 bins = kFftSize / 2 + 1;
  const double bin_hz = static_cast<double>(kFsStoi) /
                        static_cast<double>(kFftSize);
  auto nearest_bin = [&](double hz) {
    int64 best = 0;
    double best_d = 1e300;
    for (int64 i = 0; i < bins; ++i) {
      const double d = std::abs(static_cast<double>(i) * bin_hz - hz);
      if (d < best_d) {
        best_d = d;
        best = i;
      }
    }
    return best;
  };
  std::vector<std::pair<int64, int64>> bands(kNumBands);
  for (int64 k = 0; k < kNumBands; ++k) {
    const double cf =
        kFirstCenterHz * std::pow(2.0, static_cast<double>(k) / 3.0);
    bands[k] = {nearest_bin(cf / std::pow(2.0, 1.0 / 6.0)),
                nearest_bin(cf * std::pow(2.0, 1.0 / 6.0))};
  }
  return bands;
}

// Band envelope matrix [frames x bands]: root power within each band of a
// 512-point FFT of the windowed frame.
std::vector<double> BandEnvelopes(const std::vector<double> &sig,
                                  int64 frames) {
  const std::vector<double> w = StoiWindow(kFrame);
  const auto bands = ThirdOctaveBands();
  const dsp::Fft fft(kFftSize);
  std::vector<double> env(frames * kNumBands, 0.0);
  std::vector<dsp::cd> in(kFftSize), out(kFftSize);
  for (int64 m = 0; m < frames; ++m) {
    std::fill(in.begin(), in.end(), dsp::cd(0, 0));
    for (int64 i = 0; i < kFrame; ++i) in[i] = w[i] * sig[m * kHop + i];
    fft.Forward(in.data(), out.data());
    for (int64 k = 0; k < kNumBands; ++k) {
      double e = 0;
      for (int64 b = bands[k].first; b < bands[k].second; ++b)
        e += std::norm(out[b]);
      env[m * kNumBands + k] = std::sqrt(e);
    }
  }
  return env;
}

}  // namespace

double Stoi(const dsp::Waveform &ref, const dsp::Waveform &out) {
  SIK_REQUIRE(ref.sample_rate > 0 && out.sample_rate > 0,
              "stoi inputs need sample rates");
  std::vector<double> x = dsp::Resample(ref, kFsStoi).samples;
  std::vector<double> y = dsp::Resample(out, kFsStoi).samples;
  const int64 n = std::min<int64>(x.size(), y.size());
  x.resize(n);
  y.resize(n);

  RemoveSilentFrames(&x, &y);
  const int64 frames = 1 + (static_cast<int64>(x.size()) - kFrame) / kHop;
  SIK_REQUIRE(frames >= kSegFrames,
              "stoi needs at least one full 384 ms segment of active speech");

  const std::vector<double> ex = BandEnvelopes(x, frames);
  const std::vector<double> ey = BandEnvelopes(y, frames);

  double sum = 0;
  int64 count = 0;
  std::vector<double> xs(kSegFrames), ys(kSegFrames);
  for (int64 m = kSegFrames; m <= frames; ++m) {
    for (int64 k = 0; k < kNumBands; ++k) {
      double xx = 0, yy = 0;
      for (int64 j = 0; j < kSegFrames; ++j) {
        xs[j] = ex[(m - kSegFrames + j) * kNumBands + k];
        ys[j] = ey[(m - kSegFrames + j) * kNumBands + k];
        xx += xs[j] * xs[j];
        yy += ys[j] * ys[j];
      }
      const double alpha = std::sqrt(xx / (yy + kEps));
      double mx = 0, my = 0;
      for (int64 j = 0; j < kSegFrames; ++j) {
        ys[j] = std::min(alpha * ys[j], kClipFactor * xs[j]);
        mx += xs[j];
        my += ys[j];
      }
      mx /= kSegFrames;
      my /= kSegFrames;
      double num = 0, dx = 0, dy = 0;
      for (int64 j = 0; j < kSegFrames; ++j) {
        num += (xs[j] - mx) * (ys[j] - my);
        dx += (xs[j] - mx) * (xs[j] - mx);
        dy += (ys[j] - my) * (ys[j] - my);
      }
      sum += num / (std::sqrt(dx) * std::sqrt(dy) + kEps);
      ++count;
    }
  }
  return std::clamp(sum / static_cast<double>(count), 0.0, 1.0);
}

}  // namespace sik::eval
