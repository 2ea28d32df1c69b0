// src/dsp/waveform.cc

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

#include "sik/dsp/waveform.h"

#include <algorithm>
#include <cmath>

#include "sik/base/parallel.h"

namespace sik::dsp {

namespace {

double Sinc(double x) {
  if (std::abs(x) < 1e-12) return 1.0;
  double px = M_PI * x;
  return std::sin(px) / px;
}

}  // namespace

Waveform Resample(const Waveform &w, int32 target_rate) {
  SIK_REQUIRE(target_rate > 0, "target rate must be positive, got ",
              target_rate);
  SIK_REQUIRE(w.sample_rate > 0, "source rate must be positive");
  if (target_rate == w.sample_rate) return w;

  const double in_rate = w.sample_rate;
  const double out_rate = target_rate;
  const int64 in_len = w.size();
  const int64 out_len = static_cast<int64>(
      std::llround(static_cast<double>(in_len) * out_rate / in_rate));

  // Cutoff just under the smaller Nyquist, in cycles per input sample.
  constexpr double kRolloff = 0.95;
  constexpr int kZeroCrossings = 16;
  const double cutoff = 0.5 * kRolloff * std::min(in_rate, out_rate) / in_rate;
  const int64 half_width =
      static_cast<int64>(std::ceil(kZeroCrossings / (2.0 * cutoff)));

  Waveform out;
  out.sample_rate = target_rate;
  out.samples.assign(out_len, 0.0);
  const double step = in_rate / out_rate;
  const double gain = 2.0 * cutoff;
  ParallelFor(out_len, 4096, [&](int64 n) {
    const double center = static_cast<double>(n) * step;
    const int64 lo = std::max<int64>(0, static_cast<int64>(
                                            std::ceil(center - half_width)));
    const int64 hi = std::min<int64>(
        in_len - 1, static_cast<int64>(std::floor(center + half_width)));
    double acc = 0.0;
    for (int64 m = lo; m <= hi; ++m) {
      const double tau = static_cast<double>(m) - center;
      // Hann-windowed sinc kernel.
      const double win =
          0.5 + 0.5 * std::cos(M_PI * tau / static_cast<double>(half_width));
      acc += w.samples[m] * gain * Sinc(gain * tau) * win;
    }
    out.samples[n] = acc;
  });
  return out;
}

Waveform PreEmphasis(const Waveform &w, double alpha) {
  SIK_REQUIRE(alpha >= 0.0 && alpha < 1.0,
              "pre-emphasis coefficient out of [0,1): ", alpha);
  Waveform out;
  out.sample_rate = w.sample_rate;
  out.samples.resize(w.samples.size());
  for (int64 n = 0; n < w.size(); ++n)
    out.samples[n] =
        (n == 0) ? w.samples[0] : w.samples[n] - alpha * w.samples[n - 1];
  return out;
}

}  // namespace sik::dsp
