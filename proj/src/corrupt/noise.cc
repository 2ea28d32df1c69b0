// src/corrupt/noise.cc

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

#include "sik/corrupt/noise.h"

#include <algorithm>
#include <cmath>

namespace sik::corrupt {

dsp::MelSpectrogram AddNoise(const dsp::MelSpectrogram &x, const NoiseSpec &n,
                             uint64 seed) {
  SIK_REQUIRE(n.magnitude >= 0.0, "noise magnitude must be non-negative");
  dsp::MelSpectrogram out = x;
  if (n.magnitude == 0.0) return out;
  if (n.kind == NoiseKind::kWhite) {
    Rng rng(seed);
    for (double &v : out.values)
      v = std::clamp(v + n.magnitude * rng.Normal(), 0.0, 1.0);
  } else {
    SIK_REQUIRE(n.env_source != nullptr,
                "environmental noise needs an env_source spectrogram");
    SIK_REQUIRE(n.env_source->num_frames == x.num_frames &&
                    n.env_source->mel_bins == x.mel_bins,
                "env_source shape ", n.env_source->num_frames, "x",
                n.env_source->mel_bins, " does not match input ",
                x.num_frames, "x", x.mel_bins);
    for (size_t i = 0; i < out.values.size(); ++i)
      out.values[i] = std::clamp(
          out.values[i] + n.magnitude * n.env_source->values[i], 0.0, 1.0);
  }
  return out;
}

VideoClip AffineVideo(const VideoClip &v, Rng *rng) {
  const double angle = rng->Uniform(-5.0, 5.0) * M_PI / 180.0;
  const double tx = rng->Uniform(-0.05, 0.05) * v.width;
  const double ty = rng->Uniform(-0.05, 0.05) * v.height;
  const double sx = rng->Uniform(0.95, 1.05);
  const double ca = std::cos(angle), sa = std::sin(angle);
  const double cx = 0.5 * (v.width - 1), cy = 0.5 * (v.height - 1);

  VideoClip out = v;
  for (int64 t = 0; t < v.num_frames; ++t)
    for (int64 y = 0; y < v.height; ++y)
      for (int64 x = 0; x < v.width; ++x) {
        // Inverse map: undo translation, rotation, then horizontal scale.
        const double u = x - cx - tx, w = y - cy - ty;
        const double src_x = cx + (ca * u + sa * w) / sx;
        const double src_y = cy + (-sa * u + ca * w);
        const int64 x0 = static_cast<int64>(std::floor(src_x));
        const int64 y0 = static_cast<int64>(std::floor(src_y));
        const double fx = src_x - x0, fy = src_y - y0;
        for (int64 c = 0; c < v.channels; ++c) {
          auto sample = [&](int64 yy, int64 xx) {
            if (yy < 0 || yy >= v.height || xx < 0 || xx >= v.width)
              return 0.0;
            return v.at(t, yy, xx, c);
          };
          out.at(t, y, x, c) =
              (1 - fy) * ((1 - fx) * sample(y0, x0) + fx * sample(y0, x0 + 1)) +
              fy * ((1 - fx) * sample(y0 + 1, x0) + fx * sample(y0 + 1, x0 + 1));
        }
      }
  return out;
}

AvSample AugmentSample(const AvSample &sample, const AugmentPolicy &policy,
                       uint64 policy_seed) {
  SIK_REQUIRE(policy.p_aug >= 0.0 && policy.p_aug <= 1.0, "bad p_aug");
  Rng rng(policy_seed);
  AvSample out = sample;
  if (rng.Uniform() < policy.p_aug) {
    switch (rng.UniformInt(0, 2)) {
      case 0: {
        NoiseSpec n;
        n.kind = NoiseKind::kWhite;
        n.magnitude = policy.white_magnitude;
        out.audio = AddNoise(out.audio, n, rng.NextU64());
        break;
      }
      case 1: {
        NoiseSpec n;
        n.kind = NoiseKind::kEnvironmental;
        n.magnitude = policy.env_magnitude;
        n.env_source = policy.env_source;
        out.audio = AddNoise(out.audio, n, rng.NextU64());
        break;
      }
      default: {
        // Synchronized AV distortion: extra gaps hit both modalities but
        // the recorded corruption mask (ground truth) stays as-is.
        GapSpec gs = policy.extra_gap;
        gs.seed = rng.NextU64();
        const GapMask extra =
            SampleGapMask(gs, out.audio.num_frames, policy.frame_ms);
        out.audio = ApplyMask(out.audio, extra);
        out.video = ApplyVideoMask(
            out.video, DeriveVideoMask(extra, out.video.num_frames));
        break;
      }
    }
  }
  if (policy.p_affine > 0.0 && rng.Uniform() < policy.p_affine)
    out.video = AffineVideo(out.video, &rng);
  return out;
}

}  // namespace sik::corrupt
