// include/sik/corrupt/noise.h

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

#ifndef SIK_CORRUPT_NOISE_H_
#define SIK_CORRUPT_NOISE_H_

#include <string>

#include "sik/base/rng.h"
#include "sik/corrupt/mask.h"
#include "sik/corrupt/video.h"
#include "sik/dsp/mel.h"

namespace sik::corrupt {

enum class NoiseKind { kWhite, kEnvironmental };

struct NoiseSpec {
  NoiseKind kind = NoiseKind::kWhite;
  // White default 0.1, environmental default 0.05.
  double magnitude = 0.1;
  // Required for kEnvironmental; must match the target shape.
  const dsp::MelSpectrogram *env_source = nullptr;
};

// White: out = clamp(x + magnitude * g, 0, 1), g iid N(0,1).
// Environmental: out = clamp(x + magnitude * env_source, 0, 1).
dsp::MelSpectrogram AddNoise(const dsp::MelSpectrogram &x, const NoiseSpec &n,
                             uint64 seed);

// One training sample as seen by the augmentation policy. Audio and video
// are the corrupted inputs; targets live elsewhere and are never touched.
struct AvSample {
  dsp::MelSpectrogram audio;
  VideoClip video;
  GapMask mask;
  std::string transcript;
};

struct AugmentPolicy {
  double p_aug = 0.5;     // gate probability
  double p_affine = 0.0;  // independent video-warp probability
  double white_magnitude = 0.1;
  double env_magnitude = 0.05;
  double frame_ms = 20.0;  // audio frame duration for the AV-mask branch
  const dsp::MelSpectrogram *env_source = nullptr;
  GapSpec extra_gap;  // used by the synchronized AV-mask branch
};

// Rotation within +-5 degrees, translation within +-5% of each dimension,
// horizontal scaling within +-5%; one transform drawn per clip, applied to
// every frame with bilinear resampling and zero padding.
VideoClip AffineVideo(const VideoClip &v, Rng *rng);

// With probability p_aug applies exactly one of {white noise, environmental
// noise, synchronized AV mask}, chosen uniformly. The affine video warp is
// gated independently by p_affine so the three-branch statistics stay
// unchanged. Deterministic under policy_seed.
AvSample AugmentSample(const AvSample &sample, const AugmentPolicy &policy,
                       uint64 policy_seed);

}  // namespace sik::corrupt

#endif  // SIK_CORRUPT_NOISE_H_
