// tests/test-corrupt.cc

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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "sik/base/rng.h"
#include "sik/corrupt/mask.h"
#include "sik/corrupt/noise.h"
#include "sik/corrupt/video.h"

using namespace sik;
using namespace sik::corrupt;

namespace {

std::string TempPath(const std::string &name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

dsp::MelSpectrogram UniformMel(int64 frames, int64 bins, uint64 seed) {
  Rng rng(seed);
  dsp::MelSpectrogram m;
  m.num_frames = frames;
  m.mel_bins = bins;
  m.values.resize(frames * bins);
  for (double &v : m.values) v = rng.Uniform();
  return m;
}

VideoClip RandomClip(int64 frames, int64 h, int64 w, int64 c, uint64 seed) {
  Rng rng(seed);
  VideoClip v;
  v.num_frames = frames;
  v.height = h;
  v.width = w;
  v.channels = c;
  v.data.resize(frames * h * w * c);
  for (double &x : v.data) x = rng.Uniform();
  return v;
}

}  // namespace

TEST_CASE("SampleGapMask respects the structural contract") {
  const int64 T = 149;
  const double frame_ms = 20.0;
  GapSpec spec;  // paper defaults: 900 +- 300 ms, 1..8 gaps, >= 36 ms each
  const int64 min_frames =
      static_cast<int64>(std::ceil(spec.min_gap_ms / frame_ms));
  for (uint64 seed = 0; seed < 300; ++seed) {
    spec.seed = seed;
    const GapMask m = SampleGapMask(spec, T, frame_ms);
    REQUIRE(m.size() == T);
    REQUIRE(!m.gap_spans.empty());
    CHECK(static_cast<int64>(m.gap_spans.size()) <= spec.max_gaps);
    int64 prev_end = -2;
    int64 masked = 0;
    for (const auto &[start, end] : m.gap_spans) {
      REQUIRE(start >= 0);
      REQUIRE(end <= T);
      REQUIRE(end - start >= min_frames);
      // At least one intact frame separates consecutive gaps.
      REQUIRE(start > prev_end);
      prev_end = end;
      masked += end - start;
      for (int64 t = start; t < end; ++t) CHECK(m.frames[t] == 0);
    }
    CHECK(m.MaskedFrames() == masked);
    // The frame vector and the spans agree exactly.
    int64 zeros = 0;
    for (int v : m.frames) {
      REQUIRE((v == 0 || v == 1));
      zeros += v == 0 ? 1 : 0;
    }
    CHECK(zeros == masked);
    // Total duration never exceeds the 80% clamp.
    CHECK(masked * frame_ms <= 0.8 * T * frame_ms + 1e-9);
  }
}

TEST_CASE("SampleGapMask matches the target duration statistics") {
  const int64 T = 149;
  GapSpec spec;
  double total_ms = 0;
  std::set<int64> counts;
  const int n = 3000;
  for (int i = 0; i < n; ++i) {
    spec.seed = 1000 + i;
    const GapMask m = SampleGapMask(spec, T, 20.0);
    total_ms += m.MaskedFrames() * 20.0;
    counts.insert(static_cast<int64>(m.gap_spans.size()));
  }
  const double mean = total_ms / n;
  CHECK(mean > 850.0);
  CHECK(mean < 950.0);
  CHECK(counts.size() >= 2);
  CHECK(*counts.begin() >= 1);
  CHECK(*counts.rbegin() <= 8);
}

TEST_CASE("SampleGapMask is deterministic per seed") {
  GapSpec spec;
  spec.seed = 77;
  const GapMask a = SampleGapMask(spec, 100, 20.0);
  const GapMask b = SampleGapMask(spec, 100, 20.0);
  CHECK(a.frames == b.frames);
  CHECK(a.gap_spans == b.gap_spans);
  spec.seed = 78;
  const GapMask c = SampleGapMask(spec, 100, 20.0);
  CHECK(a.frames != c.frames);
}

TEST_CASE("ApplyMask zeroes exactly the masked frames") {
  const dsp::MelSpectrogram x = UniformMel(10, 4, 3);
  GapMask m;
  m.frames = {1, 1, 0, 0, 1, 1, 1, 0, 1, 1};
  m.gap_spans = {{2, 4}, {7, 8}};
  const dsp::MelSpectrogram a = ApplyMask(x, m);
  for (int64 t = 0; t < 10; ++t)
    for (int64 f = 0; f < 4; ++f)
      CHECK(a.at(t, f) == (m.frames[t] ? x.at(t, f) : 0.0));
  GapMask wrong;
  wrong.frames = {1, 1, 1};
  CHECK_THROWS_AS(ApplyMask(x, wrong), Error);
}

TEST_CASE("DeriveVideoMask follows the floor downsampling rule") {
  GapMask m;
  m.frames = {1, 1, 0, 0, 1, 1, 1, 1};  // T = 8
  m.gap_spans = {{2, 4}};
  const std::vector<int> vm = DeriveVideoMask(m, 4);  // T_video = 4
  REQUIRE(vm.size() == 4);
  // Video frame j maps to audio frame floor(j * 8 / 4) = 2j.
  CHECK(vm[0] == 1);
  CHECK(vm[1] == 0);
  CHECK(vm[2] == 1);
  CHECK(vm[3] == 1);
}

TEST_CASE("ApplyVideoMask blanks whole frames") {
  const VideoClip v = RandomClip(4, 3, 5, 2, 9);
  const std::vector<int> vm = {1, 0, 1, 0};
  const VideoClip out = ApplyVideoMask(v, vm);
  for (int64 t = 0; t < 4; ++t)
    for (int64 i = 0; i < v.FrameSize(); ++i) {
      const double got = out.data[t * v.FrameSize() + i];
      const double want = vm[t] ? v.data[t * v.FrameSize() + i] : 0.0;
      CHECK(got == want);
    }
}

TEST_CASE("Mask files round-trip through the text sidecar") {
  const std::string path = TempPath("sik_test_masks.txt");
  std::map<std::string, GapMask> masks;
  GapSpec spec;
  for (int i = 0; i < 5; ++i) {
    spec.seed = 30 + i;
    masks[StrCat("utt", i)] = SampleGapMask(spec, 60 + i, 20.0);
  }
  WriteMaskFile(path, masks);
  const std::map<std::string, GapMask> back = ReadMaskFile(path);
  REQUIRE(back.size() == masks.size());
  for (const auto &[id, m] : masks) {
    REQUIRE(back.count(id) == 1);
    CHECK(back.at(id).frames == m.frames);
    CHECK(back.at(id).gap_spans == m.gap_spans);
  }
  std::remove(path.c_str());
}

TEST_CASE("White noise is additive, clamped and seed-deterministic") {
  const dsp::MelSpectrogram x = UniformMel(20, 8, 11);
  NoiseSpec spec;
  spec.kind = NoiseKind::kWhite;
  spec.magnitude = 0.1;
  const dsp::MelSpectrogram a = AddNoise(x, spec, 5);
  const dsp::MelSpectrogram b = AddNoise(x, spec, 5);
  const dsp::MelSpectrogram c = AddNoise(x, spec, 6);
  CHECK(a.values == b.values);
  CHECK(a.values != c.values);
  double sq = 0;
  int64 interior = 0;
  for (size_t i = 0; i < x.values.size(); ++i) {
    CHECK(a.values[i] >= 0.0);
    CHECK(a.values[i] <= 1.0);
    // Unclamped entries should deviate like 0.1 * N(0,1).
    if (a.values[i] > 0.0 && a.values[i] < 1.0) {
      sq += std::pow(a.values[i] - x.values[i], 2);
      ++interior;
    }
  }
  CHECK(std::sqrt(sq / interior) == doctest::Approx(0.1).epsilon(0.25));
}

TEST_CASE("Zero-magnitude noise is the identity") {
  const dsp::MelSpectrogram x = UniformMel(6, 4, 13);
  NoiseSpec spec;
  spec.kind = NoiseKind::kWhite;
  spec.magnitude = 0.0;
  CHECK(AddNoise(x, spec, 1).values == x.values);
}

TEST_CASE("Environmental noise adds the scaled source spectrogram") {
  const dsp::MelSpectrogram x = UniformMel(6, 4, 15);
  const dsp::MelSpectrogram env = UniformMel(6, 4, 16);
  NoiseSpec spec;
  spec.kind = NoiseKind::kEnvironmental;
  spec.magnitude = 0.05;
  spec.env_source = &env;
  const dsp::MelSpectrogram out = AddNoise(x, spec, 1);
  for (size_t i = 0; i < x.values.size(); ++i) {
    const double want =
        std::clamp(x.values[i] + 0.05 * env.values[i], 0.0, 1.0);
    CHECK(out.values[i] == doctest::Approx(want));
  }
  spec.env_source = nullptr;
  CHECK_THROWS_AS(AddNoise(x, spec, 1), Error);
}

TEST_CASE("VIDT files round-trip clips") {
  const std::string path = TempPath("sik_test_clip.vidt");
  const VideoClip v = RandomClip(3, 4, 6, 1, 19);
  WriteVidt(path, v);
  const VideoClip r = ReadVidt(path);
  CHECK(r.num_frames == 3);
  CHECK(r.height == 4);
  CHECK(r.width == 6);
  CHECK(r.channels == 1);
  REQUIRE(r.data.size() == v.data.size());
  for (size_t i = 0; i < v.data.size(); ++i)
    CHECK(r.data[i] ==
          doctest::Approx(v.data[i]).epsilon(1e-6));
  std::remove(path.c_str());
}

TEST_CASE("PGM sequences load as a clip in path order") {
  const std::string p0 = TempPath("sik_test_f0.pgm");
  const std::string p1 = TempPath("sik_test_f1.pgm");
  VideoClip v = RandomClip(2, 3, 4, 1, 23);
  WritePgm(p0, v, 0);
  WritePgm(p1, v, 1);
  const VideoClip r = ReadPgmSequence({p0, p1});
  CHECK(r.num_frames == 2);
  CHECK(r.height == 3);
  CHECK(r.width == 4);
  CHECK(r.channels == 1);
  for (size_t i = 0; i < v.data.size(); ++i)
    CHECK(std::abs(r.data[i] - v.data[i]) <= 1.0 / 255.0);
  std::remove(p0.c_str());
  std::remove(p1.c_str());
}

TEST_CASE("AffineVideo keeps shape, range and seed determinism") {
  const VideoClip v = RandomClip(3, 12, 16, 1, 29);
  Rng r1(55), r2(55), r3(56);
  const VideoClip a = AffineVideo(v, &r1);
  const VideoClip b = AffineVideo(v, &r2);
  const VideoClip c = AffineVideo(v, &r3);
  CHECK(a.num_frames == v.num_frames);
  CHECK(a.height == v.height);
  CHECK(a.width == v.width);
  CHECK(a.data == b.data);
  CHECK(a.data != c.data);
  for (double x : a.data) {
    CHECK(x >= 0.0);
    CHECK(x <= 1.0);
  }
}

TEST_CASE("AugmentSample branch frequencies match the gated uniform pick") {
  AvSample s;
  s.audio = UniformMel(40, 8, 31);
  s.video = RandomClip(20, 6, 8, 1, 33);
  GapSpec gs;
  gs.mean_total_ms = 120;
  gs.std_total_ms = 30;
  gs.min_gap_ms = 36;
  gs.max_gaps = 2;
  gs.seed = 3;
  s.mask = SampleGapMask(gs, 40, 20.0);

  const dsp::MelSpectrogram env = UniformMel(40, 8, 35);
  AugmentPolicy policy;
  policy.p_aug = 0.5;
  policy.p_affine = 0.0;
  policy.env_source = &env;
  policy.frame_ms = 20.0;
  policy.extra_gap = gs;

  int untouched = 0, white = 0, envn = 0, avmask = 0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const AvSample out = AugmentSample(s, policy, 1000 + i);
    if (out.audio.values == s.audio.values &&
        out.video.data == s.video.data) {
      ++untouched;
      continue;
    }
    // The AV-mask branch blanks additional whole frames in both streams.
    if (out.video.data != s.video.data) {
      ++avmask;
      continue;
    }
    // Distinguish white from environmental by the residual shape: the env
    // branch adds exactly 0.05 * env everywhere no clamp binds.
    bool is_env = true;
    for (int64 k = 0; k < 64; ++k) {
      const double resid = out.audio.values[k] - s.audio.values[k];
      if (out.audio.values[k] > 0.0 && out.audio.values[k] < 1.0 &&
          std::abs(resid - policy.env_magnitude * env.values[k]) > 1e-9) {
        is_env = false;
        break;
      }
    }
    (is_env ? envn : white) += 1;
  }
  CHECK(untouched / static_cast<double>(n) ==
        doctest::Approx(0.5).epsilon(0.04));
  for (int count : {white, envn, avmask})
    CHECK(count / static_cast<double>(n) ==
          doctest::Approx(1.0 / 6.0).epsilon(0.12));
}

TEST_CASE("AugmentSample is deterministic and leaves the mask field alone") {
  AvSample s;
  s.audio = UniformMel(40, 8, 41);
  s.video = RandomClip(20, 6, 8, 1, 43);
  GapSpec gs;
  gs.seed = 5;
  gs.mean_total_ms = 100;
  gs.std_total_ms = 20;
  gs.max_gaps = 2;
  s.mask = SampleGapMask(gs, 40, 20.0);
  const dsp::MelSpectrogram env = UniformMel(40, 8, 45);
  AugmentPolicy policy;
  policy.env_source = &env;
  policy.extra_gap = gs;
  for (uint64 seed = 0; seed < 40; ++seed) {
    const AvSample a = AugmentSample(s, policy, seed);
    const AvSample b = AugmentSample(s, policy, seed);
    CHECK(a.audio.values == b.audio.values);
    CHECK(a.video.data == b.video.data);
    // The stored mask describes the original corruption and never changes.
    CHECK(a.mask.frames == s.mask.frames);
  }
}
