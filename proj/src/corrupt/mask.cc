// src/corrupt/mask.cc

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

#include "sik/corrupt/mask.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "sik/base/io.h"

namespace sik::corrupt {

int64 GapMask::MaskedFrames() const {
  int64 n = 0;
  for (int f : frames) n += (f == 0);
  return n;
}

GapMask SampleGapMask(const GapSpec &spec, int64 num_frames, double frame_ms) {
  SIK_REQUIRE(spec.mean_total_ms > 0 && spec.min_gap_ms > 0 &&
                  spec.max_gaps >= 1,
              "invalid gap spec");
  SIK_REQUIRE(frame_ms > 0, "frame duration must be positive");
  const int64 min_frames =
      static_cast<int64>(std::ceil(spec.min_gap_ms / frame_ms));
  SIK_REQUIRE(num_frames >= 2 * min_frames, "clip of ", num_frames,
              " frames too small for the minimum gap of ", min_frames,
              " frames");

  Rng rng(spec.seed);
  const double total_ms = spec.mean_total_ms + spec.std_total_ms * rng.Normal();
  const double max_total_ms = 0.8 * num_frames * frame_ms;
  const double clamped_ms =
      std::clamp(total_ms, spec.min_gap_ms, max_total_ms);
  int64 total = static_cast<int64>(std::llround(clamped_ms / frame_ms));
  total = std::clamp(total, min_frames,
                     static_cast<int64>(std::floor(0.8 * num_frames)));

  // k gaps need k-1 intact separators and min_frames each.
  int64 k = rng.UniformInt(1, spec.max_gaps);
  k = std::min(k, total / min_frames);
  k = std::min(k, num_frames - total + 1);
  k = std::max<int64>(k, 1);

  // Uniform split: equal parts, remainder to the first gaps.
  std::vector<int64> parts(k, total / k);
  for (int64 i = 0; i < total % k; ++i) ++parts[i];

  // Uniform placement: distribute the slack around/between spans by a
  // stars-and-bars composition. slack = intact frames beyond the k-1
  // mandatory separators.
  const int64 slack = num_frames - total - (k - 1);
  SIK_REQUIRE(slack >= 0, "internal placement overflow");
  // k distinct bar positions out of slack + k slots (Floyd's sampler).
  std::set<int64> bars;
  for (int64 j = slack; j < slack + k; ++j) {
    const int64 t = rng.UniformInt(0, j);
    if (!bars.insert(t).second) bars.insert(j);
  }
  std::vector<int64> extra;  // k+1 non-negative parts summing to slack
  {
    std::vector<int64> b(bars.begin(), bars.end());
    extra.push_back(b[0]);
    for (int64 i = 1; i < k; ++i) extra.push_back(b[i] - b[i - 1] - 1);
    extra.push_back(slack + k - 1 - b[k - 1]);
  }

  GapMask m;
  m.frames.assign(num_frames, 1);
  int64 pos = extra[0];
  for (int64 i = 0; i < k; ++i) {
    m.gap_spans.emplace_back(pos, pos + parts[i]);
    for (int64 t = pos; t < pos + parts[i]; ++t) m.frames[t] = 0;
    pos += parts[i] + 1 + extra[i + 1];
  }
  return m;
}

dsp::MelSpectrogram ApplyMask(const dsp::MelSpectrogram &x, const GapMask &m) {
  SIK_REQUIRE(m.size() == x.num_frames, "mask length ", m.size(),
              " does not match spectrogram frames ", x.num_frames);
  dsp::MelSpectrogram out = x;
  for (int64 t = 0; t < x.num_frames; ++t)
    if (m.frames[t] == 0)
      for (int64 f = 0; f < x.mel_bins; ++f) out.at(t, f) = 0.0;
  return out;
}

std::vector<int> DeriveVideoMask(const GapMask &m, int64 video_frames) {
  SIK_REQUIRE(video_frames <= m.size(), "video longer than audio mask");
  SIK_REQUIRE(video_frames > 0, "empty video");
  std::vector<int> vm(video_frames);
  for (int64 j = 0; j < video_frames; ++j)
    vm[j] = m.frames[j * m.size() / video_frames];
  return vm;
}

VideoClip ApplyVideoMask(const VideoClip &v, const std::vector<int> &vm) {
  SIK_REQUIRE(static_cast<int64>(vm.size()) == v.num_frames,
              "video mask length ", vm.size(), " does not match clip frames ",
              v.num_frames);
  VideoClip out = v;
  const int64 fs = v.FrameSize();
  for (int64 t = 0; t < v.num_frames; ++t)
    if (vm[t] == 0)
      std::fill(out.data.begin() + t * fs, out.data.begin() + (t + 1) * fs,
                0.0);
  return out;
}

void WriteMaskFile(const std::string &path,
                   const std::map<std::string, GapMask> &masks) {
  std::ostringstream os;
  for (const auto &[id, m] : masks) {
    os << id << ' ' << m.size();
    for (const auto &[start, end] : m.gap_spans)
      os << ' ' << start << ':' << end;
    os << '\n';
  }
  WriteTextFile(path, os.str());
}

std::map<std::string, GapMask> ReadMaskFile(const std::string &path) {
  std::map<std::string, GapMask> masks;
  const std::vector<std::string> lines = SplitLines(ReadTextFile(path));
  for (size_t ln = 0; ln < lines.size(); ++ln) {
    const std::vector<std::string> tok = SplitWhitespace(lines[ln]);
    if (tok.empty()) continue;
    SIK_REQUIRE(tok.size() >= 2, path, ":", ln + 1, ": malformed line");
    GapMask m;
    const int64 T = std::stoll(tok[1]);
    SIK_REQUIRE(T > 0, path, ":", ln + 1, ": bad frame count");
    m.frames.assign(T, 1);
    for (size_t i = 2; i < tok.size(); ++i) {
      const size_t colon = tok[i].find(':');
      SIK_REQUIRE(colon != std::string::npos, path, ":", ln + 1,
                  ": span missing ':'");
      const int64 start = std::stoll(tok[i].substr(0, colon));
      const int64 end = std::stoll(tok[i].substr(colon + 1));
      SIK_REQUIRE(0 <= start && start < end && end <= T, path, ":", ln + 1,
                  ": span out of range");
      m.gap_spans.emplace_back(start, end);
      for (int64 t = start; t < end; ++t) m.frames[t] = 0;
    }
    SIK_REQUIRE(masks.emplace(tok[0], std::move(m)).second, path, ":", ln + 1,
                ": duplicate utterance id ", tok[0]);
  }
  return masks;
}

}  // namespace sik::corrupt
