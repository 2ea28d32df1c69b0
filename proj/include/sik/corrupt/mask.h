// include/sik/corrupt/mask.h

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

#ifndef SIK_CORRUPT_MASK_H_
#define SIK_CORRUPT_MASK_H_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sik/base/common.h"
#include "sik/base/rng.h"
#include "sik/corrupt/video.h"
#include "sik/dsp/mel.h"

namespace sik::corrupt {

// Per-frame binary mask: 1 = intact, 0 = missing. Spans are half-open
// [start, end) frame intervals, disjoint and sorted.
struct GapMask {
  std::vector<int> frames;
  std::vector<std::pair<int64, int64>> gap_spans;

  int64 size() const { return static_cast<int64>(frames.size()); }
  int64 MaskedFrames() const;
};

struct GapSpec {
  double mean_total_ms = 900.0;
  double std_total_ms = 300.0;
  double min_gap_ms = 36.0;
  int64 max_gaps = 8;
  uint64 seed = 0;
};

// Draws total masked duration from N(mean, std^2) clamped to
// [min_gap_ms, 0.8 * T * frame_ms], splits it into k ~ U{1..max_gaps} gaps
// (k clamped so every gap keeps the minimum length and spans fit with one
// intact frame between them), and places the spans uniformly at random.
// Spans may touch the clip boundaries. Deterministic under spec.seed.
GapMask SampleGapMask(const GapSpec &spec, int64 num_frames, double frame_ms);

// a_t = m_t * x_t, elementwise per frame.
dsp::MelSpectrogram ApplyMask(const dsp::MelSpectrogram &x, const GapMask &m);

// Video frame j is masked iff audio frame floor(j * T / T_video) is masked.
std::vector<int> DeriveVideoMask(const GapMask &m, int64 video_frames);

VideoClip ApplyVideoMask(const VideoClip &v, const std::vector<int> &vm);

// Text sidecar reused by informed evaluation. One line per utterance:
//   <utt-id> <T> <start>:<end> <start>:<end> ...
// Entries are written in key order.
void WriteMaskFile(const std::string &path,
                   const std::map<std::string, GapMask> &masks);
std::map<std::string, GapMask> ReadMaskFile(const std::string &path);

}  // namespace sik::corrupt

#endif  // SIK_CORRUPT_MASK_H_
