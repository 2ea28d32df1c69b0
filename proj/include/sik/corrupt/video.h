// include/sik/corrupt/video.h

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

#ifndef SIK_CORRUPT_VIDEO_H_
#define SIK_CORRUPT_VIDEO_H_

#include <string>
#include <vector>

#include "sik/base/common.h"

namespace sik::corrupt {

// Mouth-region clip, row-major [T x H x W x C], values in [0,1].
struct VideoClip {
  int64 num_frames = 0;
  int64 height = 0;
  int64 width = 0;
  int64 channels = 0;
  std::vector<double> data;

  int64 FrameSize() const { return height * width * channels; }
  double &at(int64 t, int64 h, int64 w, int64 c) {
    return data[((t * height + h) * width + w) * channels + c];
  }
  const double &at(int64 t, int64 h, int64 w, int64 c) const {
    return data[((t * height + h) * width + w) * channels + c];
  }
};

// Raw tensor container: magic "VIDT", version u32, T H W C u32, then
// T*H*W*C little-endian f32, row-major.
void WriteVidt(const std::string &path, const VideoClip &v);
VideoClip ReadVidt(const std::string &path);

// Binary 8-bit PGM (P5). One image per frame; used by the image-sequence
// ingestion path. Channel count must be 1.
void WritePgm(const std::string &path, const VideoClip &v, int64 frame);
VideoClip ReadPgm(const std::string &path);
VideoClip ReadPgmSequence(const std::vector<std::string> &paths);

}  // namespace sik::corrupt

#endif  // SIK_CORRUPT_VIDEO_H_
