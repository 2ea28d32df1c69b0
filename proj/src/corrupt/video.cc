// src/corrupt/video.cc

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

#include "sik/corrupt/video.h"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "sik/base/io.h"

namespace sik::corrupt {

namespace {
constexpr uint32 kVidtVersion = 1;
}  // namespace

void WriteVidt(const std::string &path, const VideoClip &v) {
  SIK_REQUIRE(v.num_frames > 0 && v.FrameSize() > 0, "empty video clip");
  BinaryWriter w(path);
  w.PutBytes("VIDT", 4);
  w.Put<uint32>(kVidtVersion);
  w.Put<uint32>(static_cast<uint32>(v.num_frames));
  w.Put<uint32>(static_cast<uint32>(v.height));
  w.Put<uint32>(static_cast<uint32>(v.width));
  w.Put<uint32>(static_cast<uint32>(v.channels));
  for (double x : v.data) w.Put<float>(static_cast<float>(x));
  w.Close();
}

VideoClip ReadVidt(const std::string &path) {
  BinaryReader r(path);
  char magic[4];
  r.GetBytes(magic, 4);
  SIK_REQUIRE(std::string(magic, 4) == "VIDT", path, ": bad magic");
  const uint32 version = r.Get<uint32>();
  SIK_REQUIRE(version == kVidtVersion, path, ": unsupported version ",
              version);
  VideoClip v;
  v.num_frames = r.Get<uint32>();
  v.height = r.Get<uint32>();
  v.width = r.Get<uint32>();
  v.channels = r.Get<uint32>();
  SIK_REQUIRE(v.num_frames > 0 && v.FrameSize() > 0, path, ": empty shape");
  v.data.resize(v.num_frames * v.FrameSize());
  for (double &x : v.data) x = r.Get<float>();
  return v;
}

void WritePgm(const std::string &path, const VideoClip &v, int64 frame) {
  SIK_REQUIRE(v.channels == 1, "PGM output requires single-channel video");
  SIK_REQUIRE(frame >= 0 && frame < v.num_frames, "frame out of range");
  BinaryWriter w(path);
  const std::string header =
      StrCat("P5\n", v.width, " ", v.height, "\n255\n");
  w.PutBytes(header.data(), header.size());
  for (int64 h = 0; h < v.height; ++h)
    for (int64 x = 0; x < v.width; ++x) {
      const double val = std::clamp(v.at(frame, h, x, 0), 0.0, 1.0);
      w.Put<unsigned char>(
          static_cast<unsigned char>(std::lround(val * 255.0)));
    }
  w.Close();
}

namespace {

// Reads one whitespace-separated token, skipping '#' comment lines.
std::string NextPgmToken(BinaryReader *r) {
  std::string tok;
  for (;;) {
    char c = r->Get<char>();
    if (c == '#') {
      while (c != '\n') c = r->Get<char>();
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!tok.empty()) return tok;
      continue;
    }
    tok.push_back(c);
  }
}

}  // namespace

VideoClip ReadPgm(const std::string &path) {
  BinaryReader r(path);
  SIK_REQUIRE(NextPgmToken(&r) == "P5", path, ": only binary PGM supported");
  const int64 width = std::stoll(NextPgmToken(&r));
  const int64 height = std::stoll(NextPgmToken(&r));
  const int64 maxval = std::stoll(NextPgmToken(&r));
  SIK_REQUIRE(width > 0 && height > 0, path, ": bad dimensions");
  SIK_REQUIRE(maxval == 255, path, ": only 8-bit PGM supported, maxval ",
              maxval);
  VideoClip v;
  v.num_frames = 1;
  v.height = height;
  v.width = width;
  v.channels = 1;
  v.data.resize(height * width);
  for (double &x : v.data)
    x = static_cast<double>(r.Get<unsigned char>()) / 255.0;
  return v;
}

VideoClip ReadPgmSequence(const std::vector<std::string> &paths) {
  SIK_REQUIRE(!paths.empty(), "empty image sequence");
  VideoClip first = ReadPgm(paths[0]);
  VideoClip v;
  v.num_frames = static_cast<int64>(paths.size());
  v.height = first.height;
  v.width = first.width;
  v.channels = 1;
  v.data.resize(v.num_frames * v.FrameSize());
  std::copy(first.data.begin(), first.data.end(), v.data.begin());
  for (size_t i = 1; i < paths.size(); ++i) {
    VideoClip f = ReadPgm(paths[i]);
    SIK_REQUIRE(f.height == v.height && f.width == v.width, paths[i],
                ": frame size differs from first frame");
    std::copy(f.data.begin(), f.data.end(),
              v.data.begin() + static_cast<int64>(i) * v.FrameSize());
  }
  return v;
}

}  // namespace sik::corrupt
