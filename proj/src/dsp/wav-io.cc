// src/dsp/wav-io.cc

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

#include "sik/dsp/wav-io.h"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "sik/base/io.h"

namespace sik::dsp {

namespace {

std::string FourCc(BinaryReader *r) {
  char c[4];
  r->GetBytes(c, 4);
  return std::string(c, 4);
}

}  // namespace

Waveform ReadWav(const std::string &path) {
  BinaryReader r(path);
  SIK_REQUIRE(FourCc(&r) == "RIFF", path, ": not a RIFF file");
  r.Get<uint32>();  // riff payload size, unreliable in the wild
  SIK_REQUIRE(FourCc(&r) == "WAVE", path, ": not a WAVE file");

  bool have_fmt = false;
  uint16 format = 0, channels = 0, bits = 0;
  uint32 rate = 0;
  Waveform w;
  while (!r.AtEof()) {
    const std::string id = FourCc(&r);
    const uint32 size = r.Get<uint32>();
    if (id == "fmt ") {
      SIK_REQUIRE(size >= 16, path, ": fmt chunk too small");
      format = r.Get<uint16>();
      channels = r.Get<uint16>();
      rate = r.Get<uint32>();
      r.Get<uint32>();  // byte rate
      r.Get<uint16>();  // block align
      bits = r.Get<uint16>();
      r.Skip(size - 16 + (size & 1));
      have_fmt = true;
    } else if (id == "data") {
      SIK_REQUIRE(have_fmt, path, ": data chunk before fmt chunk");
      SIK_REQUIRE(format == 1, path, ": only PCM supported, got format tag ",
                  format);
      SIK_REQUIRE(channels == 1, path, ": only mono supported, got ",
                  channels, " channels");
      SIK_REQUIRE(bits == 16, path, ": only 16-bit supported, got ", bits);
      const int64 n = size / 2;
      w.sample_rate = static_cast<int32>(rate);
      w.samples.resize(n);
      for (int64 i = 0; i < n; ++i)
        w.samples[i] = static_cast<double>(r.Get<int16>()) / 32768.0;
      return w;
    } else {
      r.Skip(size + (size & 1));  // chunks are word-aligned
    }
  }
  Die(path, ": no data chunk found");
}

void WriteWav(const std::string &path, const Waveform &w) {
  SIK_REQUIRE(w.sample_rate > 0, "sample rate must be positive");
  BinaryWriter bw(path);
  const uint32 data_bytes = static_cast<uint32>(w.size() * 2);
  bw.PutBytes("RIFF", 4);
  bw.Put<uint32>(36 + data_bytes);
  bw.PutBytes("WAVE", 4);
  bw.PutBytes("fmt ", 4);
  bw.Put<uint32>(16);
  bw.Put<uint16>(1);  // PCM
  bw.Put<uint16>(1);  // mono
  bw.Put<uint32>(static_cast<uint32>(w.sample_rate));
  bw.Put<uint32>(static_cast<uint32>(w.sample_rate) * 2);
  bw.Put<uint16>(2);
  bw.Put<uint16>(16);
  bw.PutBytes("data", 4);
  bw.Put<uint32>(data_bytes);
  for (double s : w.samples) {
    const double scaled = std::round(std::clamp(s, -1.0, 1.0) * 32767.0);
    bw.Put<int16>(static_cast<int16>(scaled));
  }
  bw.Close();
}

}  // namespace sik::dsp
