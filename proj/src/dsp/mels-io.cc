// src/dsp/mels-io.cc

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

#include "sik/dsp/mels-io.h"

#include "sik/base/io.h"

namespace sik::dsp {

namespace {
constexpr uint32 kMelsVersion = 1;
}  // namespace

void WriteMels(const std::string &path, const MelSpectrogram &m) {
  SIK_REQUIRE(m.num_frames > 0 && m.mel_bins > 0, "empty spectrogram");
  BinaryWriter w(path);
  w.PutBytes("MELS", 4);
  w.Put<uint32>(kMelsVersion);
  w.Put<uint32>(static_cast<uint32>(m.num_frames));
  w.Put<uint32>(static_cast<uint32>(m.mel_bins));
  w.Put<double>(m.floor_db);
  w.Put<double>(m.ceil_db);
  for (double v : m.values) w.Put<float>(static_cast<float>(v));
  w.Close();
}

MelSpectrogram ReadMels(const std::string &path) {
  BinaryReader r(path);
  char magic[4];
  r.GetBytes(magic, 4);
  SIK_REQUIRE(std::string(magic, 4) == "MELS", path, ": bad magic");
  const uint32 version = r.Get<uint32>();
  SIK_REQUIRE(version == kMelsVersion, path, ": unsupported version ",
              version);
  MelSpectrogram m;
  m.num_frames = r.Get<uint32>();
  m.mel_bins = r.Get<uint32>();
  m.floor_db = r.Get<double>();
  m.ceil_db = r.Get<double>();
  SIK_REQUIRE(m.num_frames > 0 && m.mel_bins > 0, path, ": empty shape");
  m.values.resize(m.num_frames * m.mel_bins);
  for (double &v : m.values) v = r.Get<float>();
  return m;
}

}  // namespace sik::dsp
