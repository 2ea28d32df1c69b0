// src/harness/toy.cc

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

#include "sik/harness/toy.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>

#include "sik/base/io.h"
#include "sik/base/rng.h"
#include "sik/corrupt/video.h"
#include "sik/dsp/wav-io.h"

namespace sik::harness {

namespace fs = std::filesystem;

std::vector<std::vector<std::string>> DefaultToyGrammar() {
  return {{"bin", "lay", "place", "set"},
          {"blue", "green", "red", "white"},
          {"zero", "one", "two", "three", "four", "five", "six", "seven",
           "eight", "nine"}};
}

int ToyCharIndex(char c) {
  if (c >= 'a' && c <= 'z') return c - 'a';
  SIK_REQUIRE(c == ' ', "toy alphabet has no character '", std::string(1, c),
              "'");
  return 26;
}

double ToyCharFrequency(int k) { return 500.0 + 110.0 * k; }

std::pair<int64, int64> ToyCharRect(int k) {
  return {2 + (k % 5) * 2, 3 + (k / 5) * 3};
}

namespace {

std::string SampleSentence(const std::vector<std::vector<std::string>> &slots,
                           Rng *rng) {
  std::string s;
  for (const std::vector<std::string> &words : slots) {
    if (!s.empty()) s += ' ';
    s += words[static_cast<size_t>(
        rng->UniformInt(0, static_cast<int64>(words.size()) - 1))];
  }
  return s;
}

dsp::Waveform SynthesizeAudio(const std::string &sentence,
                              const ToyCorpusSpec &spec) {
  dsp::Waveform w;
  w.sample_rate = spec.sample_rate;
  w.samples.assign(spec.audio_samples, 0.0);
  const int64 n_chars = static_cast<int64>(sentence.size());
  const int64 seg = spec.audio_samples / n_chars;
  for (int64 c = 0; c < n_chars; ++c) {
    const double freq = ToyCharFrequency(ToyCharIndex(sentence[c]));
    for (int64 t = 0; t < seg; ++t) {
      // Half-sine envelope per segment avoids clicks at boundaries.
      const double env = std::sin(M_PI * (static_cast<double>(t) + 0.5) /
                                  static_cast<double>(seg));
      w.samples[c * seg + t] =
          0.35 * env *
          std::sin(2.0 * M_PI * freq * static_cast<double>(c * seg + t) /
                   static_cast<double>(spec.sample_rate));
    }
  }
  return w;
}

corrupt::VideoClip SynthesizeVideo(const std::string &sentence,
                                   const ToyCorpusSpec &spec) {
  corrupt::VideoClip v;
  v.num_frames = spec.video_frames;
  v.height = spec.video_height;
  v.width = spec.video_width;
  v.channels = 1;
  v.data.assign(v.num_frames * v.height * v.width * v.channels, 0.0);
  const int64 n_chars = static_cast<int64>(sentence.size());
  for (int64 j = 0; j < v.num_frames; ++j) {
    const int64 c = j * n_chars / v.num_frames;
    const auto [rh, rw] = ToyCharRect(ToyCharIndex(sentence[c]));
    const int64 top = (v.height - rh) / 2;
    const int64 left = (v.width - rw) / 2;
    for (int64 y = top; y < top + rh; ++y)
      for (int64 x = left; x < left + rw; ++x) v.at(j, y, x, 0) = 1.0;
  }
  return v;
}

std::string MakeAlign(const std::string &sentence, const ToyCorpusSpec &spec) {
  const int64 n_chars = static_cast<int64>(sentence.size());
  const int64 seg = spec.audio_samples / n_chars;
  const double ms_per_sample = 1000.0 / spec.sample_rate;
  std::string out;
  int64 word_start = 0;
  for (int64 c = 0; c <= n_chars; ++c) {
    if (c == n_chars || sentence[c] == ' ') {
      char line[128];
      std::snprintf(line, sizeof(line), "%.3f %.3f %s\n",
                    static_cast<double>(word_start * seg) * ms_per_sample,
                    static_cast<double>(c * seg) * ms_per_sample,
                    sentence.substr(word_start, c - word_start).c_str());
      out += line;
      word_start = c + 1;
    }
  }
  return out;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> GenerateToyCorpus(
    const ToyCorpusSpec &spec, const std::string &out_dir) {
  SIK_REQUIRE(spec.n_utterances >= 1, "toy corpus needs utterances");
  SIK_REQUIRE(!spec.speakers.empty(), "toy corpus needs speakers");
  SIK_REQUIRE(spec.audio_samples >= 1 && spec.video_frames >= 1,
              "bad toy dimensions");
  const std::vector<std::vector<std::string>> grammar =
      spec.grammar.empty() ? DefaultToyGrammar() : spec.grammar;
  for (const auto &slot : grammar)
    SIK_REQUIRE(!slot.empty(), "toy grammar has an empty slot");

  std::vector<std::pair<std::string, std::string>> sentences;
  for (int64 u = 0; u < spec.n_utterances; ++u) {
    Rng rng(MixSeed(spec.seed, 0x709, static_cast<uint64>(u)));
    const std::string sentence = SampleSentence(grammar, &rng);
    const std::string speaker =
        spec.speakers[static_cast<size_t>(u) % spec.speakers.size()];
    char stem[32];
    std::snprintf(stem, sizeof(stem), "u%03lld", static_cast<long long>(u));

    const fs::path sdir = fs::path(out_dir) / speaker;
    fs::create_directories(sdir / "audio");
    fs::create_directories(sdir / "frames");
    fs::create_directories(sdir / "align");

    dsp::WriteWav((sdir / "audio" / StrCat(stem, ".wav")).string(),
                  SynthesizeAudio(sentence, spec));
    corrupt::WriteVidt((sdir / "frames" / StrCat(stem, ".vidt")).string(),
                       SynthesizeVideo(sentence, spec));
    WriteTextFile((sdir / "align" / StrCat(stem, ".align")).string(),
                  MakeAlign(sentence, spec));
    sentences.emplace_back(StrCat(speaker, "-", stem), sentence);
  }
  std::sort(sentences.begin(), sentences.end());
  return sentences;
}

}  // namespace sik::harness
