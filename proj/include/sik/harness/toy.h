// include/sik/harness/toy.h

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

#ifndef SIK_HARNESS_TOY_H_
#define SIK_HARNESS_TOY_H_

#include <string>
#include <utility>
#include <vector>

#include "sik/base/common.h"

namespace sik::harness {

// Synthetic desk-scale corpus. Sentences come from a slot grammar (command
// colour digit by default, mirroring the Grid structure at a third of the
// slots); audio is a per-character tone sequence, video a per-character
// rectangle sequence, so both modalities genuinely carry the transcript.
struct ToyCorpusSpec {
  int64 n_utterances = 8;
  std::vector<std::vector<std::string>> grammar;  // empty = default slots
  std::vector<std::string> speakers = {"s1"};     // round-robin assignment
  int32 sample_rate = 8000;
  int64 audio_samples = 6560;  // exactly 40 frames of 320/160
  int64 video_frames = 20;
  int64 video_height = 16;
  int64 video_width = 24;
  uint64 seed = 0;
};

// command {bin, lay, place, set}, colour {blue, green, red, white}, digit
// {zero..nine}; all words are Grid dictionary words.
std::vector<std::vector<std::string>> DefaultToyGrammar();

// Character index: 'a'..'z' -> 0..25, ' ' -> 26.
int ToyCharIndex(char c);
// Tone for character k: 500 + 110 k Hz (distinct, below Nyquist at 8 kHz).
double ToyCharFrequency(int k);
// Centered rectangle (height, width) = (2 + (k%5)*2, 3 + (k/5)*3): a
// distinct glyph per character, so video alone identifies the transcript.
std::pair<int64, int64> ToyCharRect(int k);

// Writes wav/vidt/align files in the ingestion layout under out_dir.
// Byte-identical for identical specs. Returns the generated sentences
// keyed "speaker-stem", sorted by id.
std::vector<std::pair<std::string, std::string>> GenerateToyCorpus(
    const ToyCorpusSpec &spec, const std::string &out_dir);

}  // namespace sik::harness

#endif  // SIK_HARNESS_TOY_H_
