// include/sik/harness/dataset.h

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

#ifndef SIK_HARNESS_DATASET_H_
#define SIK_HARNESS_DATASET_H_

#include <string>
#include <vector>

#include "sik/base/common.h"
#include "sik/corrupt/video.h"

namespace sik::harness {

enum class Split { kTrain, kSeenTest, kUnseenTest };

std::string SplitName(Split s);
Split SplitFromName(const std::string &name);

struct AlignmentEntry {
  double start_ms = 0;
  double end_ms = 0;
  std::string word;
};

// Time-ordered, non-overlapping word alignment. Silence entries stay in
// `entries` but never reach the transcript.
struct AlignmentFile {
  std::vector<AlignmentEntry> entries;

  // Words joined by single spaces, "sil"/"sp" dropped.
  std::string Transcript() const;
};

// Lines of "start end word"; '#' comments and blank lines are skipped.
// Malformed lines are reported with their 1-based line number.
AlignmentFile ParseAlignment(const std::string &text);

struct UtteranceRecord {
  std::string id;  // "<speaker>-<stem>", unique
  std::string speaker;
  std::string audio_path;
  std::string frames_path;  // .vidt file or a directory of .pgm frames
  std::string align_path;
  Split split = Split::kTrain;
};

// Speaker-based split lists. A speaker present in both the train and
// seen-test lists has its utterances alternated between the two under the
// seed (the paper's "evenly distributed" rule).
struct SplitSpec {
  std::vector<std::string> train_speakers;
  std::vector<std::string> seen_test_speakers;
  std::vector<std::string> unseen_test_speakers;
  uint64 seed = 0;
};

// Nothing is dropped silently: every discovered utterance is either loaded
// or listed in `rejected` with a reason, so
// records.size() + rejected.size() == discovered.
struct IngestResult {
  std::vector<UtteranceRecord> records;
  std::vector<std::string> rejected;
  int64 discovered = 0;
};

// Walks root/<speaker>/{audio,frames,align}; utterances are discovered
// from audio/*.wav stems. Missing modality files and speakers absent from
// every split list reject the record with a reason.
IngestResult IngestDataset(const std::string &root, const SplitSpec &spec);

// Reads a .vidt tensor file or a directory of .pgm frames (sorted by
// file name).
corrupt::VideoClip ReadVideoAny(const std::string &frames_path);

}  // namespace sik::harness

#endif  // SIK_HARNESS_DATASET_H_
