// src/harness/dataset.cc

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

#include "sik/harness/dataset.h"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <map>

#include "sik/base/io.h"
#include "sik/base/rng.h"

namespace sik::harness {

namespace fs = std::filesystem;

std::string SplitName(Split s) {
  switch (s) {
    case Split::kTrain: return "train";
    case Split::kSeenTest: return "seen-test";
    case Split::kUnseenTest: return "unseen-test";
  }
  Die("bad split");
}

Split SplitFromName(const std::string &name) {
  if (name == "train") return Split::kTrain;
  if (name == "seen-test") return Split::kSeenTest;
  if (name == "unseen-test") return Split::kUnseenTest;
  Die("unknown split name '", name, "'");
}

std::string AlignmentFile::Transcript() const {
  std::string out;
  for (const AlignmentEntry &e : entries) {
    if (e.word == "sil" || e.word == "sp") continue;
    if (!out.empty()) out += ' ';
    out += e.word;
  }
  return out;
}

AlignmentFile ParseAlignment(const std::string &text) {
  AlignmentFile out;
  const std::vector<std::string> lines = SplitLines(text);
  for (size_t i = 0; i < lines.size(); ++i) {
    const int64 line_no = static_cast<int64>(i) + 1;
    const std::string line = Trim(lines[i]);
    if (line.empty() || line[0] == '#') continue;
    const std::vector<std::string> tok = SplitWhitespace(line);
    SIK_REQUIRE(tok.size() == 3, "alignment line ", line_no,
                ": expected 'start end word', got '", line, "'");
    char *end0 = nullptr, *end1 = nullptr;
    const double start = std::strtod(tok[0].c_str(), &end0);
    const double stop = std::strtod(tok[1].c_str(), &end1);
    SIK_REQUIRE(*end0 == '\0' && *end1 == '\0', "alignment line ", line_no,
                ": non-numeric time in '", line, "'");
    SIK_REQUIRE(stop >= start, "alignment line ", line_no,
                ": end before start");
    if (!out.entries.empty())
      SIK_REQUIRE(start >= out.entries.back().end_ms, "alignment line ",
                  line_no, ": overlaps the previous entry");
    out.entries.push_back({start, stop, tok[2]});
  }
  return out;
}

namespace {

enum class Assignment { kTrain, kSeenTest, kUnseenTest, kAlternate, kUnknown };

bool Contains(const std::vector<std::string> &v, const std::string &s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

Assignment AssignSpeaker(const SplitSpec &spec, const std::string &speaker) {
  if (Contains(spec.unseen_test_speakers, speaker))
    return Assignment::kUnseenTest;
  const bool in_train = Contains(spec.train_speakers, speaker);
  const bool in_seen = Contains(spec.seen_test_speakers, speaker);
  if (in_train && in_seen) return Assignment::kAlternate;
  if (in_train) return Assignment::kTrain;
  if (in_seen) return Assignment::kSeenTest;
  return Assignment::kUnknown;
}

std::vector<std::string> SortedDirEntries(const fs::path &dir,
                                          bool directories) {
  std::vector<std::string> names;
  if (!fs::exists(dir)) return names;
  for (const auto &e : fs::directory_iterator(dir)) {
    if (directories ? e.is_directory() : e.is_regular_file())
      names.push_back(e.path().filename().string());
  }
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace

IngestResult IngestDataset(const std::string &root, const SplitSpec &spec) {
  SIK_REQUIRE(fs::is_directory(root), "dataset root '", root,
              "' is not a directory");
  IngestResult result;
  const std::vector<std::string> speakers = SortedDirEntries(root, true);
  SIK_REQUIRE(!speakers.empty(), "dataset root '", root, "' has no speakers");

  int64 speaker_index = 0;
  for (const std::string &speaker : speakers) {
    const Assignment assign = AssignSpeaker(spec, speaker);
    const fs::path sdir = fs::path(root) / speaker;

    // Overlap speakers alternate deterministically, seeded per speaker.
    Rng alt_rng(MixSeed(spec.seed, 0xa17, static_cast<uint64>(speaker_index)));
    bool next_train = alt_rng.UniformInt(0, 1) == 0;
    ++speaker_index;

    for (const std::string &wav : SortedDirEntries(sdir / "audio", false)) {
      const fs::path wav_path = sdir / "audio" / wav;
      if (wav_path.extension() != ".wav") continue;
      const std::string stem = wav_path.stem().string();
      ++result.discovered;
      const std::string id = speaker + "-" + stem;

      if (assign == Assignment::kUnknown) {
        result.rejected.push_back(
            StrCat(id, ": speaker '", speaker, "' is in no split list"));
        continue;
      }
      const fs::path vidt = sdir / "frames" / (stem + ".vidt");
      const fs::path frames_dir = sdir / "frames" / stem;
      std::string frames_path;
      if (fs::is_regular_file(vidt)) {
        frames_path = vidt.string();
      } else if (fs::is_directory(frames_dir)) {
        frames_path = frames_dir.string();
      } else {
        result.rejected.push_back(StrCat(id, ": no video at ", vidt.string(),
                                         " or ", frames_dir.string()));
        continue;
      }
      const fs::path align = sdir / "align" / (stem + ".align");
      if (!fs::is_regular_file(align)) {
        result.rejected.push_back(
            StrCat(id, ": missing alignment ", align.string()));
        continue;
      }

      UtteranceRecord rec;
      rec.id = id;
      rec.speaker = speaker;
      rec.audio_path = wav_path.string();
      rec.frames_path = frames_path;
      rec.align_path = align.string();
      switch (assign) {
        case Assignment::kTrain: rec.split = Split::kTrain; break;
        case Assignment::kSeenTest: rec.split = Split::kSeenTest; break;
        case Assignment::kUnseenTest: rec.split = Split::kUnseenTest; break;
        case Assignment::kAlternate:
          rec.split = next_train ? Split::kTrain : Split::kSeenTest;
          next_train = !next_train;
          break;
        case Assignment::kUnknown: Die("unreachable");
      }
      result.records.push_back(std::move(rec));
    }
  }
  SIK_REQUIRE(result.discovered ==
                  static_cast<int64>(result.records.size()) +
                      static_cast<int64>(result.rejected.size()),
              "ingest accounting broken");
  return result;
}

corrupt::VideoClip ReadVideoAny(const std::string &frames_path) {
  if (fs::is_directory(frames_path)) {
    std::vector<std::string> names = SortedDirEntries(frames_path, false);
    std::vector<std::string> paths;
    for (const std::string &n : names) {
      if (n.size() > 4 && n.substr(n.size() - 4) == ".pgm")
        paths.push_back((fs::path(frames_path) / n).string());
    }
    SIK_REQUIRE(!paths.empty(), "no .pgm frames in ", frames_path);
    return corrupt::ReadPgmSequence(paths);
  }
  return corrupt::ReadVidt(frames_path);
}

}  // namespace sik::harness
