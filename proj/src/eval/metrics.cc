// src/eval/metrics.cc

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

#include "sik/eval/metrics.h"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "sik/base/io.h"

namespace sik::eval {

double Psnr(const dsp::MelSpectrogram &ref, const dsp::MelSpectrogram &out,
            double peak) {
  SIK_REQUIRE(ref.num_frames == out.num_frames && ref.mel_bins == out.mel_bins,
              "psnr shape mismatch: ", ref.num_frames, "x", ref.mel_bins,
              " vs ", out.num_frames, "x", out.mel_bins);
  SIK_REQUIRE(peak > 0, "peak must be positive");
  double mse = 0;
  const int64 n = static_cast<int64>(ref.values.size());
  for (int64 i = 0; i < n; ++i) {
    const double d = ref.values[i] - out.values[i];
    mse += d * d;
  }
  mse /= static_cast<double>(n);
  if (mse == 0) return 100.0;
  return std::min(100.0, 10.0 * std::log10(peak * peak / mse));
}

double MaskedMse(const dsp::MelSpectrogram &ref, const dsp::MelSpectrogram &out,
                 const corrupt::GapMask &mask) {
  SIK_REQUIRE(ref.num_frames == out.num_frames && ref.mel_bins == out.mel_bins,
              "masked_mse shape mismatch");
  SIK_REQUIRE(mask.size() == ref.num_frames, "mask length ", mask.size(),
              " does not match ", ref.num_frames, " frames");
  double sum = 0;
  int64 cells = 0;
  for (int64 t = 0; t < ref.num_frames; ++t) {
    if (mask.frames[t] != 0) continue;
    for (int64 f = 0; f < ref.mel_bins; ++f) {
      const double d = ref.at(t, f) - out.at(t, f);
      sum += d * d;
    }
    cells += ref.mel_bins;
  }
  SIK_REQUIRE(cells > 0, "mask has no masked frames");
  return sum / static_cast<double>(cells);
}

namespace {

template <typename Seq>
int64 EditDistanceImpl(const Seq &a, const Seq &b) {
  const int64 n = static_cast<int64>(a.size());
  const int64 m = static_cast<int64>(b.size());
  std::vector<int64> prev(m + 1), cur(m + 1);
  for (int64 j = 0; j <= m; ++j) prev[j] = j;
  for (int64 i = 1; i <= n; ++i) {
    cur[0] = i;
    for (int64 j = 1; j <= m; ++j) {
      const int64 sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

}  // namespace

int64 EditDistance(const std::string &a, const std::string &b) {
  return EditDistanceImpl(a, b);
}

int64 EditDistance(const std::vector<std::string> &a,
                   const std::vector<std::string> &b) {
  return EditDistanceImpl(a, b);
}

std::string NormalizeText(const std::string &text) {
  std::string out;
  bool pending_space = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!out.empty()) pending_space = true;
      continue;
    }
    if (pending_space) {
      out += ' ';
      pending_space = false;
    }
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

double Cer(const std::string &ref_text, const std::string &hyp_text) {
  const std::string ref = NormalizeText(ref_text);
  const std::string hyp = NormalizeText(hyp_text);
  SIK_REQUIRE(!ref.empty(), "cer reference text is empty");
  return static_cast<double>(EditDistance(ref, hyp)) /
         static_cast<double>(ref.size());
}

double Wer(const std::string &ref_text, const std::string &hyp_text) {
  const std::vector<std::string> ref = SplitWhitespace(NormalizeText(ref_text));
  const std::vector<std::string> hyp = SplitWhitespace(NormalizeText(hyp_text));
  SIK_REQUIRE(!ref.empty(), "wer reference text is empty");
  return static_cast<double>(EditDistance(ref, hyp)) /
         static_cast<double>(ref.size());
}

Dictionary Dictionary::FromFile(const std::string &path) {
  std::vector<std::string> words;
  for (const std::string &line : SplitLines(ReadTextFile(path))) {
    const std::string w = Trim(line);
    if (w.empty() || w[0] == '#') continue;
    words.push_back(NormalizeText(w));
  }
  return FromWords(std::move(words));
}

Dictionary Dictionary::FromWords(std::vector<std::string> words) {
  SIK_REQUIRE(!words.empty(), "dictionary is empty");
  for (const std::string &w : words)
    SIK_REQUIRE(!w.empty() && w == NormalizeText(w),
                "dictionary word not normalized: '", w, "'");
  Dictionary d;
  d.words = std::move(words);
  return d;
}

std::string CorrectiveEnhancement(const std::string &hyp_text,
                                  const Dictionary &dict) {
  SIK_REQUIRE(!dict.words.empty(), "dictionary is empty");
  std::string out;
  for (const std::string &word : SplitWhitespace(NormalizeText(hyp_text))) {
    const std::string *best = nullptr;
    if (std::find(dict.words.begin(), dict.words.end(), word) !=
        dict.words.end()) {
      best = &word;
    } else {
      int64 best_dist = 0;
      for (const std::string &cand : dict.words) {
        const int64 d = EditDistance(word, cand);
        if (best == nullptr || d < best_dist) {
          best = &cand;
          best_dist = d;
        }
      }
    }
    if (!out.empty()) out += ' ';
    out += *best;
  }
  return out;
}

}  // namespace sik::eval
