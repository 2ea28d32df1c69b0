// include/sik/eval/metrics.h

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

#ifndef SIK_EVAL_METRICS_H_
#define SIK_EVAL_METRICS_H_

#include <string>
#include <vector>

#include "sik/corrupt/mask.h"
#include "sik/dsp/mel.h"

namespace sik::eval {

// 10 log10(peak^2 / mse) over the full grid, capped at 100 dB so identical
// inputs stay finite.
double Psnr(const dsp::MelSpectrogram &ref, const dsp::MelSpectrogram &out,
            double peak = 1.0);

// Mean squared error over the masked (m_t = 0) frames only; it is an error
// for the mask to have no masked frame.
double MaskedMse(const dsp::MelSpectrogram &ref, const dsp::MelSpectrogram &out,
                 const corrupt::GapMask &mask);

// Levenshtein distance, unit-cost insert/delete/substitute.
int64 EditDistance(const std::string &a, const std::string &b);
int64 EditDistance(const std::vector<std::string> &a,
                   const std::vector<std::string> &b);

// Lowercase and collapse runs of whitespace to single spaces; trims ends.
std::string NormalizeText(const std::string &text);

// Character and word error rates: edit distance divided by the normalized
// reference length. Empty reference (after normalization) is an error.
double Cer(const std::string &ref_text, const std::string &hyp_text);
double Wer(const std::string &ref_text, const std::string &hyp_text);

// Corpus grammar word list. Order is the tie-break for corrective
// enhancement, so it is preserved from the file.
struct Dictionary {
  std::vector<std::string> words;  // lowercase, nonempty

  static Dictionary FromFile(const std::string &path);
  static Dictionary FromWords(std::vector<std::string> words);
};

// Replaces every hypothesis word by the nearest dictionary word (minimum
// edit distance, ties broken by dictionary order). In-dictionary words are
// left unchanged, which makes the operation idempotent.
std::string CorrectiveEnhancement(const std::string &hyp_text,
                                  const Dictionary &dict);

}  // namespace sik::eval

#endif  // SIK_EVAL_METRICS_H_
