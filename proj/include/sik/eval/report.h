// include/sik/eval/report.h

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

#ifndef SIK_EVAL_REPORT_H_
#define SIK_EVAL_REPORT_H_

#include <optional>
#include <string>
#include <vector>

#include "sik/base/common.h"

namespace sik::eval {

struct UttScore {
  std::string id;
  std::optional<double> pesq;  // absent when no external scorer configured
  double stoi = 0;
  double psnr_db = 0;
  double masked_mse = 0;
  double cer = 0;
  double wer = 0;
};

struct EvalReport {
  std::vector<UttScore> utterances;  // sorted by id
  UttScore mean;                     // id "mean"; pesq averaged if present
  std::string config_echo;           // free-form run description
};

// Sorts records by id and computes arithmetic means. The mean PESQ covers
// the utterances that have one and is absent when none do. Empty input is
// an error.
EvalReport Aggregate(std::vector<UttScore> records,
                     std::string config_echo = "");

// One row per utterance plus the mean row; "n/a" for absent PESQ.
// Byte-stable for identical inputs.
std::string ReportCsv(const EvalReport &report);

// Human-readable table mirroring the paper's layout (arrows mark the
// better direction per metric).
std::string ReportTable(const EvalReport &report, const std::string &title);

// Mean rows of several runs side by side; the best value per metric is
// starred.
std::string CompareTable(
    const std::vector<std::pair<std::string, const EvalReport *>> &runs);

// Invokes `binary ref_wav deg_wav` and parses the single float it prints.
// An empty binary path returns nullopt (reported as "n/a"); a configured
// scorer that fails or prints garbage is an error.
std::optional<double> RunPesqHook(const std::string &binary,
                                  const std::string &ref_wav,
                                  const std::string &deg_wav);

}  // namespace sik::eval

#endif  // SIK_EVAL_REPORT_H_
