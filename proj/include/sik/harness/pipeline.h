// include/sik/harness/pipeline.h

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

#ifndef SIK_HARNESS_PIPELINE_H_
#define SIK_HARNESS_PIPELINE_H_

#include <string>
#include <vector>

#include "sik/base/config.h"
#include "sik/eval/report.h"

namespace sik::harness {

struct PipelineOptions {
  std::string config_path;
  std::string run_override;  // --run beats run.name from the config
  bool seed_overridden = false;
  uint64 seed = 0;  // --seed (or RUN_SEED) beats run.seed
};

// command in {gen-toy, preprocess, corrupt, train, inpaint, evaluate, all}.
// Stages communicate only through files under runs/<name>/; rerunning with
// identical config and seed rewrites identical artifacts. Validation and
// missing-dependency problems throw sik::Error (CLI exit 1); anything else
// the OS throws maps to exit 2.
void RunPipeline(const std::string &command, const PipelineOptions &opts);

// Reads back a report CSV written by the evaluate stage.
eval::EvalReport ReadReportCsv(const std::string &path);

// Side-by-side mean-row table for >= 2 report CSVs, best value starred.
std::string CompareRuns(const std::vector<std::string> &report_paths);

}  // namespace sik::harness

#endif  // SIK_HARNESS_PIPELINE_H_
