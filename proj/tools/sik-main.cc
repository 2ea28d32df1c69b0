// src/tools/sik-main.cc

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

// The sik command line tool. Exit codes: 0 success, 1 validation or
// missing-dependency errors (sik::Error), 2 unexpected failures.

#include <cstdlib>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sik/base/common.h"
#include "sik/harness/pipeline.h"

namespace {

// RUN_SEED overrides the config seed; an explicit --seed beats both.
void ApplyEnvSeed(sik::harness::PipelineOptions *opts) {
  if (opts->seed_overridden) return;
  const char *env = std::getenv("RUN_SEED");
  if (env == nullptr || *env == '\0') return;
  char *end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  SIK_REQUIRE(end != env && *end == '\0', "RUN_SEED is not an integer: '",
              env, "'");
  opts->seed = static_cast<sik::uint64>(v);
  opts->seed_overridden = true;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"sik: speech in-painting toolkit"};
  app.require_subcommand(1);

  sik::harness::PipelineOptions opts;
  std::vector<std::string> report_paths;

  const std::vector<std::string> pipeline_cmds = {
      "gen-toy",  "preprocess", "corrupt", "train",
      "inpaint",  "evaluate",   "all"};
  const std::vector<std::string> blurbs = {
      "generate the synthetic toy corpus",
      "ingest the dataset and write clean Mel spectrograms",
      "apply gap masks and optional noise",
      "train the configured model",
      "reconstruct the evaluation split",
      "score reconstructions and write reports",
      "run preprocess through evaluate"};
  for (size_t i = 0; i < pipeline_cmds.size(); ++i) {
    CLI::App *sub = app.add_subcommand(pipeline_cmds[i], blurbs[i]);
    sub->add_option("--config", opts.config_path, "key=value config file")
        ->required();
    sub->add_option("--run", opts.run_override,
                    "run name (overrides run.name)");
    sub->add_option("--seed", opts.seed, "seed (overrides run.seed)")
        ->check(CLI::NonNegativeNumber);
  }

  CLI::App *cmp = app.add_subcommand("compare",
                                     "tabulate several runs side by side");
  cmp->add_option("reports", report_paths, "report.csv paths")
      ->required()
      ->expected(2, -1);

  try {
    app.parse(argc, argv);
    const CLI::App *sub = app.get_subcommands().front();
    if (sub->get_name() == "compare") {
      std::cout << sik::harness::CompareRuns(report_paths);
      return 0;
    }
    opts.seed_overridden = sub->count("--seed") > 0;
    ApplyEnvSeed(&opts);
    sik::harness::RunPipeline(sub->get_name(), opts);
    return 0;
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const sik::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
