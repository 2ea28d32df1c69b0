// src/eval/report.cc

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

#include "sik/eval/report.h"

#include <algorithm>
#include <cstdio>

namespace sik::eval {

namespace {

std::string Num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string NumOrNa(const std::optional<double> &v) {
  return v.has_value() ? Num(*v) : std::string("n/a");
}

std::string PadTo(const std::string &s, size_t width) {
  std::string out = s;
  while (out.size() < width) out += ' ';
  return out;
}

}  // namespace

EvalReport Aggregate(std::vector<UttScore> records, std::string config_echo) {
  SIK_REQUIRE(!records.empty(), "aggregate over zero utterances");
  std::sort(records.begin(), records.end(),
            [](const UttScore &a, const UttScore &b) { return a.id < b.id; });

  UttScore mean;
  mean.id = "mean";
  double pesq_sum = 0;
  int64 pesq_n = 0;
  for (const UttScore &r : records) {
    mean.stoi += r.stoi;
    mean.psnr_db += r.psnr_db;
    mean.masked_mse += r.masked_mse;
    mean.cer += r.cer;
    mean.wer += r.wer;
    if (r.pesq.has_value()) {
      pesq_sum += *r.pesq;
      ++pesq_n;
    }
  }
  const double n = static_cast<double>(records.size());
  mean.stoi /= n;
  mean.psnr_db /= n;
  mean.masked_mse /= n;
  mean.cer /= n;
  mean.wer /= n;
  if (pesq_n > 0) mean.pesq = pesq_sum / static_cast<double>(pesq_n);

  EvalReport report;
  report.utterances = std::move(records);
  report.mean = mean;
  report.config_echo = std::move(config_echo);
  return report;
}

namespace {

std::string CsvRow(const UttScore &r) {
  return StrCat(r.id, ",", NumOrNa(r.pesq), ",", Num(r.stoi), ",",
                Num(r.psnr_db), ",", Num(r.masked_mse), ",", Num(r.cer), ",",
                Num(r.wer), "\n");
}

}  // namespace

std::string ReportCsv(const EvalReport &report) {
  std::string out = "utterance,pesq,stoi,psnr_db,masked_mse,cer,wer\n";
  for (const UttScore &r : report.utterances) out += CsvRow(r);
  out += CsvRow(report.mean);
  return out;
}

namespace {

constexpr size_t kColWidth = 12;

// Mirrors the paper's metric columns; arrows mark the better direction.
const char *const kHeader[] = {"PESQ (+)", "STOI (+)",  "PSNR (+)",
                               "MSE (-)",  "CER (-)",   "WER (-)"};

std::string TableRow(const std::string &label, const UttScore &r,
                     size_t label_width) {
  std::string out = PadTo(label, label_width);
  out += PadTo(NumOrNa(r.pesq), kColWidth);
  out += PadTo(Num(r.stoi), kColWidth);
  out += PadTo(Num(r.psnr_db), kColWidth);
  out += PadTo(Num(r.masked_mse), kColWidth);
  out += PadTo(Num(r.cer), kColWidth);
  out += PadTo(Num(r.wer), kColWidth);
  while (!out.empty() && out.back() == ' ') out.pop_back();
  out += '\n';
  return out;
}

std::string TableHeader(const std::string &first, size_t label_width) {
  std::string head = PadTo(first, label_width);
  for (const char *h : kHeader) head += PadTo(h, kColWidth);
  while (!head.empty() && head.back() == ' ') head.pop_back();
  head += '\n';
  head += std::string(head.size() - 1, '-');
  head += '\n';
  return head;
}

}  // namespace

std::string ReportTable(const EvalReport &report, const std::string &title) {
  size_t label_width = 10;
  for (const UttScore &r : report.utterances)
    label_width = std::max(label_width, r.id.size() + 2);

  std::string out = title + "\n";
  if (!report.config_echo.empty()) out += report.config_echo + "\n";
  out += TableHeader("utterance", label_width);
  for (const UttScore &r : report.utterances)
    out += TableRow(r.id, r, label_width);
  out += TableRow("mean", report.mean, label_width);
  return out;
}

std::string CompareTable(
    const std::vector<std::pair<std::string, const EvalReport *>> &runs) {
  SIK_REQUIRE(!runs.empty(), "no runs to compare");
  size_t label_width = 10;
  for (const auto &[name, report] : runs)
    label_width = std::max(label_width, name.size() + 2);

  // Best mean per column: higher is better for the first three metrics,
  // lower for the rest.
  auto value = [](const UttScore &m, int col) -> std::optional<double> {
    switch (col) {
      case 0: return m.pesq;
      case 1: return m.stoi;
      case 2: return m.psnr_db;
      case 3: return m.masked_mse;
      case 4: return m.cer;
      default: return m.wer;
    }
  };
  std::optional<double> best[6];
  for (int col = 0; col < 6; ++col) {
    for (const auto &[name, report] : runs) {
      const std::optional<double> v = value(report->mean, col);
      if (!v.has_value()) continue;
      const bool higher = col < 3;
      if (!best[col].has_value() || (higher ? *v > *best[col]
                                            : *v < *best[col]))
        best[col] = *v;
    }
  }

  std::string out = TableHeader("run", label_width);
  for (const auto &[name, report] : runs) {
    std::string row = PadTo(name, label_width);
    for (int col = 0; col < 6; ++col) {
      const std::optional<double> v = value(report->mean, col);
      std::string cell = v.has_value() ? Num(*v) : std::string("n/a");
      if (v.has_value() && best[col].has_value() && *v == *best[col])
        cell += '*';
      row += PadTo(cell, kColWidth);
    }
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out += row + "\n";
  }
  return out;
}

std::optional<double> RunPesqHook(const std::string &binary,
                                  const std::string &ref_wav,
                                  const std::string &deg_wav) {
  if (binary.empty()) return std::nullopt;
  const std::string cmd =
      StrCat("'", binary, "' '", ref_wav, "' '", deg_wav, "'");
  FILE *pipe = popen(cmd.c_str(), "r");
  SIK_REQUIRE(pipe != nullptr, "failed to launch pesq hook: ", cmd);
  std::string output;
  char buf[256];
  while (fgets(buf, sizeof(buf), pipe) != nullptr) output += buf;
  const int status = pclose(pipe);
  SIK_REQUIRE(status == 0, "pesq hook exited with status ", status, ": ", cmd);
  double score = 0;
  SIK_REQUIRE(std::sscanf(output.c_str(), "%lf", &score) == 1,
              "pesq hook printed no number: '", output, "'");
  return score;
}

}  // namespace sik::eval
