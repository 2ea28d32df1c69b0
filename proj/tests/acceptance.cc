// tests/acceptance.cc

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

// Acceptance gate. Runs the eleven release criteria in order and prints one
// pass/fail line per criterion; exits nonzero if any fail. Tolerances and
// time budgets are pinned here, next to the checks they govern.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "sik/base/io.h"
#include "sik/base/rng.h"
#include "sik/corrupt/mask.h"
#include "sik/corrupt/video.h"
#include "sik/dsp/griffin-lim.h"
#include "sik/dsp/mel.h"
#include "sik/dsp/stft.h"
#include "sik/dsp/wav-io.h"
#include "sik/eval/metrics.h"
#include "sik/eval/stoi.h"
#include "sik/harness/dataset.h"
#include "sik/harness/pipeline.h"
#include "sik/harness/toy.h"
#include "sik/model/alphabet.h"
#include "sik/model/inpaint.h"
#include "sik/model/models.h"
#include "sik/model/train.h"
#include "sik/nn/layers.h"
#include "sik/nn/losses.h"

namespace sik {
namespace {

namespace fs = std::filesystem;

std::string SourceDir() {
  const char *dir = std::getenv("SIK_SOURCE_DIR");
  return dir != nullptr ? dir : ".";
}

std::string Fmt(const char *format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof(buf), format, args);
  va_end(args);
  return buf;
}

// A criterion returns "" on success or a short failure reason. Exceeding
// the time budget (when one is set) also fails the criterion.
struct Gate {
  int failures = 0;

  void Run(int idx, const std::string &name, double budget_s,
           const std::function<std::string()> &criterion) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = criterion();
    } catch (const std::exception &e) {
      detail = StrCat("exception: ", e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (detail.empty() && budget_s > 0 && elapsed > budget_s)
      detail = Fmt("over time budget: %.1fs > %.0fs", elapsed, budget_s);
    const std::string budget =
        budget_s > 0 ? Fmt(", limit %.0fs", budget_s) : std::string();
    if (detail.empty()) {
      std::printf("[%2d] PASS %s (%.1fs%s)\n", idx, name.c_str(), elapsed,
                  budget.c_str());
    } else {
      std::printf("[%2d] FAIL %s: %s (%.1fs%s)\n", idx, name.c_str(),
                  detail.c_str(), elapsed, budget.c_str());
      ++failures;
    }
    std::fflush(stdout);
  }
};

nn::Tensor RandomTensor(const std::vector<int64> &shape, Rng *rng,
                        double scale = 1.0) {
  nn::Tensor t(shape);
  for (double &v : t.data) v = scale * rng->Normal();
  return t;
}

double SnrDb(const std::vector<double> &ref, const std::vector<double> &out,
             int64 lo, int64 hi) {
  double sig = 0, err = 0;
  for (int64 i = lo; i < hi; ++i) {
    sig += ref[i] * ref[i];
    const double d = ref[i] - out[i];
    err += d * d;
  }
  if (err == 0) return 1e9;
  return 10.0 * std::log10(sig / err);
}

// --------------------------------------------------------------------------
// 1. DSP round-trip: stft -> istft SNR > 50 dB on 10 random 1 s signals;
//    the normalized log-Mel map hits its affine endpoints exactly.
std::string CriterionDspRoundTrip() {
  const dsp::StftConfig cfg;  // 320/160/510
  double min_snr = 1e9;
  for (int rep = 0; rep < 10; ++rep) {
    Rng rng(100 + rep);
    std::vector<double> x(8000);
    for (double &v : x) v = 0.5 * rng.Normal();
    const std::vector<double> y = dsp::Istft(dsp::Stft(x, cfg), cfg);
    // The WOLA guarantee covers interior samples (one window from the ends).
    const double snr =
        SnrDb(x, y, cfg.window_size,
              std::min<int64>(x.size(), y.size()) - cfg.window_size);
    min_snr = std::min(min_snr, snr);
  }
  if (min_snr <= 50.0) return Fmt("istft snr %.1f dB <= 50 dB", min_snr);

  // Affine endpoints: the cell at ceil_db maps to exactly 1, anything at
  // or below floor_db to exactly 0.
  Rng rng(7);
  dsp::Spectrogram mag;
  mag.num_frames = 20;
  mag.dim = cfg.NumBins();
  mag.data.resize(mag.num_frames * mag.dim);
  for (double &v : mag.data) v = rng.Uniform();
  for (int64 b = 0; b < mag.dim; ++b) mag.at(3, b) = 0.0;  // silent frame
  const dsp::MelFilterbank fb =
      dsp::BuildMelFilterbank(cfg.NumBins(), 64, 8000, 0.0, 4000.0);
  const double peak = dsp::MelPeakDb(mag, fb);
  const dsp::MelSpectrogram m = dsp::ToMelLogNorm(mag, fb, peak - 80.0, peak);
  const double top = *std::max_element(m.values.begin(), m.values.end());
  if (top != 1.0) return Fmt("peak cell maps to %.17g, want exactly 1", top);
  for (int64 f = 0; f < m.mel_bins; ++f)
    if (m.at(3, f) != 0.0)
      return Fmt("silent cell maps to %.17g, want exactly 0", m.at(3, f));
  for (double v : m.values)
    if (v < 0.0 || v > 1.0) return "normalized value escapes [0,1]";
  return "";
}

// --------------------------------------------------------------------------
// 2. Frame algebra: 3 s @ 8 kHz with 320/160 windows gives exactly 149
//    frames; the filterbank has exactly 64 Mel bins.
std::string CriterionFrameAlgebra() {
  const dsp::StftConfig cfg;
  if (cfg.NumFrames(24000) != 149)
    return Fmt("NumFrames(24000) = %lld, want 149",
               static_cast<long long>(cfg.NumFrames(24000)));
  if (cfg.NumBins() != 256)
    return Fmt("NumBins() = %lld, want 256",
               static_cast<long long>(cfg.NumBins()));
  const dsp::MelFilterbank fb =
      dsp::BuildMelFilterbank(cfg.NumBins(), 64, 8000, 0.0, 4000.0);
  if (fb.mel_bins != 64)
    return Fmt("filterbank has %lld bins, want 64",
               static_cast<long long>(fb.mel_bins));
  return "";
}

// --------------------------------------------------------------------------
// 3. Griffin-Lim: spectral-convergence error monotone non-increasing over
//    60 iterations (slack 1e-10) on 10 random magnitude grids.
std::string CriterionGriffinLimMonotone() {
  const dsp::StftConfig cfg;
  constexpr double kSlack = 1e-10;
  for (int rep = 0; rep < 10; ++rep) {
    Rng rng(300 + rep);
    dsp::Spectrogram mag;
    mag.num_frames = 30;
    mag.dim = cfg.NumBins();
    mag.data.resize(mag.num_frames * mag.dim);
    for (double &v : mag.data) v = rng.Uniform();
    std::vector<double> errors;
    dsp::GriffinLim(mag, cfg, 60, nullptr, &errors);
    if (errors.size() != 61)
      return Fmt("expected 61 error entries, got %zu", errors.size());
    for (size_t i = 0; i + 1 < errors.size(); ++i)
      if (errors[i + 1] > errors[i] + kSlack)
        return Fmt("grid %d: error rose %.3e -> %.3e at iteration %zu", rep,
                   errors[i], errors[i + 1], i + 1);
  }
  return "";
}

// --------------------------------------------------------------------------
// 4. CTC oracle: loss and logit gradients match brute-force path
//    enumeration for all T' <= 6, K <= 4, |target| <= 3.
double BruteCtcLoss(const nn::Tensor &logits, const std::vector<int> &target,
                    int blank) {
  const nn::Tensor lp = nn::LogSoftmax(logits);
  const int64 T = lp.dim(0), K = lp.dim(1);
  std::vector<std::vector<double>> p(T, std::vector<double>(K));
  for (int64 t = 0; t < T; ++t)
    for (int64 k = 0; k < K; ++k) p[t][k] = std::exp(lp.at(t, k));

  double total = 0.0;
  std::vector<int> path(T, 0);
  while (true) {
    // Collapse: drop adjacent repeats, then blanks.
    std::vector<int> lab;
    int prev = -1;
    for (int64 t = 0; t < T; ++t) {
      if (path[t] != prev && path[t] != blank) lab.push_back(path[t]);
      prev = path[t];
    }
    if (lab == target) {
      double prob = 1.0;
      for (int64 t = 0; t < T; ++t) prob *= p[t][path[t]];
      total += prob;
    }
    int64 pos = T - 1;
    while (pos >= 0 && ++path[pos] == K) {
      path[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return -std::log(total);
}

std::string CriterionCtcOracle() {
  constexpr double kLossTol = 1e-10;
  constexpr double kGradTol = 1e-8;
  constexpr double kFdStep = 1e-6;
  int64 cases = 0;
  for (int64 T = 1; T <= 6; ++T) {
    for (int64 K = 2; K <= 4; ++K) {
      const int blank = static_cast<int>(K) - 1;
      // All target sequences over the non-blank labels, length 0..3.
      std::vector<std::vector<int>> targets = {{}};
      for (int len = 1; len <= 3; ++len) {
        std::vector<std::vector<int>> next;
        for (const std::vector<int> &t : targets) {
          if (static_cast<int>(t.size()) != len - 1) continue;
          for (int c = 0; c < blank; ++c) {
            std::vector<int> e = t;
            e.push_back(c);
            next.push_back(std::move(e));
          }
        }
        targets.insert(targets.end(), next.begin(), next.end());
      }
      for (const std::vector<int> &target : targets) {
        if (nn::CtcMinFrames(target) > T) continue;
        Rng rng(MixSeed(0x47c, static_cast<uint64>(T * 100 + K * 10),
                        static_cast<uint64>(target.size() + cases)));
        nn::Tensor logits = RandomTensor({T, K}, &rng);
        ++cases;

        const nn::Tensor lp = nn::LogSoftmax(logits);
        nn::Tensor dlogits(lp.shape);
        const double loss = nn::CtcLoss(lp, target, blank, &dlogits);
        const double brute = BruteCtcLoss(logits, target, blank);
        if (std::abs(loss - brute) >= kLossTol)
          return Fmt("loss mismatch %.3e at T=%lld K=%lld |target|=%zu",
                     std::abs(loss - brute), static_cast<long long>(T),
                     static_cast<long long>(K), target.size());

        for (int64 i = 0; i < logits.size(); ++i) {
          const double orig = logits.data[i];
          logits.data[i] = orig + kFdStep;
          const double up = BruteCtcLoss(logits, target, blank);
          logits.data[i] = orig - kFdStep;
          const double dn = BruteCtcLoss(logits, target, blank);
          logits.data[i] = orig;
          const double fd = (up - dn) / (2.0 * kFdStep);
          if (std::abs(fd - dlogits.data[i]) >= kGradTol)
            return Fmt(
                "gradient mismatch %.3e at T=%lld K=%lld |target|=%zu slot "
                "%lld",
                std::abs(fd - dlogits.data[i]), static_cast<long long>(T),
                static_cast<long long>(K), target.size(),
                static_cast<long long>(i));
        }
      }
    }
  }
  if (cases < 300) return Fmt("only %lld cases enumerated", cases);
  return "";
}

// --------------------------------------------------------------------------
// 5. Gradient suite: conv3d, maxpool3d, blstm, dense, dropout-off, mse and
//    the hybrid combination match central finite differences, relative
//    error < 1e-5 on >= 5 random small shapes each.
constexpr double kGradRelTol = 1e-5;
constexpr double kFdH = 1e-5;

double RelErr(double a, double b) {
  return std::abs(a - b) / std::max({1e-4, std::abs(a), std::abs(b)});
}

// Central finite difference through `loss` at one parameter slot.
double FdSlot(const std::function<double()> &loss, double *slot) {
  const double orig = *slot;
  *slot = orig + kFdH;
  const double up = loss();
  *slot = orig - kFdH;
  const double dn = loss();
  *slot = orig;
  return (up - dn) / (2.0 * kFdH);
}

// Checks every gradient the layer produced (params and input) against
// finite differences of `loss`; returns the worst relative error.
double CheckGrads(const std::function<double()> &loss,
                  const std::vector<nn::Param *> &params, nn::Tensor *x,
                  const nn::Tensor *dx) {
  double worst = 0;
  for (nn::Param *p : params) {
    for (int64 i = 0; i < p->value.size();
         i += std::max<int64>(1, p->value.size() / 17))
      worst = std::max(
          worst, RelErr(p->grad.data[i], FdSlot(loss, &p->value.data[i])));
  }
  if (x != nullptr && dx != nullptr) {
    for (int64 i = 0; i < x->size(); i += std::max<int64>(1, x->size() / 17))
      worst =
          std::max(worst, RelErr(dx->data[i], FdSlot(loss, &x->data[i])));
  }
  return worst;
}

// Weighted-sum head: a fixed random direction turns a tensor output into a
// scalar loss whose gradient is the direction itself.
struct DirLoss {
  nn::Tensor c;
  double Collapse(const nn::Tensor &y, Rng *rng) {
    if (c.size() == 0) c = RandomTensor(y.shape, rng);
    double s = 0;
    for (int64 i = 0; i < y.size(); ++i) s += c.data[i] * y.data[i];
    return s;
  }
};

std::string CriterionGradientSuite() {
  double worst = 0;
  auto fail = [&](const char *layer, double err) {
    return Fmt("%s gradient rel err %.3e >= 1e-5", layer, err);
  };

  // conv3d: five kernel/stride/shape combinations, with and without relu.
  const struct {
    std::vector<int64> in, kernel;
    std::array<int64, 3> stride;
    bool relu;
  } conv_cases[] = {
      {{3, 5, 6, 2}, {2, 3, 3, 2, 3}, {1, 2, 2}, true},
      {{4, 4, 4, 1}, {3, 3, 3, 1, 2}, {1, 1, 1}, false},
      {{2, 6, 5, 3}, {2, 2, 2, 3, 2}, {2, 2, 1}, true},
      {{5, 3, 3, 2}, {1, 3, 3, 2, 2}, {1, 1, 2}, false},
      {{3, 4, 5, 2}, {3, 2, 4, 2, 3}, {2, 1, 2}, true},
  };
  int salt = 0;
  for (const auto &cc : conv_cases) {
    Rng rng(500 + salt++);
    nn::Conv3dSpec spec;
    spec.stride = cc.stride;
    nn::Conv3dLayer conv("conv", cc.kernel, spec, cc.relu);
    for (nn::Param *p : conv.Params())
      for (double &v : p->value.data) v = 0.5 * rng.Normal();
    nn::Tensor x = RandomTensor(cc.in, &rng);
    DirLoss dir;
    auto loss = [&] { return dir.Collapse(conv.Forward(x), &rng); };
    loss();
    for (nn::Param *p : conv.Params()) p->ZeroGrad();
    const nn::Tensor dx = conv.Backward(dir.c);
    const double err = CheckGrads(loss, conv.Params(), &x, &dx);
    worst = std::max(worst, err);
    if (err >= kGradRelTol) return fail("conv3d", err);
  }

  // maxpool3d: parameter-free, input gradient only.
  const struct {
    std::vector<int64> in;
    std::array<int64, 3> window, stride;
  } pool_cases[] = {
      {{3, 6, 6, 2}, {1, 2, 2}, {1, 2, 2}},
      {{4, 5, 4, 1}, {2, 2, 2}, {2, 2, 2}},
      {{2, 4, 6, 3}, {1, 3, 2}, {1, 2, 2}},
      {{5, 2, 2, 2}, {1, 4, 4}, {1, 2, 2}},  // window clamps to the dim
      {{3, 7, 5, 1}, {2, 3, 3}, {1, 3, 2}},
  };
  for (const auto &pc : pool_cases) {
    Rng rng(600 + salt++);
    nn::Pool3dSpec spec;
    spec.window = pc.window;
    spec.stride = pc.stride;
    nn::MaxPool3dLayer pool(spec);
    nn::Tensor x = RandomTensor(pc.in, &rng);
    DirLoss dir;
    auto loss = [&] { return dir.Collapse(pool.Forward(x), &rng); };
    loss();
    const nn::Tensor dx = pool.Backward(dir.c);
    const double err = CheckGrads(loss, {}, &x, &dx);
    worst = std::max(worst, err);
    if (err >= kGradRelTol) return fail("maxpool3d", err);
  }

  // blstm over five (T, D, H) shapes.
  const int64 blstm_cases[][3] = {
      {1, 2, 3}, {4, 3, 2}, {6, 2, 4}, {3, 5, 3}, {2, 4, 5}};
  for (const auto &bc : blstm_cases) {
    Rng rng(700 + salt++);
    nn::BLstm blstm("b", bc[1], bc[2]);
    for (nn::Param *p : blstm.Params())
      for (double &v : p->value.data) v = 0.4 * rng.Normal();
    nn::Tensor x = RandomTensor({bc[0], bc[1]}, &rng);
    DirLoss dir;
    auto loss = [&] { return dir.Collapse(blstm.Forward(x), &rng); };
    loss();
    for (nn::Param *p : blstm.Params()) p->ZeroGrad();
    const nn::Tensor dx = blstm.Backward(dir.c);
    const double err = CheckGrads(loss, blstm.Params(), &x, &dx);
    worst = std::max(worst, err);
    if (err >= kGradRelTol) return fail("blstm", err);
  }

  // dense across activations and shapes.
  const struct {
    int64 rows, in, out;
    nn::Activation act;
  } dense_cases[] = {
      {3, 4, 5, nn::Activation::kLinear},
      {5, 2, 3, nn::Activation::kRelu},
      {2, 6, 4, nn::Activation::kTanh},
      {4, 3, 6, nn::Activation::kSoftmax},
      {1, 5, 2, nn::Activation::kRelu},
  };
  for (const auto &dc : dense_cases) {
    Rng rng(800 + salt++);
    nn::DenseLayer dense("d", dc.in, dc.out, dc.act);
    for (nn::Param *p : dense.Params())
      for (double &v : p->value.data) v = 0.6 * rng.Normal();
    nn::Tensor x = RandomTensor({dc.rows, dc.in}, &rng);
    DirLoss dir;
    auto loss = [&] { return dir.Collapse(dense.Forward(x), &rng); };
    loss();
    for (nn::Param *p : dense.Params()) p->ZeroGrad();
    const nn::Tensor dx = dense.Backward(dir.c);
    const double err = CheckGrads(loss, dense.Params(), &x, &dx);
    worst = std::max(worst, err);
    if (err >= kGradRelTol) return fail("dense", err);
  }

  // dropout with training off is the identity in both directions.
  for (int rep = 0; rep < 5; ++rep) {
    Rng rng(900 + rep);
    nn::DropoutLayer drop(0.5);
    nn::Tensor x = RandomTensor({2 + rep, 3}, &rng);
    const nn::Tensor y = drop.Forward(x, nullptr);
    DirLoss dir;
    auto loss = [&] { return dir.Collapse(drop.Forward(x, nullptr), &rng); };
    loss();
    const nn::Tensor dx = drop.Backward(dir.c);
    if (y.data != x.data) return fail("dropout-off forward", 1.0);
    const double err = CheckGrads(loss, {}, &x, &dx);
    worst = std::max(worst, err);
    if (err >= kGradRelTol) return fail("dropout-off", err);
  }

  // mse against the prediction argument.
  for (int rep = 0; rep < 5; ++rep) {
    Rng rng(1000 + rep);
    nn::Tensor y = RandomTensor({2 + rep, 3 + rep}, &rng);
    const nn::Tensor target = RandomTensor(y.shape, &rng);
    nn::Tensor dy(y.shape);
    nn::MseLoss(y, target, &dy);
    auto loss = [&] { return nn::MseLoss(y, target, nullptr); };
    const double err = CheckGrads(loss, {}, &y, &dy);
    worst = std::max(worst, err);
    if (err >= kGradRelTol) return fail("mse", err);
  }

  // hybrid: a shared dense trunk feeds an MSE head and a CTC head; the
  // combined loss gradient must agree through both branches.
  for (int rep = 0; rep < 5; ++rep) {
    Rng rng(1100 + rep);
    const int64 T = 4 + rep % 3, D = 3, F = 2, K = 3;
    const double lambda = 0.37;
    nn::DenseLayer trunk("t", D, F + K, nn::Activation::kLinear);
    for (nn::Param *p : trunk.Params())
      for (double &v : p->value.data) v = 0.5 * rng.Normal();
    nn::Tensor x = RandomTensor({T, D}, &rng);
    const nn::Tensor target = RandomTensor({T, F}, &rng);
    const std::vector<int> labels = {0, 1};
    const int blank = static_cast<int>(K) - 1;

    auto split = [&](const nn::Tensor &y, nn::Tensor *mel, nn::Tensor *lg) {
      *mel = nn::Tensor({T, F});
      *lg = nn::Tensor({T, K});
      for (int64 t = 0; t < T; ++t) {
        for (int64 f = 0; f < F; ++f) mel->at(t, f) = y.at(t, f);
        for (int64 k = 0; k < K; ++k) lg->at(t, k) = y.at(t, F + k);
      }
    };
    auto loss = [&] {
      nn::Tensor mel, lg;
      split(trunk.Forward(x), &mel, &lg);
      const double mse = nn::MseLoss(mel, target, nullptr);
      const double ctc =
          nn::CtcLoss(nn::LogSoftmax(lg), labels, blank, nullptr);
      return nn::HybridLoss(mse, ctc, lambda);
    };

    nn::Tensor mel, lg;
    split(trunk.Forward(x), &mel, &lg);
    nn::Tensor dmel(mel.shape), dlg(lg.shape);
    nn::MseLoss(mel, target, &dmel);
    nn::CtcLoss(nn::LogSoftmax(lg), labels, blank, &dlg);
    nn::Tensor dy({T, F + K});
    for (int64 t = 0; t < T; ++t) {
      for (int64 f = 0; f < F; ++f) dy.at(t, f) = dmel.at(t, f);
      for (int64 k = 0; k < K; ++k) dy.at(t, F + k) = lambda * dlg.at(t, k);
    }
    for (nn::Param *p : trunk.Params()) p->ZeroGrad();
    const nn::Tensor dx = trunk.Backward(dy);
    const double err = CheckGrads(loss, trunk.Params(), &x, &dx);
    worst = std::max(worst, err);
    if (err >= kGradRelTol) return fail("hybrid", err);
  }

  std::printf("     gradient suite worst rel err %.3e\n", worst);
  return "";
}

// --------------------------------------------------------------------------
// 6. Mask statistics: 10000 masks at T=149 -> mean total in [850, 950] ms,
//    gap counts in [1, 8], every span >= 2 frames.
std::string CriterionMaskStatistics() {
  constexpr double kFrameMs = 20.0;
  corrupt::GapSpec spec;  // defaults: 900 / 300 / 36 / 8
  double total_ms = 0;
  for (int i = 0; i < 10000; ++i) {
    spec.seed = static_cast<uint64>(i);
    const corrupt::GapMask m = corrupt::SampleGapMask(spec, 149, kFrameMs);
    total_ms += static_cast<double>(m.MaskedFrames()) * kFrameMs;
    const int64 gaps = static_cast<int64>(m.gap_spans.size());
    if (gaps < 1 || gaps > 8)
      return Fmt("mask %d has %lld gaps", i, static_cast<long long>(gaps));
    for (const auto &[start, end] : m.gap_spans)
      if (end - start < 2)
        return Fmt("mask %d has a %lld-frame span", i,
                   static_cast<long long>(end - start));
  }
  const double mean = total_ms / 10000.0;
  if (mean < 850.0 || mean > 950.0)
    return Fmt("mean total %.1f ms outside [850, 950]", mean);
  std::printf("     mask mean total %.1f ms\n", mean);
  return "";
}

// --------------------------------------------------------------------------
// 7. Compositing identity: informed in-painting leaves unmasked frames
//    bit-equal to the input on 100 random cases.
std::string CriterionCompositingIdentity() {
  model::EncoderConfig ec;
  ec.video_frames = 4;
  ec.height = 6;
  ec.width = 8;
  ec.channels = 1;
  ec.conv_channels = {2, 3, 2};
  ec.dropout_rate = 0.0;
  ec.blstm_hidden = 3;
  ec.dense_dim = 4;
  ec.classes = 4;
  model::DecoderConfig dc;
  dc.mel_bins = 5;
  dc.context_dim = ec.ContextDim();
  dc.blstm_hidden = 3;
  model::AvModel m(ec, dc, 11);

  for (int rep = 0; rep < 100; ++rep) {
    Rng rng(1200 + rep);
    dsp::MelSpectrogram audio;
    audio.num_frames = 8;
    audio.mel_bins = 5;
    audio.values.resize(40);
    for (double &v : audio.values) v = rng.Uniform();
    corrupt::VideoClip clip;
    clip.num_frames = 4;
    clip.height = 6;
    clip.width = 8;
    clip.channels = 1;
    clip.data.resize(4 * 6 * 8);
    for (double &v : clip.data) v = rng.Uniform();
    corrupt::GapSpec gs;
    gs.mean_total_ms = 60;
    gs.std_total_ms = 30;
    gs.max_gaps = 2;
    gs.seed = static_cast<uint64>(rep);
    const corrupt::GapMask mask = corrupt::SampleGapMask(gs, 8, 20.0);

    const dsp::MelSpectrogram out = model::Inpaint(&m, audio, clip, &mask);
    for (int64 t = 0; t < 8; ++t)
      for (int64 f = 0; f < 5; ++f) {
        if (mask.frames[t] == 1) {
          if (out.at(t, f) != audio.at(t, f))
            return Fmt("case %d: intact frame %lld not bit-equal", rep,
                       static_cast<long long>(t));
        } else if (out.at(t, f) < 0.0 || out.at(t, f) > 1.0) {
          return Fmt("case %d: masked output escapes [0,1]", rep);
        }
      }
  }
  return "";
}

// --------------------------------------------------------------------------
// Shared toy-corpus preprocessing for criteria 8 and 9: generate, compute
// corpus-anchored log-Mel features, corrupt with per-utterance masks and
// attach encoded transcripts. Exactly the pipeline's math, in memory.
struct ToyData {
  std::vector<model::TrainSample> samples;  // sorted by id
};

ToyData BuildToyData(int64 n_utterances, uint64 corpus_seed, uint64 mask_seed,
                     const std::string &tag) {
  const fs::path dir =
      fs::temp_directory_path() / ("sik-acceptance-" + tag);
  fs::remove_all(dir);
  harness::ToyCorpusSpec spec;
  spec.n_utterances = n_utterances;
  spec.seed = corpus_seed;
  const auto sentences = harness::GenerateToyCorpus(spec, dir.string());

  const dsp::StftConfig stft;
  const dsp::MelFilterbank fb =
      dsp::BuildMelFilterbank(stft.NumBins(), 64, spec.sample_rate, 0.0,
                              spec.sample_rate / 2.0);
  const model::Alphabet alphabet =
      model::Alphabet::FromFile(SourceDir() + "/data/alphabet.txt");

  // Pass 1: magnitudes and the corpus-level Mel peak anchor.
  std::vector<dsp::Spectrogram> mags;
  double peak = -1e300;
  for (const auto &[id, sentence] : sentences) {
    const std::string stem = id.substr(id.find('-') + 1);
    const dsp::Waveform w =
        dsp::ReadWav((dir / "s1" / "audio" / (stem + ".wav")).string());
    const dsp::Waveform pre = dsp::PreEmphasis(w, 0.97);
    mags.push_back(dsp::Magnitude(dsp::Stft(pre.samples, stft)));
    peak = std::max(peak, dsp::MelPeakDb(mags.back(), fb));
  }

  ToyData data;
  corrupt::GapSpec gap;
  gap.mean_total_ms = 160;
  gap.std_total_ms = 40;
  gap.max_gaps = 3;
  const double frame_ms = 1000.0 * stft.hop_size / spec.sample_rate;
  for (size_t i = 0; i < sentences.size(); ++i) {
    const auto &[id, sentence] = sentences[i];
    const std::string stem = id.substr(id.find('-') + 1);
    model::TrainSample s;
    s.id = id;
    s.clean = dsp::ToMelLogNorm(mags[i], fb, peak - 80.0, peak);
    gap.seed = MixSeed(mask_seed, 0xacc, static_cast<uint64>(i));
    s.mask = corrupt::SampleGapMask(gap, s.clean.num_frames, frame_ms);
    s.audio = corrupt::ApplyMask(s.clean, s.mask);
    s.video = harness::ReadVideoAny(
        (dir / "s1" / "frames" / (stem + ".vidt")).string());
    s.labels = alphabet.Encode(sentence);
    data.samples.push_back(std::move(s));
  }
  fs::remove_all(dir);
  return data;
}

model::EncoderConfig ToyEncoderConfig() {
  model::EncoderConfig ec;
  ec.video_frames = 20;
  ec.height = 16;
  ec.width = 24;
  ec.channels = 1;
  ec.conv_channels = {8, 12, 16};
  ec.dropout_rate = 0.0;
  ec.blstm_hidden = 24;
  ec.dense_dim = 32;
  ec.classes = 41;
  return ec;
}

model::DecoderConfig ToyDecoderConfig() {
  model::DecoderConfig dc;
  dc.mel_bins = 64;
  dc.context_dim = 48;
  dc.blstm_hidden = 24;
  return dc;
}

// --------------------------------------------------------------------------
// 8. Overfit check: on the 8-utterance toy corpus, training cuts the hybrid
//    loss >= 90% from its epoch-1 value within 300 epochs and informed
//    masked MSE on the training set ends below 0.01.
std::string CriterionOverfit() {
  ToyData data = BuildToyData(8, 21, 22, "overfit");
  model::TrainConfig tc;
  tc.lr = 2e-3;
  tc.batch_size = 2;
  tc.lambda = 0.001;
  tc.patience = 300;
  tc.stop_patience = 300;
  tc.improvement_threshold = 1e-9;
  tc.max_epochs = 300;
  tc.seed = 5;

  model::AvModel m(ToyEncoderConfig(), ToyDecoderConfig(), 6);
  const model::TrainResult r =
      model::TrainAv(&m, data.samples, data.samples, tc);

  const double first = r.history.front().train_loss;
  double last_best = first;
  for (const model::EpochStats &e : r.history)
    last_best = std::min(last_best, e.train_loss);
  if (last_best > 0.1 * first)
    return Fmt("hybrid loss fell %.1f%% (%.4f -> %.4f), need >= 90%%",
               100.0 * (1.0 - last_best / first), first, last_best);

  double mse_sum = 0;
  for (const model::TrainSample &s : data.samples) {
    const dsp::MelSpectrogram recon =
        model::Inpaint(&m, s.audio, s.video, &s.mask);
    mse_sum += eval::MaskedMse(s.clean, recon, s.mask);
  }
  const double mse = mse_sum / static_cast<double>(data.samples.size());
  if (mse >= 0.01)
    return Fmt("informed masked MSE %.5f >= 0.01 on the training set", mse);
  std::printf("     loss %.4f -> %.4f (%.1f%%), masked mse %.5f\n", first,
              last_best, 100.0 * (1.0 - last_best / first), mse);
  return "";
}

// --------------------------------------------------------------------------
// 9. Multimodal trend: with held-out toy utterances, the AV model's masked
//    MSE beats or ties the audio-only baseline on >= 70% of them, median
//    over 3 seeds.
std::string CriterionMultimodalTrend() {
  ToyData data = BuildToyData(64, 31, 32, "trend");
  const int64 n_test = 12;
  const std::vector<model::TrainSample> train(
      data.samples.begin(), data.samples.end() - n_test);
  const std::vector<model::TrainSample> test(data.samples.end() - n_test,
                                             data.samples.end());

  std::vector<double> fractions;
  for (uint64 seed = 1; seed <= 3; ++seed) {
    model::TrainConfig avc;
    avc.lr = 2e-3;
    avc.batch_size = 4;
    avc.lambda = 0.001;
    avc.patience = 150;
    avc.stop_patience = 150;
    avc.improvement_threshold = 1e-9;
    avc.max_epochs = 150;
    avc.seed = seed;
    model::TrainConfig asic = avc;
    asic.lr = 4e-3;  // the audio-only baseline trains at a higher rate

    model::AvModel av(ToyEncoderConfig(), ToyDecoderConfig(),
                      MixSeed(seed, 0xa));
    model::AsiModel asi(ToyDecoderConfig(), MixSeed(seed, 0xb));
    model::TrainAv(&av, train, train, avc);
    model::TrainAsi(&asi, train, train, asic);

    int64 av_wins = 0;
    for (const model::TrainSample &s : test) {
      const double av_mse = eval::MaskedMse(
          s.clean, model::Inpaint(&av, s.audio, s.video, &s.mask), s.mask);
      const double asi_mse = eval::MaskedMse(
          s.clean, model::InpaintAsi(&asi, s.audio, &s.mask), s.mask);
      if (av_mse <= asi_mse) ++av_wins;
    }
    const double frac =
        static_cast<double>(av_wins) / static_cast<double>(n_test);
    std::printf("     seed %llu: av <= asi on %lld/%lld held-out\n",
                static_cast<unsigned long long>(seed),
                static_cast<long long>(av_wins),
                static_cast<long long>(n_test));
    std::fflush(stdout);
    fractions.push_back(frac);
  }
  std::sort(fractions.begin(), fractions.end());
  const double median = fractions[1];
  if (median < 0.70)
    return Fmt("median av-wins fraction %.2f < 0.70", median);
  return "";
}

// --------------------------------------------------------------------------
// 10. Metric oracles: STOI within 0.02 of the frozen reference fixtures;
//     edit distance matches brute-force recursion; the corrective
//     enhancement misspelling triple maps as published.
template <typename Seq>
int64 BruteEdit(const Seq &a, const Seq &b, size_t i = 0, size_t j = 0) {
  if (i == a.size()) return static_cast<int64>(b.size() - j);
  if (j == b.size()) return static_cast<int64>(a.size() - i);
  int64 best = BruteEdit(a, b, i + 1, j + 1) + (a[i] == b[j] ? 0 : 1);
  best = std::min(best, BruteEdit(a, b, i + 1, j) + 1);
  best = std::min(best, BruteEdit(a, b, i, j + 1) + 1);
  return best;
}

std::string CriterionMetricOracles() {
  // STOI against the frozen NumPy oracle under tests/fixtures/stoi/.
  const std::string dir = SourceDir() + "/tests/fixtures/stoi/";
  const std::vector<std::string> lines =
      SplitLines(ReadTextFile(dir + "expected.csv"));
  if (lines.empty() || lines[0] != "name,sample_rate,stoi")
    return "unexpected fixture csv header";
  int64 pairs = 0;
  double worst = 0;
  for (size_t i = 1; i < lines.size(); ++i) {
    const std::string line = Trim(lines[i]);
    if (line.empty()) continue;
    const size_t c1 = line.find(','), c2 = line.rfind(',');
    const std::string name = line.substr(0, c1);
    const double expected = std::stod(line.substr(c2 + 1));
    const double got = eval::Stoi(dsp::ReadWav(dir + name + ".ref.wav"),
                                  dsp::ReadWav(dir + name + ".deg.wav"));
    worst = std::max(worst, std::abs(got - expected));
    if (std::abs(got - expected) > 0.02)
      return Fmt("stoi fixture %s: |%.4f - %.4f| > 0.02", name.c_str(), got,
                 expected);
    ++pairs;
  }
  if (pairs < 20) return Fmt("only %lld stoi fixtures", pairs);

  // Edit distance: the classic example plus 1000 random pairs (len <= 8).
  if (eval::EditDistance("kitten", "sitting") != 3)
    return "kitten -> sitting != 3";
  Rng rng(42);
  for (int rep = 0; rep < 1000; ++rep) {
    std::string a, b;
    const int64 la = rng.UniformInt(0, 8), lb = rng.UniformInt(0, 8);
    for (int64 i = 0; i < la; ++i)
      a += static_cast<char>('a' + rng.UniformInt(0, 2));
    for (int64 i = 0; i < lb; ++i)
      b += static_cast<char>('a' + rng.UniformInt(0, 2));
    if (eval::EditDistance(a, b) != BruteEdit(a, b))
      return Fmt("edit distance mismatch on '%s' vs '%s'", a.c_str(),
                 b.c_str());
  }

  // Corrective enhancement on the published misspelling triple.
  const eval::Dictionary dict =
      eval::Dictionary::FromFile(SourceDir() + "/data/grid_dictionary.txt");
  if (eval::CorrectiveEnhancement("gren", dict) != "green")
    return "gren did not map to green";
  if (eval::CorrectiveEnhancement("thre", dict) != "three")
    return "thre did not map to three";
  if (eval::CorrectiveEnhancement("son", dict) != "soon")
    return "son did not map to soon";
  std::printf("     %lld stoi fixtures, worst deviation %.4f\n",
              static_cast<long long>(pairs), worst);
  return "";
}

// --------------------------------------------------------------------------
// 11. Determinism: two `all` pipeline runs with identical config and seed
//     produce byte-identical report CSVs.
std::string CriterionDeterminism() {
  const fs::path dir = fs::temp_directory_path() / "sik-acceptance-det";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string cfg_path = (dir / "det.cfg").string();
  WriteTextFile(
      cfg_path,
      StrCat("run.name = det\n",
             "run.dir = ", dir.string(), "/runs\n",
             "run.seed = 9\n",
             "dataset.root = ", dir.string(), "/data\n",
             "dataset.train_speakers = s1\n",
             "dataset.unseen_test_speakers = s2\n",
             "alphabet.path = ", SourceDir(), "/data/alphabet.txt\n",
             "dictionary.path = ", SourceDir(), "/data/grid_dictionary.txt\n",
             "mel.bins = 16\n",
             "corrupt.total_mean_ms = 160\n",
             "corrupt.total_std_ms = 40\n",
             "corrupt.max_gaps = 2\n",
             "model.kind = av\n",
             "model.video_frames = 20\n",
             "model.video_height = 16\n",
             "model.video_width = 24\n",
             "model.video_channels = 1\n",
             "model.conv_channels = 4,6,8\n",
             "model.blstm_hidden = 8\n",
             "model.dense_dim = 16\n",
             "model.dropout = 0.5\n",
             "train.max_epochs = 3\n",
             "train.batch_size = 2\n",
             "train.val_fraction = 0.25\n",
             "gl.iters = 4\n",
             "toy.n_utterances = 6\n",
             "toy.speakers = s1,s2\n",
             "toy.seed = 13\n"));

  harness::PipelineOptions opts;
  opts.config_path = cfg_path;
  for (const char *run : {"det-a", "det-b"}) {
    harness::PipelineOptions o = opts;
    o.run_override = run;
    harness::RunPipeline("all", o);
  }
  const std::string a =
      ReadTextFile((dir / "runs" / "det-a" / "reports" / "report.csv")
                       .string());
  const std::string b =
      ReadTextFile((dir / "runs" / "det-b" / "reports" / "report.csv")
                       .string());
  fs::remove_all(dir);
  if (a != b) return "report CSVs differ between identical runs";
  if (a.empty()) return "empty report";
  return "";
}

}  // namespace
}  // namespace sik

int main() {
  using sik::Gate;
  Gate gate;
  std::printf("SIK acceptance gate\n");
  gate.Run(1, "dsp-round-trip", 10, sik::CriterionDspRoundTrip);
  gate.Run(2, "frame-algebra", 10, sik::CriterionFrameAlgebra);
  gate.Run(3, "griffin-lim-monotone", 30, sik::CriterionGriffinLimMonotone);
  gate.Run(4, "ctc-oracle", 60, sik::CriterionCtcOracle);
  gate.Run(5, "gradient-suite", 300, sik::CriterionGradientSuite);
  gate.Run(6, "mask-statistics", 10, sik::CriterionMaskStatistics);
  gate.Run(7, "compositing-identity", 60, sik::CriterionCompositingIdentity);
  gate.Run(8, "overfit-check", 900, sik::CriterionOverfit);
  gate.Run(9, "multimodal-trend", 3600, sik::CriterionMultimodalTrend);
  gate.Run(10, "metric-oracles", 120, sik::CriterionMetricOracles);
  gate.Run(11, "determinism", 600, sik::CriterionDeterminism);
  if (gate.failures == 0) {
    std::printf("acceptance: 11/11 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", gate.failures);
  return 1;
}
