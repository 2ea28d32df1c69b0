// src/model/train.cc

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

#include "sik/model/train.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>

#include "sik/nn/losses.h"
#include "sik/nn/optimizer.h"

namespace sik::model {

namespace {

// Seed salts keeping the shuffle, dropout and augmentation streams apart.
constexpr uint64 kShuffleSalt = 0x51;
constexpr uint64 kDropoutSalt = 0xd0;
constexpr uint64 kAugmentSalt = 0xa6;

uint64 EpochSampleKey(int64 epoch, int64 idx) {
  return (static_cast<uint64>(epoch) << 32) | static_cast<uint64>(idx);
}

std::string FormatShort(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::vector<nn::Tensor> Snapshot(const std::vector<nn::Param *> &params) {
  std::vector<nn::Tensor> out;
  out.reserve(params.size());
  for (const nn::Param *p : params) out.push_back(p->value);
  return out;
}

void Restore(const std::vector<nn::Param *> &params,
             const std::vector<nn::Tensor> &snap) {
  for (size_t i = 0; i < params.size(); ++i) params[i]->value = snap[i];
}

// Full forward/backward for one AV sample. Returns the hybrid loss and, in
// backward mode, accumulates parameter gradients.
double AvStep(AvModel *model, const dsp::MelSpectrogram &audio,
              const corrupt::VideoClip &video, const TrainSample &sample,
              double lambda, Rng *dropout_rng, bool backward, double *mse_out,
              double *ctc_out) {
  Encoder::Output enc =
      model->encoder.Forward(VideoToTensor(video), dropout_rng);
  const nn::Tensor y = model->decoder.Forward(MelToTensor(audio), enc.context);

  nn::Tensor dy;
  const double mse =
      nn::MseLoss(y, MelToTensor(sample.clean), backward ? &dy : nullptr);
  double ctc = 0;
  nn::Tensor dlogits;
  if (lambda > 0) {
    const int blank = static_cast<int>(model->encoder.config().classes) - 1;
    ctc = nn::CtcLoss(enc.log_probs, sample.labels, blank,
                      backward ? &dlogits : nullptr);
  }
  if (backward) {
    const nn::Tensor dcontext = model->decoder.Backward(dy);
    if (lambda > 0) {
      for (double &g : dlogits.data) g *= lambda;
    } else {
      dlogits = nn::Tensor(enc.log_probs.shape);  // zeros: head untrained
    }
    model->encoder.Backward(dcontext, dlogits);
  }
  *mse_out = mse;
  *ctc_out = ctc;
  return nn::HybridLoss(mse, ctc, lambda);
}

struct AvTask {
  AvModel *model;
  const TrainConfig &cfg;
  const corrupt::AugmentPolicy *augment;

  std::vector<nn::Param *> Params() { return model->Params(); }

  double TrainStep(const TrainSample &s, int64 idx, int64 epoch,
                   double *mse_out, double *ctc_out) {
    const dsp::MelSpectrogram *audio = &s.audio;
    const corrupt::VideoClip *video = &s.video;
    corrupt::AvSample augmented;
    if (augment != nullptr) {
      corrupt::AvSample in{s.audio, s.video, s.mask, ""};
      augmented = corrupt::AugmentSample(
          in, *augment, MixSeed(cfg.seed, kAugmentSalt,
                                EpochSampleKey(epoch, idx)));
      audio = &augmented.audio;
      video = &augmented.video;
    }
    Rng dropout_rng(
        MixSeed(cfg.seed, kDropoutSalt, EpochSampleKey(epoch, idx)));
    return AvStep(model, *audio, *video, s, cfg.lambda, &dropout_rng, true,
                  mse_out, ctc_out);
  }

  double EvalLoss(const TrainSample &s) {
    double mse = 0, ctc = 0;
    return AvStep(model, s.audio, s.video, s, cfg.lambda, nullptr, false,
                  &mse, &ctc);
  }
};

struct AsiTask {
  AsiModel *model;
  const TrainConfig &cfg;

  std::vector<nn::Param *> Params() { return model->Params(); }

  double TrainStep(const TrainSample &s, int64 /*idx*/, int64 /*epoch*/,
                   double *mse_out, double *ctc_out) {
    const nn::Tensor y = model->Forward(MelToTensor(s.audio));
    nn::Tensor dy;
    const double mse = nn::MseLoss(y, MelToTensor(s.clean), &dy);
    model->Backward(dy);
    *mse_out = mse;
    *ctc_out = 0;
    return mse;
  }

  double EvalLoss(const TrainSample &s) {
    const nn::Tensor y = model->Forward(MelToTensor(s.audio));
    return nn::MseLoss(y, MelToTensor(s.clean), nullptr);
  }
};

template <typename Task>
TrainResult RunSchedule(Task *task, const std::vector<TrainSample> &train,
                        const std::vector<TrainSample> &val,
                        const TrainConfig &cfg) {
  cfg.Validate();
  SIK_REQUIRE(!train.empty(), "training set is empty");
  SIK_REQUIRE(!val.empty(), "validation set is empty");

  const std::vector<nn::Param *> params = task->Params();
  nn::Adam opt(params, cfg.lr);
  double lr = cfg.lr;
  double best_val = std::numeric_limits<double>::infinity();
  int64 best_epoch = 0;
  int64 stagnant = 0;
  std::vector<nn::Tensor> best_snapshot = Snapshot(params);

  const int64 n = static_cast<int64>(train.size());
  std::vector<int64> order(n);
  std::iota(order.begin(), order.end(), 0);

  TrainResult result;
  for (int64 epoch = 1; epoch <= cfg.max_epochs; ++epoch) {
    Rng shuffle_rng(MixSeed(cfg.seed, kShuffleSalt, epoch));
    shuffle_rng.Shuffle(&order);

    double sum_loss = 0, sum_mse = 0, sum_ctc = 0;
    int64 done = 0;
    while (done < n) {
      const int64 batch_n = std::min<int64>(cfg.batch_size, n - done);
      opt.ZeroGrad();
      for (int64 i = done; i < done + batch_n; ++i) {
        const int64 idx = order[i];
        double mse = 0, ctc = 0;
        const double loss = task->TrainStep(train[idx], idx, epoch, &mse, &ctc);
        SIK_REQUIRE(std::isfinite(loss), "training diverged at epoch ", epoch,
                    " on sample ", train[idx].id, " (loss=", loss, ")");
        sum_loss += loss;
        sum_mse += mse;
        sum_ctc += ctc;
      }
      opt.set_lr(lr);
      opt.Step(1.0 / static_cast<double>(batch_n));
      done += batch_n;
    }

    double val_loss = 0;
    for (const TrainSample &s : val) val_loss += task->EvalLoss(s);
    val_loss /= static_cast<double>(val.size());
    SIK_REQUIRE(std::isfinite(val_loss), "training diverged at epoch ", epoch,
                " (validation loss=", val_loss, ")");

    EpochStats stats;
    stats.epoch = epoch;
    stats.train_loss = sum_loss / static_cast<double>(n);
    stats.val_loss = val_loss;
    stats.lr = lr;
    stats.ctc_term = sum_ctc / static_cast<double>(n);
    stats.mse_term = sum_mse / static_cast<double>(n);
    result.history.push_back(stats);

    if (val_loss < best_val - cfg.improvement_threshold) {
      best_val = val_loss;
      best_epoch = epoch;
      stagnant = 0;
      best_snapshot = Snapshot(params);
    } else {
      ++stagnant;
      if (stagnant >= cfg.stop_patience) {
        result.stopped_early = true;
        break;
      }
      if (stagnant % cfg.patience == 0) lr *= cfg.decay_factor;
    }
  }

  Restore(params, best_snapshot);
  result.best_epoch = best_epoch;
  result.best_val_loss = best_val;
  return result;
}

}  // namespace

std::string HistoryCsv(const std::vector<EpochStats> &history) {
  std::string out = "epoch,train_loss,val_loss,lr,ctc_term,mse_term\n";
  for (const EpochStats &s : history) {
    out += StrCat(s.epoch, ",", FormatShort(s.train_loss), ",",
                  FormatShort(s.val_loss), ",", FormatShort(s.lr), ",",
                  FormatShort(s.ctc_term), ",", FormatShort(s.mse_term), "\n");
  }
  return out;
}

TrainResult TrainAv(AvModel *model, const std::vector<TrainSample> &train,
                    const std::vector<TrainSample> &val, const TrainConfig &cfg,
                    const corrupt::AugmentPolicy *augment) {
  AvTask task{model, cfg, augment};
  return RunSchedule(&task, train, val, cfg);
}

TrainResult TrainAsi(AsiModel *model, const std::vector<TrainSample> &train,
                     const std::vector<TrainSample> &val,
                     const TrainConfig &cfg) {
  AsiTask task{model, cfg};
  return RunSchedule(&task, train, val, cfg);
}

}  // namespace sik::model
