// include/sik/model/train.h

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

#ifndef SIK_MODEL_TRAIN_H_
#define SIK_MODEL_TRAIN_H_

#include <string>
#include <vector>

#include "sik/corrupt/noise.h"
#include "sik/model/models.h"

namespace sik::model {

// One training/validation utterance. `audio` is the corrupted model input,
// `clean` the reconstruction target; the loss covers every frame, the mask
// is carried for evaluation and informed compositing downstream.
struct TrainSample {
  std::string id;
  dsp::MelSpectrogram audio;
  dsp::MelSpectrogram clean;
  corrupt::VideoClip video;  // ignored by the audio-only baseline
  corrupt::GapMask mask;
  std::vector<int> labels;  // encoded transcript for the CTC branch
};

struct EpochStats {
  int64 epoch = 0;  // 1-based
  double train_loss = 0;
  double val_loss = 0;
  double lr = 0;
  double ctc_term = 0;  // epoch-mean raw CTC loss (before lambda)
  double mse_term = 0;  // epoch-mean MSE loss
};

struct TrainResult {
  std::vector<EpochStats> history;
  int64 best_epoch = 0;
  double best_val_loss = 0;
  bool stopped_early = false;
};

// CSV with header "epoch,train_loss,val_loss,lr,ctc_term,mse_term".
std::string HistoryCsv(const std::vector<EpochStats> &history);

// Runs the schedule from cfg: seeded shuffle per epoch, minibatch gradient
// accumulation with one Adam step per batch, validation after each epoch,
// lr decay after each `patience` consecutive stagnant epochs and early stop
// after `stop_patience`. The model is left holding the best-validation
// parameters. `augment`, when non-null, re-randomizes each training sample
// per epoch (the AUG variant); targets are never touched. A non-finite
// loss aborts with a diagnostic.
TrainResult TrainAv(AvModel *model, const std::vector<TrainSample> &train,
                    const std::vector<TrainSample> &val, const TrainConfig &cfg,
                    const corrupt::AugmentPolicy *augment = nullptr);

// Audio-only baseline: same schedule, pure MSE loss (lambda and labels are
// ignored, video is never read).
TrainResult TrainAsi(AsiModel *model, const std::vector<TrainSample> &train,
                     const std::vector<TrainSample> &val,
                     const TrainConfig &cfg);

}  // namespace sik::model

#endif  // SIK_MODEL_TRAIN_H_
