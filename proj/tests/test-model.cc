// tests/test-model.cc

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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "doctest.h"
#include "sik/base/rng.h"
#include "sik/corrupt/mask.h"
#include "sik/model/alphabet.h"
#include "sik/model/config.h"
#include "sik/model/inpaint.h"
#include "sik/model/models.h"
#include "sik/model/train.h"
#include "sik/nn/losses.h"

using namespace sik;
using namespace sik::model;

namespace {

// Tiny encoder configuration all model tests share.
EncoderConfig TinyEncoder() {
  EncoderConfig cfg;
  cfg.video_frames = 4;
  cfg.height = 6;
  cfg.width = 8;
  cfg.channels = 1;
  cfg.conv_channels = {2, 3, 2};
  cfg.dropout_rate = 0.0;
  cfg.blstm_hidden = 3;
  cfg.dense_dim = 5;
  cfg.classes = 4;
  return cfg;
}

DecoderConfig TinyDecoder(const EncoderConfig &enc, int64 mel_bins = 5) {
  DecoderConfig cfg;
  cfg.mel_bins = mel_bins;
  cfg.context_dim = enc.ContextDim();
  cfg.blstm_hidden = 3;
  return cfg;
}

dsp::MelSpectrogram RandomMel(int64 frames, int64 bins, uint64 seed) {
  Rng rng(seed);
  dsp::MelSpectrogram m;
  m.num_frames = frames;
  m.mel_bins = bins;
  m.floor_db = -70.0;
  m.ceil_db = 5.0;
  m.values.resize(frames * bins);
  for (double &v : m.values) v = rng.Uniform();
  return m;
}

corrupt::VideoClip RandomClip(int64 frames, int64 h, int64 w, uint64 seed) {
  Rng rng(seed);
  corrupt::VideoClip v;
  v.num_frames = frames;
  v.height = h;
  v.width = w;
  v.channels = 1;
  v.data.resize(frames * h * w);
  for (double &x : v.data) x = rng.Uniform();
  return v;
}

double FdSlot(const std::function<double()> &loss, double *slot,
              double h = 1e-5) {
  const double orig = *slot;
  *slot = orig + h;
  const double lp = loss();
  *slot = orig - h;
  const double lm = loss();
  *slot = orig;
  return (lp - lm) / (2.0 * h);
}

double RelErr(double a, double b) {
  return std::abs(a - b) / std::max({1e-4, std::abs(a), std::abs(b)});
}

}  // namespace

TEST_CASE("Encoder shape algebra reproduces the paper architecture") {
  const EncoderConfig cfg;  // paper defaults
  const EncoderShapes s = ComputeEncoderShapes(cfg);
  REQUIRE(s.conv_out.size() == 3);
  REQUIRE(s.pool_out.size() == 3);
  // conv1 strides (1,2,2): 75 x 25 x 50 x 128, pooled to 75 x 12 x 25.
  CHECK(s.conv_out[0].t == 75);
  CHECK(s.conv_out[0].h == 25);
  CHECK(s.conv_out[0].w == 50);
  CHECK(s.conv_out[0].c == 128);
  CHECK(s.pool_out[0].h == 12);
  CHECK(s.pool_out[0].w == 25);
  // conv2 keeps 75 x 12 x 25 x 256, pooled to 75 x 6 x 12.
  CHECK(s.conv_out[1].c == 256);
  CHECK(s.pool_out[1].h == 6);
  CHECK(s.pool_out[1].w == 12);
  // conv3 keeps 75 x 6 x 12 x 75, pooled to 75 x 3 x 6.
  CHECK(s.conv_out[2].c == 75);
  CHECK(s.pool_out[2].h == 3);
  CHECK(s.pool_out[2].w == 6);
  CHECK(s.flatten_dim == 3 * 6 * 75);
  CHECK(cfg.ContextDim() == 512);
}

TEST_CASE("Mel and video tensors convert losslessly") {
  const dsp::MelSpectrogram m = RandomMel(7, 5, 1);
  const nn::Tensor t = MelToTensor(m);
  REQUIRE(t.shape == std::vector<int64>{7, 5});
  const dsp::MelSpectrogram back = TensorToMel(t, m.floor_db, m.ceil_db);
  CHECK(back.values == m.values);
  CHECK(back.floor_db == m.floor_db);
  CHECK(back.ceil_db == m.ceil_db);

  const corrupt::VideoClip v = RandomClip(3, 4, 5, 2);
  const nn::Tensor vt = VideoToTensor(v);
  CHECK(vt.shape == std::vector<int64>{3, 4, 5, 1});
  CHECK(vt.data == v.data);
}

TEST_CASE("RepeatContext upsamples by the floor rule") {
  nn::Tensor ctx({2, 3});
  ctx.data = {1, 2, 3, 10, 20, 30};
  const nn::Tensor rep = RepeatContext(ctx, 4);
  REQUIRE(rep.shape == std::vector<int64>{4, 3});
  // Row t copies context row floor(t * 2 / 4) = (0, 0, 1, 1).
  CHECK(rep.at(0, 0) == 1);
  CHECK(rep.at(1, 0) == 1);
  CHECK(rep.at(2, 0) == 10);
  CHECK(rep.at(3, 0) == 10);
  CHECK_THROWS_AS(RepeatContext(ctx, 1), Error);  // T < T' is refused

  nn::Tensor drep({4, 3});
  drep.Fill(1.0);
  drep.at(2, 1) = 5.0;
  const nn::Tensor dctx = RepeatContextBackward(drep, 2);
  REQUIRE(dctx.shape == std::vector<int64>{2, 3});
  CHECK(dctx.at(0, 0) == 2.0);  // rows 0 and 1 fold back
  CHECK(dctx.at(1, 1) == 6.0);  // rows 2 and 3, one carrying 5
}

TEST_CASE("Encoder forward emits log-distributions and context") {
  const EncoderConfig cfg = TinyEncoder();
  Encoder enc(cfg, 42);
  const corrupt::VideoClip v = RandomClip(4, 6, 8, 3);
  const Encoder::Output out = enc.Forward(VideoToTensor(v), nullptr);
  REQUIRE(out.log_probs.shape == std::vector<int64>{4, 4});
  REQUIRE(out.context.shape == std::vector<int64>{4, 6});
  for (int64 t = 0; t < 4; ++t) {
    double sum = 0;
    for (int64 k = 0; k < 4; ++k) sum += std::exp(out.log_probs.at(t, k));
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("Model init is seed-deterministic") {
  const EncoderConfig ec = TinyEncoder();
  const DecoderConfig dc = TinyDecoder(ec);
  AvModel a(ec, dc, 7), b(ec, dc, 7), c(ec, dc, 8);
  const auto pa = a.Params(), pb = b.Params(), pc = c.Params();
  REQUIRE(pa.size() == pb.size());
  bool same = true, diff = false;
  for (size_t i = 0; i < pa.size(); ++i) {
    same = same && pa[i]->value.data == pb[i]->value.data;
    diff = diff || pa[i]->value.data != pc[i]->value.data;
    CHECK(pa[i]->name == pb[i]->name);
  }
  CHECK(same);
  CHECK(diff);
}

TEST_CASE("AvModel rejects a context dimension mismatch") {
  const EncoderConfig ec = TinyEncoder();
  DecoderConfig dc = TinyDecoder(ec);
  dc.context_dim = ec.ContextDim() + 1;
  CHECK_THROWS_AS(AvModel(ec, dc, 1), Error);
}

TEST_CASE("Hybrid loss gradients flow through the full AV model") {
  const EncoderConfig ec = TinyEncoder();
  const DecoderConfig dc = TinyDecoder(ec);
  AvModel m(ec, dc, 5);
  const corrupt::VideoClip clip = RandomClip(4, 6, 8, 11);
  const nn::Tensor video = VideoToTensor(clip);
  const nn::Tensor mel = MelToTensor(RandomMel(8, 5, 12));
  const nn::Tensor clean = MelToTensor(RandomMel(8, 5, 13));
  const std::vector<int> target = {0, 2};
  const double lambda = 0.01;
  const int blank = 3;

  auto loss = [&] {
    const Encoder::Output out = m.encoder.Forward(video, nullptr);
    const nn::Tensor y = m.decoder.Forward(mel, out.context);
    const double mse = nn::MseLoss(y, clean, nullptr);
    const double ctc = nn::CtcLoss(out.log_probs, target, blank, nullptr);
    return nn::HybridLoss(mse, ctc, lambda);
  };

  // Analytic pass.
  const Encoder::Output out = m.encoder.Forward(video, nullptr);
  const nn::Tensor y = m.decoder.Forward(mel, out.context);
  nn::Tensor dy(y.shape);
  nn::MseLoss(y, clean, &dy);
  nn::Tensor dlogits(out.log_probs.shape);
  nn::CtcLoss(out.log_probs, target, blank, &dlogits);
  for (double &v : dlogits.data) v *= lambda;
  for (nn::Param *p : m.Params()) p->ZeroGrad();
  const nn::Tensor dcontext = m.decoder.Backward(dy);
  m.encoder.Backward(dcontext, dlogits);

  // Finite differences on a spread of parameters from every tensor.
  for (nn::Param *p : m.Params()) {
    const int64 n = p->value.size();
    double worst = 0;
    for (int64 i = 0; i < n; i += std::max<int64>(1, n / 7)) {
      const double fd = FdSlot(loss, &p->value.data[i]);
      worst = std::max(worst, RelErr(p->grad.data[i], fd));
    }
    INFO(p->name);
    CHECK(worst < 1e-5);
  }
}

TEST_CASE("Lambda zero leaves the CTC branch parameters untouched") {
  const EncoderConfig ec = TinyEncoder();
  const DecoderConfig dc = TinyDecoder(ec);

  std::vector<TrainSample> data;
  for (int i = 0; i < 2; ++i) {
    TrainSample s;
    s.id = StrCat("u", i);
    s.audio = RandomMel(8, 5, 20 + i);
    s.clean = RandomMel(8, 5, 30 + i);
    s.video = RandomClip(4, 6, 8, 40 + i);
    corrupt::GapSpec gs;
    gs.mean_total_ms = 60;
    gs.std_total_ms = 10;
    gs.max_gaps = 1;
    gs.seed = i;
    s.mask = corrupt::SampleGapMask(gs, 8, 20.0);
    s.labels = {0, 1};
    data.push_back(std::move(s));
  }
  TrainConfig tc;
  tc.lambda = 0.0;
  tc.max_epochs = 2;
  tc.lr = 0.01;
  tc.batch_size = 1;

  AvModel m(ec, dc, 9);
  std::vector<double> head_before, dense_before;
  for (nn::Param *p : m.Params()) {
    const std::string &n = p->name;
    if (n.find("enc.head") == 0)
      head_before.insert(head_before.end(), p->value.data.begin(),
                         p->value.data.end());
    if (n.find("enc.dense") == 0)
      dense_before.insert(dense_before.end(), p->value.data.begin(),
                          p->value.data.end());
  }
  REQUIRE(!head_before.empty());
  REQUIRE(!dense_before.empty());
  TrainAv(&m, data, data, tc);
  std::vector<double> head_after, dense_after;
  for (nn::Param *p : m.Params()) {
    if (p->name.find("enc.head") == 0)
      head_after.insert(head_after.end(), p->value.data.begin(),
                        p->value.data.end());
    if (p->name.find("enc.dense") == 0)
      dense_after.insert(dense_after.end(), p->value.data.begin(),
                         p->value.data.end());
  }
  // The CTC head and its dense trunk receive exactly zero gradient.
  CHECK(head_after == head_before);
  CHECK(dense_after == dense_before);
}

TEST_CASE("Informed compositing copies intact frames bit-exactly") {
  const EncoderConfig ec = TinyEncoder();
  const DecoderConfig dc = TinyDecoder(ec);
  AvModel m(ec, dc, 3);
  Rng rng(50);
  for (int rep = 0; rep < 20; ++rep) {
    const dsp::MelSpectrogram audio = RandomMel(8, 5, 100 + rep);
    const corrupt::VideoClip clip = RandomClip(4, 6, 8, 200 + rep);
    corrupt::GapSpec gs;
    gs.mean_total_ms = 60;
    gs.std_total_ms = 20;
    gs.max_gaps = 2;
    gs.seed = 300 + rep;
    const corrupt::GapMask mask = corrupt::SampleGapMask(gs, 8, 20.0);
    const dsp::MelSpectrogram out = Inpaint(&m, audio, clip, &mask);
    REQUIRE(out.num_frames == 8);
    for (int64 t = 0; t < 8; ++t)
      for (int64 f = 0; f < 5; ++f) {
        if (mask.frames[t] == 1) {
          CHECK(out.at(t, f) == audio.at(t, f));
        } else {
          CHECK(out.at(t, f) >= 0.0);
          CHECK(out.at(t, f) <= 1.0);
        }
      }
  }
}

TEST_CASE("Uninformed inpainting clamps the raw decoder output") {
  const EncoderConfig ec = TinyEncoder();
  const DecoderConfig dc = TinyDecoder(ec);
  AvModel m(ec, dc, 3);
  const dsp::MelSpectrogram audio = RandomMel(8, 5, 60);
  const corrupt::VideoClip clip = RandomClip(4, 6, 8, 61);
  const dsp::MelSpectrogram out = Inpaint(&m, audio, clip, nullptr);
  const nn::Tensor y = m.decoder.Forward(
      MelToTensor(audio), m.encoder.Forward(VideoToTensor(clip), nullptr)
                              .context);
  for (int64 i = 0; i < y.size(); ++i)
    CHECK(out.values[i] == std::clamp(y.data[i], 0.0, 1.0));
}

TEST_CASE("InpaintAsi composites like the AV path") {
  const DecoderConfig dc = TinyDecoder(TinyEncoder());
  AsiModel m(dc, 4);
  const dsp::MelSpectrogram audio = RandomMel(8, 5, 70);
  corrupt::GapSpec gs;
  gs.mean_total_ms = 60;
  gs.std_total_ms = 10;
  gs.max_gaps = 1;
  gs.seed = 71;
  const corrupt::GapMask mask = corrupt::SampleGapMask(gs, 8, 20.0);
  const dsp::MelSpectrogram out = InpaintAsi(&m, audio, &mask);
  for (int64 t = 0; t < 8; ++t)
    for (int64 f = 0; f < 5; ++f)
      if (mask.frames[t] == 1) CHECK(out.at(t, f) == audio.at(t, f));
}

TEST_CASE("GreedyCtcDecode collapses repeats and drops blanks") {
  Alphabet alphabet = Alphabet::FromFile(
      StrCat(std::getenv("SIK_SOURCE_DIR") ? std::getenv("SIK_SOURCE_DIR")
                                           : ".",
             "/data/alphabet.txt"));
  const int64 K = alphabet.classes();
  REQUIRE(K == 41);
  const int blank = alphabet.blank();
  // Spell "ab b": a a <blank> b b <blank> <space> b. <space> is class 36.
  const std::vector<int> frames = {0, 0, blank, 1, 1, blank, 36, 1};
  nn::Tensor lp({static_cast<int64>(frames.size()), K});
  lp.Fill(-20.0);
  for (size_t t = 0; t < frames.size(); ++t)
    lp.at(static_cast<int64>(t), frames[t]) = 0.0;
  CHECK(GreedyCtcDecode(lp, alphabet) == "ab b");

  // All blanks decode to the empty string.
  nn::Tensor silent({3, K});
  silent.Fill(-20.0);
  for (int64 t = 0; t < 3; ++t) silent.at(t, blank) = 0.0;
  CHECK(GreedyCtcDecode(silent, alphabet).empty());
}

TEST_CASE("Training schedule decays on stagnation and stops early") {
  const DecoderConfig dc = TinyDecoder(TinyEncoder());
  std::vector<TrainSample> data;
  TrainSample s;
  s.id = "u0";
  s.audio = RandomMel(8, 5, 80);
  s.clean = RandomMel(8, 5, 81);
  corrupt::GapSpec gs;
  gs.mean_total_ms = 60;
  gs.std_total_ms = 10;
  gs.max_gaps = 1;
  gs.seed = 82;
  s.mask = corrupt::SampleGapMask(gs, 8, 20.0);
  data.push_back(std::move(s));

  TrainConfig tc;
  tc.lr = 1e-5;  // tiny steps so validation never beats the huge threshold
  tc.improvement_threshold = 1.0;
  tc.patience = 2;
  tc.stop_patience = 4;
  tc.max_epochs = 50;
  tc.batch_size = 1;

  AsiModel m(dc, 6);
  const TrainResult r = TrainAsi(&m, data, data, tc);
  // Epoch 1 improves on infinity; epochs 2..5 stagnate; the stop check
  // fires at stagnation 4 before a second decay is considered.
  REQUIRE(r.history.size() == 5);
  CHECK(r.stopped_early);
  CHECK(r.best_epoch == 1);
  CHECK(r.history[0].lr == doctest::Approx(1e-5));
  CHECK(r.history[1].lr == doctest::Approx(1e-5));
  CHECK(r.history[2].lr == doctest::Approx(1e-5));  // decay lands after e3
  CHECK(r.history[3].lr == doctest::Approx(5e-6));
  CHECK(r.history[4].lr == doctest::Approx(5e-6));
  for (const EpochStats &e : r.history) {
    CHECK(e.ctc_term == 0.0);  // pure MSE baseline
    CHECK(e.mse_term == doctest::Approx(e.train_loss));
  }
}

TEST_CASE("History CSV carries the schedule columns") {
  std::vector<EpochStats> h(2);
  h[0] = {1, 0.5, 0.6, 1e-4, 30.0, 0.47};
  h[1] = {2, 0.4, 0.55, 1e-4, 29.0, 0.371};
  const std::string csv = HistoryCsv(h);
  CHECK(csv.find("epoch,train_loss,val_loss,lr,ctc_term,mse_term") == 0);
  CHECK(csv.find("\n1,") != std::string::npos);
  CHECK(csv.find("\n2,") != std::string::npos);
}

TEST_CASE("A tiny ASI task overfits") {
  const DecoderConfig dc = TinyDecoder(TinyEncoder());
  std::vector<TrainSample> data;
  TrainSample s;
  s.id = "u0";
  s.audio = RandomMel(8, 5, 90);
  s.clean = s.audio;  // learn the identity
  corrupt::GapSpec gs;
  gs.mean_total_ms = 60;
  gs.std_total_ms = 10;
  gs.max_gaps = 1;
  gs.seed = 91;
  s.mask = corrupt::SampleGapMask(gs, 8, 20.0);
  data.push_back(std::move(s));

  TrainConfig tc;
  tc.lr = 0.01;
  tc.max_epochs = 400;
  tc.batch_size = 1;
  tc.stop_patience = 400;
  AsiModel m(dc, 8);
  const TrainResult r = TrainAsi(&m, data, data, tc);
  CHECK(r.best_val_loss < 0.1 * r.history.front().val_loss);
}
