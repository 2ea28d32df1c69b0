// src/model/models.cc

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

#include "sik/model/models.h"

#include <algorithm>

#include "sik/nn/init.h"
#include "sik/nn/losses.h"

namespace sik::model {

nn::Tensor MelToTensor(const dsp::MelSpectrogram &m) {
  nn::Tensor t({m.num_frames, m.mel_bins});
  t.data = m.values;
  return t;
}

dsp::MelSpectrogram TensorToMel(const nn::Tensor &t, double floor_db,
                                double ceil_db) {
  SIK_REQUIRE(t.rank() == 2, "mel tensor must be [T x F]");
  dsp::MelSpectrogram m;
  m.num_frames = t.dim(0);
  m.mel_bins = t.dim(1);
  m.floor_db = floor_db;
  m.ceil_db = ceil_db;
  m.values = t.data;
  return m;
}

nn::Tensor VideoToTensor(const corrupt::VideoClip &v) {
  nn::Tensor t({v.num_frames, v.height, v.width, v.channels});
  t.data = v.data;
  return t;
}

nn::Tensor RepeatContext(const nn::Tensor &context, int64 num_frames) {
  SIK_REQUIRE(context.rank() == 2, "context must be [T' x D]");
  const int64 tp = context.dim(0), d = context.dim(1);
  SIK_REQUIRE(num_frames >= tp, "cannot repeat ", tp, " rows into ",
              num_frames);
  nn::Tensor out({num_frames, d});
  for (int64 t = 0; t < num_frames; ++t) {
    const int64 src = t * tp / num_frames;
    for (int64 k = 0; k < d; ++k) out.at(t, k) = context.at(src, k);
  }
  return out;
}

nn::Tensor RepeatContextBackward(const nn::Tensor &drep,
                                 int64 context_frames) {
  const int64 T = drep.dim(0), d = drep.dim(1);
  nn::Tensor out({context_frames, d});
  for (int64 t = 0; t < T; ++t) {
    const int64 src = t * context_frames / T;
    for (int64 k = 0; k < d; ++k) out.at(src, k) += drep.at(t, k);
  }
  return out;
}

namespace {

std::vector<int64> KernelShape(const EncoderConfig &cfg, int64 i,
                               int64 in_channels) {
  return {cfg.conv_kernels[i][0], cfg.conv_kernels[i][1],
          cfg.conv_kernels[i][2], in_channels, cfg.conv_channels[i]};
}

nn::Conv3dSpec ConvSpec(const EncoderConfig &cfg, int64 i) {
  nn::Conv3dSpec s;
  s.stride = {cfg.conv_strides[i][0], cfg.conv_strides[i][1],
              cfg.conv_strides[i][2]};
  return s;
}

nn::Pool3dSpec PoolSpec(const EncoderConfig &cfg) {
  nn::Pool3dSpec s;
  s.window = {cfg.pool_window[0], cfg.pool_window[1], cfg.pool_window[2]};
  s.stride = {cfg.pool_stride[0], cfg.pool_stride[1], cfg.pool_stride[2]};
  return s;
}

int64 KernelFanIn(const std::vector<int64> &shape) {
  return shape[0] * shape[1] * shape[2] * shape[3];
}

void InitLstmPair(nn::BLstm *layer, int64 in_dim, Rng *rng) {
  auto params = layer->Params();
  // Param order per direction: wx, wh, b.
  for (size_t dir = 0; dir < 2; ++dir) {
    nn::InitHe(&params[dir * 3 + 0]->value, in_dim, rng);
    nn::InitLstmRecurrent(&params[dir * 3 + 1]->value, rng);
  }
}

}  // namespace

Encoder::Encoder(const EncoderConfig &cfg, uint64 init_seed)
    : cfg_(cfg),
      shapes_(ComputeEncoderShapes(cfg)),
      conv1_("enc.conv1", KernelShape(cfg, 0, cfg.channels), ConvSpec(cfg, 0),
             true),
      conv2_("enc.conv2", KernelShape(cfg, 1, cfg.conv_channels[0]),
             ConvSpec(cfg, 1), true),
      conv3_("enc.conv3", KernelShape(cfg, 2, cfg.conv_channels[1]),
             ConvSpec(cfg, 2), true),
      pool1_(PoolSpec(cfg)),
      pool2_(PoolSpec(cfg)),
      pool3_(PoolSpec(cfg)),
      drop1_(cfg.dropout_rate),
      drop2_(cfg.dropout_rate),
      drop3_(cfg.dropout_rate),
      blstm1_("enc.blstm1", shapes_.flatten_dim, cfg.blstm_hidden),
      blstm2_("enc.blstm2", 2 * cfg.blstm_hidden, cfg.blstm_hidden),
      dense_("enc.dense", 2 * cfg.blstm_hidden, cfg.dense_dim,
             nn::Activation::kRelu),
      head_("enc.head", cfg.dense_dim, cfg.classes, nn::Activation::kLinear) {
  Rng rng(init_seed);
  nn::InitHe(&conv1_.Params()[0]->value, KernelFanIn(KernelShape(cfg, 0, cfg.channels)), &rng);
  nn::InitHe(&conv2_.Params()[0]->value, KernelFanIn(KernelShape(cfg, 1, cfg.conv_channels[0])), &rng);
  nn::InitHe(&conv3_.Params()[0]->value, KernelFanIn(KernelShape(cfg, 2, cfg.conv_channels[1])), &rng);
  InitLstmPair(&blstm1_, shapes_.flatten_dim, &rng);
  InitLstmPair(&blstm2_, 2 * cfg.blstm_hidden, &rng);
  nn::InitHe(&dense_.Params()[0]->value, 2 * cfg.blstm_hidden, &rng);
  nn::InitHe(&head_.Params()[0]->value, cfg.dense_dim, &rng);
}

Encoder::Output Encoder::Forward(const nn::Tensor &video, Rng *dropout_rng) {
  SIK_REQUIRE(video.rank() == 4 && video.dim(0) == cfg_.video_frames &&
                  video.dim(1) == cfg_.height && video.dim(2) == cfg_.width &&
                  video.dim(3) == cfg_.channels,
              "video shape ", nn::ShapeToString(video.shape),
              " does not match encoder config");
  nn::Tensor h = drop1_.Forward(pool1_.Forward(conv1_.Forward(video)),
                                dropout_rng);
  h = drop2_.Forward(pool2_.Forward(conv2_.Forward(h)), dropout_rng);
  h = drop3_.Forward(pool3_.Forward(conv3_.Forward(h)), dropout_rng);
  // Flatten [T' x h x w x c] -> [T' x hwc]; row-major data is already laid
  // out per timestep.
  h.shape = {cfg_.video_frames, shapes_.flatten_dim};
  h = blstm1_.Forward(h);

  Output out;
  out.context = blstm2_.Forward(h);
  const nn::Tensor trunk = dense_.Forward(out.context);
  const nn::Tensor logits = head_.Forward(trunk);
  out.log_probs = nn::LogSoftmax(logits);
  return out;
}

void Encoder::Backward(const nn::Tensor &dcontext, const nn::Tensor &dlogits) {
  // The context feeds both the decoder and the CTC head; merge the two
  // gradient sources at the second BLSTM's output.
  nn::Tensor dctx = dcontext;
  const nn::Tensor dtrunk = head_.BackwardFromLogits(dlogits);
  const nn::Tensor dhead_ctx = dense_.Backward(dtrunk);
  SIK_REQUIRE(dctx.SameShape(dhead_ctx), "context gradient shape mismatch");
  for (int64 i = 0; i < dctx.size(); ++i) dctx.data[i] += dhead_ctx.data[i];

  nn::Tensor dh = blstm1_.Backward(blstm2_.Backward(dctx));
  dh.shape = {cfg_.video_frames, shapes_.pool_out[2].h, shapes_.pool_out[2].w,
              shapes_.pool_out[2].c};
  dh = conv3_.Backward(pool3_.Backward(drop3_.Backward(dh)));
  dh = conv2_.Backward(pool2_.Backward(drop2_.Backward(dh)));
  conv1_.Backward(pool1_.Backward(drop1_.Backward(dh)));
}

std::vector<nn::Param *> Encoder::Params() {
  std::vector<nn::Param *> p;
  for (auto *layer_params :
       {&conv1_, &conv2_, &conv3_}) {
    for (nn::Param *q : layer_params->Params()) p.push_back(q);
  }
  for (nn::Param *q : blstm1_.Params()) p.push_back(q);
  for (nn::Param *q : blstm2_.Params()) p.push_back(q);
  for (nn::Param *q : dense_.Params()) p.push_back(q);
  for (nn::Param *q : head_.Params()) p.push_back(q);
  return p;
}

Decoder::Decoder(const DecoderConfig &cfg, uint64 init_seed)
    : cfg_(cfg),
      blstm1_("dec.blstm1", cfg.context_dim + cfg.mel_bins, cfg.blstm_hidden),
      blstm2_("dec.blstm2", 2 * cfg.blstm_hidden, cfg.blstm_hidden),
      blstm3_("dec.blstm3", 2 * cfg.blstm_hidden, cfg.blstm_hidden),
      out_("dec.out", 2 * cfg.blstm_hidden, cfg.mel_bins,
           nn::Activation::kLinear) {
  SIK_REQUIRE(cfg.blstm_layers == 3, "decoder is fixed at three BLSTM layers");
  Rng rng(init_seed);
  InitLstmPair(&blstm1_, cfg.context_dim + cfg.mel_bins, &rng);
  InitLstmPair(&blstm2_, 2 * cfg.blstm_hidden, &rng);
  InitLstmPair(&blstm3_, 2 * cfg.blstm_hidden, &rng);
  nn::InitHe(&out_.Params()[0]->value, 2 * cfg.blstm_hidden, &rng);
}

nn::Tensor Decoder::Forward(const nn::Tensor &mel, const nn::Tensor &context) {
  SIK_REQUIRE(mel.rank() == 2 && mel.dim(1) == cfg_.mel_bins, "mel shape ",
              nn::ShapeToString(mel.shape), " expects ", cfg_.mel_bins,
              " bins");
  SIK_REQUIRE(context.rank() == 2 && context.dim(1) == cfg_.context_dim,
              "context width ", context.dim(1), " expects ",
              cfg_.context_dim);
  const int64 T = mel.dim(0);
  context_frames_ = context.dim(0);
  const nn::Tensor rep = RepeatContext(context, T);

  nn::Tensor fused({T, cfg_.context_dim + cfg_.mel_bins});
  for (int64 t = 0; t < T; ++t) {
    for (int64 k = 0; k < cfg_.context_dim; ++k) fused.at(t, k) = rep.at(t, k);
    for (int64 f = 0; f < cfg_.mel_bins; ++f)
      fused.at(t, cfg_.context_dim + f) = mel.at(t, f);
  }
  return out_.Forward(blstm3_.Forward(blstm2_.Forward(blstm1_.Forward(fused))));
}

nn::Tensor Decoder::Backward(const nn::Tensor &dy) {
  const nn::Tensor dfused =
      blstm1_.Backward(blstm2_.Backward(blstm3_.Backward(out_.Backward(dy))));
  const int64 T = dfused.dim(0);
  nn::Tensor drep({T, cfg_.context_dim});
  for (int64 t = 0; t < T; ++t)
    for (int64 k = 0; k < cfg_.context_dim; ++k)
      drep.at(t, k) = dfused.at(t, k);
  return RepeatContextBackward(drep, context_frames_);
}

std::vector<nn::Param *> Decoder::Params() {
  std::vector<nn::Param *> p;
  for (nn::Param *q : blstm1_.Params()) p.push_back(q);
  for (nn::Param *q : blstm2_.Params()) p.push_back(q);
  for (nn::Param *q : blstm3_.Params()) p.push_back(q);
  for (nn::Param *q : out_.Params()) p.push_back(q);
  return p;
}

AvModel::AvModel(const EncoderConfig &enc_cfg, const DecoderConfig &dec_cfg,
                 uint64 init_seed)
    : encoder(enc_cfg, MixSeed(init_seed, 0xe11c)),
      decoder(dec_cfg, MixSeed(init_seed, 0xdec0)) {
  SIK_REQUIRE(dec_cfg.context_dim == enc_cfg.ContextDim(),
              "decoder context width ", dec_cfg.context_dim,
              " must equal encoder output ", enc_cfg.ContextDim());
}

std::vector<nn::Param *> AvModel::Params() {
  std::vector<nn::Param *> p = encoder.Params();
  for (nn::Param *q : decoder.Params()) p.push_back(q);
  return p;
}

AsiModel::AsiModel(const DecoderConfig &cfg, uint64 init_seed)
    : cfg_(cfg),
      blstm1_("asi.blstm1", cfg.mel_bins, cfg.blstm_hidden),
      blstm2_("asi.blstm2", 2 * cfg.blstm_hidden, cfg.blstm_hidden),
      blstm3_("asi.blstm3", 2 * cfg.blstm_hidden, cfg.blstm_hidden),
      out_("asi.out", 2 * cfg.blstm_hidden, cfg.mel_bins,
           nn::Activation::kLinear) {
  Rng rng(init_seed);
  InitLstmPair(&blstm1_, cfg.mel_bins, &rng);
  InitLstmPair(&blstm2_, 2 * cfg.blstm_hidden, &rng);
  InitLstmPair(&blstm3_, 2 * cfg.blstm_hidden, &rng);
  nn::InitHe(&out_.Params()[0]->value, 2 * cfg.blstm_hidden, &rng);
}

nn::Tensor AsiModel::Forward(const nn::Tensor &mel) {
  SIK_REQUIRE(mel.rank() == 2 && mel.dim(1) == cfg_.mel_bins, "mel shape ",
              nn::ShapeToString(mel.shape), " expects ", cfg_.mel_bins,
              " bins");
  return out_.Forward(blstm3_.Forward(blstm2_.Forward(blstm1_.Forward(mel))));
}

void AsiModel::Backward(const nn::Tensor &dy) {
  blstm1_.Backward(blstm2_.Backward(blstm3_.Backward(out_.Backward(dy))));
}

std::vector<nn::Param *> AsiModel::Params() {
  std::vector<nn::Param *> p;
  for (nn::Param *q : blstm1_.Params()) p.push_back(q);
  for (nn::Param *q : blstm2_.Params()) p.push_back(q);
  for (nn::Param *q : blstm3_.Params()) p.push_back(q);
  for (nn::Param *q : out_.Params()) p.push_back(q);
  return p;
}

}  // namespace sik::model
