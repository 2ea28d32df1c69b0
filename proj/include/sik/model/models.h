// include/sik/model/models.h

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

#ifndef SIK_MODEL_MODELS_H_
#define SIK_MODEL_MODELS_H_

#include <vector>

#include "sik/corrupt/video.h"
#include "sik/dsp/mel.h"
#include "sik/model/config.h"
#include "sik/nn/layers.h"

namespace sik::model {

nn::Tensor MelToTensor(const dsp::MelSpectrogram &m);
dsp::MelSpectrogram TensorToMel(const nn::Tensor &t, double floor_db,
                                double ceil_db);
nn::Tensor VideoToTensor(const corrupt::VideoClip &v);

// Row t of the output copies context row floor(t * T' / T); requires
// T >= T' (nearest-start upsampling).
nn::Tensor RepeatContext(const nn::Tensor &context, int64 num_frames);
// Adjoint: sums output-row gradients back onto their source rows.
nn::Tensor RepeatContextBackward(const nn::Tensor &drep, int64 context_frames);

// Video encoder: three conv/pool/dropout blocks, two BLSTM layers, a dense
// trunk and the character softmax head. The context handed to the decoder
// is the second BLSTM's output (the dense head serves only the CTC branch).
class Encoder {
 public:
  Encoder(const EncoderConfig &cfg, uint64 init_seed);

  struct Output {
    nn::Tensor log_probs;  // [T' x classes], rows are log-distributions
    nn::Tensor context;    // [T' x 2H]
  };
  // dropout_rng null = inference mode.
  Output Forward(const nn::Tensor &video, Rng *dropout_rng);
  // dcontext: gradient flowing back from the decoder fusion.
  // dlogits: gradient w.r.t. the head's pre-softmax logits (CTC branch).
  void Backward(const nn::Tensor &dcontext, const nn::Tensor &dlogits);

  std::vector<nn::Param *> Params();
  const EncoderConfig &config() const { return cfg_; }
  const EncoderShapes &shapes() const { return shapes_; }

 private:
  EncoderConfig cfg_;
  EncoderShapes shapes_;
  nn::Conv3dLayer conv1_, conv2_, conv3_;
  nn::MaxPool3dLayer pool1_, pool2_, pool3_;
  nn::DropoutLayer drop1_, drop2_, drop3_;
  nn::BLstm blstm1_, blstm2_;
  nn::DenseLayer dense_, head_;
};

// Spectrogram decoder: repeated context concatenated with Mel frames,
// three BLSTM layers, linear dense output (clamping to [0,1] happens only
// at inference, in Inpaint).
class Decoder {
 public:
  Decoder(const DecoderConfig &cfg, uint64 init_seed);

  nn::Tensor Forward(const nn::Tensor &mel, const nn::Tensor &context);
  // Returns the gradient w.r.t. the (unrepeated) context.
  nn::Tensor Backward(const nn::Tensor &dy);

  std::vector<nn::Param *> Params();
  const DecoderConfig &config() const { return cfg_; }

 private:
  DecoderConfig cfg_;
  int64 context_frames_ = 0;
  nn::BLstm blstm1_, blstm2_, blstm3_;
  nn::DenseLayer out_;
};

struct AvModel {
  Encoder encoder;
  Decoder decoder;

  AvModel(const EncoderConfig &enc_cfg, const DecoderConfig &dec_cfg,
          uint64 init_seed);
  std::vector<nn::Param *> Params();
};

// Audio-only baseline: the decoder stack without the context fusion.
class AsiModel {
 public:
  AsiModel(const DecoderConfig &cfg, uint64 init_seed);

  nn::Tensor Forward(const nn::Tensor &mel);
  void Backward(const nn::Tensor &dy);

  std::vector<nn::Param *> Params();
  const DecoderConfig &config() const { return cfg_; }

 private:
  DecoderConfig cfg_;
  nn::BLstm blstm1_, blstm2_, blstm3_;
  nn::DenseLayer out_;
};

}  // namespace sik::model

#endif  // SIK_MODEL_MODELS_H_
