// src/nn/layers.cc

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

#include "sik/nn/layers.h"

#include <algorithm>
#include <cmath>

namespace sik::nn {

namespace {

double Sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

}  // namespace

DenseLayer::DenseLayer(const std::string &name, int64 in_dim, int64 out_dim,
                       Activation act)
    : w_(name + ".w", {in_dim, out_dim}),
      b_(name + ".b", {out_dim}),
      act_(act) {}

Tensor DenseLayer::Forward(const Tensor &x) {
  SIK_REQUIRE(x.rank() == 2 && x.dim(1) == in_dim(), "dense input shape ",
              ShapeToString(x.shape), " expects cols ", in_dim());
  x_ = x;
  MatMul(x, w_.value, &pre_);
  const int64 rows = pre_.dim(0), cols = pre_.dim(1);
  for (int64 r = 0; r < rows; ++r)
    for (int64 c = 0; c < cols; ++c) pre_.at(r, c) += b_.value.data[c];

  y_ = pre_;
  switch (act_) {
    case Activation::kLinear:
      break;
    case Activation::kRelu:
      for (double &v : y_.data) v = std::max(0.0, v);
      break;
    case Activation::kTanh:
      for (double &v : y_.data) v = std::tanh(v);
      break;
    case Activation::kSoftmax:
      for (int64 r = 0; r < rows; ++r) {
        double mx = y_.at(r, 0);
        for (int64 c = 1; c < cols; ++c) mx = std::max(mx, y_.at(r, c));
        double sum = 0.0;
        for (int64 c = 0; c < cols; ++c) {
          y_.at(r, c) = std::exp(y_.at(r, c) - mx);
          sum += y_.at(r, c);
        }
        for (int64 c = 0; c < cols; ++c) y_.at(r, c) /= sum;
      }
      break;
  }
  return y_;
}

Tensor DenseLayer::Backward(const Tensor &dy) {
  SIK_REQUIRE(dy.SameShape(y_), "dense dy shape mismatch");
  Tensor dpre = dy;
  const int64 rows = dy.dim(0), cols = dy.dim(1);
  switch (act_) {
    case Activation::kLinear:
      break;
    case Activation::kRelu:
      for (int64 i = 0; i < dpre.size(); ++i)
        if (pre_.data[i] <= 0.0) dpre.data[i] = 0.0;
      break;
    case Activation::kTanh:
      for (int64 i = 0; i < dpre.size(); ++i)
        dpre.data[i] *= 1.0 - y_.data[i] * y_.data[i];
      break;
    case Activation::kSoftmax:
      for (int64 r = 0; r < rows; ++r) {
        double dot = 0.0;
        for (int64 c = 0; c < cols; ++c) dot += dy.at(r, c) * y_.at(r, c);
        for (int64 c = 0; c < cols; ++c)
          dpre.at(r, c) = y_.at(r, c) * (dy.at(r, c) - dot);
      }
      break;
  }
  return BackwardFromLogits(dpre);
}

Tensor DenseLayer::BackwardFromLogits(const Tensor &dlogits) {
  SIK_REQUIRE(dlogits.SameShape(pre_), "dense dlogits shape mismatch");
  Tensor dw;
  MatMulATB(x_, dlogits, &dw);
  for (int64 i = 0; i < dw.size(); ++i) w_.grad.data[i] += dw.data[i];
  const int64 rows = dlogits.dim(0), cols = dlogits.dim(1);
  for (int64 r = 0; r < rows; ++r)
    for (int64 c = 0; c < cols; ++c) b_.grad.data[c] += dlogits.at(r, c);
  Tensor dx;
  MatMulABT(dlogits, w_.value, &dx);
  return dx;
}

Conv3dLayer::Conv3dLayer(const std::string &name,
                         std::vector<int64> kernel_shape, Conv3dSpec spec,
                         bool relu)
    : kernel_(name + ".kernel", kernel_shape),
      bias_(name + ".bias", {kernel_shape[4]}),
      spec_(spec),
      relu_(relu) {
  SIK_REQUIRE(kernel_shape.size() == 5, "conv kernel must be rank 5");
}

Tensor Conv3dLayer::Forward(const Tensor &x) {
  x_ = x;
  Conv3dForward(x, kernel_.value, bias_.value, spec_, &y_);
  if (relu_)
    for (double &v : y_.data) v = std::max(0.0, v);
  return y_;
}

Tensor Conv3dLayer::Backward(const Tensor &dy) {
  SIK_REQUIRE(dy.SameShape(y_), "conv dy shape mismatch");
  Tensor dpre = dy;
  if (relu_)
    for (int64 i = 0; i < dpre.size(); ++i)
      if (y_.data[i] <= 0.0) dpre.data[i] = 0.0;
  Tensor dx;
  Conv3dBackward(x_, kernel_.value, spec_, dpre, &dx, &kernel_.grad,
                 &bias_.grad);
  return dx;
}

Tensor MaxPool3dLayer::Forward(const Tensor &x) {
  in_shape_ = x.shape;
  Tensor y;
  MaxPool3dForward(x, spec_, &y, &argmax_);
  return y;
}

Tensor MaxPool3dLayer::Backward(const Tensor &dy) {
  Tensor dx(in_shape_);
  MaxPool3dBackward(argmax_, dy, &dx);
  return dx;
}

DropoutLayer::DropoutLayer(double rate) : rate_(rate) {
  SIK_REQUIRE(rate >= 0.0 && rate < 1.0, "dropout rate out of [0,1): ", rate);
}

Tensor DropoutLayer::Forward(const Tensor &x, Rng *rng) {
  training_ = rng != nullptr && rate_ > 0.0;
  if (!training_) {
    mask_.clear();
    return x;
  }
  const double scale = 1.0 / (1.0 - rate_);
  mask_.resize(x.size());
  Tensor y = x;
  for (int64 i = 0; i < x.size(); ++i) {
    mask_[i] = rng->Uniform() < rate_ ? 0.0 : scale;
    y.data[i] *= mask_[i];
  }
  return y;
}

Tensor DropoutLayer::Backward(const Tensor &dy) {
  if (!training_) return dy;
  SIK_REQUIRE(dy.size() == static_cast<int64>(mask_.size()),
              "dropout dy size mismatch");
  Tensor dx = dy;
  for (int64 i = 0; i < dx.size(); ++i) dx.data[i] *= mask_[i];
  return dx;
}

Lstm::Lstm(const std::string &name, int64 in_dim, int64 hidden)
    : hidden_(hidden),
      wx_(name + ".wx", {in_dim, 4 * hidden}),
      wh_(name + ".wh", {hidden, 4 * hidden}),
      b_(name + ".b", {4 * hidden}) {}

Tensor Lstm::Forward(const Tensor &x) {
  SIK_REQUIRE(x.rank() == 2 && x.dim(1) == wx_.value.dim(0),
              "lstm input shape ", ShapeToString(x.shape), " expects cols ",
              wx_.value.dim(0));
  const int64 T = x.dim(0), H = hidden_;
  x_ = x;
  // gates_ rows hold (i, f, g, o) post-nonlinearity; cells_ holds c_t;
  // hidden_states_ holds h_t.
  gates_ = Tensor({T, 4 * H});
  cells_ = Tensor({T, H});
  hidden_states_ = Tensor({T, H});

  // Input contribution for all timesteps in one parallel matmul.
  Tensor zx;
  MatMul(x, wx_.value, &zx);

  std::vector<double> z(4 * H);
  for (int64 t = 0; t < T; ++t) {
    for (int64 j = 0; j < 4 * H; ++j) z[j] = zx.at(t, j) + b_.value.data[j];
    if (t > 0) {
      // Recurrent gemv; sequential by nature.
      for (int64 k = 0; k < H; ++k) {
        const double hv = hidden_states_.at(t - 1, k);
        if (hv == 0.0) continue;
        const double *whp = &wh_.value.data[k * 4 * H];
        for (int64 j = 0; j < 4 * H; ++j) z[j] += hv * whp[j];
      }
    }
    for (int64 k = 0; k < H; ++k) {
      const double i = Sigmoid(z[k]);
      const double f = Sigmoid(z[H + k]);
      const double g = std::tanh(z[2 * H + k]);
      const double o = Sigmoid(z[3 * H + k]);
      const double c_prev = t > 0 ? cells_.at(t - 1, k) : 0.0;
      const double c = f * c_prev + i * g;
      gates_.at(t, k) = i;
      gates_.at(t, H + k) = f;
      gates_.at(t, 2 * H + k) = g;
      gates_.at(t, 3 * H + k) = o;
      cells_.at(t, k) = c;
      hidden_states_.at(t, k) = o * std::tanh(c);
    }
  }
  return hidden_states_;
}

Tensor Lstm::Backward(const Tensor &dy) {
  const int64 T = x_.dim(0), H = hidden_;
  SIK_REQUIRE(dy.rank() == 2 && dy.dim(0) == T && dy.dim(1) == H,
              "lstm dy shape mismatch");

  Tensor dz_all({T, 4 * H});
  std::vector<double> dh(H, 0.0), dc(H, 0.0);
  for (int64 t = T - 1; t >= 0; --t) {
    for (int64 k = 0; k < H; ++k) {
      const double i = gates_.at(t, k);
      const double f = gates_.at(t, H + k);
      const double g = gates_.at(t, 2 * H + k);
      const double o = gates_.at(t, 3 * H + k);
      const double c = cells_.at(t, k);
      const double c_prev = t > 0 ? cells_.at(t - 1, k) : 0.0;
      const double tc = std::tanh(c);
      const double dh_total = dy.at(t, k) + dh[k];
      const double dcv = dh_total * o * (1.0 - tc * tc) + dc[k];
      dz_all.at(t, k) = dcv * g * i * (1.0 - i);
      dz_all.at(t, H + k) = dcv * c_prev * f * (1.0 - f);
      dz_all.at(t, 2 * H + k) = dcv * i * (1.0 - g * g);
      dz_all.at(t, 3 * H + k) = dh_total * tc * o * (1.0 - o);
      dc[k] = dcv * f;
    }
    // dh for t-1 via Wh^T gemv.
    std::fill(dh.begin(), dh.end(), 0.0);
    if (t > 0) {
      for (int64 k = 0; k < H; ++k) {
        const double *whp = &wh_.value.data[k * 4 * H];
        double acc = 0.0;
        for (int64 j = 0; j < 4 * H; ++j) acc += dz_all.at(t, j) * whp[j];
        dh[k] = acc;
      }
    }
  }

  Tensor dwx;
  MatMulATB(x_, dz_all, &dwx);
  for (int64 i = 0; i < dwx.size(); ++i) wx_.grad.data[i] += dwx.data[i];

  // h rows shifted by one: row t holds h_{t-1}, row 0 is zero state.
  Tensor h_prev({T, H});
  for (int64 t = 1; t < T; ++t)
    for (int64 k = 0; k < H; ++k) h_prev.at(t, k) = hidden_states_.at(t - 1, k);
  Tensor dwh;
  MatMulATB(h_prev, dz_all, &dwh);
  for (int64 i = 0; i < dwh.size(); ++i) wh_.grad.data[i] += dwh.data[i];

  for (int64 t = 0; t < T; ++t)
    for (int64 j = 0; j < 4 * H; ++j) b_.grad.data[j] += dz_all.at(t, j);

  Tensor dx;
  MatMulABT(dz_all, wx_.value, &dx);
  return dx;
}

Tensor ReverseRows(const Tensor &x) {
  SIK_REQUIRE(x.rank() == 2, "ReverseRows expects a matrix");
  Tensor out(x.shape);
  const int64 T = x.dim(0), D = x.dim(1);
  for (int64 t = 0; t < T; ++t)
    for (int64 d = 0; d < D; ++d) out.at(t, d) = x.at(T - 1 - t, d);
  return out;
}

BLstm::BLstm(const std::string &name, int64 in_dim, int64 hidden)
    : fw_(name + ".fw", in_dim, hidden),
      bw_(name + ".bw", in_dim, hidden),
      in_dim_(in_dim) {}

Tensor BLstm::Forward(const Tensor &x) {
  const Tensor hf = fw_.Forward(x);
  const Tensor hb = ReverseRows(bw_.Forward(ReverseRows(x)));
  const int64 T = x.dim(0), H = fw_.hidden();
  Tensor y({T, 2 * H});
  for (int64 t = 0; t < T; ++t) {
    for (int64 k = 0; k < H; ++k) {
      y.at(t, k) = hf.at(t, k);
      y.at(t, H + k) = hb.at(t, k);
    }
  }
  return y;
}

Tensor BLstm::Backward(const Tensor &dy) {
  const int64 T = dy.dim(0), H = fw_.hidden();
  SIK_REQUIRE(dy.rank() == 2 && dy.dim(1) == 2 * H, "blstm dy shape mismatch");
  Tensor dyf({T, H}), dyb({T, H});
  for (int64 t = 0; t < T; ++t)
    for (int64 k = 0; k < H; ++k) {
      dyf.at(t, k) = dy.at(t, k);
      dyb.at(t, k) = dy.at(t, H + k);
    }
  const Tensor dxf = fw_.Backward(dyf);
  const Tensor dxb = ReverseRows(bw_.Backward(ReverseRows(dyb)));
  Tensor dx(dxf.shape);
  for (int64 i = 0; i < dx.size(); ++i)
    dx.data[i] = dxf.data[i] + dxb.data[i];
  return dx;
}

std::vector<Param *> BLstm::Params() {
  std::vector<Param *> p = fw_.Params();
  for (Param *q : bw_.Params()) p.push_back(q);
  return p;
}

}  // namespace sik::nn
