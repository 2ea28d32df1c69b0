// src/nn/losses.cc

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

#include "sik/nn/losses.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sik::nn {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double LogAdd(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double mx = std::max(a, b);
  return mx + std::log1p(std::exp(std::min(a, b) - mx));
}

}  // namespace

int64 CtcMinFrames(const std::vector<int> &target) {
  int64 n = static_cast<int64>(target.size());
  for (size_t i = 1; i < target.size(); ++i)
    if (target[i] == target[i - 1]) ++n;
  return n;
}

double CtcLoss(const Tensor &log_probs, const std::vector<int> &target,
               int blank, Tensor *dlogits) {
  SIK_REQUIRE(log_probs.rank() == 2, "log_probs must be [T' x K]");
  const int64 T = log_probs.dim(0), K = log_probs.dim(1);
  SIK_REQUIRE(blank >= 0 && blank < K, "blank index out of range");
  for (int c : target)
    SIK_REQUIRE(c >= 0 && c < K && c != blank, "bad target label ", c);
  SIK_REQUIRE(CtcMinFrames(target) <= T, "target needs at least ",
              CtcMinFrames(target), " frames, got ", T);

  // Blank-expanded label sequence: blank between and around every label.
  const int64 S = 2 * static_cast<int64>(target.size()) + 1;
  std::vector<int> lab(S, blank);
  for (size_t i = 0; i < target.size(); ++i) lab[2 * i + 1] = target[i];

  auto lp = [&](int64 t, int64 s) { return log_probs.at(t, lab[s]); };

  // Forward variables include the emission at t.
  std::vector<double> alpha(T * S, kNegInf), beta(T * S, kNegInf);
  alpha[0] = lp(0, 0);
  if (S > 1) alpha[1] = lp(0, 1);
  for (int64 t = 1; t < T; ++t)
    for (int64 s = 0; s < S; ++s) {
      double a = alpha[(t - 1) * S + s];
      if (s >= 1) a = LogAdd(a, alpha[(t - 1) * S + s - 1]);
      // Skip transition: only between distinct non-blank labels.
      if (s >= 2 && lab[s] != blank && lab[s] != lab[s - 2])
        a = LogAdd(a, alpha[(t - 1) * S + s - 2]);
      alpha[t * S + s] = a == kNegInf ? kNegInf : a + lp(t, s);
    }

  double log_p = alpha[(T - 1) * S + S - 1];
  if (S > 1) log_p = LogAdd(log_p, alpha[(T - 1) * S + S - 2]);
  SIK_REQUIRE(log_p != kNegInf, "no feasible CTC alignment");

  if (dlogits) {
    beta[(T - 1) * S + S - 1] = lp(T - 1, S - 1);
    if (S > 1) beta[(T - 1) * S + S - 2] = lp(T - 1, S - 2);
    for (int64 t = T - 2; t >= 0; --t)
      for (int64 s = S - 1; s >= 0; --s) {
        double b = beta[(t + 1) * S + s];
        if (s + 1 < S) b = LogAdd(b, beta[(t + 1) * S + s + 1]);
        if (s + 2 < S && lab[s + 2] != blank && lab[s + 2] != lab[s])
          b = LogAdd(b, beta[(t + 1) * S + s + 2]);
        beta[t * S + s] = b == kNegInf ? kNegInf : b + lp(t, s);
      }

    // occupancy[t][j] = sum over expanded states with label j of
    // alpha*beta / p_t(j)  (both alpha and beta include the emission once).
    *dlogits = Tensor({T, K});
    for (int64 t = 0; t < T; ++t) {
      std::vector<double> log_occ(K, kNegInf);
      for (int64 s = 0; s < S; ++s) {
        const double contrib = alpha[t * S + s] + beta[t * S + s] - lp(t, s);
        log_occ[lab[s]] = LogAdd(log_occ[lab[s]], contrib);
      }
      for (int64 j = 0; j < K; ++j) {
        const double y = std::exp(log_probs.at(t, j));
        const double occ =
            log_occ[j] == kNegInf ? 0.0 : std::exp(log_occ[j] - log_p);
        dlogits->at(t, j) = y - occ;
      }
    }
  }
  return -log_p;
}

double MseLoss(const Tensor &y, const Tensor &x, Tensor *dy) {
  SIK_REQUIRE(y.SameShape(x), "mse shapes differ: ", ShapeToString(y.shape),
              " vs ", ShapeToString(x.shape));
  SIK_REQUIRE(y.rank() == 2, "mse expects [T x F]");
  const int64 T = y.dim(0);
  double loss = 0.0;
  for (int64 i = 0; i < y.size(); ++i) {
    const double d = x.data[i] - y.data[i];
    loss += d * d;
  }
  loss /= static_cast<double>(T);
  if (dy) {
    *dy = Tensor(y.shape);
    const double scale = 2.0 / static_cast<double>(T);
    for (int64 i = 0; i < y.size(); ++i)
      dy->data[i] = scale * (y.data[i] - x.data[i]);
  }
  return loss;
}

double HybridLoss(double mse_dec, double ctc_enc, double lambda) {
  SIK_REQUIRE(lambda >= 0.0, "lambda must be non-negative");
  return mse_dec + lambda * ctc_enc;
}

Tensor LogSoftmax(const Tensor &logits) {
  SIK_REQUIRE(logits.rank() == 2, "logits must be a matrix");
  Tensor out = logits;
  const int64 rows = logits.dim(0), cols = logits.dim(1);
  for (int64 r = 0; r < rows; ++r) {
    double mx = out.at(r, 0);
    for (int64 c = 1; c < cols; ++c) mx = std::max(mx, out.at(r, c));
    double sum = 0.0;
    for (int64 c = 0; c < cols; ++c) sum += std::exp(out.at(r, c) - mx);
    const double lse = mx + std::log(sum);
    for (int64 c = 0; c < cols; ++c) out.at(r, c) -= lse;
  }
  return out;
}

}  // namespace sik::nn
