// src/nn/kernels.cc

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

#include "sik/nn/kernels.h"

#include <algorithm>

#include "sik/base/parallel.h"

namespace sik::nn {

namespace {

void CheckMatrix(const Tensor &t, const char *what) {
  SIK_REQUIRE(t.rank() == 2, what, " must be rank 2, got rank ", t.rank());
}

struct ConvDims {
  int64 T, H, W, Cin;       // input
  int64 kt, kh, kw, Cout;   // kernel
  int64 To, Ho, Wo;         // output
  int64 pt, ph, pw;         // pad-before per dim
};

ConvDims ResolveConv(const Tensor &x, const Tensor &kernel,
                     const Conv3dSpec &spec) {
  SIK_REQUIRE(x.rank() == 4, "conv3d input must be T x H x W x C");
  SIK_REQUIRE(kernel.rank() == 5,
              "conv3d kernel must be kt x kh x kw x Cin x Cout");
  ConvDims d;
  d.T = x.dim(0), d.H = x.dim(1), d.W = x.dim(2), d.Cin = x.dim(3);
  d.kt = kernel.dim(0), d.kh = kernel.dim(1), d.kw = kernel.dim(2);
  SIK_REQUIRE(kernel.dim(3) == d.Cin, "kernel expects ", kernel.dim(3),
              " input channels, input has ", d.Cin);
  d.Cout = kernel.dim(4);
  d.To = Conv3dSpec::OutDim(d.T, spec.stride[0]);
  d.Ho = Conv3dSpec::OutDim(d.H, spec.stride[1]);
  d.Wo = Conv3dSpec::OutDim(d.W, spec.stride[2]);
  d.pt = Conv3dSpec::PadBefore(d.T, d.kt, spec.stride[0]);
  d.ph = Conv3dSpec::PadBefore(d.H, d.kh, spec.stride[1]);
  d.pw = Conv3dSpec::PadBefore(d.W, d.kw, spec.stride[2]);
  return d;
}

template <bool kParallel>
void Conv3dForwardImpl(const Tensor &x, const Tensor &kernel,
                       const Tensor &bias, const Conv3dSpec &spec,
                       Tensor *y) {
  const ConvDims d = ResolveConv(x, kernel, spec);
  SIK_REQUIRE(bias.size() == d.Cout, "bias size mismatch");
  *y = Tensor({d.To, d.Ho, d.Wo, d.Cout});
  const int64 out_rows = d.To * d.Ho * d.Wo;
  auto body = [&](int64 row) {
    const int64 to = row / (d.Ho * d.Wo);
    const int64 ho = (row / d.Wo) % d.Ho;
    const int64 wo = row % d.Wo;
    const int64 t0 = to * spec.stride[0] - d.pt;
    const int64 h0 = ho * spec.stride[1] - d.ph;
    const int64 w0 = wo * spec.stride[2] - d.pw;
    for (int64 co = 0; co < d.Cout; ++co) {
      double acc = bias.data[co];
      for (int64 kt = 0; kt < d.kt; ++kt) {
        const int64 ti = t0 + kt;
        if (ti < 0 || ti >= d.T) continue;
        for (int64 kh = 0; kh < d.kh; ++kh) {
          const int64 hi = h0 + kh;
          if (hi < 0 || hi >= d.H) continue;
          for (int64 kw = 0; kw < d.kw; ++kw) {
            const int64 wi = w0 + kw;
            if (wi < 0 || wi >= d.W) continue;
            const double *xp =
                &x.data[((ti * d.H + hi) * d.W + wi) * d.Cin];
            const double *kp =
                &kernel.data[(((kt * d.kh + kh) * d.kw + kw) * d.Cin) *
                                 d.Cout +
                             co];
            for (int64 ci = 0; ci < d.Cin; ++ci)
              acc += xp[ci] * kp[ci * d.Cout];
          }
        }
      }
      y->data[row * d.Cout + co] = acc;
    }
  };
  if constexpr (kParallel) {
    ParallelFor(out_rows, 4, body);
  } else {
    for (int64 row = 0; row < out_rows; ++row) body(row);
  }
}

template <bool kParallel>
void Conv3dBackwardImpl(const Tensor &x, const Tensor &kernel,
                        const Conv3dSpec &spec, const Tensor &dy, Tensor *dx,
                        Tensor *dkernel, Tensor *dbias) {
  const ConvDims d = ResolveConv(x, kernel, spec);
  SIK_REQUIRE(dy.rank() == 4 && dy.dim(0) == d.To && dy.dim(1) == d.Ho &&
                  dy.dim(2) == d.Wo && dy.dim(3) == d.Cout,
              "dy shape mismatch");
  SIK_REQUIRE(dkernel->SameShape(kernel), "dkernel shape mismatch");
  SIK_REQUIRE(dbias->size() == d.Cout, "dbias size mismatch");
  *dx = Tensor(x.shape);
  const auto st = spec.stride;

  // dx in gather form: every input element owns its own sum, so the
  // parallel loop has no write conflicts.
  const int64 in_rows = d.T * d.H * d.W;
  auto dx_body = [&](int64 row) {
    const int64 ti = row / (d.H * d.W);
    const int64 hi = (row / d.W) % d.H;
    const int64 wi = row % d.W;
    for (int64 ci = 0; ci < d.Cin; ++ci) {
      double acc = 0.0;
      for (int64 kt = 0; kt < d.kt; ++kt) {
        const int64 tn = ti + d.pt - kt;
        if (tn % st[0] != 0) continue;
        const int64 to = tn / st[0];
        if (to < 0 || to >= d.To) continue;
        for (int64 kh = 0; kh < d.kh; ++kh) {
          const int64 hn = hi + d.ph - kh;
          if (hn % st[1] != 0) continue;
          const int64 ho = hn / st[1];
          if (ho < 0 || ho >= d.Ho) continue;
          for (int64 kw = 0; kw < d.kw; ++kw) {
            const int64 wn = wi + d.pw - kw;
            if (wn % st[2] != 0) continue;
            const int64 wo = wn / st[2];
            if (wo < 0 || wo >= d.Wo) continue;
            const double *dyp =
                &dy.data[((to * d.Ho + ho) * d.Wo + wo) * d.Cout];
            const double *kp =
                &kernel.data[(((kt * d.kh + kh) * d.kw + kw) * d.Cin + ci) *
                             d.Cout];
            for (int64 co = 0; co < d.Cout; ++co) acc += dyp[co] * kp[co];
          }
        }
      }
      dx->data[row * d.Cin + ci] = acc;
    }
  };

  // dkernel: each kernel element owns its own reduction over the output.
  const int64 kernel_rows = d.kt * d.kh * d.kw * d.Cin;
  auto dk_body = [&](int64 krow) {
    const int64 kt = krow / (d.kh * d.kw * d.Cin);
    const int64 kh = (krow / (d.kw * d.Cin)) % d.kh;
    const int64 kw = (krow / d.Cin) % d.kw;
    const int64 ci = krow % d.Cin;
    std::vector<double> acc(d.Cout, 0.0);
    for (int64 to = 0; to < d.To; ++to) {
      const int64 ti = to * st[0] - d.pt + kt;
      if (ti < 0 || ti >= d.T) continue;
      for (int64 ho = 0; ho < d.Ho; ++ho) {
        const int64 hi = ho * st[1] - d.ph + kh;
        if (hi < 0 || hi >= d.H) continue;
        for (int64 wo = 0; wo < d.Wo; ++wo) {
          const int64 wi = wo * st[2] - d.pw + kw;
          if (wi < 0 || wi >= d.W) continue;
          const double xv = x.data[((ti * d.H + hi) * d.W + wi) * d.Cin + ci];
          const double *dyp =
              &dy.data[((to * d.Ho + ho) * d.Wo + wo) * d.Cout];
          for (int64 co = 0; co < d.Cout; ++co) acc[co] += xv * dyp[co];
        }
      }
    }
    for (int64 co = 0; co < d.Cout; ++co)
      dkernel->data[krow * d.Cout + co] += acc[co];
  };

  if constexpr (kParallel) {
    ParallelFor(in_rows, 4, dx_body);
    ParallelFor(kernel_rows, 2, dk_body);
  } else {
    for (int64 row = 0; row < in_rows; ++row) dx_body(row);
    for (int64 krow = 0; krow < kernel_rows; ++krow) dk_body(krow);
  }

  for (int64 co = 0; co < d.Cout; ++co) {
    double acc = 0.0;
    for (int64 i = co; i < dy.size(); i += d.Cout) acc += dy.data[i];
    dbias->data[co] += acc;
  }
}

}  // namespace

void MatMul(const Tensor &a, const Tensor &b, Tensor *c) {
  CheckMatrix(a, "a");
  CheckMatrix(b, "b");
  const int64 m = a.dim(0), k = a.dim(1), n = b.dim(1);
  SIK_REQUIRE(b.dim(0) == k, "matmul inner dims: ", k, " vs ", b.dim(0));
  *c = Tensor({m, n});
  ParallelFor(m, 8, [&](int64 i) {
    for (int64 p = 0; p < k; ++p) {
      const double av = a.data[i * k + p];
      if (av == 0.0) continue;
      const double *bp = &b.data[p * n];
      double *cp = &c->data[i * n];
      for (int64 j = 0; j < n; ++j) cp[j] += av * bp[j];
    }
  });
}

void MatMulATB(const Tensor &a, const Tensor &b, Tensor *c) {
  CheckMatrix(a, "a");
  CheckMatrix(b, "b");
  const int64 k = a.dim(0), m = a.dim(1), n = b.dim(1);
  SIK_REQUIRE(b.dim(0) == k, "matmul inner dims: ", k, " vs ", b.dim(0));
  *c = Tensor({m, n});
  ParallelFor(m, 8, [&](int64 i) {
    double *cp = &c->data[i * n];
    for (int64 p = 0; p < k; ++p) {
      const double av = a.data[p * m + i];
      if (av == 0.0) continue;
      const double *bp = &b.data[p * n];
      for (int64 j = 0; j < n; ++j) cp[j] += av * bp[j];
    }
  });
}

void MatMulABT(const Tensor &a, const Tensor &b, Tensor *c) {
  CheckMatrix(a, "a");
  CheckMatrix(b, "b");
  const int64 m = a.dim(0), k = a.dim(1), n = b.dim(0);
  SIK_REQUIRE(b.dim(1) == k, "matmul inner dims: ", k, " vs ", b.dim(1));
  *c = Tensor({m, n});
  ParallelFor(m, 8, [&](int64 i) {
    for (int64 j = 0; j < n; ++j) {
      double acc = 0.0;
      const double *ap = &a.data[i * k];
      const double *bp = &b.data[j * k];
      for (int64 p = 0; p < k; ++p) acc += ap[p] * bp[p];
      c->data[i * n + j] = acc;
    }
  });
}

void Conv3dForward(const Tensor &x, const Tensor &kernel, const Tensor &bias,
                   const Conv3dSpec &spec, Tensor *y) {
  Conv3dForwardImpl<true>(x, kernel, bias, spec, y);
}

void Conv3dBackward(const Tensor &x, const Tensor &kernel,
                    const Conv3dSpec &spec, const Tensor &dy, Tensor *dx,
                    Tensor *dkernel, Tensor *dbias) {
  Conv3dBackwardImpl<true>(x, kernel, spec, dy, dx, dkernel, dbias);
}

void MaxPool3dForward(const Tensor &x, const Pool3dSpec &spec, Tensor *y,
                      std::vector<int64> *argmax) {
  SIK_REQUIRE(x.rank() == 4, "pool3d input must be T x H x W x C");
  const int64 T = x.dim(0), H = x.dim(1), W = x.dim(2), C = x.dim(3);
  const int64 wt = std::min(spec.window[0], T), wh = std::min(spec.window[1], H),
              ww = std::min(spec.window[2], W);
  const int64 To = Pool3dSpec::OutDim(T, spec.window[0], spec.stride[0]);
  const int64 Ho = Pool3dSpec::OutDim(H, spec.window[1], spec.stride[1]);
  const int64 Wo = Pool3dSpec::OutDim(W, spec.window[2], spec.stride[2]);
  *y = Tensor({To, Ho, Wo, C});
  argmax->assign(y->size(), 0);
  const int64 out_rows = To * Ho * Wo;
  ParallelFor(out_rows, 16, [&](int64 row) {
    const int64 to = row / (Ho * Wo);
    const int64 ho = (row / Wo) % Ho;
    const int64 wo = row % Wo;
    for (int64 c = 0; c < C; ++c) {
      double best = 0.0;
      int64 best_idx = -1;
      for (int64 dt = 0; dt < wt; ++dt)
        for (int64 dh = 0; dh < wh; ++dh)
          for (int64 dw = 0; dw < ww; ++dw) {
            const int64 ti = to * spec.stride[0] + dt;
            const int64 hi = ho * spec.stride[1] + dh;
            const int64 wi = wo * spec.stride[2] + dw;
            const int64 idx = ((ti * H + hi) * W + wi) * C + c;
            if (best_idx < 0 || x.data[idx] > best) {
              best = x.data[idx];
              best_idx = idx;
            }
          }
      y->data[row * C + c] = best;
      (*argmax)[row * C + c] = best_idx;
    }
  });
}

void MaxPool3dBackward(const std::vector<int64> &argmax, const Tensor &dy,
                       Tensor *dx) {
  SIK_REQUIRE(static_cast<int64>(argmax.size()) == dy.size(),
              "argmax/dy size mismatch");
  dx->Fill(0.0);
  // Windows can overlap in principle; serial scatter keeps determinism.
  for (int64 i = 0; i < dy.size(); ++i) dx->data[argmax[i]] += dy.data[i];
}

namespace ref {

void MatMul(const Tensor &a, const Tensor &b, Tensor *c) {
  CheckMatrix(a, "a");
  CheckMatrix(b, "b");
  const int64 m = a.dim(0), k = a.dim(1), n = b.dim(1);
  SIK_REQUIRE(b.dim(0) == k, "matmul inner dims: ", k, " vs ", b.dim(0));
  *c = Tensor({m, n});
  for (int64 i = 0; i < m; ++i)
    for (int64 p = 0; p < k; ++p) {
      const double av = a.data[i * k + p];
      if (av == 0.0) continue;
      for (int64 j = 0; j < n; ++j) c->data[i * n + j] += av * b.data[p * n + j];
    }
}

void Conv3dForward(const Tensor &x, const Tensor &kernel, const Tensor &bias,
                   const Conv3dSpec &spec, Tensor *y) {
  Conv3dForwardImpl<false>(x, kernel, bias, spec, y);
}

void Conv3dBackward(const Tensor &x, const Tensor &kernel,
                    const Conv3dSpec &spec, const Tensor &dy, Tensor *dx,
                    Tensor *dkernel, Tensor *dbias) {
  Conv3dBackwardImpl<false>(x, kernel, spec, dy, dx, dkernel, dbias);
}

}  // namespace ref

}  // namespace sik::nn
