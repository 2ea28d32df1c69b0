// src/dsp/fft.cc

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

#include "sik/dsp/fft.h"

#include <cmath>

namespace sik::dsp {

Fft::Fft(int64 n) : n_(n) {
  SIK_REQUIRE(n >= 1, "FFT size must be positive, got ", n);
  int64 m = n;
  for (int64 p = 2; p * p <= m;) {
    if (m % p == 0) {
      factors_.push_back(p);
      m /= p;
    } else {
      p = (p == 2) ? 3 : p + 2;
    }
  }
  if (m > 1) factors_.push_back(m);
  roots_.resize(n);
  for (int64 j = 0; j < n; ++j) {
    double a = -2.0 * M_PI * static_cast<double>(j) / static_cast<double>(n);
    roots_[j] = cd(std::cos(a), std::sin(a));
  }
}

// Computes the DFT of in[0], in[stride], ..., in[(n-1)*stride] into out.
// scratch must hold n entries; sub-transforms ping-pong between the two
// buffers so no extra allocation happens per level.
void Fft::Transform(const cd *in, int64 n, int64 stride, cd *out,
                    cd *scratch) const {
  const int64 root_step = n_ / n;
  if (n <= 4 || factors_.back() == n) {
    // Direct formula; also the terminal case for a remaining prime factor.
    for (int64 k = 0; k < n; ++k) {
      cd acc(0.0, 0.0);
      for (int64 j = 0; j < n; ++j)
        acc += in[j * stride] * roots_[((j * k) % n) * root_step];
      out[k] = acc;
    }
    return;
  }
  int64 p = 0;
  for (int64 f : factors_)
    if (n % f == 0) {
      p = f;
      break;
    }
  const int64 m = n / p;
  for (int64 r = 0; r < p; ++r)
    Transform(in + r * stride, m, stride * p, scratch + r * m, out + r * m);
  for (int64 k = 0; k < n; ++k) {
    const int64 km = k % m;
    cd acc(0.0, 0.0);
    for (int64 r = 0; r < p; ++r)
      acc += scratch[r * m + km] * roots_[((r * k) % n) * root_step];
    out[k] = acc;
  }
}

void Fft::Forward(const cd *in, cd *out, cd *scratch) const {
  Transform(in, n_, 1, out, scratch);
}

void Fft::Inverse(const cd *in, cd *out, cd *scratch) const {
  cd *tmp = scratch + n_;
  for (int64 i = 0; i < n_; ++i) tmp[i] = std::conj(in[i]);
  Transform(tmp, n_, 1, out, scratch);
  const double inv_n = 1.0 / static_cast<double>(n_);
  for (int64 i = 0; i < n_; ++i) out[i] = std::conj(out[i]) * inv_n;
}

void Fft::Forward(const cd *in, cd *out) const {
  std::vector<cd> scratch(2 * n_);
  Forward(in, out, scratch.data());
}

void Fft::Inverse(const cd *in, cd *out) const {
  std::vector<cd> scratch(2 * n_);
  Inverse(in, out, scratch.data());
}

namespace ref {

void NaiveDft(const cd *in, cd *out, int64 n, bool inverse) {
  const double sign = inverse ? 2.0 * M_PI : -2.0 * M_PI;
  for (int64 k = 0; k < n; ++k) {
    cd acc(0.0, 0.0);
    for (int64 j = 0; j < n; ++j) {
      double a = sign * static_cast<double>(j) * static_cast<double>(k) /
                 static_cast<double>(n);
      acc += in[j] * cd(std::cos(a), std::sin(a));
    }
    out[k] = inverse ? acc / static_cast<double>(n) : acc;
  }
}

}  // namespace ref

}  // namespace sik::dsp
