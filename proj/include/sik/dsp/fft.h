// include/sik/dsp/fft.h

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

#ifndef SIK_DSP_FFT_H_
#define SIK_DSP_FFT_H_

#include <complex>
#include <vector>

#include "sik/base/common.h"

namespace sik::dsp {

using cd = std::complex<double>;

// Mixed-radix Cooley-Tukey FFT for arbitrary lengths.  Frame lengths here
// are not powers of two (the default zero-padded window is 510 = 2*3*5*17
// samples), so the transform recurses on the small prime factors and falls
// back to the direct formula for whatever prime remains.  Construction
// precomputes the factorization and twiddle table; Forward/Inverse are const
// and safe to call from multiple threads.
class Fft {
 public:
  explicit Fft(int64 n);

  int64 size() const { return n_; }

  void Forward(const cd *in, cd *out) const;
  void Inverse(const cd *in, cd *out) const;

  // Allocation-free variants for per-frame loops; scratch must hold
  // 2*size() entries.
  void Forward(const cd *in, cd *out, cd *scratch) const;
  void Inverse(const cd *in, cd *out, cd *scratch) const;

 private:
  void Transform(const cd *in, int64 n, int64 stride, cd *out,
                 cd *scratch) const;

  int64 n_;
  std::vector<int64> factors_;
  std::vector<cd> roots_;  // roots_[j] = exp(-2*pi*i*j/n)
};

namespace ref {
// Direct O(n^2) DFT, the serial reference the FFT is tested against.
void NaiveDft(const cd *in, cd *out, int64 n, bool inverse);
}  // namespace ref

}  // namespace sik::dsp

#endif  // SIK_DSP_FFT_H_
