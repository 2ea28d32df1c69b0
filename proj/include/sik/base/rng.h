// include/sik/base/rng.h

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

#ifndef SIK_BASE_RNG_H_
#define SIK_BASE_RNG_H_

#include <cmath>
#include <vector>

#include "sik/base/common.h"

namespace sik {

// Deterministic PRNG passed explicitly wherever randomness is needed.
// The generator and every distribution below are implemented here rather
// than taken from <random> so that streams are bit-identical across
// compilers and standard libraries.
class Rng {
 public:
  explicit Rng(uint64 seed) : state_(seed) {
    // splitmix64 warm-up decorrelates small consecutive seeds.
    for (int i = 0; i < 4; ++i) NextU64();
  }

  uint64 NextU64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64 z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double Uniform() {
    return static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
  }

  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

  // Uniform integer in [lo, hi] inclusive.
  int64 UniformInt(int64 lo, int64 hi) {
    SIK_REQUIRE(hi >= lo, "UniformInt range empty: ", lo, "..", hi);
    uint64 span = static_cast<uint64>(hi - lo) + 1;
    return lo + static_cast<int64>(NextU64() % span);
  }

  // Standard normal via Box-Muller.
  double Normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = Uniform(), u2 = Uniform();
    while (u1 <= 1e-300) u1 = Uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  double Normal(double mean, double stddev) { return mean + stddev * Normal(); }

  template <typename T>
  void Shuffle(std::vector<T> *v) {
    for (int64 i = static_cast<int64>(v->size()) - 1; i > 0; --i) {
      int64 j = UniformInt(0, i);
      std::swap((*v)[i], (*v)[j]);
    }
  }

  // Derives an independent stream for a sub-task; mixing distinct tags
  // yields distinct streams.
  Rng Fork(uint64 tag) {
    uint64 a = NextU64();
    return Rng(a ^ (tag * 0x9e3779b97f4a7c15ULL + 0x165667b19e3779f9ULL));
  }

 private:
  uint64 state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Stateless seed mixer for reproducible per-(epoch, sample) streams.
inline uint64 MixSeed(uint64 a, uint64 b, uint64 c = 0) {
  Rng r(a ^ (b * 0xff51afd7ed558ccdULL) ^ (c * 0xc4ceb9fe1a85ec53ULL));
  return r.NextU64();
}

}  // namespace sik

#endif  // SIK_BASE_RNG_H_
