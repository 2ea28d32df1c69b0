// include/sik/base/parallel.h

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

#ifndef SIK_BASE_PARALLEL_H_
#define SIK_BASE_PARALLEL_H_

#include "sik/base/common.h"

namespace sik {

// Runs f(i) for i in [0, n).  Iterations must be independent: every parallel
// kernel in this library writes each output element from exactly one
// iteration, so results are bit-identical to the serial order regardless of
// thread count.  `grain` is the minimum total iteration count worth the
// fork/join overhead.
template <typename F>
void ParallelFor(int64 n, int64 grain, F &&f) {
#ifdef _OPENMP
  if (n >= grain) {
#pragma omp parallel for schedule(static)
    for (int64 i = 0; i < n; ++i) f(i);
    return;
  }
#else
  (void)grain;
#endif
  for (int64 i = 0; i < n; ++i) f(i);
}

}  // namespace sik

#endif  // SIK_BASE_PARALLEL_H_
