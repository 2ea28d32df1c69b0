// src/nn/init.cc

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

#include "sik/nn/init.h"

#include <cmath>

namespace sik::nn {

void InitHe(Tensor *t, int64 fan_in, Rng *rng) {
  SIK_REQUIRE(fan_in > 0, "fan_in must be positive");
  const double stddev = std::sqrt(2.0 / static_cast<double>(fan_in));
  for (double &v : t->data) v = stddev * rng->Normal();
}

void InitOrthogonal(Tensor *t, Rng *rng) {
  SIK_REQUIRE(t->rank() == 2, "orthogonal init expects a matrix");
  const int64 rows = t->dim(0), cols = t->dim(1);
  // Orthonormalize along the longer axis so the smaller dimension carries
  // the identity Gram matrix.
  const bool by_rows = cols >= rows;
  const int64 n = by_rows ? rows : cols;   // number of vectors
  const int64 len = by_rows ? cols : rows;  // vector length, len >= n
  std::vector<std::vector<double>> q(n, std::vector<double>(len));
  for (auto &vec : q)
    for (double &v : vec) v = rng->Normal();
  // Modified Gram-Schmidt.
  for (int64 i = 0; i < n; ++i) {
    for (int64 j = 0; j < i; ++j) {
      double dot = 0.0;
      for (int64 k = 0; k < len; ++k) dot += q[i][k] * q[j][k];
      for (int64 k = 0; k < len; ++k) q[i][k] -= dot * q[j][k];
    }
    double norm = 0.0;
    for (int64 k = 0; k < len; ++k) norm += q[i][k] * q[i][k];
    norm = std::sqrt(norm);
    SIK_REQUIRE(norm > 1e-12, "degenerate random matrix in orthogonal init");
    for (int64 k = 0; k < len; ++k) q[i][k] /= norm;
  }
  for (int64 r = 0; r < rows; ++r)
    for (int64 c = 0; c < cols; ++c)
      t->at(r, c) = by_rows ? q[r][c] : q[c][r];
}

void InitLstmRecurrent(Tensor *wh, Rng *rng) {
  SIK_REQUIRE(wh->rank() == 2 && wh->dim(1) == 4 * wh->dim(0),
              "recurrent kernel must be [H x 4H]");
  const int64 H = wh->dim(0);
  for (int64 gate = 0; gate < 4; ++gate) {
    Tensor block({H, H});
    InitOrthogonal(&block, rng);
    for (int64 r = 0; r < H; ++r)
      for (int64 c = 0; c < H; ++c)
        wh->at(r, gate * H + c) = block.at(r, c);
  }
}

}  // namespace sik::nn
