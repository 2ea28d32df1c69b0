// bench/bench-kernels.cc

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

// Parallel kernels vs their serial references. Shapes approximate one
// encoder step at paper scale so the speedup numbers mean something.

#include <benchmark/benchmark.h>

#include "sik/base/rng.h"
#include "sik/dsp/fft.h"
#include "sik/dsp/stft.h"
#include "sik/nn/kernels.h"
#include "sik/nn/tensor.h"

namespace {

using sik::Rng;
using sik::int64;
using sik::nn::Conv3dSpec;
using sik::nn::Tensor;

Tensor RandomTensor(std::vector<int64> shape, Rng *rng) {
  Tensor t(std::move(shape));
  for (double &v : t.data) v = rng->Normal();
  return t;
}

void BM_MatMul(benchmark::State &state) {
  Rng rng(1);
  const Tensor a = RandomTensor({75, 512}, &rng);
  const Tensor b = RandomTensor({512, 1024}, &rng);
  Tensor c({75, 1024});
  for (auto _ : state) {
    sik::nn::MatMul(a, b, &c);
    benchmark::DoNotOptimize(c.data.data());
  }
}
BENCHMARK(BM_MatMul);

void BM_MatMulRef(benchmark::State &state) {
  Rng rng(1);
  const Tensor a = RandomTensor({75, 512}, &rng);
  const Tensor b = RandomTensor({512, 1024}, &rng);
  Tensor c({75, 1024});
  for (auto _ : state) {
    sik::nn::ref::MatMul(a, b, &c);
    benchmark::DoNotOptimize(c.data.data());
  }
}
BENCHMARK(BM_MatMulRef);

// Second conv block at paper scale, batch of one clip.
constexpr int64 kT = 75, kH = 13, kW = 25, kCin = 32, kCout = 32;

void BM_Conv3d(benchmark::State &state) {
  Rng rng(2);
  const Tensor x = RandomTensor({kT, kH, kW, kCin}, &rng);
  const Tensor k = RandomTensor({3, 5, 5, kCin, kCout}, &rng);
  const Tensor bias = RandomTensor({kCout}, &rng);
  Tensor y;
  for (auto _ : state) {
    sik::nn::Conv3dForward(x, k, bias, Conv3dSpec{}, &y);
    benchmark::DoNotOptimize(y.data.data());
  }
}
BENCHMARK(BM_Conv3d);

void BM_Conv3dRef(benchmark::State &state) {
  Rng rng(2);
  const Tensor x = RandomTensor({kT, kH, kW, kCin}, &rng);
  const Tensor k = RandomTensor({3, 5, 5, kCin, kCout}, &rng);
  const Tensor bias = RandomTensor({kCout}, &rng);
  Tensor y;
  for (auto _ : state) {
    sik::nn::ref::Conv3dForward(x, k, bias, Conv3dSpec{}, &y);
    benchmark::DoNotOptimize(y.data.data());
  }
}
BENCHMARK(BM_Conv3dRef);

void BM_Conv3dBackward(benchmark::State &state) {
  Rng rng(3);
  const Tensor x = RandomTensor({kT, kH, kW, kCin}, &rng);
  const Tensor k = RandomTensor({3, 5, 5, kCin, kCout}, &rng);
  const Tensor bias = RandomTensor({kCout}, &rng);
  Tensor y;
  sik::nn::Conv3dForward(x, k, bias, Conv3dSpec{}, &y);
  const Tensor dy = RandomTensor(y.shape, &rng);
  Tensor dx(x.shape), dk(k.shape), db(bias.shape);
  for (auto _ : state) {
    dk.Fill(0.0);
    db.Fill(0.0);
    sik::nn::Conv3dBackward(x, k, Conv3dSpec{}, dy, &dx, &dk, &db);
    benchmark::DoNotOptimize(dx.data.data());
  }
}
BENCHMARK(BM_Conv3dBackward);

void BM_Conv3dBackwardRef(benchmark::State &state) {
  Rng rng(3);
  const Tensor x = RandomTensor({kT, kH, kW, kCin}, &rng);
  const Tensor k = RandomTensor({3, 5, 5, kCin, kCout}, &rng);
  const Tensor bias = RandomTensor({kCout}, &rng);
  Tensor y;
  sik::nn::Conv3dForward(x, k, bias, Conv3dSpec{}, &y);
  const Tensor dy = RandomTensor(y.shape, &rng);
  Tensor dx(x.shape), dk(k.shape), db(bias.shape);
  for (auto _ : state) {
    dk.Fill(0.0);
    db.Fill(0.0);
    sik::nn::ref::Conv3dBackward(x, k, Conv3dSpec{}, dy, &dx, &dk, &db);
    benchmark::DoNotOptimize(dx.data.data());
  }
}
BENCHMARK(BM_Conv3dBackwardRef);

void BM_Stft(benchmark::State &state) {
  Rng rng(4);
  std::vector<double> samples(24000);
  for (double &v : samples) v = rng.Normal();
  const sik::dsp::StftConfig cfg;
  for (auto _ : state) {
    const sik::dsp::CSpec spec = sik::dsp::Stft(samples, cfg);
    benchmark::DoNotOptimize(spec.data.data());
  }
}
BENCHMARK(BM_Stft);

void BM_StftNaive(benchmark::State &state) {
  Rng rng(4);
  std::vector<double> samples(24000);
  for (double &v : samples) v = rng.Normal();
  const sik::dsp::StftConfig cfg;
  for (auto _ : state) {
    const sik::dsp::CSpec spec = sik::dsp::ref::StftNaive(samples, cfg);
    benchmark::DoNotOptimize(spec.data.data());
  }
}
BENCHMARK(BM_StftNaive);

}  // namespace

BENCHMARK_MAIN();
