// src/dsp/griffin-lim.cc

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

#include "sik/dsp/griffin-lim.h"

#include <cmath>

#include "sik/dsp/fft.h"

namespace sik::dsp {

namespace {

// Magnitudes imposed on the phases of ref.
CSpec WithMagnitude(const Spectrogram &mag, const CSpec &ref) {
  CSpec out;
  out.num_frames = mag.num_frames;
  out.num_bins = mag.dim;
  out.data.resize(mag.data.size());
  for (size_t i = 0; i < mag.data.size(); ++i) {
    const double r = std::abs(ref.data[i]);
    // Zero-magnitude bins carry no phase information; use phase 0.
    out.data[i] = r > 0.0 ? ref.data[i] * (mag.data[i] / r)
                          : cd(mag.data[i], 0.0);
  }
  return out;
}

double SpectralError(const CSpec &spec, const Spectrogram &mag) {
  double err = 0.0;
  for (size_t i = 0; i < mag.data.size(); ++i) {
    const double d = std::abs(spec.data[i]) - mag.data[i];
    err += d * d;
  }
  return std::sqrt(err);
}

}  // namespace

std::vector<double> GriffinLim(const Spectrogram &mag, const StftConfig &cfg,
                               int64 iters, const CSpec *init_phase,
                               std::vector<double> *errors) {
  cfg.Validate();
  // iters = 0 with an init phase is the plain inverse; a consistent
  // spectrogram is then reconstructed exactly (up to window-taper edges).
  SIK_REQUIRE(iters >= 0, "iteration count must be non-negative");
  SIK_REQUIRE(mag.dim == cfg.NumBins(), "magnitude has ", mag.dim,
              " bins, config expects ", cfg.NumBins());
  for (double v : mag.data)
    SIK_REQUIRE(std::isfinite(v) && v >= 0.0,
                "magnitudes must be finite and non-negative");
  if (errors) errors->clear();

  CSpec spec;
  if (init_phase) {
    SIK_REQUIRE(init_phase->num_frames == mag.num_frames &&
                    init_phase->num_bins == mag.dim,
                "init phase shape mismatch");
    spec = WithMagnitude(mag, *init_phase);
  } else {
    spec.num_frames = mag.num_frames;
    spec.num_bins = mag.dim;
    spec.data.resize(mag.data.size());
    for (size_t i = 0; i < mag.data.size(); ++i)
      spec.data[i] = cd(mag.data[i], 0.0);
  }

  std::vector<double> x = Istft(spec, cfg);
  for (int64 k = 0; k < iters; ++k) {
    CSpec cur = Stft(x, cfg);
    if (errors) errors->push_back(SpectralError(cur, mag));
    x = Istft(WithMagnitude(mag, cur), cfg);
  }
  if (errors) errors->push_back(SpectralError(Stft(x, cfg), mag));
  return x;
}

}  // namespace sik::dsp
