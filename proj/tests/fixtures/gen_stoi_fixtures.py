#!/usr/bin/env python3
# tests/fixtures/gen_stoi_fixtures.py

# Copyright 2026  The SIK Authors

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#  http://www.apache.org/licenses/LICENSE-2.0
#
# THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
# KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
# WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
# MERCHANTABLITY OR NON-INFRINGEMENT.
# See the Apache 2 License for the specific language governing permissions and
# limitations under the License.

"""Regenerates the frozen STOI oracle fixtures under tests/fixtures/stoi/.

This is an independent NumPy implementation of the short-time objective
intelligibility measure (Taal et al., "An Algorithm for Intelligibility
Prediction of Time-Frequency Weighted Noisy Speech", 2011): 10 kHz rate,
25.6 ms Hann frames with 50% overlap, removal of frames more than 40 dB
below the loudest reference frame, 15 one-third-octave bands from 150 Hz,
384 ms segments, -15 dB SDR clipping, and averaged normalized correlations.

It synthesizes speech-like reference signals, applies a spread of
degradations, writes 16-bit PCM WAV pairs plus expected.csv, and the C++
unit tests then require agreement within +/-0.02. Scores are computed from
the quantized int16 samples divided by 32768, which is exactly what the
toolkit's WAV reader produces, so both sides see identical inputs.

Usage: python3 gen_stoi_fixtures.py [outdir]
"""

import csv
import math
import os
import sys

import numpy as np
from scipy.io import wavfile
from scipy.signal import butter, filtfilt, resample_poly

FS = 10000
FRAME = 256
HOP = 128
NFFT = 512
NUM_BANDS = 15
MIN_FREQ = 150.0
N_SEG = 30
DYN_RANGE = 40.0
BETA = -15.0
EPS = np.finfo(np.float64).eps


def stoi_window():
    # hanning(N+2) with the zero endpoints dropped.
    return np.hanning(FRAME + 2)[1:-1]


def third_octave_matrix():
    f = np.linspace(0, FS, NFFT + 1)[: NFFT // 2 + 1]
    k = np.arange(NUM_BANDS, dtype=float)
    freq_low = MIN_FREQ * np.power(2.0, (2 * k - 1) / 6.0)
    freq_high = MIN_FREQ * np.power(2.0, (2 * k + 1) / 6.0)
    obm = np.zeros((NUM_BANDS, len(f)))
    for i in range(NUM_BANDS):
        lo = int(np.argmin(np.square(f - freq_low[i])))
        hi = int(np.argmin(np.square(f - freq_high[i])))
        obm[i, lo:hi] = 1.0
    return obm


def frame_signal(x):
    w = stoi_window()
    n_frames = 1 + (len(x) - FRAME) // HOP
    idx = np.arange(FRAME)[None, :] + HOP * np.arange(n_frames)[:, None]
    return x[idx] * w[None, :]


def remove_silent_frames(x, y):
    xf = frame_signal(x)
    yf = frame_signal(y)
    energies = 20.0 * np.log10(np.linalg.norm(xf, axis=1) + EPS)
    keep = energies > energies.max() - DYN_RANGE
    xk, yk = xf[keep], yf[keep]
    n_out = (len(xk) - 1) * HOP + FRAME
    xs = np.zeros(n_out)
    ys = np.zeros(n_out)
    for i in range(len(xk)):
        xs[i * HOP : i * HOP + FRAME] += xk[i]
        ys[i * HOP : i * HOP + FRAME] += yk[i]
    return xs, ys


def band_envelopes(sig, obm):
    spec = np.fft.rfft(frame_signal(sig), NFFT, axis=1)
    return np.sqrt(np.square(np.abs(spec)) @ obm.T)


def stoi(ref, deg, fs):
    if fs != FS:
        g = math.gcd(fs, FS)
        ref = resample_poly(ref, FS // g, fs // g)
        deg = resample_poly(deg, FS // g, fs // g)
    n = min(len(ref), len(deg))
    x, y = remove_silent_frames(ref[:n], deg[:n])
    obm = third_octave_matrix()
    ex = band_envelopes(x, obm)
    ey = band_envelopes(y, obm)
    frames = ex.shape[0]
    assert frames >= N_SEG, "not enough active speech"
    clip = 1.0 + 10.0 ** (-BETA / 20.0)
    total, count = 0.0, 0
    for m in range(N_SEG, frames + 1):
        xs = ex[m - N_SEG : m]
        ys = ey[m - N_SEG : m]
        alpha = np.sqrt(np.sum(xs**2, axis=0) / (np.sum(ys**2, axis=0) + EPS))
        yc = np.minimum(ys * alpha[None, :], clip * xs)
        xm = xs - xs.mean(axis=0, keepdims=True)
        ym = yc - yc.mean(axis=0, keepdims=True)
        num = np.sum(xm * ym, axis=0)
        den = np.sqrt(np.sum(xm**2, axis=0)) * np.sqrt(np.sum(ym**2, axis=0))
        total += float(np.sum(num / (den + EPS)))
        count += NUM_BANDS
    return min(max(total / count, 0.0), 1.0)


def speech_like(rng, fs, dur, f0_lo, f0_hi, syllable_hz):
    """Harmonic glide with formant shaping and syllabic energy modulation."""
    n = int(dur * fs)
    t = np.arange(n) / fs
    f0 = np.linspace(f0_lo, f0_hi, n)
    phase = 2.0 * np.pi * np.cumsum(f0) / fs
    sig = np.zeros(n)
    formants = [(700.0, 130.0), (1220.0, 180.0), (2600.0, 260.0)]
    n_harm = int(4000.0 / max(f0_lo, f0_hi))
    for h in range(1, n_harm + 1):
        fh = h * f0
        amp = sum(np.exp(-0.5 * ((fh - fc) / bw) ** 2) for fc, bw in formants)
        sig += amp * np.sin(h * phase + rng.uniform(0.0, 2.0 * np.pi))
    mod = 0.45 + 0.55 * np.square(
        np.sin(np.pi * syllable_hz * t + rng.uniform(0.0, np.pi))
    )
    sig = sig * mod + 0.001 * rng.standard_normal(n)
    return 0.35 * sig / np.max(np.abs(sig))


def add_noise(rng, ref, snr_db):
    sigma = np.sqrt(np.mean(ref**2)) * 10.0 ** (-snr_db / 20.0)
    return ref + sigma * rng.standard_normal(len(ref))


def zero_gaps(rng, ref, fs, n_gaps, gap_ms):
    out = ref.copy()
    gap = int(gap_ms * fs / 1000.0)
    for _ in range(n_gaps):
        start = rng.integers(0, len(ref) - gap)
        out[start : start + gap] = 0.0
    return out


def reverb(rng, ref, fs, decay_ms):
    n_ir = int(decay_ms * fs / 1000.0)
    ir = rng.standard_normal(n_ir) * np.exp(-np.arange(n_ir) / (0.25 * n_ir))
    ir[0] = 1.0
    wet = np.convolve(ref, ir)[: len(ref)]
    return 0.35 * wet / np.max(np.abs(wet))


def phase_scramble(rng, ref):
    spec = np.fft.rfft(ref)
    spec = np.abs(spec) * np.exp(1j * rng.uniform(0, 2 * np.pi, len(spec)))
    return np.fft.irfft(spec, len(ref))


def quantize(sig):
    return np.round(np.clip(sig, -1.0, 1.0) * 32767.0).astype(np.int16)


def main():
    outdir = sys.argv[1] if len(sys.argv) > 1 else os.path.join(
        os.path.dirname(os.path.abspath(__file__)), "stoi"
    )
    os.makedirs(outdir, exist_ok=True)
    rng = np.random.default_rng(20260814)

    fixtures = []

    def emit(name, fs, ref, deg):
        ref_i, deg_i = quantize(ref), quantize(deg)
        wavfile.write(os.path.join(outdir, name + ".ref.wav"), fs, ref_i)
        wavfile.write(os.path.join(outdir, name + ".deg.wav"), fs, deg_i)
        score = stoi(ref_i / 32768.0, deg_i / 32768.0, fs)
        fixtures.append((name, fs, score))
        print(f"{name:24s} fs={fs:5d}  stoi={score:.6f}")

    def fresh(fs, dur=2.0):
        return speech_like(
            rng,
            fs,
            dur,
            f0_lo=rng.uniform(95, 125),
            f0_hi=rng.uniform(150, 190),
            syllable_hz=rng.uniform(3.0, 6.0),
        )

    # Native-rate pairs: no resampling on either side.
    r = fresh(FS)
    emit("identity", FS, r, r.copy())
    for snr in (20, 10, 5, 0, -5):
        r = fresh(FS)
        emit(f"white_snr{snr:+03d}", FS, r, add_noise(rng, r, snr))
    r = fresh(FS)
    emit("gaps", FS, r, zero_gaps(rng, r, FS, n_gaps=6, gap_ms=60))
    r = fresh(FS)
    emit("gaps_noisy", FS, r,
         add_noise(rng, zero_gaps(rng, r, FS, n_gaps=4, gap_ms=80), 10))
    r = fresh(FS)
    b, a = butter(4, 900.0 / (FS / 2), "low")
    emit("lowpass900", FS, r, filtfilt(b, a, r))
    r = fresh(FS)
    b, a = butter(4, 800.0 / (FS / 2), "high")
    emit("highpass800", FS, r, filtfilt(b, a, r))
    r = fresh(FS)
    emit("compand", FS, r, np.sign(r) * np.abs(r) ** 0.6)
    r = fresh(FS)
    emit("hardclip", FS, r, np.clip(r, -0.1, 0.1))
    r = fresh(FS)
    emit("reverb", FS, r, reverb(rng, r, FS, decay_ms=120))
    r = fresh(FS)
    emit("phase_scramble", FS, r, phase_scramble(rng, r))

    # Off-rate pairs exercise the resampling front end on both sides.
    for fs in (8000, 16000):
        r = fresh(fs)
        emit(f"identity_{fs}", fs, r, r.copy())
        r = fresh(fs)
        emit(f"white_snr10_{fs}", fs, r, add_noise(rng, r, 10))
        r = fresh(fs)
        emit(f"gaps_{fs}", fs, r, zero_gaps(rng, r, fs, n_gaps=5, gap_ms=70))

    with open(os.path.join(outdir, "expected.csv"), "w", newline="") as fp:
        w = csv.writer(fp)
        w.writerow(["name", "sample_rate", "stoi"])
        for name, fs, score in fixtures:
            w.writerow([name, fs, f"{score:.6f}"])
    print(f"wrote {len(fixtures)} fixtures to {outdir}")


if __name__ == "__main__":
    main()
