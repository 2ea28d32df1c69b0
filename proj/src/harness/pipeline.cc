// src/harness/pipeline.cc

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

#include "sik/harness/pipeline.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <numeric>

#include "sik/base/io.h"
#include "sik/base/rng.h"
#include "sik/corrupt/noise.h"
#include "sik/dsp/griffin-lim.h"
#include "sik/dsp/mel.h"
#include "sik/dsp/mels-io.h"
#include "sik/dsp/stft.h"
#include "sik/dsp/wav-io.h"
#include "sik/eval/metrics.h"
#include "sik/eval/stoi.h"
#include "sik/harness/dataset.h"
#include "sik/harness/toy.h"
#include "sik/model/alphabet.h"
#include "sik/model/inpaint.h"
#include "sik/model/train.h"
#include "sik/nn/checkpoint.h"

namespace sik::harness {

namespace fs = std::filesystem;

namespace {

// Seed salts for the per-stage random streams.
constexpr uint64 kMaskSalt = 0xc0;
constexpr uint64 kNoiseSalt = 0x40;
constexpr uint64 kValSplitSalt = 0x7a1;

struct Settings {
  // dataset
  std::string dataset_root;
  SplitSpec split;
  std::string eval_split;
  std::string alphabet_path, dictionary_path;
  // dsp
  int32 sample_rate = 8000;
  double preemphasis = 0.97;
  dsp::StftConfig stft;
  int64 mel_bins = 64;
  double fmin_hz = 0.0, fmax_hz = 4000.0;
  double range_db = 80.0;
  // corrupt
  corrupt::GapSpec gap;
  std::string noise_kind;  // none | white | env
  double noise_magnitude = 0.1;
  // model
  std::string model_kind;  // av | asi
  model::EncoderConfig enc;
  model::DecoderConfig dec;
  // train
  model::TrainConfig train;
  double val_fraction = 0.2;
  bool augment = false;
  corrupt::AugmentPolicy policy;
  // inpaint / evaluate
  bool informed = true;
  int64 gl_iters = 32;
  std::string pesq_binary;
  bool corrective = true;
  bool resynth_reference = false;
  // toy generation
  ToyCorpusSpec toy;

  double FrameMs() const {
    return 1000.0 * static_cast<double>(stft.hop_size) /
           static_cast<double>(sample_rate);
  }
};

struct RunContext {
  Config cfg;  // with run.name/run.seed reflecting overrides
  std::string run_name;
  uint64 seed = 0;
  fs::path root, spectrograms, masks, checkpoints, recon, reports;
  Settings s;
};

std::vector<std::string> SplitCommas(const std::string &text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      const std::string t = Trim(cur);
      if (!t.empty()) out.push_back(t);
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

// Runs one parse step, downgrading its exception to a listed problem so
// validation reports everything wrong at once.
template <typename F>
void Check(std::vector<std::string> *problems, F &&f) {
  try {
    f();
  } catch (const Error &e) {
    problems->push_back(e.what());
  }
}

Settings ParseSettings(const Config &cfg, uint64 seed,
                       std::vector<std::string> *problems) {
  Settings s;
  auto C = [problems](auto &&f) { Check(problems, f); };

  C([&] { s.dataset_root = cfg.GetString("dataset.root"); });
  C([&] {
    s.split.train_speakers =
        SplitCommas(cfg.GetString("dataset.train_speakers", ""));
    s.split.seen_test_speakers =
        SplitCommas(cfg.GetString("dataset.seen_test_speakers", ""));
    s.split.unseen_test_speakers =
        SplitCommas(cfg.GetString("dataset.unseen_test_speakers", ""));
    s.split.seed = seed;
  });
  C([&] {
    s.eval_split = cfg.GetString("dataset.eval_split", "unseen-test");
    SplitFromName(s.eval_split);  // rejects unknown names
  });
  C([&] { s.alphabet_path = cfg.GetString("alphabet.path", "data/alphabet.txt"); });
  C([&] {
    s.dictionary_path =
        cfg.GetString("dictionary.path", "data/grid_dictionary.txt");
  });

  C([&] {
    s.sample_rate = static_cast<int32>(cfg.GetInt("audio.sample_rate", 8000));
    SIK_REQUIRE(s.sample_rate > 0, "audio.sample_rate must be positive");
  });
  C([&] {
    s.preemphasis = cfg.GetDouble("audio.preemphasis", 0.97);
    SIK_REQUIRE(s.preemphasis >= 0 && s.preemphasis < 1,
                "audio.preemphasis must be in [0,1)");
  });
  C([&] {
    s.stft.window_size = cfg.GetInt("stft.window", 320);
    s.stft.hop_size = cfg.GetInt("stft.hop", 160);
    s.stft.fft_size = cfg.GetInt("stft.fft", 510);
    s.stft.Validate();
  });
  C([&] {
    s.mel_bins = cfg.GetInt("mel.bins", 64);
    s.fmin_hz = cfg.GetDouble("mel.fmin_hz", 0.0);
    s.fmax_hz = cfg.GetDouble("mel.fmax_hz",
                              static_cast<double>(s.sample_rate) / 2.0);
    s.range_db = cfg.GetDouble("mel.range_db", 80.0);
    SIK_REQUIRE(s.mel_bins >= 1 && s.range_db > 0 && s.fmax_hz > s.fmin_hz,
                "bad mel settings");
  });

  C([&] {
    s.gap.mean_total_ms = cfg.GetDouble("corrupt.total_mean_ms", 900.0);
    s.gap.std_total_ms = cfg.GetDouble("corrupt.total_std_ms", 300.0);
    s.gap.min_gap_ms = cfg.GetDouble("corrupt.min_gap_ms", 36.0);
    s.gap.max_gaps = cfg.GetInt("corrupt.max_gaps", 8);
    SIK_REQUIRE(s.gap.max_gaps >= 1, "corrupt.max_gaps must be >= 1");
  });
  C([&] {
    s.noise_kind = cfg.GetString("corrupt.noise", "none");
    SIK_REQUIRE(s.noise_kind == "none" || s.noise_kind == "white" ||
                    s.noise_kind == "env",
                "corrupt.noise must be none, white or env");
    s.noise_magnitude = cfg.GetDouble(
        "corrupt.noise_magnitude", s.noise_kind == "env" ? 0.05 : 0.1);
  });

  C([&] {
    s.model_kind = cfg.GetString("model.kind", "av");
    SIK_REQUIRE(s.model_kind == "av" || s.model_kind == "asi",
                "model.kind must be av or asi");
  });
  C([&] {
    s.enc.video_frames = cfg.GetInt("model.video_frames", 75);
    s.enc.height = cfg.GetInt("model.video_height", 50);
    s.enc.width = cfg.GetInt("model.video_width", 100);
    s.enc.channels = cfg.GetInt("model.video_channels", 3);
    const std::vector<int64> ch =
        cfg.GetIntList("model.conv_channels", {128, 256, 75});
    SIK_REQUIRE(ch.size() == 3, "model.conv_channels needs 3 entries");
    for (int i = 0; i < 3; ++i) s.enc.conv_channels[i] = ch[i];
    s.enc.dropout_rate = cfg.GetDouble("model.dropout", 0.5);
    s.enc.blstm_hidden = cfg.GetInt("model.blstm_hidden", 256);
    s.enc.dense_dim = cfg.GetInt("model.dense_dim", 256);
    s.enc.classes = cfg.GetInt("model.classes", 41);
    s.dec.mel_bins = s.mel_bins;
    s.dec.blstm_hidden = s.enc.blstm_hidden;
    s.dec.context_dim = s.enc.ContextDim();
  });

  C([&] {
    s.train.lr = cfg.GetDouble("train.lr", 1e-4);
    s.train.batch_size = cfg.GetInt("train.batch_size", 2);
    s.train.lambda = cfg.GetDouble("train.lambda", 0.001);
    s.train.patience = cfg.GetInt("train.patience", 5);
    s.train.stop_patience = cfg.GetInt("train.stop_patience", 20);
    s.train.decay_factor = cfg.GetDouble("train.decay_factor", 0.5);
    s.train.improvement_threshold =
        cfg.GetDouble("train.improvement_threshold", 1e-4);
    s.train.max_epochs = cfg.GetInt("train.max_epochs", 300);
    s.train.seed = seed;
    s.train.Validate();
  });
  C([&] {
    s.val_fraction = cfg.GetDouble("train.val_fraction", 0.2);
    SIK_REQUIRE(s.val_fraction >= 0 && s.val_fraction < 1,
                "train.val_fraction must be in [0,1)");
  });
  C([&] {
    s.augment = cfg.GetBool("train.augment", false);
    s.policy.p_aug = cfg.GetDouble("augment.p", 0.5);
    s.policy.p_affine = cfg.GetDouble("augment.p_affine", 0.0);
    s.policy.white_magnitude = cfg.GetDouble("augment.white", 0.1);
    s.policy.env_magnitude = cfg.GetDouble("augment.env", 0.05);
    s.policy.frame_ms = s.FrameMs();
    s.policy.extra_gap = s.gap;
  });

  C([&] { s.informed = cfg.GetBool("inpaint.informed", true); });
  C([&] {
    s.gl_iters = cfg.GetInt("gl.iters", 32);
    SIK_REQUIRE(s.gl_iters >= 1, "gl.iters must be >= 1");
  });
  C([&] { s.pesq_binary = cfg.GetString("eval.pesq_binary", ""); });
  C([&] { s.corrective = cfg.GetBool("eval.corrective", true); });
  C([&] {
    s.resynth_reference = cfg.GetBool("eval.resynth_reference", false);
  });

  C([&] {
    s.toy.n_utterances = cfg.GetInt("toy.n_utterances", 8);
    s.toy.speakers = SplitCommas(cfg.GetString("toy.speakers", "s1"));
    s.toy.sample_rate = s.sample_rate;
    s.toy.audio_samples = cfg.GetInt("toy.audio_samples", 6560);
    s.toy.video_frames = cfg.GetInt("toy.video_frames", 20);
    s.toy.video_height = cfg.GetInt("toy.video_height", 16);
    s.toy.video_width = cfg.GetInt("toy.video_width", 24);
    s.toy.seed = static_cast<uint64>(cfg.GetInt("toy.seed", 0));
  });
  return s;
}

RunContext LoadRun(const PipelineOptions &opts) {
  SIK_REQUIRE(!opts.config_path.empty(), "no config file given");
  RunContext ctx;
  ctx.cfg = Config::FromFile(opts.config_path);

  std::vector<std::string> problems;
  Check(&problems, [&] {
    const std::string named = ctx.cfg.GetString("run.name", "");
    ctx.run_name = !opts.run_override.empty() ? opts.run_override : named;
    SIK_REQUIRE(!ctx.run_name.empty(), "run.name is not set (or pass --run)");
  });
  ctx.seed = opts.seed_overridden
                 ? opts.seed
                 : static_cast<uint64>(ctx.cfg.GetInt("run.seed", 0));
  const std::string runs_dir = ctx.cfg.GetString("run.dir", "runs");
  ctx.s = ParseSettings(ctx.cfg, ctx.seed, &problems);
  for (const std::string &key : ctx.cfg.UnusedKeys())
    problems.push_back(StrCat("unknown config key '", key, "'"));
  if (!problems.empty()) {
    std::string msg = "config validation failed:";
    for (const std::string &p : problems) msg += "\n  - " + p;
    Die(msg);
  }

  ctx.cfg.Set("run.name", ctx.run_name);
  ctx.cfg.Set("run.seed", StrCat(ctx.seed));
  ctx.root = fs::path(runs_dir) / ctx.run_name;
  ctx.spectrograms = ctx.root / "spectrograms";
  ctx.masks = ctx.root / "masks";
  ctx.checkpoints = ctx.root / "checkpoints";
  ctx.recon = ctx.root / "recon";
  ctx.reports = ctx.root / "reports";
  return ctx;
}

void EnsureRunDirs(const RunContext &ctx) {
  for (const fs::path &p : {ctx.root, ctx.spectrograms, ctx.masks,
                            ctx.checkpoints, ctx.recon, ctx.reports})
    fs::create_directories(p);
  // The effective config makes every run self-describing.
  WriteTextFile((ctx.root / "config.txt").string(), ctx.cfg.ToString());
}

void RequireArtifact(const fs::path &path, const std::string &stage) {
  if (!fs::exists(path))
    Die("missing ", path.string(), ": run the ", stage, " stage first");
}

// ---------------------------------------------------------------------------
// Manifest: one row per loaded utterance, written by preprocess.

struct ManifestRow {
  std::string id, speaker, split, audio_path, frames_path, transcript;
};

std::string ManifestPathFor(const RunContext &ctx) {
  return (ctx.root / "manifest.tsv").string();
}

void WriteManifest(const RunContext &ctx, const std::vector<ManifestRow> &rows) {
  std::string out = "id\tspeaker\tsplit\taudio\tframes\ttranscript\n";
  for (const ManifestRow &r : rows)
    out += StrCat(r.id, "\t", r.speaker, "\t", r.split, "\t", r.audio_path,
                  "\t", r.frames_path, "\t", r.transcript, "\n");
  WriteTextFile(ManifestPathFor(ctx), out);
}

std::vector<std::string> SplitTabs(const std::string &line) {
  std::vector<std::string> out(1);
  for (char c : line) {
    if (c == '\t')
      out.emplace_back();
    else
      out.back() += c;
  }
  return out;
}

std::vector<ManifestRow> ReadManifest(const RunContext &ctx) {
  RequireArtifact(ManifestPathFor(ctx), "preprocess");
  const std::vector<std::string> lines =
      SplitLines(ReadTextFile(ManifestPathFor(ctx)));
  std::vector<ManifestRow> rows;
  for (size_t i = 1; i < lines.size(); ++i) {
    if (Trim(lines[i]).empty()) continue;
    const std::vector<std::string> f = SplitTabs(lines[i]);
    SIK_REQUIRE(f.size() == 6, "manifest line ", i + 1, " is malformed");
    rows.push_back({f[0], f[1], f[2], f[3], f[4], f[5]});
  }
  return rows;
}

std::vector<ManifestRow> RowsForSplit(const std::vector<ManifestRow> &rows,
                                      const std::string &split) {
  std::vector<ManifestRow> out;
  for (const ManifestRow &r : rows)
    if (r.split == split) out.push_back(r);
  return out;
}

std::string CleanMelsPath(const RunContext &ctx, const std::string &id) {
  return (ctx.spectrograms / (id + ".clean.mels")).string();
}
std::string CorruptMelsPath(const RunContext &ctx, const std::string &id) {
  return (ctx.spectrograms / (id + ".corrupt.mels")).string();
}
std::string CorruptVideoPath(const RunContext &ctx, const std::string &id) {
  return (ctx.masks / (id + ".corrupt.vidt")).string();
}
std::string MaskFilePath(const RunContext &ctx) {
  return (ctx.masks / "masks.txt").string();
}
std::string ReconMelsPath(const RunContext &ctx, const std::string &id) {
  return (ctx.recon / (id + ".mels")).string();
}
std::string ReconWavPath(const RunContext &ctx, const std::string &id) {
  return (ctx.recon / (id + ".wav")).string();
}
std::string ReconTextPath(const RunContext &ctx, const std::string &id) {
  return (ctx.recon / (id + ".txt")).string();
}
std::string CheckpointPath(const RunContext &ctx) {
  return (ctx.checkpoints / "best.ckpt").string();
}

dsp::MelFilterbank Filterbank(const Settings &s) {
  return dsp::BuildMelFilterbank(s.stft.NumBins(), s.mel_bins, s.sample_rate,
                                 s.fmin_hz, s.fmax_hz);
}

// ---------------------------------------------------------------------------
// Stages.

void StagePreprocess(const RunContext &ctx) {
  const Settings &s = ctx.s;
  IngestResult ingest = IngestDataset(s.dataset_root, s.split);
  for (const std::string &r : ingest.rejected)
    std::cerr << "rejected " << r << "\n";
  SIK_REQUIRE(!ingest.records.empty(), "no loadable utterances under ",
              s.dataset_root);
  std::sort(ingest.records.begin(), ingest.records.end(),
            [](const UtteranceRecord &a, const UtteranceRecord &b) {
              return a.id < b.id;
            });

  const dsp::MelFilterbank fb = Filterbank(s);
  std::vector<dsp::Spectrogram> mags;
  std::vector<ManifestRow> rows;
  double ref_db = -1e300;
  for (const UtteranceRecord &rec : ingest.records) {
    dsp::Waveform w = dsp::Resample(dsp::ReadWav(rec.audio_path), s.sample_rate);
    w = dsp::PreEmphasis(w, s.preemphasis);
    const dsp::Spectrogram mag = dsp::Magnitude(dsp::Stft(w.samples, s.stft));
    ref_db = std::max(ref_db, dsp::MelPeakDb(mag, fb));
    mags.push_back(mag);

    ManifestRow row;
    row.id = rec.id;
    row.speaker = rec.speaker;
    row.split = SplitName(rec.split);
    row.audio_path = rec.audio_path;
    row.frames_path = rec.frames_path;
    row.transcript = eval::NormalizeText(
        ParseAlignment(ReadTextFile(rec.align_path)).Transcript());
    rows.push_back(std::move(row));
  }

  // The corpus-wide Mel peak anchors the dB-to-[0,1] affine map.
  for (size_t i = 0; i < rows.size(); ++i) {
    const dsp::MelSpectrogram mel =
        dsp::ToMelLogNorm(mags[i], fb, ref_db - s.range_db, ref_db);
    dsp::WriteMels(CleanMelsPath(ctx, rows[i].id), mel);
  }
  WriteManifest(ctx, rows);
  std::cout << "preprocess: " << rows.size() << " utterances, "
            << ingest.rejected.size() << " rejected, mel peak "
            << ref_db << " dB\n";
}

void StageCorrupt(const RunContext &ctx) {
  const Settings &s = ctx.s;
  const std::vector<ManifestRow> rows = ReadManifest(ctx);
  RequireArtifact(CleanMelsPath(ctx, rows.front().id), "preprocess");

  // Pass 1: clean spectrograms (the env noise source is the next
  // utterance's clean spectrogram, cyclically).
  std::vector<dsp::MelSpectrogram> clean;
  for (const ManifestRow &r : rows)
    clean.push_back(dsp::ReadMels(CleanMelsPath(ctx, r.id)));

  std::map<std::string, corrupt::GapMask> masks;
  for (size_t i = 0; i < rows.size(); ++i) {
    corrupt::GapSpec gs = s.gap;
    gs.seed = MixSeed(ctx.seed, kMaskSalt, static_cast<uint64>(i));
    const corrupt::GapMask mask =
        corrupt::SampleGapMask(gs, clean[i].num_frames, s.FrameMs());
    dsp::MelSpectrogram corrupted = corrupt::ApplyMask(clean[i], mask);

    if (s.noise_kind != "none") {
      corrupt::NoiseSpec ns;
      ns.kind = s.noise_kind == "white" ? corrupt::NoiseKind::kWhite
                                        : corrupt::NoiseKind::kEnvironmental;
      ns.magnitude = s.noise_magnitude;
      const dsp::MelSpectrogram &env = clean[(i + 1) % clean.size()];
      if (ns.kind == corrupt::NoiseKind::kEnvironmental) ns.env_source = &env;
      corrupted = corrupt::AddNoise(
          corrupted, ns, MixSeed(ctx.seed, kNoiseSalt, static_cast<uint64>(i)));
    }
    dsp::WriteMels(CorruptMelsPath(ctx, rows[i].id), corrupted);

    const corrupt::VideoClip video = ReadVideoAny(rows[i].frames_path);
    corrupt::WriteVidt(
        CorruptVideoPath(ctx, rows[i].id),
        corrupt::ApplyVideoMask(
            video, corrupt::DeriveVideoMask(mask, video.num_frames)));
    masks[rows[i].id] = mask;
  }
  corrupt::WriteMaskFile(MaskFilePath(ctx), masks);
  std::cout << "corrupt: " << rows.size() << " utterances masked\n";
}

model::TrainSample LoadSample(const RunContext &ctx, const ManifestRow &row,
                              const corrupt::GapMask &mask,
                              const model::Alphabet &alphabet,
                              bool with_video) {
  model::TrainSample ts;
  ts.id = row.id;
  ts.audio = dsp::ReadMels(CorruptMelsPath(ctx, row.id));
  ts.clean = dsp::ReadMels(CleanMelsPath(ctx, row.id));
  if (with_video) ts.video = corrupt::ReadVidt(CorruptVideoPath(ctx, row.id));
  ts.mask = mask;
  ts.labels = alphabet.Encode(row.transcript);
  return ts;
}

void StageTrain(const RunContext &ctx) {
  const Settings &s = ctx.s;
  const std::vector<ManifestRow> all_rows = ReadManifest(ctx);
  RequireArtifact(MaskFilePath(ctx), "corrupt");
  const std::map<std::string, corrupt::GapMask> masks =
      corrupt::ReadMaskFile(MaskFilePath(ctx));
  const model::Alphabet alphabet = model::Alphabet::FromFile(s.alphabet_path);
  const bool av = s.model_kind == "av";
  if (av)
    SIK_REQUIRE(s.enc.classes == alphabet.classes(), "model.classes ",
                s.enc.classes, " does not match the alphabet (",
                alphabet.classes(), ")");

  const std::vector<ManifestRow> rows = RowsForSplit(all_rows, "train");
  SIK_REQUIRE(!rows.empty(), "no train-split utterances in the manifest");
  std::vector<model::TrainSample> samples;
  for (const ManifestRow &r : rows) {
    RequireArtifact(CorruptMelsPath(ctx, r.id), "corrupt");
    samples.push_back(LoadSample(ctx, r, masks.at(r.id), alphabet, av));
  }

  // 80/20 by utterance under the run seed; val_fraction 0 validates on the
  // training set itself (overfit runs).
  std::vector<int64> idx(samples.size());
  std::iota(idx.begin(), idx.end(), 0);
  Rng split_rng(MixSeed(ctx.seed, kValSplitSalt));
  split_rng.Shuffle(&idx);
  const int64 n_val = std::llround(s.val_fraction *
                                   static_cast<double>(samples.size()));
  std::vector<model::TrainSample> train_set, val_set;
  for (size_t i = 0; i < idx.size(); ++i) {
    if (static_cast<int64>(i) < n_val)
      val_set.push_back(samples[idx[i]]);
    else
      train_set.push_back(samples[idx[i]]);
  }
  if (val_set.empty()) val_set = train_set;

  corrupt::AugmentPolicy policy = s.policy;
  policy.env_source = &train_set.front().clean;

  model::TrainResult result;
  if (av) {
    model::AvModel m(s.enc, s.dec, ctx.seed);
    result = model::TrainAv(&m, train_set, val_set, s.train,
                            s.augment ? &policy : nullptr);
    nn::SaveCheckpoint(CheckpointPath(ctx), m.Params());
  } else {
    model::AsiModel m(s.dec, ctx.seed);
    result = model::TrainAsi(&m, train_set, val_set, s.train);
    nn::SaveCheckpoint(CheckpointPath(ctx), m.Params());
  }
  WriteTextFile((ctx.reports / "training_history.csv").string(),
                model::HistoryCsv(result.history));
  std::cout << "train: " << result.history.size() << " epochs, best val loss "
            << result.best_val_loss << " at epoch " << result.best_epoch
            << (result.stopped_early ? " (early stop)" : "") << "\n";
}

void StageInpaint(const RunContext &ctx) {
  const Settings &s = ctx.s;
  const std::vector<ManifestRow> all_rows = ReadManifest(ctx);
  RequireArtifact(CheckpointPath(ctx), "train");
  RequireArtifact(MaskFilePath(ctx), "corrupt");
  const std::map<std::string, corrupt::GapMask> masks =
      corrupt::ReadMaskFile(MaskFilePath(ctx));
  const model::Alphabet alphabet = model::Alphabet::FromFile(s.alphabet_path);
  const bool av = s.model_kind == "av";

  const std::vector<ManifestRow> rows = RowsForSplit(all_rows, s.eval_split);
  SIK_REQUIRE(!rows.empty(), "no '", s.eval_split,
              "' utterances in the manifest");

  model::AvModel av_model(s.enc, s.dec, ctx.seed);
  model::AsiModel asi_model(s.dec, ctx.seed);
  if (av)
    nn::LoadCheckpoint(CheckpointPath(ctx), av_model.Params());
  else
    nn::LoadCheckpoint(CheckpointPath(ctx), asi_model.Params());

  const dsp::MelFilterbank fb = Filterbank(s);
  for (const ManifestRow &row : rows) {
    RequireArtifact(CorruptMelsPath(ctx, row.id), "corrupt");
    const dsp::MelSpectrogram audio =
        dsp::ReadMels(CorruptMelsPath(ctx, row.id));
    const corrupt::GapMask &mask = masks.at(row.id);
    const corrupt::GapMask *m = s.informed ? &mask : nullptr;

    dsp::MelSpectrogram recon;
    std::string hypothesis;
    if (av) {
      const corrupt::VideoClip video =
          corrupt::ReadVidt(CorruptVideoPath(ctx, row.id));
      recon = model::Inpaint(&av_model, audio, video, m);
      const model::Encoder::Output enc =
          av_model.encoder.Forward(model::VideoToTensor(video), nullptr);
      hypothesis = model::GreedyCtcDecode(enc.log_probs, alphabet);
    } else {
      recon = model::InpaintAsi(&asi_model, audio, m);
    }
    dsp::WriteMels(ReconMelsPath(ctx, row.id), recon);
    WriteTextFile(ReconTextPath(ctx, row.id), hypothesis + "\n");

    dsp::Waveform wav;
    wav.sample_rate = s.sample_rate;
    wav.samples = dsp::GriffinLim(dsp::InvertMel(recon, fb), s.stft,
                                  s.gl_iters);
    dsp::WriteWav(ReconWavPath(ctx, row.id), wav);
  }
  std::cout << "inpaint: " << rows.size() << " utterances reconstructed ("
            << (s.informed ? "informed" : "uninformed") << ")\n";
}

void StageEvaluate(const RunContext &ctx) {
  const Settings &s = ctx.s;
  const std::vector<ManifestRow> all_rows = ReadManifest(ctx);
  RequireArtifact(MaskFilePath(ctx), "corrupt");
  const std::map<std::string, corrupt::GapMask> masks =
      corrupt::ReadMaskFile(MaskFilePath(ctx));
  const std::vector<ManifestRow> rows = RowsForSplit(all_rows, s.eval_split);
  SIK_REQUIRE(!rows.empty(), "no '", s.eval_split,
              "' utterances in the manifest");
  const eval::Dictionary dict = eval::Dictionary::FromFile(s.dictionary_path);
  const dsp::MelFilterbank fb = Filterbank(s);

  std::vector<eval::UttScore> scores;
  for (const ManifestRow &row : rows) {
    RequireArtifact(ReconMelsPath(ctx, row.id), "inpaint");
    const dsp::MelSpectrogram clean = dsp::ReadMels(CleanMelsPath(ctx, row.id));
    const dsp::MelSpectrogram recon = dsp::ReadMels(ReconMelsPath(ctx, row.id));

    eval::UttScore u;
    u.id = row.id;
    u.psnr_db = eval::Psnr(clean, recon);
    u.masked_mse = eval::MaskedMse(clean, recon, masks.at(row.id));

    dsp::Waveform ref;
    if (s.resynth_reference) {
      ref.sample_rate = s.sample_rate;
      ref.samples = dsp::GriffinLim(dsp::InvertMel(clean, fb), s.stft,
                                    s.gl_iters);
    } else {
      ref = dsp::Resample(dsp::ReadWav(row.audio_path), s.sample_rate);
    }
    const dsp::Waveform deg = dsp::ReadWav(ReconWavPath(ctx, row.id));
    u.stoi = eval::Stoi(ref, deg);

    std::string hyp = Trim(ReadTextFile(ReconTextPath(ctx, row.id)));
    if (s.corrective && !hyp.empty())
      hyp = eval::CorrectiveEnhancement(hyp, dict);
    u.cer = eval::Cer(row.transcript, hyp);
    u.wer = eval::Wer(row.transcript, hyp);

    u.pesq = eval::RunPesqHook(s.pesq_binary, row.audio_path,
                               ReconWavPath(ctx, row.id));
    scores.push_back(std::move(u));
  }

  const std::string echo =
      StrCat("run=", ctx.run_name, " seed=", ctx.seed, " model=", s.model_kind,
             " split=", s.eval_split, " informed=", s.informed ? 1 : 0);
  const eval::EvalReport report = eval::Aggregate(std::move(scores), echo);
  WriteTextFile((ctx.reports / "report.csv").string(),
                eval::ReportCsv(report));
  WriteTextFile((ctx.reports / "report.txt").string(),
                eval::ReportTable(report, StrCat("SIK evaluation: ",
                                                 ctx.run_name)));
  std::cout << "evaluate: mean stoi " << report.mean.stoi << ", psnr "
            << report.mean.psnr_db << " dB, masked mse "
            << report.mean.masked_mse << ", wer " << report.mean.wer << "\n";
}

}  // namespace

void RunPipeline(const std::string &command, const PipelineOptions &opts) {
  static const char *kKnown[] = {"gen-toy", "preprocess", "corrupt", "train",
                                 "inpaint", "evaluate",   "all"};
  bool known = false;
  for (const char *k : kKnown) known = known || command == k;
  SIK_REQUIRE(known, "unknown command '", command, "'");

  RunContext ctx = LoadRun(opts);
  if (command == "gen-toy") {
    const auto sentences = GenerateToyCorpus(ctx.s.toy, ctx.s.dataset_root);
    std::cout << "gen-toy: " << sentences.size() << " utterances under "
              << ctx.s.dataset_root << "\n";
    return;
  }
  EnsureRunDirs(ctx);
  if (command == "preprocess" || command == "all") StagePreprocess(ctx);
  if (command == "corrupt" || command == "all") StageCorrupt(ctx);
  if (command == "train" || command == "all") StageTrain(ctx);
  if (command == "inpaint" || command == "all") StageInpaint(ctx);
  if (command == "evaluate" || command == "all") StageEvaluate(ctx);
}

eval::EvalReport ReadReportCsv(const std::string &path) {
  const std::vector<std::string> lines = SplitLines(ReadTextFile(path));
  SIK_REQUIRE(!lines.empty() &&
                  lines[0] == "utterance,pesq,stoi,psnr_db,masked_mse,cer,wer",
              "incompatible report ", path);
  std::vector<eval::UttScore> utts;
  for (size_t i = 1; i < lines.size(); ++i) {
    if (Trim(lines[i]).empty()) continue;
    const std::vector<std::string> f = [&] {
      std::vector<std::string> out(1);
      for (char c : lines[i]) {
        if (c == ',')
          out.emplace_back();
        else
          out.back() += c;
      }
      return out;
    }();
    SIK_REQUIRE(f.size() == 7, "report ", path, " line ", i + 1,
                " is malformed");
    eval::UttScore u;
    u.id = f[0];
    if (f[1] != "n/a") u.pesq = std::strtod(f[1].c_str(), nullptr);
    u.stoi = std::strtod(f[2].c_str(), nullptr);
    u.psnr_db = std::strtod(f[3].c_str(), nullptr);
    u.masked_mse = std::strtod(f[4].c_str(), nullptr);
    u.cer = std::strtod(f[5].c_str(), nullptr);
    u.wer = std::strtod(f[6].c_str(), nullptr);
    utts.push_back(std::move(u));
  }
  SIK_REQUIRE(!utts.empty() && utts.back().id == "mean", "report ", path,
              " has no mean row");
  utts.pop_back();  // Aggregate recomputes the mean
  return eval::Aggregate(std::move(utts));
}

std::string CompareRuns(const std::vector<std::string> &report_paths) {
  SIK_REQUIRE(report_paths.size() >= 2, "need at least two reports");
  std::vector<eval::EvalReport> reports;
  reports.reserve(report_paths.size());
  std::vector<std::string> names;
  for (const std::string &p : report_paths) {
    reports.push_back(ReadReportCsv(p));
    // runs/<name>/reports/report.csv -> <name>, else the file name.
    const fs::path run_dir = fs::path(p).parent_path().parent_path();
    names.push_back(run_dir.filename().empty() ? p
                                               : run_dir.filename().string());
  }
  std::vector<std::pair<std::string, const eval::EvalReport *>> labeled;
  for (size_t i = 0; i < reports.size(); ++i)
    labeled.emplace_back(names[i], &reports[i]);
  return eval::CompareTable(labeled);
}

}  // namespace sik::harness
