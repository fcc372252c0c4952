/*
 * Copyright 2026 The FACTOR Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "factor/synth.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "factor/errors.h"
#include "factor/rng.h"

namespace factor {
namespace {

// Stream ids keep the three generators apart under one seed.
constexpr std::uint64_t kFaceStream = 0x0100000000ULL;
constexpr std::uint64_t kAvStream = 0x0200000000ULL;
constexpr std::uint64_t kTtiStream = 0x0300000000ULL;

std::string Format(const char* fmt, std::size_t a) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, a);
  return buf;
}

std::vector<double> Normalized(std::vector<double> v) {
  double n = 0.0;
  for (double x : v) n += x * x;
  n = std::sqrt(n);
  for (double& x : v) x /= n;
  return v;
}

std::vector<double> RandomUnit(Rng& rng, std::size_t dim) {
  std::vector<double> v(dim);
  for (;;) {
    double n = 0.0;
    for (double& x : v) {
      x = rng.Gaussian();
      n += x * x;
    }
    if (n > 0.0) return Normalized(std::move(v));
  }
}

std::vector<double> Perturbed(Rng& rng, const std::vector<double>& center,
                              double sigma) {
  const double scale = sigma / std::sqrt(static_cast<double>(center.size()));
  std::vector<double> v(center);
  if (sigma > 0.0) {
    for (double& x : v) x += scale * rng.Gaussian();
  }
  return Normalized(std::move(v));
}

// A unit vector whose cosine with unit vector `t` is exactly `cosine`
// (up to rounding).
std::vector<double> AtCosine(Rng& rng, const std::vector<double>& t,
                             double cosine) {
  std::vector<double> u;
  double ut = 0.0;
  for (;;) {
    u = RandomUnit(rng, t.size());
    ut = std::inner_product(u.begin(), u.end(), t.begin(), 0.0);
    for (std::size_t i = 0; i < u.size(); ++i) u[i] -= ut * t[i];
    double n = 0.0;
    for (double x : u) n += x * x;
    if (n > 1e-12) break;
  }
  u = Normalized(std::move(u));
  const double sine = std::sqrt(std::max(0.0, 1.0 - cosine * cosine));
  std::vector<double> v(t.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = cosine * t[i] + sine * u[i];
  return v;
}

Embedding ToEmbedding(const std::vector<double>& v) {
  std::vector<float> f(v.size());
  std::transform(v.begin(), v.end(), f.begin(),
                 [](double x) { return static_cast<float>(x); });
  return Embedding(std::move(f));
}

double JitteredCosine(Rng& rng, double center, double jitter) {
  return std::clamp(center + jitter * rng.Gaussian(), -1.0, 1.0);
}

}  // namespace

void SynthConfig::Validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw InvalidArgument(std::string("synth config: ") + what);
  };
  require(dim >= 2, "dim must be at least 2");
  require(std::isfinite(sigma_real) && sigma_real >= 0.0,
          "sigma_real must be finite and nonnegative");
  require(std::isfinite(sigma_fake) && sigma_fake >= sigma_real,
          "sigma_fake must be finite and at least sigma_real");
  require(n_identities >= 1, "n_identities must be positive");
  require(real_videos >= 2, "real_videos must be at least 2");
  require(frames_per_video >= 1, "frames_per_video must be positive");
  require(n_clips >= 1 && frames_per_clip >= 1,
          "n_clips and frames_per_clip must be positive");
  require(misalignment_fraction >= 0.0 && misalignment_fraction <= 1.0,
          "misalignment_fraction must lie in [0, 1]");
  require(n_pairs >= 1, "n_pairs must be positive");
  require(dim_aligned == 0 || dim_aligned >= 2,
          "dim_aligned must be 0 or at least 2");
  for (double s : {objective_sim, aligned_sim}) {
    require(s >= -1.0 && s <= 1.0, "similarity targets must lie in [-1, 1]");
  }
  require(std::isfinite(objective_gap) && std::isfinite(aligned_gap),
          "gaps must be finite");
  require(std::isfinite(similarity_jitter) && similarity_jitter >= 0.0,
          "similarity_jitter must be finite and nonnegative");
}

FaceDataset SynthFaceDataset(const SynthConfig& cfg) {
  cfg.Validate();
  FaceDataset ds{EmbeddingSet(EncoderId{"synth-face", cfg.dim, ""}), {},
                 EmbeddingSet(EncoderId{"synth-face", cfg.dim, ""}), {}};

  for (std::size_t i = 0; i < cfg.n_identities; ++i) {
    Rng rng(cfg.seed, kFaceStream + i);
    const std::string identity = Format("id%03zu", i);
    const auto centroid = RandomUnit(rng, cfg.dim);

    auto emit_video = [&](const std::string& video, double sigma, Label label,
                          EmbeddingSet& set, std::vector<ClaimRecord>& claims) {
      // Raw videos are longer than the target and get subsampled.
      const std::size_t raw = cfg.frames_per_video +
                              rng.Index(3 * cfg.frames_per_video + 1);
      for (std::size_t frame : SubsampleFrames(raw, cfg.frames_per_video)) {
        ClaimRecord c;
        c.record_id = video + "#" + std::to_string(frame);
        c.media_id = video;
        c.frame_index = frame;
        c.modality = Modality::kFace;
        c.claimed_fact = {FactKind::kIdentity, identity};
        c.label = label;
        c.encoder = "synth-face";
        set.Add(c.record_id, ToEmbedding(Perturbed(rng, centroid, sigma)));
        claims.push_back(std::move(c));
      }
    };

    std::vector<std::string> real_videos;
    for (std::size_t v = 0; v < cfg.real_videos; ++v) {
      real_videos.push_back(identity + Format("-real%02zu", v));
    }
    const auto split = SplitIdentityVideos(
        real_videos, DeriveSeed(cfg.seed, StableHash(identity)));
    for (const auto& video : real_videos) {
      const bool is_ref = std::find(split.reference.begin(),
                                    split.reference.end(),
                                    video) != split.reference.end();
      if (is_ref) {
        emit_video(video, cfg.sigma_real, Label::kReal, ds.reference,
                   ds.reference_claims);
      } else {
        emit_video(video, cfg.sigma_real, Label::kReal, ds.test,
                   ds.test_claims);
      }
    }
    for (std::size_t v = 0; v < cfg.fake_videos; ++v) {
      emit_video(identity + Format("-fake%02zu", v), cfg.sigma_fake,
                 Label::kFake, ds.test, ds.test_claims);
    }
  }
  return ds;
}

AvDataset SynthAvDataset(const SynthConfig& cfg) {
  cfg.Validate();
  AvDataset ds{EmbeddingSet(EncoderId{"synth-av-video", cfg.dim, "synth-av"}),
               EmbeddingSet(EncoderId{"synth-av-audio", cfg.dim, "synth-av"}),
               {}};
  const std::size_t T = cfg.frames_per_clip;
  const auto n_misaligned = static_cast<std::size_t>(
      std::llround(cfg.misalignment_fraction * static_cast<double>(T)));

  for (std::size_t k = 0; k < cfg.n_clips; ++k) {
    Rng rng(cfg.seed, kAvStream + k);
    const std::string clip = Format("clip-%04zu", k);
    const bool fake = k % 2 == 1;

    std::vector<bool> misaligned(T, false);
    if (fake) {
      std::vector<std::size_t> order(T);
      std::iota(order.begin(), order.end(), 0);
      rng.Shuffle(std::span(order));
      for (std::size_t i = 0; i < n_misaligned; ++i) misaligned[order[i]] = true;
    }
    for (std::size_t t = 0; t < T; ++t) {
      const auto v = RandomUnit(rng, cfg.dim);
      const auto a = misaligned[t]
                         ? RandomUnit(rng, cfg.dim)
                         : Perturbed(rng, v, fake ? cfg.sigma_fake
                                                  : cfg.sigma_real);
      const std::string id = clip + "#" + std::to_string(t);
      ds.video.Add(id, ToEmbedding(v));
      ds.audio.Add(id, ToEmbedding(a));
    }
    ClaimRecord c;
    c.record_id = clip;
    c.media_id = clip;
    c.modality = Modality::kVideo;
    c.claimed_fact = {FactKind::kPairedRecord, clip};
    c.label = fake ? Label::kFake : Label::kReal;
    c.encoder = "synth-av-video";
    ds.clips.push_back(std::move(c));
  }
  return ds;
}

TtiDataset SynthTtiDataset(const SynthConfig& cfg) {
  cfg.Validate();
  const std::size_t dim_al = cfg.dim_aligned == 0 ? cfg.dim : cfg.dim_aligned;
  TtiDataset ds{
      EmbeddingSet(EncoderId{"synth-objective-image", cfg.dim, "synth-objective"}),
      EmbeddingSet(EncoderId{"synth-objective-text", cfg.dim, "synth-objective"}),
      EmbeddingSet(EncoderId{"synth-aligned-image", dim_al, "synth-aligned"}),
      EmbeddingSet(EncoderId{"synth-aligned-text", dim_al, "synth-aligned"}),
      {}};

  for (std::size_t c = 0; c < cfg.n_pairs; ++c) {
    Rng rng(cfg.seed, kTtiStream + c);
    const std::string caption = Format("cap-%05zu", c);
    const std::string caption_class = c % 2 == 0 ? "min-length" : "max-length";
    const auto text_obj = RandomUnit(rng, cfg.dim);
    const auto text_al = RandomUnit(rng, dim_al);
    ds.texts_obj.Add(caption, ToEmbedding(text_obj));
    ds.texts_al.Add(caption, ToEmbedding(text_al));

    auto emit = [&](const std::string& suffix, Label label, double obj_center,
                    double al_center) {
      const std::string image = Format("img-%05zu-", c) + suffix;
      const double so = JitteredCosine(rng, obj_center, cfg.similarity_jitter);
      const double sa = JitteredCosine(rng, al_center, cfg.similarity_jitter);
      ds.images_obj.Add(image, ToEmbedding(AtCosine(rng, text_obj, so)));
      ds.images_al.Add(image, ToEmbedding(AtCosine(rng, text_al, sa)));
      ClaimRecord r;
      r.record_id = Format("pair-%05zu-", c) + suffix;
      r.media_id = image;
      r.modality = Modality::kImage;
      r.claimed_fact = {FactKind::kCaption, caption};
      r.label = label;
      r.caption_class = caption_class;
      ds.pairs.push_back(std::move(r));
    };
    emit("real", Label::kReal, cfg.objective_sim, cfg.aligned_sim);
    for (std::size_t f = 0; f < cfg.fakes_per_caption; ++f) {
      emit(Format("fake%zu", f), Label::kFake,
           cfg.objective_sim - cfg.objective_gap,
           cfg.aligned_sim + cfg.aligned_gap);
    }
  }
  return ds;
}

}  // namespace factor
