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

// Synthetic embedding fixtures with known ground truth.
//
// Media that agrees with its claimed fact is drawn close to the fact's
// feature; media that violates it is drawn farther away. Noise is
// Gaussian-perturb-then-normalize: normalize(center + sigma * g / sqrt(dim))
// with g ~ N(0, I), so sigma is roughly the norm of the perturbation
// regardless of dim. All randomness comes from factor::Rng (see rng.h), one
// stream per identity, clip or caption, so the same config and seed give
// bit-identical output.

#ifndef FACTOR_SYNTH_H_
#define FACTOR_SYNTH_H_

#include <cstdint>
#include <vector>

#include "factor/embedding.h"
#include "factor/face_detector.h"
#include "factor/manifest.h"

namespace factor {

struct SynthConfig {
  std::size_t dim = 128;
  double sigma_real = 0.1;
  double sigma_fake = 0.6;
  std::uint64_t seed = 0;

  // Face swap. Each identity gets `real_videos` authentic videos, split
  // 50/50 into reference and test, plus `fake_videos` swapped videos that
  // claim it. Every video is subsampled to `frames_per_video` frames.
  std::size_t n_identities = 20;
  std::size_t real_videos = 4;
  std::size_t fake_videos = 2;
  std::size_t frames_per_video = 25;

  // Audio-visual. Odd-numbered clips are fake; in a fake clip
  // round(misalignment_fraction * T) frames get an unrelated audio feature.
  std::size_t n_clips = 200;
  std::size_t frames_per_clip = 100;
  double misalignment_fraction = 0.05;

  // Text-to-image. Each caption has one real image and `fakes_per_caption`
  // generated ones. Image/caption cosines are drawn around fixed targets
  // with Gaussian jitter: reals at (objective_sim, aligned_sim); fakes at
  // (objective_sim - objective_gap, aligned_sim + aligned_gap).
  std::size_t n_pairs = 1000;
  std::size_t fakes_per_caption = 5;
  std::size_t dim_aligned = 0;  // 0 means `dim`
  double objective_sim = 0.45;
  double aligned_sim = 0.30;
  double objective_gap = 0.02;
  double aligned_gap = 0.04;
  double similarity_jitter = 0.05;

  // Throws InvalidArgument.
  void Validate() const;
};

struct FaceDataset {
  EmbeddingSet reference;
  std::vector<ClaimRecord> reference_claims;
  EmbeddingSet test;
  std::vector<ClaimRecord> test_claims;

  IdentityRegistry Registry() const {
    return IdentityRegistry::FromClaims(reference, reference_claims);
  }
};

struct AvDataset {
  EmbeddingSet video;
  EmbeddingSet audio;
  // One labeled claim per clip, record_id == clip_id.
  std::vector<ClaimRecord> clips;
};

struct TtiDataset {
  EmbeddingSet images_obj;
  EmbeddingSet texts_obj;
  EmbeddingSet images_al;
  EmbeddingSet texts_al;
  // One labeled claim per (image, caption) pair.
  std::vector<ClaimRecord> pairs;
};

FaceDataset SynthFaceDataset(const SynthConfig& cfg);
AvDataset SynthAvDataset(const SynthConfig& cfg);
TtiDataset SynthTtiDataset(const SynthConfig& cfg);

}  // namespace factor

#endif  // FACTOR_SYNTH_H_
