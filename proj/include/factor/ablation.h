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

// Sensitivity sweeps: reference-set size for the face detector and the
// aggregation percentile for the audio-visual detector.

#ifndef FACTOR_ABLATION_H_
#define FACTOR_ABLATION_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "factor/av_detector.h"
#include "factor/face_detector.h"
#include "factor/manifest.h"

namespace factor {

// Draws min(size, |R_f|) embeddings of every reference set without
// replacement. Identity f uses stream StableHash(f) of `seed`, so the draw
// for one identity does not depend on which other identities exist.
IdentityRegistry SubsampleRegistry(const IdentityRegistry& registry,
                                   std::size_t size, std::uint64_t seed);

struct RefSizePoint {
  std::size_t size = 0;
  // Means over repeats.
  double mean_identity_auc = 0.0;
  double pooled_auc = 0.0;
};

struct RefSizeOptions {
  std::vector<std::size_t> sizes;
  std::uint64_t seed = 0;
  // Independent subsampling draws per size; repeat r uses seed
  // DeriveSeed(seed, r).
  std::size_t repeats = 1;
  std::size_t threads = 1;
};

// Re-scores every labeled test claim against subsampled registries. Sizes
// must be positive and no larger than the largest reference set; smaller
// sets are used whole. Points keep the order of `sizes`.
std::vector<RefSizePoint> AblateReferenceSize(
    const IdentityRegistry& registry, const EmbeddingSet& test,
    const std::vector<ClaimRecord>& claims, const RefSizeOptions& options);

struct LambdaPoint {
  double lambda = 0.0;
  double auc = 0.0;
  double ap = 0.0;
};

// One evaluation per lambda over the same clips. Labels are looked up by
// clip_id in `labels` (a manifest keyed on record_id).
std::vector<LambdaPoint> AblateLambda(const std::vector<AlignedClip>& clips,
                                      const std::vector<ClaimRecord>& labels,
                                      const std::vector<double>& lambdas,
                                      std::size_t threads = 1);

}  // namespace factor

#endif  // FACTOR_ABLATION_H_
