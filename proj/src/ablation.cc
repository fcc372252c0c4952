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

#include "factor/ablation.h"

#include <algorithm>
#include <numeric>

#include "factor/errors.h"
#include "factor/metrics.h"
#include "factor/parallel.h"
#include "factor/rng.h"

namespace factor {

IdentityRegistry SubsampleRegistry(const IdentityRegistry& registry,
                                   std::size_t size, std::uint64_t seed) {
  if (size == 0) throw InvalidArgument("reference size must be positive");
  IdentityRegistry out;
  for (const auto& [identity, ref] : registry.sets()) {
    const auto& records = ref.embeddings().records();
    if (size >= records.size()) {
      out.Add(ref);
      continue;
    }
    std::vector<std::size_t> order(records.size());
    std::iota(order.begin(), order.end(), 0);
    Rng rng(seed, StableHash(identity));
    rng.Shuffle(std::span(order));
    order.resize(size);
    std::sort(order.begin(), order.end());
    EmbeddingSet subset(ref.embeddings().encoder());
    for (std::size_t i : order) subset.Add(records[i].id, records[i].embedding);
    out.Add(ReferenceSet(identity, std::move(subset)));
  }
  return out;
}

std::vector<RefSizePoint> AblateReferenceSize(
    const IdentityRegistry& registry, const EmbeddingSet& test,
    const std::vector<ClaimRecord>& claims, const RefSizeOptions& options) {
  if (options.repeats == 0) throw InvalidArgument("repeats must be positive");
  std::size_t largest = 0;
  for (const auto& [id, ref] : registry.sets()) {
    largest = std::max(largest, ref.size());
  }
  for (std::size_t s : options.sizes) {
    if (s == 0 || s > largest) {
      throw InvalidArgument("reference size " + std::to_string(s) +
                            " outside [1, " + std::to_string(largest) + "]");
    }
  }

  std::vector<ClaimRecord> labeled;
  for (const auto& c : claims) {
    if (c.label) labeled.push_back(c);
  }

  std::vector<RefSizePoint> curve;
  for (std::size_t size : options.sizes) {
    RefSizePoint point{size, 0.0, 0.0};
    for (std::size_t r = 0; r < options.repeats; ++r) {
      const auto sub =
          SubsampleRegistry(registry, size, DeriveSeed(options.seed, r));
      const auto scores =
          ScoreFaceManifest(test, labeled, sub, options.threads);
      LabeledScores data;
      data.reserve(scores.size());
      for (std::size_t i = 0; i < scores.size(); ++i) {
        data.push_back({scores[i].score, *labeled[i].label, scores[i].identity});
      }
      const auto report = Evaluate(data);
      point.pooled_auc += report.auc;
      point.mean_identity_auc += report.mean_group_auc.value_or(report.auc);
    }
    point.pooled_auc /= static_cast<double>(options.repeats);
    point.mean_identity_auc /= static_cast<double>(options.repeats);
    curve.push_back(point);
  }
  return curve;
}

std::vector<LambdaPoint> AblateLambda(const std::vector<AlignedClip>& clips,
                                      const std::vector<ClaimRecord>& labels,
                                      const std::vector<double>& lambdas,
                                      std::size_t threads) {
  for (double l : lambdas) {
    if (!(l >= 0.0 && l <= 100.0)) {
      throw InvalidArgument("lambda must lie in [0, 100], got " +
                            std::to_string(l));
    }
  }
  std::vector<std::vector<double>> frame_scores(clips.size());
  ParallelFor(clips.size(), threads, [&](std::size_t i) {
    frame_scores[i] = FrameTruthScores(clips[i]);
  });

  std::vector<LambdaPoint> curve;
  for (double lambda : lambdas) {
    std::vector<ScoredItem> items(clips.size());
    for (std::size_t i = 0; i < clips.size(); ++i) {
      items[i] = {clips[i].clip_id(), Percentile(frame_scores[i], lambda), ""};
    }
    const auto data = AttachLabels(items, labels);
    curve.push_back({lambda, RocAuc(data), AveragePrecision(data)});
  }
  return curve;
}

}  // namespace factor
