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

#include "factor/face_detector.h"

#include <algorithm>
#include <numeric>

#include "factor/errors.h"
#include "factor/parallel.h"
#include "factor/rng.h"

namespace factor {

ReferenceSet::ReferenceSet(std::string identity, EmbeddingSet embeddings)
    : identity_(std::move(identity)), embeddings_(std::move(embeddings)) {
  if (embeddings_.empty()) {
    throw EmptyReferenceSet("reference set for '" + identity_ + "' is empty");
  }
}

void IdentityRegistry::Add(ReferenceSet ref) {
  if (!sets_.empty()) {
    const auto& first = sets_.begin()->second.embeddings().encoder();
    const auto& enc = ref.embeddings().encoder();
    if (first.dim != enc.dim) {
      throw DimensionMismatch("reference set '" + ref.identity() +
                              "' has dim " + std::to_string(enc.dim) +
                              ", registry uses " + std::to_string(first.dim));
    }
    if (!first.ComparableWith(enc)) {
      throw InvalidArgument("reference set '" + ref.identity() +
                            "' comes from encoder '" + enc.name +
                            "', registry uses '" + first.name + "'");
    }
  }
  std::string key = ref.identity();
  if (!sets_.emplace(key, std::move(ref)).second) {
    throw DuplicateRecord("identity '" + key + "' registered twice");
  }
}

const ReferenceSet& IdentityRegistry::Get(const std::string& identity) const {
  auto it = sets_.find(identity);
  if (it == sets_.end()) {
    throw UnknownIdentity("no reference set for claimed identity '" +
                          identity + "'");
  }
  return it->second;
}

IdentityRegistry IdentityRegistry::FromClaims(
    const EmbeddingSet& embeddings, const std::vector<ClaimRecord>& claims) {
  std::map<std::string, EmbeddingSet> grouped;
  for (const auto& c : claims) {
    if (c.claimed_fact.kind != FactKind::kIdentity) continue;
    if (c.label == Label::kFake) continue;
    auto [it, inserted] =
        grouped.try_emplace(c.claimed_fact.value, embeddings.encoder());
    it->second.Add(c.record_id, embeddings.Get(c.record_id));
  }
  IdentityRegistry registry;
  for (auto& [identity, set] : grouped) {
    registry.Add(ReferenceSet(identity, std::move(set)));
  }
  return registry;
}

double FaceTruthScore(const Embedding& x, const ReferenceSet& ref) {
  if (x.dim() != ref.dim()) {
    throw DimensionMismatch("test face has dim " + std::to_string(x.dim()) +
                            ", reference set '" + ref.identity() +
                            "' has dim " + std::to_string(ref.dim()));
  }
  double best = -1.0;
  for (const auto& rec : ref.embeddings().records()) {
    best = std::max(best, CosineTruthScore(x, rec.embedding));
  }
  return best;
}

std::vector<FaceScore> ScoreFaceManifest(const EmbeddingSet& test,
                                         const std::vector<ClaimRecord>& claims,
                                         const IdentityRegistry& registry,
                                         std::size_t threads) {
  // Resolve everything up front so errors are reported in claim order.
  std::vector<const Embedding*> faces(claims.size());
  std::vector<const ReferenceSet*> refs(claims.size());
  for (std::size_t i = 0; i < claims.size(); ++i) {
    const auto& c = claims[i];
    if (c.claimed_fact.kind != FactKind::kIdentity) {
      throw InvalidArgument("claim '" + c.record_id +
                            "' does not claim an identity");
    }
    faces[i] = &test.Get(c.record_id);
    refs[i] = &registry.Get(c.claimed_fact.value);
  }
  std::vector<FaceScore> out(claims.size());
  ParallelFor(claims.size(), threads, [&](std::size_t i) {
    out[i] = {claims[i].record_id, claims[i].claimed_fact.value,
              FaceTruthScore(*faces[i], *refs[i])};
  });
  return out;
}

VideoSplit SplitIdentityVideos(const std::vector<std::string>& videos,
                               std::uint64_t seed) {
  if (videos.size() < 2) {
    throw InsufficientVideos("need at least 2 authentic videos to split, got " +
                             std::to_string(videos.size()));
  }
  std::vector<std::size_t> order(videos.size());
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  rng.Shuffle(std::span(order));
  const std::size_t n_ref = (videos.size() + 1) / 2;
  std::vector<bool> in_ref(videos.size(), false);
  for (std::size_t i = 0; i < n_ref; ++i) in_ref[order[i]] = true;

  VideoSplit split;
  for (std::size_t i = 0; i < videos.size(); ++i) {
    (in_ref[i] ? split.reference : split.test).push_back(videos[i]);
  }
  return split;
}

}  // namespace factor
