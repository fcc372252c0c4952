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

// Face-swap fact checking. A test face claims an identity; its truth score is
// the cosine similarity to the nearest face in that identity's reference set
// of authentic images. Low scores indicate the claim is false.

#ifndef FACTOR_FACE_DETECTOR_H_
#define FACTOR_FACE_DETECTOR_H_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "factor/embedding.h"
#include "factor/manifest.h"

namespace factor {

// Authentic face embeddings of one identity. Never empty.
class ReferenceSet {
 public:
  // Throws EmptyReferenceSet.
  ReferenceSet(std::string identity, EmbeddingSet embeddings);

  const std::string& identity() const { return identity_; }
  const EmbeddingSet& embeddings() const { return embeddings_; }
  std::size_t size() const { return embeddings_.size(); }
  std::size_t dim() const { return embeddings_.dim(); }

 private:
  std::string identity_;
  EmbeddingSet embeddings_;
};

class IdentityRegistry {
 public:
  // Throws DuplicateRecord if the identity is already registered, or
  // DimensionMismatch / InvalidArgument if the face encoder differs from the
  // sets already registered.
  void Add(ReferenceSet ref);

  // Throws UnknownIdentity.
  const ReferenceSet& Get(const std::string& identity) const;
  bool Contains(const std::string& identity) const {
    return sets_.contains(identity);
  }
  std::size_t size() const { return sets_.size(); }
  // Sorted by identity name.
  const std::map<std::string, ReferenceSet>& sets() const { return sets_; }

  // Groups the records of `embeddings` by the identity each claim asserts.
  // Only claims with kind kIdentity and label absent or real are used;
  // claims whose record is missing throw MissingRecord.
  static IdentityRegistry FromClaims(const EmbeddingSet& embeddings,
                                     const std::vector<ClaimRecord>& claims);

 private:
  std::map<std::string, ReferenceSet> sets_;
};

// max over y in ref of cosine(x, y). Throws DimensionMismatch.
double FaceTruthScore(const Embedding& x, const ReferenceSet& ref);

struct FaceScore {
  std::string record_id;
  std::string identity;
  double score = 0.0;
  friend bool operator==(const FaceScore&, const FaceScore&) = default;
};

// One score per claim, in claim order. Throws UnknownIdentity, MissingRecord,
// or InvalidArgument for a claim that is not an identity claim.
std::vector<FaceScore> ScoreFaceManifest(const EmbeddingSet& test,
                                         const std::vector<ClaimRecord>& claims,
                                         const IdentityRegistry& registry,
                                         std::size_t threads = 1);

struct VideoSplit {
  std::vector<std::string> reference;
  std::vector<std::string> test;
};

// Seeded 50/50 partition of an identity's authentic videos; with an odd
// count the reference half gets the extra video. Each half keeps the input
// order. Throws InsufficientVideos for fewer than two videos.
VideoSplit SplitIdentityVideos(const std::vector<std::string>& videos,
                               std::uint64_t seed);

}  // namespace factor

#endif  // FACTOR_FACE_DETECTOR_H_
