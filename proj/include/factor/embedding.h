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

// Core vector types and the cosine truth score.
//
// Embeddings are stored exactly as the encoder produced them (f32, not
// normalized). All normalization happens inside CosineTruthScore, which
// accumulates in double precision.

#ifndef FACTOR_EMBEDDING_H_
#define FACTOR_EMBEDDING_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace factor {

// Norms below this are treated as zero.
inline constexpr double kDegenerateNorm = 1e-12;

// A finite, nonzero, d-dimensional feature vector.
class Embedding {
 public:
  // Validates and takes ownership of `values`. Throws DegenerateVector for an
  // empty or zero-norm vector and NonFiniteValue for NaN/Inf entries.
  explicit Embedding(std::vector<float> values);
  Embedding(std::initializer_list<float> values)
      : Embedding(std::vector<float>(values)) {}

  std::size_t dim() const { return values_.size(); }
  std::span<const float> values() const { return values_; }
  double Norm() const;

  // Positive rescaling; used by property tests and the synthetic generator.
  Embedding Scaled(float factor) const;

  friend bool operator==(const Embedding&, const Embedding&) = default;

 private:
  std::vector<float> values_;
};

// Names an encoder and the space it maps into. Two encoders are comparable
// when they share a dimension and a comparability group; an empty group
// defaults to the encoder name.
struct EncoderId {
  std::string name;
  std::size_t dim = 0;
  std::string group;

  const std::string& comparability_group() const {
    return group.empty() ? name : group;
  }
  bool ComparableWith(const EncoderId& other) const {
    return dim == other.dim &&
           comparability_group() == other.comparability_group();
  }
};

// Cosine similarity dot(a,b)/(|a||b|), clamped to [-1, 1].
// Throws DimensionMismatch or DegenerateVector.
double CosineTruthScore(std::span<const float> a, std::span<const float> b);
inline double CosineTruthScore(const Embedding& a, const Embedding& b) {
  return CosineTruthScore(a.values(), b.values());
}

// An ordered collection of (record_id, embedding) produced by one encoder.
// All embeddings share the set dimension and record ids are unique.
class EmbeddingSet {
 public:
  struct Record {
    std::string id;
    Embedding embedding;
  };

  EmbeddingSet() = default;
  explicit EmbeddingSet(EncoderId encoder);

  // Throws DimensionMismatch or DuplicateRecord.
  void Add(std::string id, Embedding embedding);

  const EncoderId& encoder() const { return encoder_; }
  std::size_t dim() const { return encoder_.dim; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }
  const std::vector<Record>& records() const { return records_; }
  const Record& operator[](std::size_t i) const { return records_[i]; }

  bool Contains(const std::string& id) const { return index_.contains(id); }
  // Throws MissingRecord.
  const Embedding& Get(const std::string& id) const;

  friend bool operator==(const EmbeddingSet& a, const EmbeddingSet& b) {
    return a.encoder_.dim == b.encoder_.dim && a.records_ == b.records_;
  }

 private:
  EncoderId encoder_;
  std::vector<Record> records_;
  std::unordered_map<std::string, std::size_t> index_;
};

inline bool operator==(const EmbeddingSet::Record& a,
                       const EmbeddingSet::Record& b) {
  return a.id == b.id && a.embedding == b.embedding;
}

// Uniform subsampling of a video with `frame_count` frames down to `target`
// frame indices. Endpoints are included: index i maps to
// round(i * (N - 1) / (k - 1)); k == 1 picks the middle frame, and k >= N
// returns every frame. Throws InvalidArgument for N == 0 or k == 0.
std::vector<std::size_t> SubsampleFrames(std::size_t frame_count,
                                         std::size_t target);

}  // namespace factor

#endif  // FACTOR_EMBEDDING_H_
