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

#include "factor/embedding.h"

#include <algorithm>
#include <cmath>

#include "factor/errors.h"

namespace factor {
namespace {

double SquaredNorm(std::span<const float> v) {
  double acc = 0.0;
  for (float x : v) acc += static_cast<double>(x) * x;
  return acc;
}

}  // namespace

Embedding::Embedding(std::vector<float> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw DegenerateVector("embedding has dimension 0");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw NonFiniteValue("embedding value at index " + std::to_string(i) +
                           " is not finite");
    }
  }
  if (std::sqrt(SquaredNorm(values_)) < kDegenerateNorm) {
    throw DegenerateVector("embedding has zero norm");
  }
}

double Embedding::Norm() const { return std::sqrt(SquaredNorm(values_)); }

Embedding Embedding::Scaled(float factor) const {
  std::vector<float> out(values_);
  for (float& x : out) x *= factor;
  return Embedding(std::move(out));
}

double CosineTruthScore(std::span<const float> a, std::span<const float> b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("cannot compare embeddings of dimension " +
                            std::to_string(a.size()) + " and " +
                            std::to_string(b.size()));
  }
  double dot = 0.0, aa = 0.0, bb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double x = a[i], y = b[i];
    dot += x * y;
    aa += x * x;
    bb += y * y;
  }
  if (std::sqrt(aa) < kDegenerateNorm || std::sqrt(bb) < kDegenerateNorm) {
    throw DegenerateVector("cosine of a zero-norm vector is undefined");
  }
  // sqrt(aa * bb) rather than sqrt(aa) * sqrt(bb): for a == b it returns aa
  // exactly, so self-similarity is exactly 1.
  return std::clamp(dot / std::sqrt(aa * bb), -1.0, 1.0);
}

EmbeddingSet::EmbeddingSet(EncoderId encoder) : encoder_(std::move(encoder)) {}

void EmbeddingSet::Add(std::string id, Embedding embedding) {
  if (encoder_.dim == 0) encoder_.dim = embedding.dim();
  if (embedding.dim() != encoder_.dim) {
    throw DimensionMismatch("record '" + id + "' has dimension " +
                            std::to_string(embedding.dim()) +
                            ", set declares " + std::to_string(encoder_.dim));
  }
  if (index_.contains(id)) {
    throw DuplicateRecord("duplicate record id '" + id + "'");
  }
  index_.emplace(id, records_.size());
  records_.push_back({std::move(id), std::move(embedding)});
}

const Embedding& EmbeddingSet::Get(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    throw MissingRecord("record '" + id + "' not found" +
                        (encoder_.name.empty()
                             ? std::string()
                             : " in '" + encoder_.name + "' set"));
  }
  return records_[it->second].embedding;
}

std::vector<std::size_t> SubsampleFrames(std::size_t frame_count,
                                         std::size_t target) {
  if (frame_count == 0 || target == 0) {
    throw InvalidArgument("subsampling needs a positive frame count and target");
  }
  std::vector<std::size_t> out;
  if (target >= frame_count) {
    out.resize(frame_count);
    for (std::size_t i = 0; i < frame_count; ++i) out[i] = i;
    return out;
  }
  const std::size_t span = frame_count - 1;
  if (target == 1) return {(span + 1) / 2};
  const std::size_t steps = target - 1;
  out.reserve(target);
  // Round half up in integer arithmetic: floor((2*i*span + steps) / (2*steps)).
  for (std::size_t i = 0; i < target; ++i) {
    out.push_back((2 * i * span + steps) / (2 * steps));
  }
  return out;
}

}  // namespace factor
