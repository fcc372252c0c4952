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

#include "factor/tti_detector.h"

#include "factor/errors.h"
#include "factor/parallel.h"

namespace factor {
namespace {

const Embedding& Lookup(const EmbeddingSet& set, const std::string& id,
                        const char* which) {
  if (!set.Contains(id)) {
    throw MissingRecord("record '" + id + "' not found in " + which + " set");
  }
  return set.Get(id);
}

}  // namespace

void DualEncoderPair::Validate() const {
  if (objective_image.dim != objective_text.dim) {
    throw DimensionMismatch("objective space: image dim " +
                            std::to_string(objective_image.dim) +
                            " != text dim " +
                            std::to_string(objective_text.dim));
  }
  if (aligned_image.dim != aligned_text.dim) {
    throw DimensionMismatch("aligned space: image dim " +
                            std::to_string(aligned_image.dim) +
                            " != text dim " + std::to_string(aligned_text.dim));
  }
  if (!objective_image.name.empty() &&
      objective_image.name == aligned_image.name &&
      objective_text.name == aligned_text.name) {
    throw InvalidArgument("objective and aligned encoders must differ");
  }
}

double TtiTruthScore(const Embedding& image_obj, const Embedding& text_obj,
                     const Embedding& image_al, const Embedding& text_al) {
  return CosineTruthScore(image_obj, text_obj) -
         CosineTruthScore(image_al, text_al);
}

std::vector<ImageCaptionPair> PairsFromClaims(
    const std::vector<ClaimRecord>& claims) {
  std::vector<ImageCaptionPair> out;
  out.reserve(claims.size());
  for (const auto& c : claims) {
    if (c.claimed_fact.kind != FactKind::kCaption) {
      throw InvalidArgument("pair '" + c.record_id +
                            "' does not claim a caption");
    }
    out.push_back({c.record_id, c.media_id.empty() ? c.record_id : c.media_id,
                   c.claimed_fact.value});
  }
  return out;
}

std::vector<TtiScore> ScoreTtiManifest(const TtiSets& sets,
                                       const std::vector<ImageCaptionPair>& pairs,
                                       std::size_t threads) {
  struct Resolved {
    const Embedding *io, *to, *ia, *ta;
  };
  std::vector<Resolved> resolved(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& p = pairs[i];
    resolved[i] = {&Lookup(sets.images_obj, p.image_id, "objective image"),
                   &Lookup(sets.texts_obj, p.caption_id, "objective text"),
                   &Lookup(sets.images_al, p.image_id, "aligned image"),
                   &Lookup(sets.texts_al, p.caption_id, "aligned text")};
  }
  std::vector<TtiScore> out(pairs.size());
  ParallelFor(pairs.size(), threads, [&](std::size_t i) {
    const auto& r = resolved[i];
    const double obj = CosineTruthScore(*r.io, *r.to);
    const double al = CosineTruthScore(*r.ia, *r.ta);
    out[i] = {pairs[i].pair_id, obj - al, obj, al};
  });
  return out;
}

double PairedComparison(double real_score,
                        std::span<const double> fake_scores) {
  if (fake_scores.empty()) {
    throw EmptySequence("paired comparison needs at least one fake score");
  }
  std::size_t below = 0;
  for (double f : fake_scores) below += f < real_score ? 1 : 0;
  return static_cast<double>(below) / static_cast<double>(fake_scores.size());
}

std::map<std::string, PairedSummary> PairedComparisonByCaption(
    const std::vector<CaptionScore>& scores) {
  struct Bucket {
    std::string caption_class;
    std::vector<double> reals, fakes;
  };
  std::map<std::string, Bucket> by_caption;
  for (const auto& s : scores) {
    auto& b = by_caption[s.caption_id];
    if (!s.caption_class.empty()) b.caption_class = s.caption_class;
    (s.label == Label::kReal ? b.reals : b.fakes).push_back(s.score);
  }
  std::map<std::string, std::pair<std::size_t, double>> acc;
  for (const auto& [caption, b] : by_caption) {
    if (b.reals.empty() || b.fakes.empty()) continue;
    for (double r : b.reals) {
      const double frac = PairedComparison(r, b.fakes);
      auto add = [&](const std::string& key) {
        acc[key].first += 1;
        acc[key].second += frac;
      };
      add("all");
      if (!b.caption_class.empty()) add(b.caption_class);
    }
  }
  std::map<std::string, PairedSummary> out;
  for (const auto& [key, slot] : acc) {
    out[key] = {slot.first, slot.second / static_cast<double>(slot.first)};
  }
  return out;
}

}  // namespace factor
