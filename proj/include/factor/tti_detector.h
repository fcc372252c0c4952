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

// Text-to-image fact checking with two joint image/text encoders.
//
// A generator trained against one encoder (the "aligned" encoder) tends to
// overfit its similarity, so fakes can score higher than real images there.
// An encoder the generator never saw (the "objective" encoder) still rejects
// them. The truth score is objective similarity minus aligned similarity,
// with no rescaling between the two spaces.

#ifndef FACTOR_TTI_DETECTOR_H_
#define FACTOR_TTI_DETECTOR_H_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "factor/embedding.h"
#include "factor/manifest.h"

namespace factor {

// The two joint spaces. Within each space image and text share one dim.
struct DualEncoderPair {
  EncoderId objective_image, objective_text;
  EncoderId aligned_image, aligned_text;

  // Throws DimensionMismatch for a space whose image and text dims differ,
  // InvalidArgument if both spaces name the same encoders.
  void Validate() const;
};

struct TtiScore {
  std::string pair_id;
  double score = 0.0;  // objective_sim - aligned_sim, in [-2, 2]
  double objective_sim = 0.0;
  double aligned_sim = 0.0;
};

// cos(image_obj, text_obj) - cos(image_al, text_al).
double TtiTruthScore(const Embedding& image_obj, const Embedding& text_obj,
                     const Embedding& image_al, const Embedding& text_al);

struct TtiSets {
  const EmbeddingSet& images_obj;
  const EmbeddingSet& texts_obj;
  const EmbeddingSet& images_al;
  const EmbeddingSet& texts_al;
};

struct ImageCaptionPair {
  std::string pair_id;
  std::string image_id;
  std::string caption_id;
};

// Pairs from a manifest: record_id names the pair, media_id the image record
// and a kCaption claimed_fact the caption record. Throws InvalidArgument for
// other fact kinds.
std::vector<ImageCaptionPair> PairsFromClaims(
    const std::vector<ClaimRecord>& claims);

// One score per pair in input order. Throws MissingRecord naming the set.
std::vector<TtiScore> ScoreTtiManifest(const TtiSets& sets,
                                       const std::vector<ImageCaptionPair>& pairs,
                                       std::size_t threads = 1);

// Fraction of fake scores strictly below the real score. Throws
// EmptySequence for no fakes.
double PairedComparison(double real_score, std::span<const double> fake_scores);

struct PairedSummary {
  // Number of (real image, caption) comparisons.
  std::size_t comparisons = 0;
  double mean_fraction = 0.0;
};

// Groups labeled scores by caption: every real image of a caption is compared
// against the fakes of the same caption. Captions lacking a real or a fake are
// skipped. The result is keyed by caption class, plus an "all" entry covering
// every caption.
struct CaptionScore {
  std::string caption_id;
  std::string caption_class;
  Label label = Label::kReal;
  double score = 0.0;
};
std::map<std::string, PairedSummary> PairedComparisonByCaption(
    const std::vector<CaptionScore>& scores);

}  // namespace factor

#endif  // FACTOR_TTI_DETECTOR_H_
