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

// Audio-visual fact checking. Each frame t of a clip gets the cosine between
// its video and audio features; the clip score is a low percentile of those
// frame scores, so a small run of misaligned frames drags the clip down.

#ifndef FACTOR_AV_DETECTOR_H_
#define FACTOR_AV_DETECTOR_H_

#include <span>
#include <string>
#include <vector>

#include "factor/embedding.h"

namespace factor {

inline constexpr double kDefaultLambda = 3.0;
// Streams whose lengths differ by more than this fraction of the longer one
// are rejected instead of truncated.
inline constexpr double kAlignmentTolerance = 0.05;

// Frame-aligned video and audio features of one clip. Both streams have the
// same length T >= 1 and the same dimension.
class AlignedClip {
 public:
  // Throws LengthMismatch, DimensionMismatch or EmptySequence.
  AlignedClip(std::string clip_id, std::vector<Embedding> video,
              std::vector<Embedding> audio,
              std::vector<std::string> warnings = {});

  const std::string& clip_id() const { return clip_id_; }
  std::size_t length() const { return video_.size(); }
  std::size_t dim() const { return video_.front().dim(); }
  const std::vector<Embedding>& video() const { return video_; }
  const std::vector<Embedding>& audio() const { return audio_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  std::string clip_id_;
  std::vector<Embedding> video_;
  std::vector<Embedding> audio_;
  std::vector<std::string> warnings_;
};

struct ClipScore {
  std::string clip_id;
  std::vector<double> frame_scores;
  double score = 0.0;
  double lambda = kDefaultLambda;
  std::vector<std::string> warnings;
};

// s_t = cosine(v_t, a_t). Errors carry the frame index.
std::vector<double> FrameTruthScores(const AlignedClip& clip);

// Linear-interpolated percentile: sort ascending, p = lambda/100 * (T-1),
// interpolate between elements floor(p) and ceil(p), clamped to that bracket
// so the result is exactly nondecreasing in lambda. Throws EmptySequence or
// InvalidArgument for lambda outside [0, 100].
double Percentile(std::span<const double> values, double lambda);

ClipScore ClipTruthScore(const AlignedClip& clip,
                         double lambda = kDefaultLambda);

// Pairs two single-clip streams frame by frame. Equal lengths pass through;
// lengths within kAlignmentTolerance are truncated to the shorter with a
// warning; anything else throws LengthMismatch. The set overload takes frames
// in stored order.
AlignedClip AlignStreams(std::string clip_id, std::vector<Embedding> video,
                         std::vector<Embedding> audio);
AlignedClip AlignStreams(std::string clip_id, const EmbeddingSet& video,
                         const EmbeddingSet& audio);

// Splits "<clip_id>#<frame_index>" record ids into per-clip streams, orders
// frames by index, and aligns each clip. Clips are returned sorted by
// clip_id. Throws InvalidArgument for malformed ids and MissingRecord when a
// clip appears in only one stream.
std::vector<AlignedClip> GroupClips(const EmbeddingSet& video,
                                    const EmbeddingSet& audio);

std::vector<ClipScore> ScoreClips(const std::vector<AlignedClip>& clips,
                                  double lambda = kDefaultLambda,
                                  std::size_t threads = 1);

}  // namespace factor

#endif  // FACTOR_AV_DETECTOR_H_
