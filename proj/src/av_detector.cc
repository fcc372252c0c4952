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

#include "factor/av_detector.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>

#include "factor/errors.h"
#include "factor/parallel.h"

namespace factor {
namespace {

struct FrameKey {
  std::string clip_id;
  std::uint64_t frame = 0;
};

FrameKey ParseFrameId(const std::string& id) {
  const auto hash = id.rfind('#');
  if (hash == std::string::npos || hash == 0 || hash + 1 == id.size()) {
    throw InvalidArgument("record id '" + id +
                          "' is not of the form <clip_id>#<frame_index>");
  }
  FrameKey key{id.substr(0, hash), 0};
  const char* first = id.data() + hash + 1;
  const char* last = id.data() + id.size();
  auto [ptr, ec] = std::from_chars(first, last, key.frame);
  if (ec != std::errc() || ptr != last) {
    throw InvalidArgument("record id '" + id + "' has a bad frame index");
  }
  return key;
}

// clip_id -> frame-ordered embeddings.
std::map<std::string, std::vector<Embedding>> SplitByClip(
    const EmbeddingSet& set, const char* stream) {
  std::map<std::string, std::vector<std::pair<std::uint64_t, Embedding>>> tmp;
  for (const auto& rec : set.records()) {
    auto key = ParseFrameId(rec.id);
    tmp[key.clip_id].emplace_back(key.frame, rec.embedding);
  }
  std::map<std::string, std::vector<Embedding>> out;
  for (auto& [clip, frames] : tmp) {
    std::sort(frames.begin(), frames.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < frames.size(); ++i) {
      if (frames[i].first == frames[i - 1].first) {
        throw DuplicateRecord(std::string(stream) + " stream of clip '" +
                              clip + "' repeats frame " +
                              std::to_string(frames[i].first));
      }
    }
    auto& dst = out[clip];
    dst.reserve(frames.size());
    for (auto& f : frames) dst.push_back(std::move(f.second));
  }
  return out;
}

}  // namespace

AlignedClip::AlignedClip(std::string clip_id, std::vector<Embedding> video,
                         std::vector<Embedding> audio,
                         std::vector<std::string> warnings)
    : clip_id_(std::move(clip_id)),
      video_(std::move(video)),
      audio_(std::move(audio)),
      warnings_(std::move(warnings)) {
  if (video_.empty() || audio_.empty()) {
    throw EmptySequence("clip '" + clip_id_ + "' has an empty stream");
  }
  if (video_.size() != audio_.size()) {
    throw LengthMismatch("clip '" + clip_id_ + "' has " +
                         std::to_string(video_.size()) + " video and " +
                         std::to_string(audio_.size()) + " audio frames");
  }
  const std::size_t d = video_.front().dim();
  for (std::size_t t = 0; t < video_.size(); ++t) {
    if (video_[t].dim() != d || audio_[t].dim() != d) {
      throw DimensionMismatch("clip '" + clip_id_ + "' frame " +
                              std::to_string(t) +
                              ": video and audio features must share one dim");
    }
  }
}

std::vector<double> FrameTruthScores(const AlignedClip& clip) {
  std::vector<double> scores(clip.length());
  for (std::size_t t = 0; t < clip.length(); ++t) {
    try {
      scores[t] = CosineTruthScore(clip.video()[t], clip.audio()[t]);
    } catch (const DimensionMismatch& e) {
      throw DimensionMismatch("clip '" + clip.clip_id() + "' frame " +
                              std::to_string(t) + ": " + e.what());
    } catch (const DegenerateVector& e) {
      throw DegenerateVector("clip '" + clip.clip_id() + "' frame " +
                             std::to_string(t) + ": " + e.what());
    }
  }
  return scores;
}

double Percentile(std::span<const double> values, double lambda) {
  if (values.empty()) throw EmptySequence("percentile of an empty sequence");
  if (!(lambda >= 0.0 && lambda <= 100.0)) {
    throw InvalidArgument("lambda must lie in [0, 100], got " +
                          std::to_string(lambda));
  }
  std::vector<double> v(values.begin(), values.end());
  const double pos = lambda / 100.0 * static_cast<double>(v.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, v.size() - 1);
  std::nth_element(v.begin(), v.begin() + lo, v.end());
  const double a = v[lo];
  const double frac = pos - static_cast<double>(lo);
  if (frac == 0.0 || hi == lo) return a;
  const double b = *std::min_element(v.begin() + lo + 1, v.end());
  return std::clamp(a + frac * (b - a), a, b);
}

ClipScore ClipTruthScore(const AlignedClip& clip, double lambda) {
  ClipScore out;
  out.clip_id = clip.clip_id();
  out.frame_scores = FrameTruthScores(clip);
  out.score = Percentile(out.frame_scores, lambda);
  out.lambda = lambda;
  out.warnings = clip.warnings();
  return out;
}

AlignedClip AlignStreams(std::string clip_id, std::vector<Embedding> video,
                         std::vector<Embedding> audio) {
  if (video.empty() || audio.empty()) {
    throw EmptySequence("clip '" + clip_id + "' has an empty stream");
  }
  std::vector<std::string> warnings;
  const std::size_t nv = video.size(), na = audio.size();
  if (nv != na) {
    const std::size_t longer = std::max(nv, na), shorter = std::min(nv, na);
    if (static_cast<double>(longer - shorter) >
        kAlignmentTolerance * static_cast<double>(longer)) {
      throw LengthMismatch("clip '" + clip_id + "': " + std::to_string(nv) +
                           " video vs " + std::to_string(na) +
                           " audio frames exceeds the 5% tolerance");
    }
    warnings.push_back("truncated " + std::string(nv > na ? "video" : "audio") +
                       " stream from " + std::to_string(longer) + " to " +
                       std::to_string(shorter) + " frames");
    video.erase(video.begin() + static_cast<std::ptrdiff_t>(shorter), video.end());
    audio.erase(audio.begin() + static_cast<std::ptrdiff_t>(shorter), audio.end());
  }
  return AlignedClip(std::move(clip_id), std::move(video), std::move(audio),
                     std::move(warnings));
}

AlignedClip AlignStreams(std::string clip_id, const EmbeddingSet& video,
                         const EmbeddingSet& audio) {
  std::vector<Embedding> v, a;
  for (const auto& r : video.records()) v.push_back(r.embedding);
  for (const auto& r : audio.records()) a.push_back(r.embedding);
  return AlignStreams(std::move(clip_id), std::move(v), std::move(a));
}

std::vector<AlignedClip> GroupClips(const EmbeddingSet& video,
                                    const EmbeddingSet& audio) {
  auto v = SplitByClip(video, "video");
  auto a = SplitByClip(audio, "audio");
  for (const auto& [clip, frames] : a) {
    if (!v.contains(clip)) {
      throw MissingRecord("clip '" + clip + "' has audio but no video frames");
    }
  }
  std::vector<AlignedClip> clips;
  clips.reserve(v.size());
  for (auto& [clip, frames] : v) {
    auto it = a.find(clip);
    if (it == a.end()) {
      throw MissingRecord("clip '" + clip + "' has video but no audio frames");
    }
    clips.push_back(AlignStreams(clip, std::move(frames), std::move(it->second)));
  }
  return clips;
}

std::vector<ClipScore> ScoreClips(const std::vector<AlignedClip>& clips,
                                  double lambda, std::size_t threads) {
  if (!(lambda >= 0.0 && lambda <= 100.0)) {
    throw InvalidArgument("lambda must lie in [0, 100], got " +
                          std::to_string(lambda));
  }
  std::vector<ClipScore> out(clips.size());
  ParallelFor(clips.size(), threads, [&](std::size_t i) {
    out[i] = ClipTruthScore(clips[i], lambda);
  });
  return out;
}

}  // namespace factor
