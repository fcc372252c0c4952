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

// Claim manifests: JSON Lines, one ClaimRecord per line.
//
//   {"record_id": "vid03#12", "media_id": "vid03", "frame_index": 12,
//    "modality": "face", "claimed_fact": {"kind": "identity", "value": "ann"},
//    "label": "real", "encoder": "face-attn92"}
//
// `label`, `frame_index`, `encoder`, `group` and `caption_class` are optional.
// Blank lines are ignored.

#ifndef FACTOR_MANIFEST_H_
#define FACTOR_MANIFEST_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace factor {

enum class Modality { kFace, kVideo, kAudio, kImage, kText };
enum class Label { kReal, kFake };
enum class FactKind {
  kIdentity,      // value is an identity name
  kPairedRecord,  // value is the record id of the paired-modality media
  kCaption,       // value is the caption record id (or caption text)
};

struct ClaimedFact {
  FactKind kind = FactKind::kIdentity;
  std::string value;
  friend bool operator==(const ClaimedFact&, const ClaimedFact&) = default;
};

// One media item and the fact it claims. `label` is ground truth for
// evaluation only; no scoring routine reads it.
struct ClaimRecord {
  std::string record_id;
  std::string media_id;
  std::optional<std::uint64_t> frame_index;
  Modality modality = Modality::kFace;
  ClaimedFact claimed_fact;
  std::optional<Label> label;
  std::string encoder;
  // Breakdown key for evaluation (e.g. a fake category).
  std::string group;
  // Caption complexity class for paired caption studies, e.g. "min-length".
  std::string caption_class;

  friend bool operator==(const ClaimRecord&, const ClaimRecord&) = default;
};

std::string_view ToString(Modality m);
std::string_view ToString(Label l);
std::string_view ToString(FactKind k);
Modality ParseModality(std::string_view s);
Label ParseLabel(std::string_view s);
FactKind ParseFactKind(std::string_view s);

std::string ClaimToJsonLine(const ClaimRecord& claim);
// Throws ManifestError naming the offending field.
ClaimRecord ClaimFromJsonLine(std::string_view line);

// Throws ManifestError (with line number) or DuplicateRecord.
std::vector<ClaimRecord> ReadManifest(std::istream& in);
std::vector<ClaimRecord> ReadManifest(const std::filesystem::path& path);
void WriteManifest(const std::vector<ClaimRecord>& claims, std::ostream& out);
void WriteManifest(const std::vector<ClaimRecord>& claims,
                   const std::filesystem::path& path);

}  // namespace factor

#endif  // FACTOR_MANIFEST_H_
