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

#include "factor/manifest.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "factor/errors.h"
#include "json.hpp"

namespace factor {
namespace {

using nlohmann::json;

std::string RequireString(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ManifestError(std::string("missing field '") + key + "'");
  }
  if (!it->is_string()) {
    throw ManifestError(std::string("field '") + key + "' must be a string");
  }
  return it->get<std::string>();
}

std::string OptionalString(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return {};
  if (!it->is_string()) {
    throw ManifestError(std::string("field '") + key + "' must be a string");
  }
  return it->get<std::string>();
}

}  // namespace

std::string_view ToString(Modality m) {
  switch (m) {
    case Modality::kFace: return "face";
    case Modality::kVideo: return "video";
    case Modality::kAudio: return "audio";
    case Modality::kImage: return "image";
    case Modality::kText: return "text";
  }
  return "?";
}

std::string_view ToString(Label l) {
  return l == Label::kReal ? "real" : "fake";
}

std::string_view ToString(FactKind k) {
  switch (k) {
    case FactKind::kIdentity: return "identity";
    case FactKind::kPairedRecord: return "paired";
    case FactKind::kCaption: return "caption";
  }
  return "?";
}

Modality ParseModality(std::string_view s) {
  if (s == "face") return Modality::kFace;
  if (s == "video") return Modality::kVideo;
  if (s == "audio") return Modality::kAudio;
  if (s == "image") return Modality::kImage;
  if (s == "text") return Modality::kText;
  throw ManifestError("unknown modality '" + std::string(s) + "'");
}

Label ParseLabel(std::string_view s) {
  if (s == "real") return Label::kReal;
  if (s == "fake") return Label::kFake;
  throw ManifestError("label must be 'real' or 'fake', got '" +
                      std::string(s) + "'");
}

FactKind ParseFactKind(std::string_view s) {
  if (s == "identity") return FactKind::kIdentity;
  if (s == "paired") return FactKind::kPairedRecord;
  if (s == "caption") return FactKind::kCaption;
  throw ManifestError("unknown claimed_fact kind '" + std::string(s) + "'");
}

std::string ClaimToJsonLine(const ClaimRecord& claim) {
  json j;
  j["record_id"] = claim.record_id;
  j["media_id"] = claim.media_id;
  j["frame_index"] = claim.frame_index ? json(*claim.frame_index) : json();
  j["modality"] = ToString(claim.modality);
  j["claimed_fact"] = {{"kind", ToString(claim.claimed_fact.kind)},
                       {"value", claim.claimed_fact.value}};
  if (claim.label) j["label"] = ToString(*claim.label);
  if (!claim.encoder.empty()) j["encoder"] = claim.encoder;
  if (!claim.group.empty()) j["group"] = claim.group;
  if (!claim.caption_class.empty()) j["caption_class"] = claim.caption_class;
  return j.dump();
}

ClaimRecord ClaimFromJsonLine(std::string_view line) {
  json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw ManifestError("line is not valid JSON");
  if (!j.is_object()) throw ManifestError("line is not a JSON object");

  ClaimRecord c;
  c.record_id = RequireString(j, "record_id");
  if (c.record_id.empty()) throw ManifestError("record_id must be nonempty");
  c.media_id = OptionalString(j, "media_id");
  if (auto it = j.find("frame_index"); it != j.end() && !it->is_null()) {
    if (!it->is_number_unsigned()) {
      throw ManifestError("frame_index must be a nonnegative integer");
    }
    c.frame_index = it->get<std::uint64_t>();
  }
  c.modality = ParseModality(RequireString(j, "modality"));

  auto fact = j.find("claimed_fact");
  if (fact == j.end()) throw ManifestError("missing field 'claimed_fact'");
  if (!fact->is_object()) {
    throw ManifestError("claimed_fact must be an object {kind, value}");
  }
  c.claimed_fact.kind = ParseFactKind(RequireString(*fact, "kind"));
  c.claimed_fact.value = RequireString(*fact, "value");

  if (auto label = OptionalString(j, "label"); !label.empty()) {
    c.label = ParseLabel(label);
  }
  c.encoder = OptionalString(j, "encoder");
  c.group = OptionalString(j, "group");
  c.caption_class = OptionalString(j, "caption_class");
  return c;
}

std::vector<ClaimRecord> ReadManifest(std::istream& in) {
  std::vector<ClaimRecord> out;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    ClaimRecord c;
    try {
      c = ClaimFromJsonLine(line);
    } catch (const ManifestError& e) {
      throw ManifestError("manifest line " + std::to_string(line_no) + ": " +
                          e.what());
    }
    if (!seen.insert(c.record_id).second) {
      throw DuplicateRecord("manifest line " + std::to_string(line_no) +
                            ": duplicate record_id '" + c.record_id + "'");
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<ClaimRecord> ReadManifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open manifest '" + path.string() + "'");
  try {
    return ReadManifest(in);
  } catch (const ManifestError& e) {
    throw ManifestError(path.string() + ": " + e.what());
  }
}

void WriteManifest(const std::vector<ClaimRecord>& claims, std::ostream& out) {
  for (const auto& c : claims) out << ClaimToJsonLine(c) << '\n';
}

void WriteManifest(const std::vector<ClaimRecord>& claims,
                   const std::filesystem::path& path) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
    WriteManifest(claims, out);
    if (!out) throw IoError("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    throw IoError("cannot rename '" + tmp.string() + "': " + ec.message());
  }
}

}  // namespace factor
