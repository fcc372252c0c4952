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

#include <sstream>

#include "factor/errors.h"
#include "gtest/gtest.h"

namespace factor {
namespace {

TEST(ManifestTest, ParsesFullRecord) {
  const auto c = ClaimFromJsonLine(
      R"({"record_id":"v1#3","media_id":"v1","frame_index":3,)"
      R"("modality":"face","claimed_fact":{"kind":"identity","value":"ann"},)"
      R"("label":"fake","encoder":"face-attn92","group":"FSGAN"})");
  EXPECT_EQ(c.record_id, "v1#3");
  EXPECT_EQ(c.media_id, "v1");
  EXPECT_EQ(c.frame_index, 3u);
  EXPECT_EQ(c.modality, Modality::kFace);
  EXPECT_EQ(c.claimed_fact, (ClaimedFact{FactKind::kIdentity, "ann"}));
  EXPECT_EQ(c.label, Label::kFake);
  EXPECT_EQ(c.encoder, "face-attn92");
  EXPECT_EQ(c.group, "FSGAN");
}

TEST(ManifestTest, OptionalFieldsMayBeAbsentOrNull) {
  const auto c = ClaimFromJsonLine(
      R"({"record_id":"p1","modality":"image","frame_index":null,)"
      R"("claimed_fact":{"kind":"caption","value":"cap-1"}})");
  EXPECT_FALSE(c.frame_index);
  EXPECT_FALSE(c.label);
  EXPECT_TRUE(c.media_id.empty());
}

TEST(ManifestTest, RoundTripThroughStream) {
  std::vector<ClaimRecord> claims(2);
  claims[0].record_id = "clip-1";
  claims[0].media_id = "clip-1";
  claims[0].modality = Modality::kVideo;
  claims[0].claimed_fact = {FactKind::kPairedRecord, "clip-1"};
  claims[0].label = Label::kReal;
  claims[1].record_id = "pair-2";
  claims[1].modality = Modality::kImage;
  claims[1].claimed_fact = {FactKind::kCaption, "cap-2"};
  claims[1].caption_class = "max-length";
  claims[1].frame_index = 0;

  std::stringstream ss;
  WriteManifest(claims, ss);
  ss << "\n   \n";  // blank lines are skipped
  EXPECT_EQ(ReadManifest(ss), claims);
}

TEST(ManifestTest, ErrorsNameTheField) {
  auto expect_error = [](const char* line, const char* needle) {
    try {
      ClaimFromJsonLine(line);
      ADD_FAILURE() << "no error for " << line;
    } catch (const ManifestError& e) {
      EXPECT_NE(std::string(e.what()).find(needle), std::string::npos)
          << e.what();
    }
  };
  expect_error("not json", "JSON");
  expect_error(R"([1,2])", "object");
  expect_error(R"({"modality":"face","claimed_fact":{"kind":"identity","value":"a"}})",
               "record_id");
  expect_error(R"({"record_id":"x","modality":"smell","claimed_fact":{"kind":"identity","value":"a"}})",
               "modality");
  expect_error(R"({"record_id":"x","modality":"face"})", "claimed_fact");
  expect_error(R"({"record_id":"x","modality":"face","claimed_fact":"ann"})",
               "claimed_fact");
  expect_error(R"({"record_id":"x","modality":"face","claimed_fact":{"kind":"identity","value":"a"},"label":"maybe"})",
               "label");
  expect_error(R"({"record_id":"x","modality":"face","frame_index":-1,"claimed_fact":{"kind":"identity","value":"a"}})",
               "frame_index");
}

TEST(ManifestTest, DuplicateRecordIdsAndLineNumbers) {
  std::stringstream dup(
      R"({"record_id":"a","modality":"face","claimed_fact":{"kind":"identity","value":"x"}})"
      "\n"
      R"({"record_id":"a","modality":"face","claimed_fact":{"kind":"identity","value":"y"}})"
      "\n");
  EXPECT_THROW(ReadManifest(dup), DuplicateRecord);

  std::stringstream bad(
      R"({"record_id":"a","modality":"face","claimed_fact":{"kind":"identity","value":"x"}})"
      "\n{oops}\n");
  try {
    ReadManifest(bad);
    FAIL();
  } catch (const ManifestError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

}  // namespace
}  // namespace factor
