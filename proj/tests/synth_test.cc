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

#include "factor/synth.h"

#include "factor/av_detector.h"
#include "factor/container.h"
#include "factor/errors.h"
#include "factor/metrics.h"
#include "factor/tti_detector.h"
#include "gtest/gtest.h"

namespace factor {
namespace {

double FaceAuc(const SynthConfig& cfg) {
  const auto ds = SynthFaceDataset(cfg);
  const auto scores = ScoreFaceManifest(ds.test, ds.test_claims, ds.Registry());
  LabeledScores data;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    data.push_back({scores[i].score, *ds.test_claims[i].label, ""});
  }
  return RocAuc(data);
}

TEST(SynthTest, ValidateRejectsBadConfigs) {
  SynthConfig cfg;
  EXPECT_NO_THROW(cfg.Validate());
  cfg.sigma_fake = 0.05;  // below sigma_real
  EXPECT_THROW(cfg.Validate(), InvalidArgument);
  cfg = {};
  cfg.dim = 1;
  EXPECT_THROW(cfg.Validate(), InvalidArgument);
  cfg = {};
  cfg.real_videos = 1;
  EXPECT_THROW(SynthFaceDataset(cfg), InvalidArgument);
  cfg = {};
  cfg.misalignment_fraction = 1.5;
  EXPECT_THROW(SynthAvDataset(cfg), InvalidArgument);
}

TEST(SynthTest, SameSeedIsBitIdentical) {
  SynthConfig cfg;
  cfg.dim = 16;
  cfg.n_identities = 3;
  cfg.n_clips = 4;
  cfg.frames_per_clip = 10;
  cfg.n_pairs = 5;
  const auto f1 = SynthFaceDataset(cfg), f2 = SynthFaceDataset(cfg);
  EXPECT_EQ(EncodeContainer(f1.test), EncodeContainer(f2.test));
  EXPECT_EQ(f1.test_claims, f2.test_claims);
  const auto a1 = SynthAvDataset(cfg), a2 = SynthAvDataset(cfg);
  EXPECT_EQ(EncodeContainer(a1.audio), EncodeContainer(a2.audio));
  const auto t1 = SynthTtiDataset(cfg), t2 = SynthTtiDataset(cfg);
  EXPECT_EQ(EncodeContainer(t1.images_al), EncodeContainer(t2.images_al));

  cfg.seed = 1;
  EXPECT_NE(EncodeContainer(SynthFaceDataset(cfg).test),
            EncodeContainer(f1.test));
}

TEST(SynthTest, FaceLayout) {
  SynthConfig cfg;
  cfg.dim = 16;
  cfg.n_identities = 2;
  cfg.frames_per_video = 7;
  const auto ds = SynthFaceDataset(cfg);
  // 2 identities x 2 reference videos x 7 frames.
  EXPECT_EQ(ds.reference.size(), 28u);
  // 2 identities x (2 real + 2 fake) x 7 frames.
  EXPECT_EQ(ds.test.size(), 56u);
  EXPECT_EQ(ds.Registry().size(), 2u);
  for (const auto& c : ds.test_claims) {
    ASSERT_TRUE(c.label);
    EXPECT_EQ(c.record_id.find("fake") != std::string::npos,
              *c.label == Label::kFake);
  }
}

TEST(SynthTest, FaceSeparationTracksSigmaGap) {
  SynthConfig cfg;
  cfg.dim = 64;
  cfg.n_identities = 6;
  cfg.frames_per_video = 10;
  cfg.sigma_real = 0.5;
  double prev = 0.0;
  for (double fake : {0.5, 0.7, 1.2}) {
    cfg.sigma_fake = fake;
    const double auc = FaceAuc(cfg);
    EXPECT_GE(auc, prev - 0.02) << "sigma_fake " << fake;
    prev = auc;
  }
  EXPECT_GT(prev, 0.95);
}

TEST(SynthTest, AvClipsAlternateLabels) {
  SynthConfig cfg;
  cfg.dim = 64;
  cfg.n_clips = 6;
  cfg.frames_per_clip = 20;
  const auto ds = SynthAvDataset(cfg);
  EXPECT_EQ(ds.video.size(), 120u);
  ASSERT_EQ(ds.clips.size(), 6u);
  EXPECT_EQ(ds.clips[0].record_id, "clip-0000");
  EXPECT_EQ(ds.clips[1].label, Label::kFake);
  EXPECT_TRUE(ds.video.encoder().ComparableWith(ds.audio.encoder()));
  const auto clips = GroupClips(ds.video, ds.audio);
  ASSERT_EQ(clips.size(), 6u);
  // Real clips at sigma_real 0.1 sit near cosine 1.
  EXPECT_GT(ClipTruthScore(clips[0], 0).score, 0.99);
}

TEST(SynthTest, TtiTargetsAreHit) {
  SynthConfig cfg;
  cfg.dim = 64;
  cfg.dim_aligned = 32;
  cfg.n_pairs = 4;
  cfg.similarity_jitter = 0.0;
  const auto ds = SynthTtiDataset(cfg);
  EXPECT_EQ(ds.pairs.size(), 4u * 6u);
  EXPECT_EQ(ds.images_al.dim(), 32u);
  const auto scores = ScoreTtiManifest(
      {ds.images_obj, ds.texts_obj, ds.images_al, ds.texts_al},
      PairsFromClaims(ds.pairs));
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const bool real = *ds.pairs[i].label == Label::kReal;
    EXPECT_NEAR(scores[i].objective_sim, real ? 0.45 : 0.43, 1e-6);
    EXPECT_NEAR(scores[i].aligned_sim, real ? 0.30 : 0.34, 1e-6);
  }
  EXPECT_EQ(ds.pairs[0].caption_class, "min-length");
  EXPECT_EQ(ds.pairs[6].caption_class, "max-length");
}

}  // namespace
}  // namespace factor
