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

#include "factor/face_detector.h"

#include <algorithm>
#include <random>
#include <set>

#include "factor/errors.h"
#include "factor/metrics.h"
#include "factor/synth.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace factor {
namespace {

ReferenceSet MakeRef(const std::string& identity,
                     const std::vector<Embedding>& embeddings) {
  EmbeddingSet set(EncoderId{"face", embeddings.front().dim(), ""});
  for (std::size_t i = 0; i < embeddings.size(); ++i) {
    set.Add(identity + std::to_string(i), embeddings[i]);
  }
  return ReferenceSet(identity, std::move(set));
}

ClaimRecord Claim(const std::string& id, const std::string& identity) {
  ClaimRecord c;
  c.record_id = id;
  c.claimed_fact = {FactKind::kIdentity, identity};
  return c;
}

TEST(FaceTruthScoreTest, Examples) {
  EXPECT_DOUBLE_EQ(
      FaceTruthScore(Embedding{1, 0}, MakeRef("a", {{1, 0}, {0, 1}})), 1.0);
  EXPECT_DOUBLE_EQ(FaceTruthScore(Embedding{0, 1}, MakeRef("a", {{1, 0}})),
                   0.0);
  // max(0.8, 0.6*0.8 + 0.8*0.6) = 0.96; inputs are f32 so allow rounding.
  EXPECT_NEAR(FaceTruthScore(Embedding{0.8f, 0.6f},
                             MakeRef("a", {{1, 0}, {0.6f, 0.8f}})),
              0.96, 1e-6);
}

TEST(FaceTruthScoreTest, Errors) {
  EXPECT_THROW(ReferenceSet("x", EmbeddingSet(EncoderId{"face", 2, ""})),
               EmptyReferenceSet);
  EXPECT_THROW(FaceTruthScore(Embedding{1, 0, 0}, MakeRef("a", {{1, 0}})),
               DimensionMismatch);
}

TEST(FaceTruthScoreTest, Properties) {
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t dim = 2 + trial % 30;
    std::vector<Embedding> refs;
    for (int i = 0; i < 1 + trial % 7; ++i) {
      refs.push_back(testing::CoarseEmbedding(gen, dim));
    }
    const auto x = testing::CoarseEmbedding(gen, dim);
    const double base = FaceTruthScore(x, MakeRef("a", refs));

    // Superset growth never lowers the score.
    auto grown = refs;
    grown.push_back(testing::CoarseEmbedding(gen, dim));
    EXPECT_GE(FaceTruthScore(x, MakeRef("a", grown)), base);

    // Permutation leaves it unchanged.
    auto shuffled = refs;
    std::shuffle(shuffled.begin(), shuffled.end(), gen);
    EXPECT_EQ(FaceTruthScore(x, MakeRef("a", shuffled)), base);

    // Positive scaling of x or of a reference.
    auto scaled = refs;
    scaled[0] = scaled[0].Scaled(testing::CoarseScale(gen));
    EXPECT_NEAR(
        FaceTruthScore(x.Scaled(testing::CoarseScale(gen)), MakeRef("a", scaled)),
        base, 1e-9);

    // Members score 1.
    EXPECT_NEAR(FaceTruthScore(refs.back(), MakeRef("a", refs)), 1.0, 1e-9);
  }
}

TEST(IdentityRegistryTest, FromClaimsGroupsByIdentity) {
  EmbeddingSet set(EncoderId{"face", 2, ""});
  set.Add("a1", Embedding{1, 0});
  set.Add("a2", Embedding{1, 1});
  set.Add("b1", Embedding{0, 1});
  set.Add("f1", Embedding{-1, 0});
  std::vector<ClaimRecord> claims = {Claim("a1", "ann"), Claim("a2", "ann"),
                                     Claim("b1", "bob"), Claim("f1", "bob")};
  claims[3].label = Label::kFake;  // fakes never enter a reference set
  const auto reg = IdentityRegistry::FromClaims(set, claims);
  EXPECT_EQ(reg.size(), 2u);
  EXPECT_EQ(reg.Get("ann").size(), 2u);
  EXPECT_EQ(reg.Get("bob").size(), 1u);
  EXPECT_THROW(reg.Get("nobody"), UnknownIdentity);

  claims.push_back(Claim("missing", "ann"));
  EXPECT_THROW(IdentityRegistry::FromClaims(set, claims), MissingRecord);

  IdentityRegistry r2;
  r2.Add(MakeRef("ann", {{1, 0}}));
  EXPECT_THROW(r2.Add(MakeRef("ann", {{0, 1}})), DuplicateRecord);
  EXPECT_THROW(r2.Add(MakeRef("cat", {{0, 1, 0}})), DimensionMismatch);
}

TEST(ScoreFaceManifestTest, ScoresInClaimOrder) {
  IdentityRegistry reg;
  reg.Add(MakeRef("ann", {{1, 0}}));
  reg.Add(MakeRef("bob", {{0, 1}}));
  EmbeddingSet test(EncoderId{"face", 2, ""});
  test.Add("t1", Embedding{0, 1});
  test.Add("t2", Embedding{1, 0});

  const auto scores = ScoreFaceManifest(
      test, {Claim("t2", "bob"), Claim("t1", "bob")}, reg);
  ASSERT_EQ(scores.size(), 2u);
  EXPECT_EQ(scores[0].record_id, "t2");
  EXPECT_DOUBLE_EQ(scores[0].score, 0.0);
  EXPECT_EQ(scores[1].identity, "bob");
  EXPECT_DOUBLE_EQ(scores[1].score, 1.0);

  EXPECT_THROW(ScoreFaceManifest(test, {Claim("t1", "nobody")}, reg),
               UnknownIdentity);
  EXPECT_THROW(ScoreFaceManifest(test, {Claim("t9", "ann")}, reg),
               MissingRecord);
  auto caption = Claim("t1", "ann");
  caption.claimed_fact.kind = FactKind::kCaption;
  EXPECT_THROW(ScoreFaceManifest(test, {caption}, reg), InvalidArgument);
}

TEST(ScoreFaceManifestTest, ThreadCountDoesNotChangeOutput) {
  SynthConfig cfg;
  cfg.dim = 32;
  cfg.n_identities = 5;
  const auto ds = SynthFaceDataset(cfg);
  const auto reg = ds.Registry();
  const auto one = ScoreFaceManifest(ds.test, ds.test_claims, reg, 1);
  const auto four = ScoreFaceManifest(ds.test, ds.test_claims, reg, 4);
  EXPECT_EQ(one, four);
}

TEST(ScoreFaceManifestTest, NoisierFakesScoreLower) {
  // Monte Carlo: centroids per identity, reals at sigma 0.2, fakes at 0.8.
  SynthConfig cfg;
  cfg.dim = 64;
  cfg.n_identities = 8;
  cfg.sigma_real = 0.2;
  cfg.sigma_fake = 0.8;
  cfg.seed = 42;
  const auto ds = SynthFaceDataset(cfg);
  const auto scores = ScoreFaceManifest(ds.test, ds.test_claims, ds.Registry());
  LabeledScores data;
  double real_sum = 0, fake_sum = 0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const auto label = *ds.test_claims[i].label;
    data.push_back({scores[i].score, label, ""});
    (label == Label::kReal ? real_sum : fake_sum) += scores[i].score;
  }
  EXPECT_GT(real_sum, fake_sum);
  EXPECT_GT(testing::PairwiseAuc(data), 0.95);
}

TEST(SplitIdentityVideosTest, Partition) {
  const std::vector<std::string> four = {"v0", "v1", "v2", "v3"};
  const auto s = SplitIdentityVideos(four, 0);
  EXPECT_EQ(s.reference.size(), 2u);
  EXPECT_EQ(s.test.size(), 2u);
  const auto again = SplitIdentityVideos(four, 0);
  EXPECT_EQ(s.reference, again.reference);
  EXPECT_EQ(s.test, again.test);

  const auto five = SplitIdentityVideos({"a", "b", "c", "d", "e"}, 9);
  EXPECT_EQ(five.reference.size(), 3u);
  EXPECT_EQ(five.test.size(), 2u);

  std::vector<std::string> all = five.reference;
  all.insert(all.end(), five.test.begin(), five.test.end());
  std::sort(all.begin(), all.end());
  EXPECT_EQ(all, (std::vector<std::string>{"a", "b", "c", "d", "e"}));

  EXPECT_THROW(SplitIdentityVideos({"only"}, 0), InsufficientVideos);
  EXPECT_THROW(SplitIdentityVideos({}, 0), InsufficientVideos);
}

TEST(SplitIdentityVideosTest, SeedsProduceDifferentSplits) {
  std::vector<std::string> videos;
  for (int i = 0; i < 10; ++i) videos.push_back("v" + std::to_string(i));
  std::set<std::vector<std::string>> distinct;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    distinct.insert(SplitIdentityVideos(videos, seed).reference);
  }
  EXPECT_GT(distinct.size(), 10u);
}

}  // namespace
}  // namespace factor
