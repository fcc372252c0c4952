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

#include <cmath>
#include <limits>
#include <random>

#include "factor/errors.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace factor {
namespace {

TEST(CosineTruthScoreTest, Examples) {
  EXPECT_DOUBLE_EQ(CosineTruthScore(Embedding{1, 0}, Embedding{1, 0}), 1.0);
  EXPECT_DOUBLE_EQ(CosineTruthScore(Embedding{1, 0}, Embedding{0, 1}), 0.0);
  EXPECT_DOUBLE_EQ(CosineTruthScore(Embedding{2, 0}, Embedding{5, 0}), 1.0);
  EXPECT_NEAR(CosineTruthScore(Embedding{1, 1}, Embedding{1, 0}),
              std::sqrt(2.0) / 2.0, 1e-15);
}

TEST(CosineTruthScoreTest, Errors) {
  EXPECT_THROW(CosineTruthScore(Embedding{1, 0}, Embedding{1, 0, 0}),
               DimensionMismatch);
  const float zero[2] = {0.0f, 0.0f};
  const float one[2] = {1.0f, 0.0f};
  EXPECT_THROW(CosineTruthScore(zero, one), DegenerateVector);
  EXPECT_THROW(CosineTruthScore(one, zero), DegenerateVector);
}

TEST(CosineTruthScoreTest, SelfSimilarityAndScaleInvariance) {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = testing::CoarseEmbedding(gen, 1 + trial % 64);
    const auto b = testing::CoarseEmbedding(gen, a.dim());
    EXPECT_NEAR(CosineTruthScore(a, a), 1.0, 1e-9);
    const double base = CosineTruthScore(a, b);
    EXPECT_NEAR(CosineTruthScore(a.Scaled(testing::CoarseScale(gen)),
                                 b.Scaled(testing::CoarseScale(gen))),
                base, 1e-9);
    EXPECT_DOUBLE_EQ(CosineTruthScore(b, a), base);
  }
}

TEST(CosineTruthScoreTest, ArbitraryScaleIsBoundedByF32Rounding) {
  // Rescaling a stored f32 vector rounds each entry, so a generic factor moves
  // the score by up to a few f32 ulps.
  std::mt19937_64 gen(12);
  std::uniform_real_distribution<float> scale(0.01f, 100.0f);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = testing::RandomEmbedding(gen, 1 + trial % 64);
    const auto b = testing::RandomEmbedding(gen, a.dim());
    EXPECT_NEAR(CosineTruthScore(a.Scaled(scale(gen)), b.Scaled(scale(gen))),
                CosineTruthScore(a, b), 1e-6);
  }
}

TEST(EmbeddingTest, RejectsInvalidValues) {
  EXPECT_THROW(Embedding(std::vector<float>{}), DegenerateVector);
  EXPECT_THROW((Embedding{0, 0, 0}), DegenerateVector);
  EXPECT_THROW((Embedding{1, std::numeric_limits<float>::quiet_NaN()}),
               NonFiniteValue);
  EXPECT_THROW((Embedding{std::numeric_limits<float>::infinity(), 1}),
               NonFiniteValue);
}

TEST(EmbeddingSetTest, EnforcesDimAndUniqueIds) {
  EmbeddingSet set(EncoderId{"enc", 2, ""});
  set.Add("a", Embedding{1, 0});
  EXPECT_THROW(set.Add("b", Embedding{1, 0, 0}), DimensionMismatch);
  EXPECT_THROW(set.Add("a", Embedding{0, 1}), DuplicateRecord);
  EXPECT_EQ(set.size(), 1u);
  EXPECT_THROW(set.Get("zzz"), MissingRecord);
  EXPECT_EQ(set.Get("a"), (Embedding{1, 0}));
}

TEST(EncoderIdTest, Comparability) {
  EncoderId video{"av-hubert-video", 1024, "av-hubert"};
  EncoderId audio{"av-hubert-audio", 1024, "av-hubert"};
  EncoderId clip{"clip", 1024, ""};
  EXPECT_TRUE(video.ComparableWith(audio));
  EXPECT_FALSE(video.ComparableWith(clip));
  EXPECT_FALSE(video.ComparableWith(EncoderId{"x", 512, "av-hubert"}));
}

TEST(SubsampleFramesTest, Examples) {
  // Frozen from the formula round(i * 63 / 31), i = 0..31, evaluated by hand
  // with half-up rounding.
  const std::vector<std::size_t> expected_64_32 = {
      0,  2,  4,  6,  8,  10, 12, 14, 16, 18, 20, 22, 24, 26, 28, 30,
      33, 35, 37, 39, 41, 43, 45, 47, 49, 51, 53, 55, 57, 59, 61, 63};
  EXPECT_EQ(SubsampleFrames(64, 32), expected_64_32);

  std::vector<std::size_t> identity(32);
  for (std::size_t i = 0; i < 32; ++i) identity[i] = i;
  EXPECT_EQ(SubsampleFrames(32, 32), identity);
  EXPECT_EQ(SubsampleFrames(5, 2), (std::vector<std::size_t>{0, 4}));
  EXPECT_EQ(SubsampleFrames(3, 10), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(SubsampleFrames(5, 1), (std::vector<std::size_t>{2}));
  EXPECT_EQ(SubsampleFrames(4, 1), (std::vector<std::size_t>{2}));
  EXPECT_THROW(SubsampleFrames(0, 3), InvalidArgument);
  EXPECT_THROW(SubsampleFrames(3, 0), InvalidArgument);
}

TEST(SubsampleFramesTest, MatchesFloatingPointFormula) {
  for (std::size_t n = 1; n <= 120; ++n) {
    for (std::size_t k = 1; k <= 40; ++k) {
      const auto idx = SubsampleFrames(n, k);
      ASSERT_EQ(idx.size(), std::min(n, k));
      ASSERT_TRUE(std::is_sorted(idx.begin(), idx.end()));
      ASSERT_LE(idx.back(), n - 1);
      if (k >= 2 && k < n) {
        EXPECT_EQ(idx.front(), 0u);
        EXPECT_EQ(idx.back(), n - 1);
        for (std::size_t i = 0; i < k; ++i) {
          const double exact = static_cast<double>(i) * (n - 1) / (k - 1);
          // Exact halves are only possible when (k-1) is even; skip them
          // since floating point may land on either side.
          if (std::abs(exact - std::floor(exact) - 0.5) < 1e-9) continue;
          EXPECT_EQ(idx[i], static_cast<std::size_t>(std::llround(exact)));
        }
      }
      EXPECT_EQ(SubsampleFrames(n, k), idx);
    }
  }
}

}  // namespace
}  // namespace factor
