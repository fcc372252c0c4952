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

// Rank metrics over truth scores.
//
// The positive class is always "real": a high truth score supports the
// claimed fact. An AUC of 1 means every real item outscored every fake.

#ifndef FACTOR_METRICS_H_
#define FACTOR_METRICS_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "factor/manifest.h"
#include "json.hpp"

namespace factor {

struct LabeledScore {
  double score = 0.0;
  Label label = Label::kReal;
  std::string group;
};
using LabeledScores = std::vector<LabeledScore>;

// P(real > fake) + 0.5 * P(real == fake) over all real x fake pairs, via the
// mid-rank (Mann-Whitney) statistic in O(n log n). Throws DegenerateLabels
// when either class is missing and InvalidArgument for non-finite scores.
double RocAuc(std::span<const LabeledScore> data);

// Scores sorted descending, ties kept in input order;
// AP = (1/P) * sum over real ranks k of (reals in top k) / k.
double AveragePrecision(std::span<const LabeledScore> data);

struct GroupMetrics {
  double auc = 0.0;
  double ap = 0.0;
  std::size_t count_real = 0;
  std::size_t count_fake = 0;
};

struct EvalReport {
  double auc = 0.0;
  double ap = 0.0;
  std::size_t count_real = 0;
  std::size_t count_fake = 0;
  std::map<std::string, GroupMetrics> per_group;
  // Groups that lack one of the classes and so have no metrics.
  std::vector<std::string> skipped_groups;
  // Unweighted mean of per-group AUC; absent when no group has metrics.
  std::optional<double> mean_group_auc;
  nlohmann::json config = nlohmann::json::object();
};

struct EvalOptions {
  // Entries with an empty group join every group. Useful when only fakes
  // carry a category and each category is judged against all reals.
  bool share_ungrouped = false;
  nlohmann::json config = nlohmann::json::object();
};

EvalReport Evaluate(std::span<const LabeledScore> data,
                    const EvalOptions& options = {});

// Unweighted arithmetic mean of the AUC values. Throws EmptySequence.
double PerIdentityAverage(const std::map<std::string, EvalReport>& reports);
double PerIdentityAverage(const std::map<std::string, GroupMetrics>& groups);

// An id-keyed score as read back from a scores file.
struct ScoredItem {
  std::string id;
  double score = 0.0;
  std::string group;
};

// Attaches ground-truth labels from claims (matched on record_id). The item
// group wins over the claim group. Throws MissingRecord for an unknown id and
// ManifestError for an unlabeled claim.
LabeledScores AttachLabels(std::span<const ScoredItem> items,
                           const std::vector<ClaimRecord>& claims);

nlohmann::json ReportToJson(const EvalReport& report);
std::string ReportToTable(const EvalReport& report);

}  // namespace factor

#endif  // FACTOR_METRICS_H_
