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

#include "factor/metrics.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "factor/errors.h"

namespace factor {
namespace {

void CheckInput(std::span<const LabeledScore> data, std::size_t* n_real,
                std::size_t* n_fake) {
  *n_real = *n_fake = 0;
  for (const auto& e : data) {
    if (!std::isfinite(e.score)) {
      throw InvalidArgument("scores must be finite");
    }
    (e.label == Label::kReal ? *n_real : *n_fake) += 1;
  }
  if (*n_real == 0 || *n_fake == 0) {
    throw DegenerateLabels("metrics need at least one real and one fake, got " +
                           std::to_string(*n_real) + " real and " +
                           std::to_string(*n_fake) + " fake");
  }
}

std::string Percent(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", 100.0 * v);
  return buf;
}

}  // namespace

double RocAuc(std::span<const LabeledScore> data) {
  std::size_t n_real, n_fake;
  CheckInput(data, &n_real, &n_fake);

  std::vector<std::size_t> order(data.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return data[a].score < data[b].score;
  });

  // Sum of 1-based mid-ranks of the real entries.
  double real_rank_sum = 0.0;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    std::size_t reals_in_tie = 0;
    while (j < order.size() && data[order[j]].score == data[order[i]].score) {
      reals_in_tie += data[order[j]].label == Label::kReal ? 1 : 0;
      ++j;
    }
    const double mid_rank = 0.5 * static_cast<double>(i + 1 + j);
    real_rank_sum += mid_rank * static_cast<double>(reals_in_tie);
    i = j;
  }
  const double p = static_cast<double>(n_real);
  const double n = static_cast<double>(n_fake);
  const double u = real_rank_sum - p * (p + 1.0) / 2.0;
  return u / (p * n);
}

double AveragePrecision(std::span<const LabeledScore> data) {
  std::size_t n_real, n_fake;
  CheckInput(data, &n_real, &n_fake);

  std::vector<std::size_t> order(data.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return data[a].score > data[b].score;
                   });
  double sum = 0.0;
  std::size_t hits = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (data[order[k]].label != Label::kReal) continue;
    ++hits;
    sum += static_cast<double>(hits) / static_cast<double>(k + 1);
  }
  return sum / static_cast<double>(n_real);
}

EvalReport Evaluate(std::span<const LabeledScore> data,
                    const EvalOptions& options) {
  EvalReport report;
  report.auc = RocAuc(data);
  report.ap = AveragePrecision(data);
  for (const auto& e : data) {
    (e.label == Label::kReal ? report.count_real : report.count_fake) += 1;
  }
  report.config = options.config;

  std::set<std::string> groups;
  for (const auto& e : data) {
    if (!e.group.empty()) groups.insert(e.group);
  }
  for (const auto& g : groups) {
    LabeledScores subset;
    for (const auto& e : data) {
      if (e.group == g || (options.share_ungrouped && e.group.empty())) {
        subset.push_back(e);
      }
    }
    const auto reals = std::count_if(subset.begin(), subset.end(), [](auto& e) {
      return e.label == Label::kReal;
    });
    if (reals == 0 || reals == static_cast<std::ptrdiff_t>(subset.size())) {
      report.skipped_groups.push_back(g);
      continue;
    }
    GroupMetrics m;
    m.auc = RocAuc(subset);
    m.ap = AveragePrecision(subset);
    m.count_real = static_cast<std::size_t>(reals);
    m.count_fake = subset.size() - m.count_real;
    report.per_group.emplace(g, m);
  }
  if (!report.per_group.empty()) {
    report.mean_group_auc = PerIdentityAverage(report.per_group);
  }
  return report;
}

double PerIdentityAverage(const std::map<std::string, EvalReport>& reports) {
  if (reports.empty()) throw EmptySequence("no identities to average");
  double sum = 0.0;
  for (const auto& [id, r] : reports) sum += r.auc;
  return sum / static_cast<double>(reports.size());
}

double PerIdentityAverage(const std::map<std::string, GroupMetrics>& groups) {
  if (groups.empty()) throw EmptySequence("no identities to average");
  double sum = 0.0;
  for (const auto& [id, m] : groups) sum += m.auc;
  return sum / static_cast<double>(groups.size());
}

LabeledScores AttachLabels(std::span<const ScoredItem> items,
                           const std::vector<ClaimRecord>& claims) {
  std::unordered_map<std::string, const ClaimRecord*> by_id;
  for (const auto& c : claims) by_id.emplace(c.record_id, &c);
  LabeledScores out;
  out.reserve(items.size());
  for (const auto& item : items) {
    auto it = by_id.find(item.id);
    if (it == by_id.end()) {
      throw MissingRecord("scored id '" + item.id +
                          "' has no entry in the label manifest");
    }
    const ClaimRecord& c = *it->second;
    if (!c.label) {
      throw ManifestError("claim '" + c.record_id + "' carries no label");
    }
    out.push_back({item.score, *c.label,
                   item.group.empty() ? c.group : item.group});
  }
  return out;
}

nlohmann::json ReportToJson(const EvalReport& report) {
  nlohmann::json j;
  j["positive_class"] = "real";
  j["auc"] = report.auc;
  j["ap"] = report.ap;
  j["count_real"] = report.count_real;
  j["count_fake"] = report.count_fake;
  j["mean_group_auc"] =
      report.mean_group_auc ? nlohmann::json(*report.mean_group_auc)
                            : nlohmann::json();
  nlohmann::json groups = nlohmann::json::object();
  for (const auto& [g, m] : report.per_group) {
    groups[g] = {{"auc", m.auc},
                 {"ap", m.ap},
                 {"count_real", m.count_real},
                 {"count_fake", m.count_fake}};
  }
  j["per_group"] = std::move(groups);
  j["skipped_groups"] = report.skipped_groups;
  j["config"] = report.config;
  return j;
}

std::string ReportToTable(const EvalReport& report) {
  std::size_t width = 16;
  for (const auto& [g, m] : report.per_group) width = std::max(width, g.size());
  auto row = [&](const std::string& name, const std::string& nr,
                 const std::string& nf, const std::string& auc,
                 const std::string& ap) {
    char buf[512];
    std::snprintf(buf, sizeof(buf), "%-*s %8s %8s %8s %8s\n",
                  static_cast<int>(width), name.c_str(), nr.c_str(),
                  nf.c_str(), auc.c_str(), ap.c_str());
    return std::string(buf);
  };
  std::ostringstream out;
  out << "# positive class: real (high truth score supports the claim)\n";
  out << row("group", "real", "fake", "AUC(%)", "AP(%)");
  for (const auto& [g, m] : report.per_group) {
    out << row(g, std::to_string(m.count_real), std::to_string(m.count_fake),
               Percent(m.auc), Percent(m.ap));
  }
  if (report.mean_group_auc) {
    out << row("mean of groups", "", "", Percent(*report.mean_group_auc), "");
  }
  out << row("pooled", std::to_string(report.count_real),
             std::to_string(report.count_fake), Percent(report.auc),
             Percent(report.ap));
  for (const auto& g : report.skipped_groups) {
    out << "# skipped group '" << g << "': single class\n";
  }
  return out.str();
}

}  // namespace factor
