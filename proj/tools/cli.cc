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

#include "cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "factor/ablation.h"
#include "factor/av_detector.h"
#include "factor/container.h"
#include "factor/errors.h"
#include "factor/face_detector.h"
#include "factor/manifest.h"
#include "factor/metrics.h"
#include "factor/synth.h"
#include "factor/tti_detector.h"
#include "json.hpp"

namespace factor::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Either the caller's stream (for "-") or a file.
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) {
    if (path == "-") {
      stream_ = &fallback;
      return;
    }
    file_ = std::make_unique<std::ofstream>(path, std::ios::trunc);
    if (!*file_) throw IoError("cannot open '" + path + "' for writing");
    stream_ = file_.get();
  }
  ~Output() { stream_->flush(); }
  std::ostream& stream() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

// Reads a JSON Lines file of objects.
std::vector<json> ReadJsonLines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::vector<json> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      throw ManifestError(path + " line " + std::to_string(line_no) +
                          ": not a JSON object");
    }
    rows.push_back(std::move(j));
  }
  return rows;
}

std::string RowId(const json& row) {
  for (const char* key : {"record_id", "clip_id", "pair_id"}) {
    if (auto it = row.find(key); it != row.end() && it->is_string()) {
      return it->get<std::string>();
    }
  }
  throw ManifestError("score line has no record_id, clip_id or pair_id");
}

struct Common {
  std::string out = "-";
  std::size_t threads = 1;
  std::string format = "json";
};

void AddOut(CLI::App* sub, Common& c) {
  sub->add_option("--out", c.out, "Output path, '-' for stdout")
      ->capture_default_str();
}

// ---------------------------------------------------------------- validate

struct ValidateArgs {
  std::vector<std::string> containers;
  std::vector<std::string> manifests;
  std::size_t dim = 0;
};

void RunValidate(const ValidateArgs& a, const Common& c, std::ostream& out) {
  if (a.containers.empty() && a.manifests.empty()) {
    throw InvalidArgument("validate: pass at least one --container or --manifest");
  }
  json report;
  report["containers"] = json::array();
  report["manifests"] = json::array();
  for (const auto& path : a.containers) {
    const auto set = ReadContainer(path, a.dim);
    report["containers"].push_back(
        {{"path", path}, {"dim", set.dim()}, {"count", set.size()}});
  }
  for (const auto& path : a.manifests) {
    const auto claims = ReadManifest(fs::path(path));
    std::size_t labeled = 0;
    for (const auto& cl : claims) labeled += cl.label ? 1 : 0;
    report["manifests"].push_back(
        {{"path", path}, {"count", claims.size()}, {"labeled", labeled}});
  }
  report["ok"] = true;
  Output o(c.out, out);
  o.stream() << report.dump(2) << '\n';
}

// ------------------------------------------------------------------- synth

struct SynthArgs {
  SynthConfig cfg;
  std::string out_dir;
};

void RunSynth(const std::string& kind, const SynthArgs& a, const Common& c,
              std::ostream& out) {
  fs::create_directories(a.out_dir);
  const fs::path dir(a.out_dir);
  json files = json::array();
  auto container = [&](const EmbeddingSet& set, const char* name) {
    WriteContainer(set, dir / name);
    files.push_back({{"path", (dir / name).string()},
                     {"count", set.size()},
                     {"dim", set.dim()}});
  };
  auto manifest = [&](const std::vector<ClaimRecord>& claims,
                      const char* name) {
    WriteManifest(claims, dir / name);
    files.push_back({{"path", (dir / name).string()}, {"count", claims.size()}});
  };

  const auto& cfg = a.cfg;
  json config = {{"kind", kind},
                 {"dim", cfg.dim},
                 {"seed", cfg.seed},
                 {"sigma_real", cfg.sigma_real},
                 {"sigma_fake", cfg.sigma_fake}};
  if (kind == "face") {
    const auto ds = SynthFaceDataset(cfg);
    container(ds.reference, "reference.fctr");
    manifest(ds.reference_claims, "reference.jsonl");
    container(ds.test, "test.fctr");
    manifest(ds.test_claims, "test.jsonl");
    config["identities"] = cfg.n_identities;
    config["real_videos"] = cfg.real_videos;
    config["fake_videos"] = cfg.fake_videos;
    config["frames_per_video"] = cfg.frames_per_video;
  } else if (kind == "av") {
    const auto ds = SynthAvDataset(cfg);
    container(ds.video, "video.fctr");
    container(ds.audio, "audio.fctr");
    manifest(ds.clips, "clips.jsonl");
    config["clips"] = cfg.n_clips;
    config["frames"] = cfg.frames_per_clip;
    config["misalignment"] = cfg.misalignment_fraction;
  } else {
    const auto ds = SynthTtiDataset(cfg);
    container(ds.images_obj, "images_obj.fctr");
    container(ds.texts_obj, "texts_obj.fctr");
    container(ds.images_al, "images_al.fctr");
    container(ds.texts_al, "texts_al.fctr");
    manifest(ds.pairs, "pairs.jsonl");
    config["pairs"] = cfg.n_pairs;
    config["fakes_per_caption"] = cfg.fakes_per_caption;
    config["dim_aligned"] = cfg.dim_aligned == 0 ? cfg.dim : cfg.dim_aligned;
    config["objective_sim"] = cfg.objective_sim;
    config["aligned_sim"] = cfg.aligned_sim;
    config["objective_gap"] = cfg.objective_gap;
    config["aligned_gap"] = cfg.aligned_gap;
    config["jitter"] = cfg.similarity_jitter;
  }
  Output o(c.out, out);
  o.stream() << json{{"config", config}, {"files", files}}.dump(2) << '\n';
}

// ------------------------------------------------------------------ scoring

struct FaceInputs {
  std::string reference, reference_manifest, test, claims;
};

void AddFaceInputs(CLI::App* sub, FaceInputs& f) {
  sub->add_option("--reference", f.reference, "Reference embeddings container")
      ->required()
      ->check(CLI::ExistingFile);
  sub->add_option("--reference-manifest", f.reference_manifest,
                  "Manifest naming the identity of each reference record")
      ->required()
      ->check(CLI::ExistingFile);
  sub->add_option("--test", f.test, "Test embeddings container")
      ->required()
      ->check(CLI::ExistingFile);
  sub->add_option("--claims", f.claims, "Claim manifest for the test records")
      ->required()
      ->check(CLI::ExistingFile);
}

struct LoadedFace {
  IdentityRegistry registry;
  EmbeddingSet test;
  std::vector<ClaimRecord> claims;
};

LoadedFace LoadFace(const FaceInputs& f) {
  const auto ref = ReadContainer(f.reference);
  auto test = ReadContainer(f.test, ref.dim());
  return {IdentityRegistry::FromClaims(ref, ReadManifest(fs::path(
                                                f.reference_manifest))),
          std::move(test), ReadManifest(fs::path(f.claims))};
}

void RunScoreFace(const FaceInputs& f, const Common& c, std::ostream& out) {
  const auto in = LoadFace(f);
  const auto scores =
      ScoreFaceManifest(in.test, in.claims, in.registry, c.threads);
  Output o(c.out, out);
  for (const auto& s : scores) {
    o.stream() << json{{"record_id", s.record_id},
                       {"score", s.score},
                       {"identity", s.identity}}
                      .dump()
               << '\n';
  }
}

struct AvInputs {
  std::string video, audio;
  double lambda = kDefaultLambda;
};

void AddAvInputs(CLI::App* sub, AvInputs& a) {
  sub->add_option("--video", a.video, "Video-stream embeddings container")
      ->required()
      ->check(CLI::ExistingFile);
  sub->add_option("--audio", a.audio, "Audio-stream embeddings container")
      ->required()
      ->check(CLI::ExistingFile);
}

std::vector<AlignedClip> LoadClips(const AvInputs& a) {
  const auto video = ReadContainer(a.video);
  const auto audio = ReadContainer(a.audio, video.dim());
  return GroupClips(video, audio);
}

void RunScoreAv(const AvInputs& a, const Common& c, std::ostream& out) {
  const auto clips = LoadClips(a);
  const auto scores = ScoreClips(clips, a.lambda, c.threads);
  Output o(c.out, out);
  for (std::size_t i = 0; i < scores.size(); ++i) {
    o.stream() << json{{"clip_id", scores[i].clip_id},
                       {"score", scores[i].score},
                       {"lambda", scores[i].lambda},
                       {"T", clips[i].length()},
                       {"warnings", scores[i].warnings}}
                      .dump()
               << '\n';
  }
}

struct TtiInputs {
  std::string images_obj, texts_obj, images_al, texts_al, pairs;
};

void RunScoreTti(const TtiInputs& t, const Common& c, std::ostream& out) {
  const auto io = ReadContainer(t.images_obj);
  const auto to = ReadContainer(t.texts_obj, io.dim());
  const auto ia = ReadContainer(t.images_al);
  const auto ta = ReadContainer(t.texts_al, ia.dim());
  const auto pairs = PairsFromClaims(ReadManifest(fs::path(t.pairs)));
  const auto scores = ScoreTtiManifest({io, to, ia, ta}, pairs, c.threads);
  Output o(c.out, out);
  for (const auto& s : scores) {
    o.stream() << json{{"pair_id", s.pair_id},
                       {"score", s.score},
                       {"objective_sim", s.objective_sim},
                       {"aligned_sim", s.aligned_sim}}
                      .dump()
               << '\n';
  }
}

// --------------------------------------------------------------------- eval

struct EvalArgs {
  std::string scores, labels;
  std::string score_field = "score";
  bool share_ungrouped = false;
  bool paired = false;
};

void RunEval(const EvalArgs& e, const Common& c, std::ostream& out) {
  const auto rows = ReadJsonLines(e.scores);
  const auto claims = ReadManifest(fs::path(e.labels));

  std::vector<ScoredItem> items;
  std::set<double> lambdas;
  for (const auto& row : rows) {
    auto it = row.find(e.score_field);
    if (it == row.end() || !it->is_number()) {
      throw ManifestError("score line lacks numeric field '" + e.score_field +
                          "'");
    }
    std::string group;
    if (auto g = row.find("identity"); g != row.end() && g->is_string()) {
      group = g->get<std::string>();
    }
    if (auto l = row.find("lambda"); l != row.end() && l->is_number()) {
      lambdas.insert(l->get<double>());
    }
    items.push_back({RowId(row), it->get<double>(), std::move(group)});
  }
  const auto data = AttachLabels(items, claims);

  EvalOptions options;
  options.share_ungrouped = e.share_ungrouped;
  options.config = {{"score_field", e.score_field},
                    {"share_ungrouped", e.share_ungrouped}};
  if (lambdas.size() == 1) options.config["lambda"] = *lambdas.begin();
  const auto report = Evaluate(data, options);

  json j = ReportToJson(report);
  std::map<std::string, PairedSummary> paired;
  if (e.paired) {
    std::unordered_map<std::string, const ClaimRecord*> by_id;
    for (const auto& cl : claims) by_id.emplace(cl.record_id, &cl);
    std::vector<CaptionScore> caption_scores;
    for (std::size_t i = 0; i < items.size(); ++i) {
      const ClaimRecord& cl = *by_id.at(items[i].id);
      caption_scores.push_back({cl.claimed_fact.value, cl.caption_class,
                                data[i].label, items[i].score});
    }
    paired = PairedComparisonByCaption(caption_scores);
    json p = json::object();
    for (const auto& [key, s] : paired) {
      p[key] = {{"comparisons", s.comparisons},
                {"real_above_fake", s.mean_fraction}};
    }
    j["paired"] = std::move(p);
  }

  Output o(c.out, out);
  if (c.format == "table") {
    o.stream() << ReportToTable(report);
    for (const auto& [key, s] : paired) {
      char buf[160];
      std::snprintf(buf, sizeof(buf),
                    "# paired %-12s %6zu captions, real above fake %.1f%%\n",
                    key.c_str(), s.comparisons, 100.0 * s.mean_fraction);
      o.stream() << buf;
    }
  } else {
    o.stream() << j.dump(2) << '\n';
  }
}

// ------------------------------------------------------------------- ablate

struct RefSizeArgs {
  FaceInputs face;
  std::vector<std::size_t> sizes;
  std::uint64_t seed = 0;
  std::size_t repeats = 1;
};

void RunAblateRefSize(const RefSizeArgs& a, const Common& c,
                      std::ostream& out) {
  const auto in = LoadFace(a.face);
  RefSizeOptions opt{a.sizes, a.seed, a.repeats, c.threads};
  const auto curve = AblateReferenceSize(in.registry, in.test, in.claims, opt);
  Output o(c.out, out);
  if (c.format == "csv") {
    o.stream() << "size,mean_identity_auc,pooled_auc\n";
    for (const auto& p : curve) {
      o.stream() << p.size << ',' << json(p.mean_identity_auc).dump() << ','
                 << json(p.pooled_auc).dump() << '\n';
    }
    return;
  }
  json pts = json::array();
  for (const auto& p : curve) {
    pts.push_back({{"size", p.size},
                   {"mean_identity_auc", p.mean_identity_auc},
                   {"pooled_auc", p.pooled_auc}});
  }
  o.stream() << json{{"positive_class", "real"},
                     {"config", {{"seed", a.seed}, {"repeats", a.repeats}}},
                     {"curve", pts}}
                    .dump(2)
             << '\n';
}

struct LambdaArgs {
  AvInputs av;
  std::string labels;
  std::vector<double> lambdas = {0, 1, 2, 3, 5, 10, 20, 30, 40, 50, 60, 70, 80, 90};
};

void RunAblateLambda(const LambdaArgs& a, const Common& c, std::ostream& out) {
  const auto clips = LoadClips(a.av);
  const auto labels = ReadManifest(fs::path(a.labels));
  const auto curve = AblateLambda(clips, labels, a.lambdas, c.threads);
  Output o(c.out, out);
  if (c.format == "csv") {
    o.stream() << "lambda,auc,ap\n";
    for (const auto& p : curve) {
      o.stream() << json(p.lambda).dump() << ',' << json(p.auc).dump() << ','
                 << json(p.ap).dump() << '\n';
    }
    return;
  }
  json pts = json::array();
  for (const auto& p : curve) {
    pts.push_back({{"lambda", p.lambda}, {"auc", p.auc}, {"ap", p.ap}});
  }
  o.stream() << json{{"positive_class", "real"}, {"curve", pts}}.dump(2)
             << '\n';
}

void AddSynthOptions(CLI::App* sub, SynthArgs& s) {
  auto& cfg = s.cfg;
  sub->add_option("--out-dir", s.out_dir, "Directory for containers/manifests")
      ->required();
  sub->add_option("--dim", cfg.dim, "Embedding dimension")->capture_default_str();
  sub->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  sub->add_option("--sigma-real", cfg.sigma_real,
                  "Noise scale of fact-consistent media")
      ->capture_default_str();
  sub->add_option("--sigma-fake", cfg.sigma_fake,
                  "Noise scale of fact-violating media")
      ->capture_default_str();
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"FACTOR: training-free deepfake fact checking over embeddings",
               "factor"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML file merged under the flags");

  Common common;
  auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", common.threads, "Worker threads")
        ->envname("FACTOR_THREADS")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };

  ValidateArgs validate_args;
  auto* validate = app.add_subcommand("validate", "Check containers and manifests");
  validate->add_option("--container", validate_args.containers,
                       "Embedding container (repeatable)")
      ->check(CLI::ExistingFile);
  validate->add_option("--manifest", validate_args.manifests,
                       "Claim manifest (repeatable)")
      ->check(CLI::ExistingFile);
  validate->add_option("--dim", validate_args.dim,
                       "Required container dim (0 = any)");
  AddOut(validate, common);

  FaceInputs face_args;
  auto* score_face = app.add_subcommand("score-face", "Face-swap truth scores");
  AddFaceInputs(score_face, face_args);
  AddOut(score_face, common);
  add_threads(score_face);

  AvInputs av_args;
  auto* score_av = app.add_subcommand("score-av", "Audio-visual clip scores");
  AddAvInputs(score_av, av_args);
  score_av->add_option("--lambda", av_args.lambda, "Aggregation percentile")
      ->check(CLI::Range(0.0, 100.0))
      ->capture_default_str();
  AddOut(score_av, common);
  add_threads(score_av);

  TtiInputs tti_args;
  auto* score_tti = app.add_subcommand("score-tti", "Text-to-image difference scores");
  for (auto [flag, dst, help] :
       {std::tuple{"--images-obj", &tti_args.images_obj, "Objective-space images"},
        std::tuple{"--texts-obj", &tti_args.texts_obj, "Objective-space captions"},
        std::tuple{"--images-al", &tti_args.images_al, "Aligned-space images"},
        std::tuple{"--texts-al", &tti_args.texts_al, "Aligned-space captions"},
        std::tuple{"--pairs", &tti_args.pairs, "Image/caption pair manifest"}}) {
    score_tti->add_option(flag, *dst, help)->required()->check(CLI::ExistingFile);
  }
  AddOut(score_tti, common);
  add_threads(score_tti);

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "ROC-AUC / AP report from scores");
  eval->add_option("--scores", eval_args.scores, "Score JSON Lines")
      ->required()
      ->check(CLI::ExistingFile);
  eval->add_option("--labels", eval_args.labels, "Labeled claim manifest")
      ->required()
      ->check(CLI::ExistingFile);
  eval->add_option("--score-field", eval_args.score_field,
                   "Score field to rank by")
      ->capture_default_str();
  eval->add_flag("--share-ungrouped", eval_args.share_ungrouped,
                 "Entries without a group join every group");
  eval->add_flag("--paired", eval_args.paired,
                 "Per-caption real-vs-fake comparison");
  eval->add_option("--format", common.format, "json or table")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  AddOut(eval, common);

  auto* ablate = app.add_subcommand("ablate", "Sensitivity sweeps");
  ablate->require_subcommand(1);
  RefSizeArgs ref_args;
  auto* ref_size = ablate->add_subcommand("ref-size", "Reference-set size sweep");
  AddFaceInputs(ref_size, ref_args.face);
  ref_size->add_option("--sizes", ref_args.sizes, "Reference sizes")
      ->required()
      ->delimiter(',');
  ref_size->add_option("--seed", ref_args.seed, "Subsampling seed")
      ->capture_default_str();
  ref_size->add_option("--repeats", ref_args.repeats, "Draws per size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  LambdaArgs lambda_args;
  auto* lambda = ablate->add_subcommand("lambda", "Aggregation percentile sweep");
  AddAvInputs(lambda, lambda_args.av);
  lambda->add_option("--labels", lambda_args.labels, "Labeled clip manifest")
      ->required()
      ->check(CLI::ExistingFile);
  lambda->add_option("--lambdas", lambda_args.lambdas, "Percentiles to sweep")
      ->delimiter(',')
      ->check(CLI::Range(0.0, 100.0));
  for (auto* sub : {ref_size, lambda}) {
    sub->add_option("--format", common.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    AddOut(sub, common);
    add_threads(sub);
  }

  auto* synth = app.add_subcommand("synth", "Synthetic fixtures with known labels");
  synth->require_subcommand(1);
  SynthArgs synth_face_args, synth_av_args, synth_tti_args;
  synth_av_args.cfg.dim = 1024;
  synth_tti_args.cfg.dim = 256;
  auto* synth_face = synth->add_subcommand("face", "Face-swap fixture");
  AddSynthOptions(synth_face, synth_face_args);
  synth_face->add_option("--identities", synth_face_args.cfg.n_identities)
      ->capture_default_str();
  synth_face->add_option("--real-videos", synth_face_args.cfg.real_videos,
                         "Authentic videos per identity")
      ->capture_default_str();
  synth_face->add_option("--fake-videos", synth_face_args.cfg.fake_videos,
                         "Swapped videos claiming each identity")
      ->capture_default_str();
  synth_face->add_option("--frames-per-video",
                         synth_face_args.cfg.frames_per_video)
      ->capture_default_str();
  auto* synth_av = synth->add_subcommand("av", "Audio-visual fixture");
  AddSynthOptions(synth_av, synth_av_args);
  synth_av->add_option("--clips", synth_av_args.cfg.n_clips)->capture_default_str();
  synth_av->add_option("--frames", synth_av_args.cfg.frames_per_clip)
      ->capture_default_str();
  synth_av->add_option("--misalignment", synth_av_args.cfg.misalignment_fraction,
                       "Fraction of misaligned frames in fake clips")
      ->capture_default_str();
  auto* synth_tti = synth->add_subcommand("tti", "Text-to-image fixture");
  AddSynthOptions(synth_tti, synth_tti_args);
  auto& tcfg = synth_tti_args.cfg;
  synth_tti->add_option("--pairs", tcfg.n_pairs, "Captions")->capture_default_str();
  synth_tti->add_option("--fakes-per-caption", tcfg.fakes_per_caption)
      ->capture_default_str();
  synth_tti->add_option("--dim-aligned", tcfg.dim_aligned,
                        "Aligned-space dim (0 = --dim)")
      ->capture_default_str();
  synth_tti->add_option("--objective-sim", tcfg.objective_sim)->capture_default_str();
  synth_tti->add_option("--aligned-sim", tcfg.aligned_sim)->capture_default_str();
  synth_tti->add_option("--objective-gap", tcfg.objective_gap)->capture_default_str();
  synth_tti->add_option("--aligned-gap", tcfg.aligned_gap)->capture_default_str();
  synth_tti->add_option("--jitter", tcfg.similarity_jitter)->capture_default_str();
  for (auto* sub : {synth_face, synth_av, synth_tti}) AddOut(sub, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (validate->parsed()) {
      RunValidate(validate_args, common, out);
    } else if (score_face->parsed()) {
      RunScoreFace(face_args, common, out);
    } else if (score_av->parsed()) {
      RunScoreAv(av_args, common, out);
    } else if (score_tti->parsed()) {
      RunScoreTti(tti_args, common, out);
    } else if (eval->parsed()) {
      RunEval(eval_args, common, out);
    } else if (ref_size->parsed()) {
      RunAblateRefSize(ref_args, common, out);
    } else if (lambda->parsed()) {
      RunAblateLambda(lambda_args, common, out);
    } else if (synth_face->parsed()) {
      RunSynth("face", synth_face_args, common, out);
    } else if (synth_av->parsed()) {
      RunSynth("av", synth_av_args, common, out);
    } else if (synth_tti->parsed()) {
      RunSynth("tti", synth_tti_args, common, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << '\n';
    return kExitInputError;
  } catch (const fs::filesystem_error& e) {
    err << "error: IoError: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  }
  return kExitOk;
}

}  // namespace factor::cli
