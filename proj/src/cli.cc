// Copyright 2026 The paracomp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "paracomp/cli.h"

#include <CLI11.hpp>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <random>
#include <sstream>

#include "paracomp/error.h"
#include "paracomp/ib_measures.h"
#include "paracomp/naturalness.h"
#include "paracomp/parallel.h"
#include "paracomp/records.h"
#include "paracomp/seq2seq.h"
#include "random_util.h"

namespace paracomp::cli {

namespace fs = std::filesystem;
using nlohmann::json;

std::string to_string(Kinds k) {
  switch (k) {
    case Kinds::kBoth: return "both";
    case Kinds::kStructural: return "structural";
    case Kinds::kFormOnly: return "form_only";
  }
  return "both";
}

Kinds kinds_from_string(const std::string& s) {
  if (s == "both") return Kinds::kBoth;
  if (s == "structural") return Kinds::kStructural;
  if (s == "form_only") return Kinds::kFormOnly;
  throw Error(ErrorKind::kInvalidArgument, "unknown kinds " + s);
}

namespace {

json train_json(const TrainConfig& t) { return json::parse(canonical_json(t)); }

void merge_train(TrainConfig& t, const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::kParse, "train must be an object");
  for (const auto& [key, v] : j.items()) {
    if (key == "t_max") t.t_max = v.get<int>();
    else if (key == "dropout") t.dropout = v.get<double>();
    else if (key == "batch_size") t.batch_size = v.get<int>();
    else if (key == "hidden_dim") t.hidden_dim = v.get<int>();
    else if (key == "embed_dim") t.embed_dim = v.get<int>();
    else if (key == "learning_rate") t.learning_rate = v.get<double>();
    else if (key == "beta1") t.beta1 = v.get<double>();
    else if (key == "beta2") t.beta2 = v.get<double>();
    else if (key == "adam_eps") t.adam_eps = v.get<double>();
    else if (key == "init_scale") t.init_scale = v.get<double>();
    else if (key == "loss_mode") t.loss_mode = loss_mode_from_string(v.get<std::string>());
    else if (key == "exposure") t.exposure = exposure_from_string(v.get<std::string>());
    else if (key == "runs_attested") t.runs_attested = v.get<int>();
    else if (key == "runs_counterfactual") t.runs_counterfactual = v.get<int>();
    else if (key == "base_seed") t.base_seed = v.get<std::uint64_t>();
    else if (key == "max_restarts") t.max_restarts = v.get<int>();
    else throw Error(ErrorKind::kInvalidArgument, "unknown train key " + key);
  }
}

}  // namespace

json RunConfig::hashed_json() const {
  json j = {
      {"kinds", to_string(kinds)},
      {"n_form_only", n_form_only},
      {"seed", seed},
      {"max_categories", max_categories},
      {"slices", slices},
      {"cap", cap},
      {"gamma", gamma},
      {"skip_cetl", skip_cetl},
      {"eps_cetl", eps.cetl},
      {"eps_ib", eps.ib},
      {"train", train_json(train)},
  };
  j["need_digest"] = need.empty() ? "" : fnv1a_hex(read_text_file(need));
  return j;
}

std::string RunConfig::hash() const { return fnv1a_hex(hashed_json().dump()); }

json RunConfig::to_json() const {
  json j = hashed_json();
  j.erase("need_digest");
  j["out_dir"] = out_dir;
  j["need"] = need;
  j["jobs"] = jobs;
  return j;
}

void RunConfig::merge_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::kParse, "config must be a JSON object");
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "out_dir") out_dir = v.get<std::string>();
      else if (key == "need") need = v.get<std::string>();
      else if (key == "jobs") jobs = v.get<int>();
      else if (key == "kinds") kinds = kinds_from_string(v.get<std::string>());
      else if (key == "n_form_only") n_form_only = v.get<std::size_t>();
      else if (key == "seed") seed = v.get<std::uint64_t>();
      else if (key == "max_categories") max_categories = v.get<int>();
      else if (key == "slices") slices = v.get<bool>();
      else if (key == "cap") cap = v.get<std::size_t>();
      else if (key == "gamma") gamma = v.get<double>();
      else if (key == "skip_cetl") skip_cetl = v.get<bool>();
      else if (key == "eps_cetl") eps.cetl = v.get<double>();
      else if (key == "eps_ib") eps.ib = v.get<double>();
      else if (key == "train") merge_train(train, v);
      else throw Error(ErrorKind::kInvalidArgument, "unknown config key " + key);
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kParse, std::string("config: ") + e.what());
  }
}

void RunConfig::validate() const {
  auto bad = [](const std::string& what) { throw Error(ErrorKind::kInvalidArgument, what); };
  if (jobs < 1) bad("jobs must be >= 1");
  if (max_categories < 1 || max_categories > 2) bad("max_categories must be 1 or 2");
  if (!(gamma > 0.0) || !std::isfinite(gamma)) bad("gamma must be positive and finite");
  if (!(eps.cetl >= 0.0) || !(eps.ib >= 0.0)) bad("tolerances must be nonnegative");
  train.validate();
}

std::string RunConfig::resolved_out_dir() const {
  if (!out_dir.empty()) return out_dir;
  if (const char* env = std::getenv("PARACOMP_OUT_DIR"); env != nullptr && *env != '\0') return env;
  return ".";
}

int report_error(const std::exception& e, std::ostream& err) {
  int code = kExitInput;
  if (const auto* pe = dynamic_cast<const Error*>(&e)) {
    switch (pe->kind()) {
      case ErrorKind::kNonFiniteLoss:
      case ErrorKind::kAllRunsDiverged:
      case ErrorKind::kDegenerateSample:
      case ErrorKind::kZeroVariance:
      case ErrorKind::kDeadForm:
        code = kExitNumeric;
        break;
      default:
        break;
    }
  }
  err << "paracomp: " << e.what() << "\n";
  return code;
}

namespace {

void write_atomically(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::kParse, "cannot write " + tmp.string());
    out << content;
    if (!out) throw Error(ErrorKind::kParse, "write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::string strip_suffix(std::string s, const std::string& suffix) {
  if (s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0) {
    s.resize(s.size() - suffix.size());
  }
  return s;
}

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// ---- permute ----

int cmd_permute(const RunConfig& cfg, const std::string& input, std::string output,
                std::ostream& err) {
  const Paradigm p = read_paradigm_file(input);
  const std::string hash = cfg.hash();
  std::vector<PermutationRecord> structural, form_only;
  if (cfg.kinds != Kinds::kFormOnly) {
    StructuralOptions opts;
    opts.max_categories = cfg.max_categories;
    opts.slices = cfg.slices ? SlicePolicy::kWithSlices : SlicePolicy::kNone;
    opts.cap = cfg.cap;
    opts.seed = cfg.seed;
    structural = enumerate_structural(p, opts);
  }
  if (cfg.kinds != Kinds::kStructural) form_only = sample_form_only(p, cfg.n_form_only, cfg.seed);

  std::string text = entry_to_json(attested_entry(p, hash)).dump() + "\n";
  for (const auto* group : {&structural, &form_only}) {
    for (const auto& r : *group) text += entry_to_json(permutation_entry(r, hash)).dump() + "\n";
  }
  if (output.empty()) output = (fs::path(cfg.resolved_out_dir()) / (p.id() + ".permutations.jsonl")).string();
  write_atomically(output, text);
  err << "permute: " << p.id() << ": " << structural.size() << " structural, " << form_only.size()
      << " form_only -> " << output << "\n";
  return kExitOk;
}

// ---- score ----

struct PendingRecord {
  std::size_t index = 0;  // into entries
  int runs = 0;
  std::vector<RunTrajectory> slots;
  std::vector<char> ok;
  std::atomic<int> diverged{0};
  std::atomic<int> remaining{0};
};

json cetl_part_json(const CetlResult& r) {
  json runs = json::array();
  for (const auto& run : r.runs) runs.push_back({{"seed", run.seed}, {"losses", run.losses}});
  return {{"paradigm_id", r.paradigm_id}, {"runs", runs}, {"cetl_mean", r.cetl_mean},
          {"cetl_sd", r.cetl_sd},         {"diverged", r.diverged}};
}

CetlResult cetl_from_part(const json& j, const std::string& hash) {
  CetlResult r;
  r.paradigm_id = j.at("paradigm_id").get<std::string>();
  for (const auto& run : j.at("runs")) {
    r.runs.push_back({run.at("seed").get<std::uint64_t>(), run.at("losses").get<std::vector<double>>()});
  }
  r.cetl_mean = j.at("cetl_mean").get<double>();
  r.cetl_sd = j.at("cetl_sd").get<double>();
  r.diverged = j.at("diverged").get<int>();
  r.config_hash = hash;
  return r;
}

std::string part_name(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%06zu.json", index);
  return buf;
}

int cmd_score(const RunConfig& cfg, const std::string& input, std::string output,
              std::ostream& err) {
  const std::string hash = cfg.hash();
  std::vector<ParadigmEntry> entries;
  for (const auto& j : read_jsonl(input)) entries.push_back(entry_from_json(j));
  if (entries.empty()) throw Error(ErrorKind::kMissingBaseline, "no paradigms in " + input);

  std::map<std::string, std::size_t> bases;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].kind == RecordKind::kAttested) bases.emplace(entries[i].paradigm.id(), i);
  }
  std::map<std::string, NeedDistribution> needs;
  std::map<std::string, int> base_unnat;
  for (const auto& [id, i] : bases) {
    const Paradigm& p = entries[i].paradigm;
    needs.emplace(id, cfg.need.empty() ? NeedDistribution::uniform(p.size())
                                       : read_need_file(cfg.need, p));
    base_unnat.emplace(id, unnaturalness(p));
  }

  std::vector<EfficiencyRecord> records(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    auto base = bases.find(e.base_id);
    if (base == bases.end()) {
      throw Error(ErrorKind::kMissingBaseline, "no attested paradigm " + e.base_id + " for " +
                                                   e.paradigm.id());
    }
    const Paradigm& bp = entries[base->second].paradigm;
    if (!(bp.schema() == e.paradigm.schema())) {
      throw Error(ErrorKind::kSchemaMismatch, e.paradigm.id() + " differs in schema from its base");
    }
    const auto& need = needs.at(e.base_id);
    auto& r = records[i];
    r.paradigm_id = e.paradigm.id();
    r.base_id = e.base_id;
    r.language = e.paradigm.language();
    r.family = e.paradigm.family();
    r.kind = e.kind;
    r.ib_complexity_bits = ib_complexity(e.paradigm, need);
    r.accuracy_nats = ib_accuracy(e.paradigm, need, cfg.gamma);
    r.unnat = unnaturalness(e.paradigm);
    r.unnat_base = base_unnat.at(e.base_id);
    r.config_hash = hash;
  }

  if (output.empty()) {
    const std::string stem =
        strip_suffix(strip_suffix(fs::path(input).filename().string(), ".jsonl"), ".permutations");
    output = (fs::path(cfg.resolved_out_dir()) / (stem + ".records.jsonl")).string();
  }

  std::vector<std::optional<CetlResult>> results(entries.size());
  if (!cfg.skip_cetl) {
    const fs::path parts = fs::path(output + ".parts");
    fs::create_directories(parts);
    std::vector<std::unique_ptr<PendingRecord>> pending;
    std::size_t resumed = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const fs::path part = parts / part_name(i);
      if (fs::exists(part)) {
        try {
          const json j = json::parse(read_text_file(part.string()));
          if (j.at("config_hash") == hash && j.at("paradigm_id") == records[i].paradigm_id) {
            results[i] = cetl_from_part(j.at("cetl"), hash);
            ++resumed;
            continue;
          }
        } catch (const json::exception&) {
          // unreadable marker: recompute
        }
      }
      auto pr = std::make_unique<PendingRecord>();
      pr->index = i;
      pr->runs = runs_for(cfg.train, entries[i].kind == RecordKind::kAttested);
      pr->slots.resize(static_cast<std::size_t>(pr->runs));
      pr->ok.assign(static_cast<std::size_t>(pr->runs), 0);
      pr->remaining = pr->runs;
      pending.push_back(std::move(pr));
    }
    std::vector<std::pair<std::size_t, int>> tasks;
    for (std::size_t k = 0; k < pending.size(); ++k) {
      for (int run = 0; run < pending[k]->runs; ++run) tasks.emplace_back(k, run);
    }
    err << "score: " << entries.size() << " paradigms, " << resumed << " resumed, " << tasks.size()
        << " training runs on " << cfg.jobs << " jobs\n";
    std::mutex log_mu;
    std::atomic<std::size_t> finished{0};
    parallel_for(tasks.size(), cfg.jobs, [&](std::size_t t) {
      auto& pr = *pending[tasks[t].first];
      const int run = tasks[t].second;
      const std::size_t i = pr.index;
      int div = 0;
      pr.ok[static_cast<std::size_t>(run)] =
          train_run(entries[i].paradigm, needs.at(entries[i].base_id), cfg.train, run,
                    pr.slots[static_cast<std::size_t>(run)], div)
              ? 1
              : 0;
      pr.diverged += div;
      if (--pr.remaining != 0) return;
      std::vector<RunTrajectory> runs;
      for (std::size_t r = 0; r < pr.slots.size(); ++r) {
        if (pr.ok[r]) runs.push_back(std::move(pr.slots[r]));
      }
      CetlResult res = summarize(records[i].paradigm_id, std::move(runs), pr.diverged, cfg.train);
      res.config_hash = hash;
      const json part = {{"config_hash", hash},
                         {"paradigm_id", records[i].paradigm_id},
                         {"cetl", cetl_part_json(res)}};
      write_atomically(parts / part_name(i), part.dump() + "\n");
      results[i] = std::move(res);
      std::lock_guard lock(log_mu);
      err << "score: [" << ++finished << "/" << pending.size() << "] " << records[i].paradigm_id
          << " cetl=" << results[i]->cetl_mean << "\n";
    });
  }

  std::string records_text, cetl_text;
  std::string traj_text = "config_hash,run_id,epoch,weighted_loss_nats\n";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    auto& r = records[i];
    if (results[i]) {
      const auto& res = *results[i];
      r.cetl_mean = res.cetl_mean;
      r.cetl_sd = res.cetl_sd;
      r.cetl_runs = static_cast<int>(res.runs.size());
      cetl_text += cetl_result_to_json(res).dump() + "\n";
      for (std::size_t run = 0; run < res.runs.size(); ++run) {
        const auto& losses = res.runs[run].losses;
        for (std::size_t epoch = 0; epoch < losses.size(); ++epoch) {
          traj_text += hash + "," + r.paradigm_id + "/r" + std::to_string(run) + "," +
                       std::to_string(epoch + 1) + "," + format_g17(losses[epoch]) + "\n";
        }
      }
    }
    records_text += record_to_json(r).dump() + "\n";
  }
  write_atomically(output, records_text);
  if (!cfg.skip_cetl) {
    write_atomically(strip_suffix(output, ".jsonl") + ".cetl.jsonl", cetl_text);
    write_atomically(strip_suffix(output, ".jsonl") + ".trajectories.csv", traj_text);
  }
  err << "score: wrote " << records.size() << " records -> " << output << "\n";
  return kExitOk;
}

// ---- report ----

int cmd_report(const RunConfig& cfg, const std::string& input, std::string dir,
               std::ostream& err) {
  std::vector<EfficiencyRecord> records;
  for (const auto& j : read_jsonl(input)) {
    try {
      records.push_back(record_from_json(j));
    } catch (const json::exception& e) {
      throw Error(ErrorKind::kParse, input + ": " + e.what());
    }
  }
  const Report rep = build_report(records, cfg.eps);
  if (dir.empty()) dir = cfg.resolved_out_dir();
  const fs::path d(dir);
  write_atomically(d / "hitfail.csv", rep.hitfail);
  write_atomically(d / "model_comparison.csv", rep.model_comparison);
  write_atomically(d / "correlation.csv", rep.correlation);
  write_atomically(d / "ttest.csv", rep.ttest);
  write_atomically(d / "efficiency.csv", rep.efficiency);
  err << "report: " << records.size() << " records -> " << d.string() << "\n";
  return kExitOk;
}

// ---- gradcheck ----

struct GradcheckOptions {
  int models = 20;
  int hidden = 8;
  int embed = 4;
  double tol = 1e-4;
  std::uint64_t seed = 0;
  std::size_t samples = 200;
};

int cmd_gradcheck(const GradcheckOptions& o, std::ostream& out) {
  std::mt19937_64 rng(o.seed);
  auto draw = [&](int lo, int hi) {
    return lo + static_cast<int>(detail::uniform_index(rng, static_cast<std::size_t>(hi - lo + 1)));
  };
  double worst = 0.0;
  for (int m = 0; m < o.models; ++m) {
    nn::ModelShape shape;
    shape.input_vocab = draw(4, 9);
    shape.output_vocab = draw(4, 9);
    shape.embed_dim = o.embed;
    shape.hidden_dim = o.hidden;
    nn::Example ex;
    ex.input.push_back(nn::Vocabulary::kSos);
    for (int k = draw(1, 4); k > 0; --k) ex.input.push_back(draw(2, shape.input_vocab - 1));
    ex.input.push_back(nn::Vocabulary::kEos);
    ex.output.push_back(nn::Vocabulary::kSos);
    for (int k = draw(1, 5); k > 0; --k) ex.output.push_back(draw(2, shape.output_vocab - 1));
    ex.output.push_back(nn::Vocabulary::kEos);
    nn::Seq2Seq model(shape, o.seed * 1000 + static_cast<std::uint64_t>(m));
    const double e = nn::grad_check(model, ex, 1e-4, o.seed + static_cast<std::uint64_t>(m), o.samples);
    worst = std::max(worst, e);
    out << "model " << m << ": params=" << model.num_parameters() << " max_rel_err=" << e << "\n";
  }
  const bool pass = worst < o.tol;
  out << "gradcheck: max_rel_err=" << worst << " tol=" << o.tol << (pass ? " PASS" : " FAIL") << "\n";
  return pass ? kExitOk : kExitNumeric;
}

std::string prescan_config(int argc, const char* const* argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string_view a = argv[i];
    if (a == "--config" && i + 1 < argc) return argv[i + 1];
    if (a.starts_with("--config=")) return std::string(a.substr(9));
  }
  return {};
}

void add_train_flags(CLI::App* app, TrainConfig& t, std::string& loss_mode, std::string& exposure) {
  app->add_option("--epochs", t.t_max, "Training epochs (T_max)");
  app->add_option("--dropout", t.dropout, "Dropout rate");
  app->add_option("--batch-size", t.batch_size, "Cells per optimizer step");
  app->add_option("--hidden", t.hidden_dim, "LSTM hidden size");
  app->add_option("--embed", t.embed_dim, "Embedding size");
  app->add_option("--lr", t.learning_rate, "Adam learning rate");
  app->add_option("--init-scale", t.init_scale, "Uniform init half-width");
  app->add_option("--loss-mode", loss_mode, "eval_pass or accumulated");
  app->add_option("--exposure", exposure, "uniform or need_sampled");
  app->add_option("--runs-attested", t.runs_attested, "Runs per attested paradigm");
  app->add_option("--runs-counterfactual", t.runs_counterfactual, "Runs per counterfactual");
  app->add_option("--base-seed", t.base_seed, "Seed of run 0");
  app->add_option("--max-restarts", t.max_restarts, "Reseeds after a non-finite loss");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    if (const auto path = prescan_config(argc, argv); !path.empty()) {
      try {
        cfg.merge_json(json::parse(read_text_file(path)));
      } catch (const json::parse_error& e) {
        throw Error(ErrorKind::kParse, path + ": " + e.what());
      }
    }
  } catch (const std::exception& e) {
    return report_error(e, err);
  }

  CLI::App app{"Learnability and information-bottleneck efficiency of paradigms", "paracomp"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON file with run configuration");
  app.add_option("--out-dir", cfg.out_dir, "Default output directory");
  bool print_config = false;
  app.add_flag("--print-config", print_config, "Print the effective configuration and exit");
  app.fallthrough();

  std::string input, output, kinds, loss_mode, exposure, skip;
  bool no_slices = false;

  auto* permute = app.add_subcommand("permute", "Generate counterfactual paradigms");
  permute->add_option("paradigm", input, "Paradigm TSV")->required();
  permute->add_option("-o,--output", output, "Output JSON-lines file");
  permute->add_option("--kinds", kinds, "both, structural or form_only");
  permute->add_option("--n", cfg.n_form_only, "Form-only permutations to sample");
  permute->add_option("--seed", cfg.seed, "Sampling seed");
  permute->add_option("--max-categories", cfg.max_categories, "Categories permuted together");
  permute->add_flag("--no-slices", no_slices, "Skip slice-restricted transpositions");
  permute->add_option("--cap", cfg.cap, "Maximum structural permutations (0: unlimited)");

  auto* score = app.add_subcommand("score", "Score paradigms with CETL and IB");
  score->add_option("permutations", input, "Permutations JSON-lines file")->required();
  score->add_option("-o,--output", output, "Output records file");
  score->add_option("--need", cfg.need, "Need distribution TSV");
  score->add_option("--jobs", cfg.jobs, "Parallel training runs");
  score->add_option("--skip", skip, "Set to 'cetl' to skip training");
  score->add_option("--gamma", cfg.gamma, "Meaning-distribution sharpness");
  add_train_flags(score, cfg.train, loss_mode, exposure);

  auto* report = app.add_subcommand("report", "Write comparison tables");
  report->add_option("records", input, "Records JSON-lines file")->required();
  report->add_option("-o,--output", output, "Output directory");
  report->add_option("--eps-cetl", cfg.eps.cetl, "CETL equality tolerance");
  report->add_option("--eps-ib", cfg.eps.ib, "IB equality tolerance");

  GradcheckOptions gc;
  auto* gradcheck = app.add_subcommand("gradcheck", "Check gradients against finite differences");
  gradcheck->add_option("--models", gc.models, "Random models");
  gradcheck->add_option("--hidden", gc.hidden, "Hidden size");
  gradcheck->add_option("--embed", gc.embed, "Embedding size");
  gradcheck->add_option("--tol", gc.tol, "Maximum relative error");
  gradcheck->add_option("--seed", gc.seed, "Seed");
  gradcheck->add_option("--samples", gc.samples, "Parameter entries checked per model");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (!kinds.empty()) cfg.kinds = kinds_from_string(kinds);
    if (no_slices) cfg.slices = false;
    if (!loss_mode.empty()) cfg.train.loss_mode = loss_mode_from_string(loss_mode);
    if (!exposure.empty()) cfg.train.exposure = exposure_from_string(exposure);
    if (!skip.empty()) {
      if (skip != "cetl") throw Error(ErrorKind::kInvalidArgument, "--skip accepts only 'cetl'");
      cfg.skip_cetl = true;
    }
    cfg.validate();
    if (print_config) {
      out << cfg.to_json().dump(2) << "\n";
      return kExitOk;
    }
    if (*permute) return cmd_permute(cfg, input, output, err);
    if (*score) return cmd_score(cfg, input, output, err);
    if (*report) return cmd_report(cfg, input, output, err);
    return cmd_gradcheck(gc, out);
  } catch (const std::exception& e) {
    return report_error(e, err);
  }
}

}  // namespace paracomp::cli
