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

// End-to-end acceptance checks. Usage: paracomp_acceptance [N ...]
// With no arguments every criterion runs. Prints one PASS/FAIL line per
// criterion and exits non-zero if any failed.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracle_values.h"
#include "paracomp/cetl.h"
#include "paracomp/cli.h"
#include "paracomp/counterfactual.h"
#include "paracomp/evaluation.h"
#include "paracomp/ib_measures.h"
#include "paracomp/naturalness.h"
#include "paracomp/paradigm.h"
#include "paracomp/seq2seq.h"
#include "paracomp/stats.h"
#include "test_util.h"
#include "unnat_oracle.h"

using namespace paracomp;
namespace fs = std::filesystem;

namespace {

// Pinned tolerances and budgets.
constexpr double kIbTieTol = 1e-12;
constexpr double kC1BudgetSec = 1.0;
constexpr double kC2MinFraction = 0.60;
constexpr double kC2BudgetSec = 45 * 60;
constexpr std::size_t kC3MinRecords = 40;
constexpr double kC3MinRho = 0.5;
constexpr double kC3MaxP = 0.05;
constexpr double kC3MaxIbAbsRho = 0.3;
constexpr double kC3BudgetSec = 90 * 60;
constexpr double kC4BudgetSec = 10.0;
constexpr double kC5Tol = 1e-4;
constexpr double kC5BudgetSec = 60.0;
constexpr double kC6InjectiveTol = 1e-12;
constexpr double kC6TwoPointTol = 1e-9;
constexpr double kC7Tol = 1e-12;
constexpr int kC7MergeSteps = 200;
constexpr double kC10TTol = 1e-6;
constexpr double kC10PTol = 1e-4;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

NeedDistribution arabic_need(const Paradigm& p) {
  return read_need_file(testing::data_path("classical_arabic_need.tsv"), p);
}

Outcome criterion1() {
  Timer timer;
  const Paradigm p = testing::arabic();
  const auto need = arabic_need(p);
  const double c0 = ib_complexity(p, need);
  const double a0 = ib_accuracy(p, need);
  const auto cfs = sample_form_only(p, 50, 0);
  EfficiencyRecord base{p.id(), p.id(), "", "", RecordKind::kAttested, {}, {}, 0, c0, a0, 0, 0, ""};
  std::vector<Verdict> verdicts;
  double worst = 0.0;
  for (const auto& r : cfs) {
    const double c = ib_complexity(r.paradigm, need);
    const double a = ib_accuracy(r.paradigm, need);
    worst = std::max({worst, std::abs(c - c0), std::abs(a - a0)});
    EfficiencyRecord cf = base;
    cf.paradigm_id = r.paradigm.id();
    cf.kind = RecordKind::kFormOnly;
    cf.ib_complexity_bits = c;
    cf.accuracy_nats = a;
    verdicts.push_back(classify(base, cf, Measure::kIb));
  }
  const auto s = perf(verdicts);
  const double secs = timer.seconds();
  Outcome o;
  o.pass = cfs.size() == 50 && worst <= kIbTieTol && s.c_pct == 0.0 && s.i_pct == 100.0 &&
           s.perf == -100.0 && secs < kC1BudgetSec;
  o.detail = "n=" + std::to_string(cfs.size()) + fmt(" max|diff|=%.3g", worst) +
             fmt(" C=%g", s.c_pct) + fmt(" I=%g", s.i_pct) + fmt(" Perf=%g", s.perf) +
             fmt(" time=%.3fs", secs);
  return o;
}

Outcome criterion2() {
  Timer timer;
  const Paradigm p = testing::arabic();
  const auto need = arabic_need(p);
  const TrainConfig cfg;
  const auto base = cetl(p, need, cfg, true);
  const auto cfs = sample_form_only(p, 25, 0);
  int higher = 0;
  for (const auto& r : cfs) {
    const auto res = cetl(r.paradigm, need, cfg, false);
    if (base.cetl_mean < res.cetl_mean) ++higher;
    std::printf("  %s cetl=%.6f\n", r.paradigm.id().c_str(), res.cetl_mean);
  }
  const double frac = static_cast<double>(higher) / static_cast<double>(cfs.size());
  const double secs = timer.seconds();
  Outcome o;
  o.pass = base.runs.size() == 10 && cfs.size() == 25 && frac >= kC2MinFraction &&
           secs < kC2BudgetSec;
  o.detail = fmt("attested=%.6f", base.cetl_mean) + " above=" + std::to_string(higher) + "/" +
             std::to_string(cfs.size()) + fmt(" (%.1f%%)", 100.0 * frac) +
             fmt(" time=%.0fs", secs);
  return o;
}

Outcome criterion3() {
  Timer timer;
  const Paradigm p = testing::arabic();
  const auto need = arabic_need(p);
  const TrainConfig cfg;
  const auto cfs = enumerate_structural(p);
  std::vector<double> loss, ib, unnat;
  for (const auto& r : cfs) {
    const auto res = cetl(r.paradigm, need, cfg, false);
    loss.push_back(res.cetl_mean);
    ib.push_back(ib_complexity(r.paradigm, need));
    unnat.push_back(unnaturalness(r.paradigm));
    std::printf("  %s unnat=%g ib=%.6f cetl=%.6f\n", r.paradigm.id().c_str(), unnat.back(),
                ib.back(), loss.back());
  }
  Outcome o;
  if (cfs.size() < kC3MinRecords) {
    o.pass = false;
    o.detail = "only " + std::to_string(cfs.size()) + " structural records";
    return o;
  }
  const double rho = stats::spearman(loss, unnat);
  const double rho_p = stats::correlation_p_value(rho, loss.size());
  const double rho_ib = stats::spearman(ib, unnat);
  const double secs = timer.seconds();
  o.pass = rho >= kC3MinRho && rho_p < kC3MaxP && std::abs(rho_ib) < kC3MaxIbAbsRho &&
           secs < kC3BudgetSec;
  o.detail = "n=" + std::to_string(cfs.size()) + fmt(" rho_cetl=%.4f", rho) +
             fmt(" p=%.4g", rho_p) + fmt(" rho_ib=%.4f", rho_ib) + fmt(" time=%.0fs", secs);
  return o;
}

Outcome criterion4() {
  Timer timer;
  std::mt19937_64 rng(4);
  int mismatches = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Paradigm p = testing::random_paradigm(rng, 4, 4, 1 + trial % 8);
    if (unnaturalness(p) != oracle::brute_force_unnaturalness(p)) ++mismatches;
  }
  const Paradigm table = testing::make(
      {{"PERS", {"2", "3"}}, {"NUM", {"s", "p"}}, {"GEN", {"m", "f"}}},
      {"ta-", "ta- -i", "ta- -u", "ta- -u", "ya-", "ta-", "ya- -u", "ya- -u"});
  const int base = unnaturalness(table);
  const double secs = timer.seconds();
  Outcome o;
  o.pass = mismatches == 0 && base == 4 && oracle::brute_force_unnaturalness(table) == 4 &&
           secs < kC4BudgetSec;
  o.detail = "mismatches=" + std::to_string(mismatches) + "/1000 base=" + std::to_string(base) +
             fmt(" time=%.2fs", secs);
  return o;
}

Outcome criterion5() {
  Timer timer;
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> vocab(4, 9), len(0, 5);
  double worst = 0.0;
  for (int m = 0; m < 20; ++m) {
    const int in_v = vocab(rng), out_v = vocab(rng);
    nn::Seq2Seq model({in_v, out_v, 4, 8}, 500 + static_cast<std::uint64_t>(m));
    std::uniform_int_distribution<int> in_tok(2, in_v - 1), out_tok(2, out_v - 1);
    nn::Example ex{{nn::Vocabulary::kSos}, {nn::Vocabulary::kSos}};
    for (int k = 1 + len(rng); k > 0; --k) ex.input.push_back(in_tok(rng));
    for (int k = len(rng); k > 0; --k) ex.output.push_back(out_tok(rng));
    ex.input.push_back(nn::Vocabulary::kEos);
    ex.output.push_back(nn::Vocabulary::kEos);
    worst = std::max(worst, nn::grad_check(model, ex, 1e-4, static_cast<std::uint64_t>(m), 200));
  }
  const double secs = timer.seconds();
  Outcome o;
  o.pass = worst < kC5Tol && secs < kC5BudgetSec;
  o.detail = fmt("max_rel_err=%.3g", worst) + fmt(" time=%.2fs", secs);
  return o;
}

Outcome criterion6() {
  const std::vector<Category> grid{{"A", {"x", "y", "z"}}, {"B", {"p", "q"}}};
  const Paradigm injective = testing::make(grid, {"a", "b", "c", "d", "e", "f"});
  const double inj = ib_accuracy(injective, NeedDistribution({3, 1, 4, 1, 5, 9}));
  const Paradigm constant = testing::make({{"A", {"x", "y"}}}, {"a", "a"});
  const double two = ib_accuracy(constant, NeedDistribution::uniform(2));
  Outcome o;
  o.pass = std::abs(inj) <= kC6InjectiveTol &&
           std::abs(two - oracle::kTwoPointAccuracy) <= kC6TwoPointTol;
  o.detail = fmt("injective=%.3g", inj) + fmt(" two_point=%.17g", two) +
             fmt(" ref=%.17g", oracle::kTwoPointAccuracy);
  return o;
}

Outcome criterion7() {
  const std::vector<Category> four{{"A", {"x", "y"}}, {"B", {"p", "q"}}};
  const double zero =
      ib_complexity(testing::make(four, {"a", "a", "a", "a"}), NeedDistribution({1, 2, 3, 4}));
  const double two =
      ib_complexity(testing::make(four, {"a", "b", "c", "d"}), NeedDistribution::uniform(4));
  std::mt19937_64 rng(7);
  int steps = 0, violations = 0;
  while (steps < kC7MergeSteps) {
    Paradigm p = testing::random_paradigm(rng, 3, 4, 12);
    std::vector<double> w(p.size());
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (double& x : w) x = u(rng);
    const NeedDistribution need(w);
    double c = ib_complexity(p, need);
    for (auto forms = p.distinct_forms(); forms.size() > 1 && steps < kC7MergeSteps;
         forms = p.distinct_forms()) {
      std::uniform_int_distribution<std::size_t> pick(0, forms.size() - 1);
      const std::size_t a = pick(rng);
      std::size_t b = pick(rng);
      while (b == a) b = pick(rng);
      std::vector<Form> cells = p.cells();
      for (auto& f : cells) {
        if (f == forms[b]) f = forms[a];
      }
      p = p.with_cells(p.id(), std::move(cells));
      const double merged = ib_complexity(p, need);
      if (merged > c + kC7Tol) ++violations;
      c = merged;
      ++steps;
    }
  }
  Outcome o;
  o.pass = std::abs(zero) <= kC7Tol && std::abs(two - 2.0) <= kC7Tol && violations == 0;
  o.detail = fmt("constant=%.3g", zero) + fmt(" uniform4=%.17g", two) +
             " merge_steps=" + std::to_string(steps) + " violations=" + std::to_string(violations);
  return o;
}

int run(std::vector<std::string> args, std::string& err_text) {
  args.insert(args.begin(), "paracomp");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  err_text = err.str();
  return code;
}

std::map<std::string, std::string> snapshot(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (e.is_regular_file()) {
      files[fs::relative(e.path(), dir).string()] = read_text_file(e.path().string());
    }
  }
  return files;
}

Outcome criterion8() {
  const std::string toy =
      "#schema\tNUM=s,p\tGEN=m,f\n#id\ttoy\ns\tm\tka\ns\tf\tki\np\tm\tkau\np\tf\tkiu\n";
  std::vector<std::map<std::string, std::string>> outputs;
  Outcome o;
  for (int round = 0; round < 2; ++round) {
    const fs::path dir =
        fs::temp_directory_path() / ("paracomp_acceptance_c8_" + std::to_string(round));
    fs::remove_all(dir);
    fs::create_directories(dir / "out");
    {
      std::ofstream(dir / "toy.tsv") << toy;
    }
    const std::string out = (dir / "out").string();
    std::string err;
    const int c1 = run({"permute", (dir / "toy.tsv").string(), "-o", out + "/toy.permutations.jsonl"},
                       err);
    const int c2 = run({"score", out + "/toy.permutations.jsonl", "--jobs", "4", "-o",
                        out + "/toy.records.jsonl"},
                       err);
    const int c3 = run({"report", out + "/toy.records.jsonl", "-o", out + "/report"}, err);
    if (c1 != 0 || c2 != 0 || c3 != 0) {
      o.pass = false;
      o.detail = "pipeline failed: " + err;
      return o;
    }
    outputs.push_back(snapshot(dir / "out"));
  }
  o.pass = outputs[0] == outputs[1] && !outputs[0].empty();
  o.detail = std::to_string(outputs[0].size()) + " files, " +
             (outputs[0] == outputs[1] ? "byte-identical" : "differ");
  return o;
}

Outcome criterion9() {
  using C = Comparison;
  using V = Verdict;
  const std::vector<std::pair<std::pair<C, C>, V>> table{
      {{C::kWorse, C::kWorse}, V::kCorrect},     {{C::kWorse, C::kEqual}, V::kCorrect},
      {{C::kEqual, C::kWorse}, V::kCorrect},     {{C::kEqual, C::kEqual}, V::kIncorrect},
      {{C::kBetter, C::kBetter}, V::kIncorrect}, {{C::kBetter, C::kEqual}, V::kIncorrect},
      {{C::kEqual, C::kBetter}, V::kIncorrect},  {{C::kWorse, C::kBetter}, V::kMixed},
      {{C::kBetter, C::kWorse}, V::kMixed}};
  int bad = 0;
  for (const auto& [pair, want] : table) {
    if (verdict_from(pair.first, pair.second) != want) ++bad;
  }
  const std::vector<V> v{V::kCorrect, V::kCorrect, V::kCorrect, V::kIncorrect};
  const auto s = perf(v);
  if (s.c_pct != 75.0 || s.i_pct != 25.0 || s.perf != 50.0) ++bad;
  if (compare_models(55.0, 50.0) != ModelWinner::kCetl) ++bad;
  if (compare_models(50.0, 55.0) != ModelWinner::kIb) ++bad;
  if (compare_models(54.999, 50.0) != ModelWinner::kTie) ++bad;
  if (compare_models(50.0, 54.999) != ModelWinner::kTie) ++bad;
  Outcome o;
  o.pass = bad == 0;
  o.detail = std::to_string(table.size()) + " verdict pairs, " + std::to_string(bad) + " wrong";
  return o;
}

Outcome criterion10() {
  double dt = 0.0, dp = 0.0;
  for (const auto& c : oracle::kTTest) {
    const auto r = stats::one_sample_ttest(c.x);
    dt = std::max(dt, std::abs(r.t - c.t));
    dp = std::max(dp, std::abs(r.p - c.p));
  }
  Outcome o;
  o.pass = oracle::kTTest.size() >= 20 && dt <= kC10TTol && dp <= kC10PTol;
  o.detail = std::to_string(oracle::kTTest.size()) + " samples" + fmt(" max|dt|=%.3g", dt) +
             fmt(" max|dp|=%.3g", dp);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Outcome()>> criteria{
      criterion1, criterion2, criterion3, criterion4, criterion5,
      criterion6, criterion7, criterion8, criterion9, criterion10};
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  if (selected.empty()) {
    for (int i = 1; i <= static_cast<int>(criteria.size()); ++i) selected.push_back(i);
  }
  bool all = true;
  for (const int n : selected) {
    if (n < 1 || n > static_cast<int>(criteria.size())) {
      std::fprintf(stderr, "unknown criterion %d\n", n);
      return 2;
    }
    Outcome o;
    try {
      o = criteria[static_cast<std::size_t>(n - 1)]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("criterion %d: %s %s\n", n, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
