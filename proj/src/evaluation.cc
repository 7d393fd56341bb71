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

#include "paracomp/evaluation.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include "paracomp/error.h"
#include "paracomp/stats.h"

namespace paracomp {

std::string to_string(RecordKind kind) {
  switch (kind) {
    case RecordKind::kAttested: return "attested";
    case RecordKind::kStructural: return "structural";
    case RecordKind::kFormOnly: return "form_only";
  }
  return "attested";
}

RecordKind record_kind_from_string(const std::string& s) {
  if (s == "attested") return RecordKind::kAttested;
  if (s == "structural") return RecordKind::kStructural;
  if (s == "form_only") return RecordKind::kFormOnly;
  throw Error(ErrorKind::kParse, "unknown record kind " + s);
}

std::string to_string(Measure m) { return m == Measure::kCetl ? "cetl" : "ib"; }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kCorrect: return "correct";
    case Verdict::kIncorrect: return "incorrect";
    case Verdict::kMixed: return "mixed";
  }
  return "mixed";
}

std::string to_string(ModelWinner w) {
  switch (w) {
    case ModelWinner::kCetl: return "cetl";
    case ModelWinner::kIb: return "ib";
    case ModelWinner::kTie: return "tie";
  }
  return "tie";
}

Comparison compare_complexity(double base, double cf, double eps) {
  if (cf > base + eps) return Comparison::kWorse;
  if (cf < base - eps) return Comparison::kBetter;
  return Comparison::kEqual;
}

Comparison compare_accuracy(double base, double cf, double eps) {
  if (cf < base - eps) return Comparison::kWorse;
  if (cf > base + eps) return Comparison::kBetter;
  return Comparison::kEqual;
}

Verdict verdict_from(Comparison complexity, Comparison accuracy) {
  using C = Comparison;
  const bool c_worse = complexity == C::kWorse;
  const bool a_worse = accuracy == C::kWorse;
  if ((c_worse && a_worse) || (c_worse && accuracy == C::kEqual) ||
      (a_worse && complexity == C::kEqual)) {
    return Verdict::kCorrect;
  }
  if (!c_worse && !a_worse) return Verdict::kIncorrect;
  return Verdict::kMixed;
}

Verdict classify(const EfficiencyRecord& base, const EfficiencyRecord& cf, Measure measure,
                 const Tolerances& eps) {
  if (cf.base_id != base.paradigm_id) {
    throw Error(ErrorKind::kBaseMismatch,
                cf.paradigm_id + " is not a counterfactual of " + base.paradigm_id);
  }
  Comparison complexity;
  if (measure == Measure::kCetl) {
    if (!base.cetl_mean || !cf.cetl_mean) {
      throw Error(ErrorKind::kInvalidArgument, "CETL verdict requires CETL scores");
    }
    complexity = compare_complexity(*base.cetl_mean, *cf.cetl_mean, eps.cetl);
  } else {
    complexity = compare_complexity(base.ib_complexity_bits, cf.ib_complexity_bits, eps.ib);
  }
  return verdict_from(complexity, compare_accuracy(base.accuracy_nats, cf.accuracy_nats, eps.ib));
}

PerfSummary perf(std::span<const Verdict> verdicts) {
  if (verdicts.empty()) throw Error(ErrorKind::kInvalidArgument, "no verdicts");
  std::size_t c = 0, i = 0, m = 0;
  for (auto v : verdicts) {
    c += v == Verdict::kCorrect;
    i += v == Verdict::kIncorrect;
    m += v == Verdict::kMixed;
  }
  const double n = static_cast<double>(verdicts.size());
  PerfSummary s;
  s.n = verdicts.size();
  s.c_pct = 100.0 * static_cast<double>(c) / n;
  s.i_pct = 100.0 * static_cast<double>(i) / n;
  s.mixed_pct = 100.0 * static_cast<double>(m) / n;
  s.perf = s.c_pct - s.i_pct;
  return s;
}

ModelWinner compare_models(double perf_cetl, double perf_ib, double threshold) {
  // Perf values are differences of percentages; absorb rounding at the
  // threshold itself.
  constexpr double kSlack = 1e-9;
  if (perf_cetl - perf_ib >= threshold - kSlack) return ModelWinner::kCetl;
  if (perf_ib - perf_cetl >= threshold - kSlack) return ModelWinner::kIb;
  return ModelWinner::kTie;
}

namespace {

// RFC 4180 quoting for free-text fields.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}


double complexity_of(const EfficiencyRecord& r, Measure m) {
  if (m == Measure::kIb) return r.ib_complexity_bits;
  if (!r.cetl_mean) throw Error(ErrorKind::kInvalidArgument, "record lacks CETL score");
  return *r.cetl_mean;
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::string group_name(const std::string& s) { return s.empty() ? "unknown" : s; }

}  // namespace

CorrelationResult naturalness_correlation(std::span<const EfficiencyRecord> records,
                                          Measure measure) {
  std::vector<double> complexity;
  std::vector<double> unnat;
  for (const auto& r : records) {
    if (r.kind != RecordKind::kStructural) continue;
    complexity.push_back(complexity_of(r, measure));
    unnat.push_back(static_cast<double>(r.unnat));
  }
  if (complexity.size() < 3) {
    throw Error(ErrorKind::kDegenerateSample, "fewer than three structural permutations");
  }
  CorrelationResult out;
  out.n = complexity.size();
  out.spearman = stats::spearman(complexity, unnat);
  out.spearman_p = stats::correlation_p_value(out.spearman, out.n);
  out.pearson = stats::pearson(complexity, unnat);
  return out;
}

Report build_report(std::span<const EfficiencyRecord> records, const Tolerances& eps) {
  if (records.empty()) throw Error(ErrorKind::kMissingBaseline, "no records");
  const std::string hash = records.front().config_hash;
  std::map<std::string, const EfficiencyRecord*> bases;
  for (const auto& r : records) {
    if (r.config_hash != hash) {
      throw Error(ErrorKind::kConfigMismatch, "records mix config hashes " + hash + " and " +
                                                  r.config_hash);
    }
    if (r.kind == RecordKind::kAttested) bases[r.paradigm_id] = &r;
  }
  std::vector<const EfficiencyRecord*> cfs;
  for (const auto& r : records) {
    if (r.kind == RecordKind::kAttested) continue;
    if (!bases.count(r.base_id)) {
      throw Error(ErrorKind::kMissingBaseline, "no attested record for " + r.base_id);
    }
    cfs.push_back(&r);
  }
  if (bases.empty()) throw Error(ErrorKind::kMissingBaseline, "no attested records");

  const bool have_cetl = std::all_of(records.begin(), records.end(),
                                     [](const auto& r) { return r.cetl_mean.has_value(); });
  const RecordKind kinds[] = {RecordKind::kStructural, RecordKind::kFormOnly};
  Report rep;

  auto verdicts_for = [&](const std::vector<const EfficiencyRecord*>& group, Measure m) {
    std::vector<Verdict> v;
    for (const auto* r : group) v.push_back(classify(*bases.at(r->base_id), *r, m, eps));
    return v;
  };

  // Hit/fail per family and kind.
  std::map<std::string, std::vector<const EfficiencyRecord*>> by_family;
  std::map<std::string, std::vector<const EfficiencyRecord*>> by_language;
  for (const auto* r : cfs) {
    by_family[group_name(r->family)].push_back(r);
    by_language[group_name(r->language)].push_back(r);
  }
  rep.hitfail =
      "config_hash,family,kind,C_cetl,C_ib,I_cetl,I_ib,M_cetl,M_ib,Perf_cetl,Perf_ib,support\n";
  rep.model_comparison = "config_hash,language,kind,Perf_cetl,Perf_ib,support,winner\n";
  auto summarize_groups = [&](const auto& groups, bool comparison) {
    for (const auto& [name, members] : groups) {
      for (auto kind : kinds) {
        std::vector<const EfficiencyRecord*> group;
        for (const auto* r : members) {
          if (r->kind == kind) group.push_back(r);
        }
        if (group.empty()) continue;
        const auto ib = perf(verdicts_for(group, Measure::kIb));
        std::optional<PerfSummary> ce;
        if (have_cetl) ce = perf(verdicts_for(group, Measure::kCetl));
        auto opt = [&](double PerfSummary::*field) { return ce ? num((*ce).*field) : "NA"; };
        if (!comparison) {
          rep.hitfail += hash + "," + csv_field(name) + "," + to_string(kind) + "," + opt(&PerfSummary::c_pct) +
                         "," + num(ib.c_pct) + "," + opt(&PerfSummary::i_pct) + "," +
                         num(ib.i_pct) + "," + opt(&PerfSummary::mixed_pct) + "," +
                         num(ib.mixed_pct) + "," + opt(&PerfSummary::perf) + "," + num(ib.perf) +
                         "," + std::to_string(group.size()) + "\n";
        } else {
          const std::string winner = ce ? to_string(compare_models(ce->perf, ib.perf)) : "NA";
          rep.model_comparison += hash + "," + csv_field(name) + "," + to_string(kind) + "," +
                                  opt(&PerfSummary::perf) + "," + num(ib.perf) + "," +
                                  std::to_string(group.size()) + "," + winner + "\n";
        }
      }
    }
  };
  summarize_groups(by_family, false);
  summarize_groups(by_language, true);

  // Correlations per language, then unweighted per-family means.
  rep.correlation = "config_hash,scope,name,measure,n,spearman,spearman_p,pearson,status\n";
  std::map<std::string, std::vector<EfficiencyRecord>> lang_records;
  std::map<std::string, std::string> lang_family;
  for (const auto* r : cfs) {
    lang_records[group_name(r->language)].push_back(*r);
    lang_family[group_name(r->language)] = group_name(r->family);
  }
  std::vector<Measure> measures;
  if (have_cetl) measures.push_back(Measure::kCetl);
  measures.push_back(Measure::kIb);
  std::map<std::pair<std::string, Measure>, std::vector<CorrelationResult>> family_corr;
  for (const auto& [lang, recs] : lang_records) {
    for (auto m : measures) {
      std::string row = hash + ",language," + csv_field(lang) + "," + to_string(m) + ",";
      try {
        const auto c = naturalness_correlation(recs, m);
        row += std::to_string(c.n) + "," + num(c.spearman) + "," + num(c.spearman_p) + "," +
               num(c.pearson) + ",ok\n";
        family_corr[{lang_family[lang], m}].push_back(c);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kDegenerateSample) throw;
        std::size_t n = 0;
        for (const auto& r : recs) n += r.kind == RecordKind::kStructural;
        row += std::to_string(n) + ",NA,NA,NA,DegenerateSample\n";
      }
      rep.correlation += row;
    }
  }
  for (const auto& [key, list] : family_corr) {
    double s = 0.0, pe = 0.0;
    std::size_t n = 0;
    for (const auto& c : list) {
      s += c.spearman;
      pe += c.pearson;
      n += c.n;
    }
    const double k = static_cast<double>(list.size());
    rep.correlation += hash + ",family_mean," + csv_field(key.first) + "," + to_string(key.second) + "," +
                       std::to_string(n) + "," + num(s / k) + ",NA," + num(pe / k) + ",ok\n";
  }

  // Relative scores against zero.
  rep.ttest = "config_hash,family,measure,mean_base,mean_perms,n,t,p,status\n";
  for (const auto& [fam, members] : by_family) {
    struct Column {
      std::string name;
      double (*get)(const EfficiencyRecord&);
    };
    std::vector<Column> cols;
    if (have_cetl) cols.push_back({"cetl", [](const EfficiencyRecord& r) { return *r.cetl_mean; }});
    cols.push_back({"ib", [](const EfficiencyRecord& r) { return r.ib_complexity_bits; }});
    cols.push_back({"acc", [](const EfficiencyRecord& r) { return r.accuracy_nats; }});
    for (const auto& col : cols) {
      std::vector<double> deltas, perms;
      std::set<std::string> seen_bases;
      std::vector<double> base_vals;
      for (const auto* r : members) {
        const auto& b = *bases.at(r->base_id);
        deltas.push_back(col.get(*r) - col.get(b));
        perms.push_back(col.get(*r));
        if (seen_bases.insert(b.paradigm_id).second) base_vals.push_back(col.get(b));
      }
      std::string row = hash + "," + csv_field(fam) + "," + col.name + "," + num(stats::mean(base_vals)) +
                        "," + num(stats::mean(perms)) + "," + std::to_string(deltas.size()) + ",";
      try {
        const auto t = stats::one_sample_ttest(deltas);
        row += num(t.t) + "," + num(t.p) + ",ok\n";
      } catch (const Error& e) {
        row += std::string("NA,NA,") + std::string(error_kind_name(e.kind())) + "\n";
      }
      rep.ttest += row;
    }
  }

  rep.efficiency =
      "config_hash,paradigm_id,base_id,language,family,kind,rel_cetl,rel_ib_complexity,"
      "rel_accuracy,unnat,unnat_base\n";
  for (const auto* r : cfs) {
    const auto& b = *bases.at(r->base_id);
    const std::string rel_cetl =
        (r->cetl_mean && b.cetl_mean) ? num(*r->cetl_mean - *b.cetl_mean) : "NA";
    rep.efficiency += hash + "," + csv_field(r->paradigm_id) + "," + csv_field(r->base_id) + "," +
                      csv_field(r->language) + "," + csv_field(r->family) + "," + to_string(r->kind) + "," + rel_cetl + "," +
                      num(r->ib_complexity_bits - b.ib_complexity_bits) + "," +
                      num(r->accuracy_nats - b.accuracy_nats) + "," + std::to_string(r->unnat) +
                      "," + std::to_string(r->unnat_base) + "\n";
  }
  return rep;
}

}  // namespace paracomp
