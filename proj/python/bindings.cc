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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "paracomp/cetl.h"
#include "paracomp/cli.h"
#include "paracomp/counterfactual.h"
#include "paracomp/error.h"
#include "paracomp/ib_measures.h"
#include "paracomp/naturalness.h"
#include "paracomp/paradigm.h"
#include "paracomp/stats.h"

namespace py = pybind11;
using namespace paracomp;

namespace {

std::vector<std::string> cell_texts(const Paradigm& p) {
  std::vector<std::string> out;
  for (const auto& f : p.cells()) out.push_back(f.text());
  return out;
}

std::vector<Paradigm> paradigms_of(const std::vector<PermutationRecord>& records) {
  std::vector<Paradigm> out;
  for (const auto& r : records) out.push_back(r.paradigm);
  return out;
}

py::tuple run_cli_py(std::vector<std::string> args) {
  args.insert(args.begin(), "paracomp");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release release;
    code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Morphological paradigm efficiency measures";

  static py::exception<Error> error_type(m, "ParacompError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr ptr) {
    try {
      if (ptr) std::rethrow_exception(ptr);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("kind") = std::string(error_kind_name(e.kind()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<Paradigm>(m, "Paradigm")
      .def_property_readonly("id", &Paradigm::id)
      .def_property_readonly("language", &Paradigm::language)
      .def_property_readonly("family", &Paradigm::family)
      .def_property_readonly("cells", &cell_texts)
      .def_property_readonly("categories",
                             [](const Paradigm& p) {
                               std::vector<std::pair<std::string, std::vector<std::string>>> out;
                               for (const auto& c : p.schema().categories()) {
                                 out.emplace_back(c.name, c.values);
                               }
                               return out;
                             })
      .def("__len__", &Paradigm::size)
      .def("serialize", &serialize_paradigm)
      .def("__repr__", [](const Paradigm& p) {
        return "<Paradigm " + p.id() + " with " + std::to_string(p.size()) + " cells>";
      });

  py::class_<NeedDistribution>(m, "NeedDistribution")
      .def(py::init<std::vector<double>>(), py::arg("weights"))
      .def_static("uniform", &NeedDistribution::uniform, py::arg("n"))
      .def_property_readonly("weights", &NeedDistribution::weights)
      .def("__len__", &NeedDistribution::size);

  m.def("parse_paradigm", &parse_paradigm, py::arg("text"), py::arg("default_id") = "paradigm");
  m.def("read_paradigm", &read_paradigm_file, py::arg("path"));
  m.def("read_need", &read_need_file, py::arg("path"), py::arg("paradigm"));
  m.def("parse_need", &parse_need, py::arg("text"), py::arg("paradigm"));

  m.def("ib_complexity", &ib_complexity, py::arg("paradigm"), py::arg("need"));
  m.def("ib_accuracy", &ib_accuracy, py::arg("paradigm"), py::arg("need"),
        py::arg("gamma") = kDefaultGamma);
  m.def("unnaturalness", py::overload_cast<const Paradigm&>(&unnaturalness),
        py::arg("paradigm"));

  m.def(
      "structural_permutations",
      [](const Paradigm& p, int max_categories, bool slices, std::size_t cap,
         std::uint64_t seed) {
        StructuralOptions o;
        o.max_categories = max_categories;
        o.slices = slices ? SlicePolicy::kWithSlices : SlicePolicy::kNone;
        o.cap = cap;
        o.seed = seed;
        return paradigms_of(enumerate_structural(p, o));
      },
      py::arg("paradigm"), py::arg("max_categories") = 2, py::arg("slices") = true,
      py::arg("cap") = 2000, py::arg("seed") = 0);
  m.def(
      "form_only_permutations",
      [](const Paradigm& p, std::size_t n, std::uint64_t seed) {
        return paradigms_of(sample_form_only(p, n, seed));
      },
      py::arg("paradigm"), py::arg("n") = 50, py::arg("seed") = 0);

  py::class_<TrainConfig>(m, "TrainConfig")
      .def(py::init<>())
      .def_readwrite("epochs", &TrainConfig::t_max)
      .def_readwrite("dropout", &TrainConfig::dropout)
      .def_readwrite("batch_size", &TrainConfig::batch_size)
      .def_readwrite("hidden_dim", &TrainConfig::hidden_dim)
      .def_readwrite("embed_dim", &TrainConfig::embed_dim)
      .def_readwrite("learning_rate", &TrainConfig::learning_rate)
      .def_readwrite("init_scale", &TrainConfig::init_scale)
      .def_readwrite("runs_attested", &TrainConfig::runs_attested)
      .def_readwrite("runs_counterfactual", &TrainConfig::runs_counterfactual)
      .def_readwrite("base_seed", &TrainConfig::base_seed)
      .def_readwrite("max_restarts", &TrainConfig::max_restarts)
      .def_property_readonly("hash", [](const TrainConfig& c) { return config_hash(c); });

  m.def(
      "train_trajectory",
      [](const Paradigm& p, const NeedDistribution& need, const TrainConfig& cfg,
         std::uint64_t seed) {
        py::gil_scoped_release release;
        return train_and_score(p, need, cfg, seed).losses;
      },
      py::arg("paradigm"), py::arg("need"), py::arg("config"), py::arg("seed") = 0);
  m.def(
      "cetl",
      [](const Paradigm& p, const NeedDistribution& need, const TrainConfig& cfg,
         bool attested, int jobs) {
        CetlResult r;
        {
          py::gil_scoped_release release;
          r = cetl(p, need, cfg, attested, jobs);
        }
        py::dict d;
        d["mean"] = r.cetl_mean;
        d["sd"] = r.cetl_sd;
        d["runs"] = r.runs.size();
        d["diverged"] = r.diverged;
        d["config_hash"] = r.config_hash;
        return d;
      },
      py::arg("paradigm"), py::arg("need"), py::arg("config") = TrainConfig{},
      py::arg("attested") = true, py::arg("jobs") = 1);

  m.def(
      "one_sample_ttest",
      [](const std::vector<double>& x) {
        const auto r = stats::one_sample_ttest(x);
        return py::make_tuple(r.t, r.p);
      },
      py::arg("deltas"));
  m.def(
      "spearman",
      [](const std::vector<double>& x, const std::vector<double>& y) {
        const double rho = stats::spearman(x, y);
        return py::make_tuple(rho, stats::correlation_p_value(rho, x.size()));
      },
      py::arg("x"), py::arg("y"));

  m.def("run_cli", &run_cli_py, py::arg("args"),
        "Run the command-line tool in-process; returns (exit_code, stdout, stderr).");
}
