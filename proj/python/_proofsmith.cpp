// Copyright 2026 The Proofsmith Authors.
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


// Python bindings. Records cross the boundary as JSON text; the package
// wrapper turns them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "proofsmith/augment.hpp"
#include "proofsmith/cli.hpp"
#include "proofsmith/error.hpp"
#include "proofsmith/metrics.hpp"
#include "proofsmith/mock_oracle.hpp"
#include "proofsmith/proof.hpp"
#include "proofsmith/search.hpp"
#include "proofsmith/text.hpp"

namespace py = pybind11;
namespace ps = proofsmith;

namespace {

ps::SearchConfig make_config(const std::string& config_json) {
  ps::SearchConfig cfg;
  if (!config_json.empty()) cfg.apply_json(nlohmann::json::parse(config_json));
  cfg.validate();
  return cfg;
}

std::vector<std::string> dump_all(const std::vector<ps::Proof>& proofs) {
  std::vector<std::string> out;
  for (const auto& p : proofs) out.push_back(ps::serialize(p));
  return out;
}

}  // namespace

PYBIND11_MODULE(_proofsmith, m) {
  m.doc() = "proofsmith core: proof search, metrics and the mock oracle";

  // Translators run newest first, so the base class goes in first.
  auto base = py::register_exception<ps::Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ps::InvalidInput>(m, "InvalidInput", base.ptr());
  py::register_exception<ps::OracleUnavailable>(m, "OracleUnavailable", base.ptr());

  m.def("tokenize", [](const std::string& text) { return ps::Sentence(text).tokens(); },
        py::arg("text"));
  m.def("bleu4",
        [](const std::vector<std::string>& c, const std::vector<std::string>& r) {
          return ps::bleu4(c, r);
        },
        py::arg("candidate"), py::arg("reference"));
  m.def("jaccard",
        [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
          return ps::jaccard(a, b);
        },
        py::arg("a"), py::arg("b"));

  py::class_<ps::MockOracle>(m, "MockOracle")
      .def(py::init<>())
      .def_static("with_lexicon",
                  [](const std::string& path) { return ps::MockOracle(ps::MockLexicon::load(path)); })
      .def_property_readonly("id", &ps::MockOracle::id)
      .def("generate",
           [](const ps::MockOracle& o, const std::string& mode, const std::string& text, int k) {
             std::vector<std::string> out;
             for (const auto& s : ps::generate(o, ps::parse_mode(mode), ps::Sentence(text), k)) {
               out.push_back(s.text());
             }
             return out;
           },
           py::arg("mode"), py::arg("text"), py::arg("k") = 10)
      .def("embed",
           [](const ps::MockOracle& o, const std::string& text) {
             return ps::embed(o, ps::Sentence(text));
           },
           py::arg("text"))
      .def("judge",
           [](const ps::MockOracle& o, const std::string& premise, const std::string& hyp) {
             auto j = ps::judge(o, ps::Sentence(premise), ps::Sentence(hyp));
             return py::dict(py::arg("label") = std::string(ps::to_string(j.label)),
                             py::arg("entailment") = j.p_entail,
                             py::arg("neutral") = j.p_neutral,
                             py::arg("contradiction") = j.p_contradict);
           },
           py::arg("premise"), py::arg("hypothesis"))
      .def("count_keywords",
           [](const ps::MockOracle& o, const std::string& text) {
             return ps::count_keywords(ps::Sentence(text), o.tagger());
           },
           py::arg("text"));

  m.def("_search",
        [](const ps::MockOracle& o, const std::string& method, const std::string& premise,
           const std::string& hypothesis, const std::string& config_json) {
          const auto cfg = make_config(config_json);
          const ps::Sentence p(premise), h(hypothesis);
          py::gil_scoped_release release;
          if (method == "level") return dump_all(ps::level_search(p, h, cfg, o));
          if (method == "beam") return dump_all(ps::beam_search(p, h, cfg, o));
          if (method == "none") return dump_all(ps::undirected_search(p, h, cfg, o));
          throw ps::InvalidInput("unknown method: " + method);
        });
  m.def("_validate", [](const std::string& record) {
    return ps::proof_violations(ps::parse_proof(record));
  });
  m.def("_score", [](const ps::MockOracle& o, const std::string& record, const std::string& mode) {
    return ps::score_proof(ps::parse_proof(record), o, o.tagger(), ps::parse_pair_mode(mode))
        .to_json()
        .dump();
  });
  m.def("_aggregate", [](const std::vector<std::string>& metrics, const std::string& name) {
    std::vector<ps::ProofMetrics> ms;
    for (const auto& s : metrics) ms.push_back(ps::ProofMetrics::from_json(nlohmann::json::parse(s)));
    return ps::aggregate(ms, name).to_json().dump();
  });
  m.def("_perturb", [](const ps::MockOracle& o, const std::string& record, double ratio,
                       std::uint64_t seed) {
    ps::LexiconSubstituter sub(o.lexicon());
    return ps::serialize(ps::perturb_gold(ps::parse_proof(record), ratio, sub, seed));
  });
  m.def("_negate", [](const ps::MockOracle& o, const std::string& record) {
    return ps::serialize(ps::negate_gold(ps::parse_proof(record), o));
  });
  m.def("label_for_mode", [](const std::string& mode) {
    return std::string(ps::to_string(ps::label_for_mode(ps::parse_mode(mode))));
  });

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          int code;
          {
            py::gil_scoped_release release;
            code = ps::cli::run_command(args, out, err);
          }
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs one CLI command; returns (exit_code, stdout, stderr).");
}
