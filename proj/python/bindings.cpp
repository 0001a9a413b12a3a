// Copyright 2026 The Authors.
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

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minrank/errors.hpp"
#include "minrank/generators.hpp"
#include "minrank/hardness.hpp"
#include "minrank/instance.hpp"
#include "minrank/solvers.hpp"
#include "minrank/verify.hpp"

namespace py = pybind11;

namespace {

using namespace minrank;

// Sets cross the boundary as sorted lists of element indices and rationals
// as canonical strings; the Python package turns those into Fractions.

ElementSet to_set(const Instance& inst, const std::vector<Element>& elements) {
  ElementSet s;
  for (Element e : elements) {
    if (e < 0 || e >= inst.n) {
      throw DomainError("element " + std::to_string(e) + " outside [0, " +
                        std::to_string(inst.n) + ")");
    }
    s.insert(e);
  }
  return s;
}

std::vector<std::string> rational_strings(const WeightFn& w) {
  std::vector<std::string> out;
  out.reserve(w.size());
  for (const Rational& x : w) out.push_back(format_rational(x));
  return out;
}

MinRankOracle oracle_for(const Instance& inst) {
  return MinRankOracle(std::make_shared<const MatroidPair>(inst.pair));
}

SolveOptions options_for(const Instance& inst, const std::optional<std::vector<Element>>& ground) {
  SolveOptions options;
  if (ground) options.ground = to_set(inst, *ground);
  return options;
}

py::dict report_dict(const BruteReport& r) {
  py::dict d;
  d["instance"] = r.instance;
  d["quantity"] = r.quantity;
  d["brute"] = r.brute;
  d["solver"] = r.solver;
  d["agree"] = r.agree;
  std::vector<std::vector<Element>> witnesses;
  for (ElementSet w : r.witnesses) witnesses.push_back(w.to_vector());
  d["witnesses"] = witnesses;
  return d;
}

std::vector<py::dict> report_list(const std::vector<BruteReport>& reports) {
  std::vector<py::dict> out;
  out.reserve(reports.size());
  for (const BruteReport& r : reports) out.push_back(report_dict(r));
  return out;
}

ColoredGraph colored_graph(int vertices, std::vector<std::pair<int, int>> edges,
                           const std::optional<std::vector<std::pair<int, int>>>& coloring) {
  ColoredGraph g;
  g.vertices = vertices;
  g.edges = std::move(edges);
  if (coloring) {
    g.coloring.emplace();
    for (auto [i, j] : *coloring) {
      if (i < 1 || i > 2 || j < 1 || j > 2) {
        throw DataError("colors are pairs (i, j) with i, j in {1, 2}");
      }
      g.coloring->push_back(Color{i, j});
    }
  }
  return g;
}

WeightStyle weight_style(const std::string& name) {
  if (name == "positive") return WeightStyle::kPositiveIntegers;
  if (name == "mixed") return WeightStyle::kMixedIntegers;
  if (name == "rational") return WeightStyle::kRationals;
  throw DataError("weights must be positive, mixed or rational, not '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_minrank, m) {
  m.doc() = "Matroid intersection through a minimum-rank oracle.";

  py::register_exception<DataError>(m, "DataError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_IndexError);
  py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_RuntimeError);

  py::class_<Instance>(m, "Instance", "Two hidden matroids on {0, ..., n-1} and optional weights.")
      .def_readonly("n", &Instance::n)
      .def_property_readonly("names",
                             [](const Instance& inst) {
                               std::vector<std::string> names;
                               for (Element e = 0; e < inst.n; ++e) names.push_back(inst.name(e));
                               return names;
                             })
      .def_property_readonly(
          "weights", [](const Instance& inst) { return rational_strings(inst.weights_or_ones()); },
          "Weights as rational strings; all ones when the file has none.")
      .def_property_readonly("kinds",
                             [](const Instance& inst) {
                               return std::make_pair(inst.pair.first.kind_name(),
                                                     inst.pair.second.kind_name());
                             })
      .def(
          "rmin",
          [](const Instance& inst, const std::vector<Element>& elements) {
            return inst.pair.rmin(to_set(inst, elements));
          },
          py::arg("elements"), "Minimum of the two ranks of a set.")
      .def("to_json", [](const Instance& inst) { return emit_instance(inst); })
      .def("__repr__", [](const Instance& inst) {
        return "<Instance n=" + std::to_string(inst.n) + " " + inst.pair.first.kind_name() +
               "/" + inst.pair.second.kind_name() + ">";
      });

  m.def(
      "parse_instance",
      [](const std::string& text, bool validate) {
        LoadOptions options;
        options.validate = validate;
        return parse_instance(text, options);
      },
      py::arg("text"), py::arg("validate") = true, "Parse an instance from JSON text.");
  m.def(
      "load_instance",
      [](const std::string& path, bool validate) {
        LoadOptions options;
        options.validate = validate;
        return load_instance(path, options);
      },
      py::arg("path"), py::arg("validate") = true, "Load an instance JSON file.");
  m.def("crossed_partition_instance", &crossed_partition_instance,
        "Two partition matroids on four elements with weights 5, 4, 4, 1.");
  m.def(
      "random_instance",
      [](std::uint64_t seed, int n, const std::vector<std::string>& kinds,
         const std::string& weights) {
        Rng rng(seed);
        RandomSpec spec;
        spec.n = n;
        if (!kinds.empty()) {
          spec.kinds.clear();
          for (const std::string& k : kinds) spec.kinds.push_back(kind_from_string(k));
        }
        spec.weights = weight_style(weights);
        return random_instance(rng, spec);
      },
      py::arg("seed"), py::arg("n") = 6, py::arg("kinds") = std::vector<std::string>{},
      py::arg("weights") = "positive", "Seeded random instance.");

  m.def(
      "max_cardinality",
      [](const Instance& inst, const std::optional<std::vector<Element>>& ground) {
        MinRankOracle oracle = oracle_for(inst);
        const CardinalityResult r = max_cardinality(oracle, options_for(inst, ground));
        py::dict d;
        d["set"] = r.independent.to_vector();
        d["certificate"] = r.certificate.to_vector();
        d["queries"] = r.queries;
        d["augmentations"] = r.augmentations;
        return d;
      },
      py::arg("instance"), py::arg("ground") = py::none(),
      "Maximum common independent set and a dual certificate.");
  m.def(
      "weighted_levels",
      [](const Instance& inst, std::optional<int> gamma) {
        MinRankOracle oracle = oracle_for(inst);
        const WeightFn w = inst.weights_or_ones();
        const LevelResult r = gamma ? weighted_fpt_circuit(oracle, w, *gamma)
                                    : weighted_no_circuit_inclusion(oracle, w);
        std::vector<std::vector<Element>> levels;
        std::vector<std::string> weights;
        for (ElementSet s : r.levels) {
          levels.push_back(s.to_vector());
          weights.push_back(format_rational(weight_of(w, s)));
        }
        py::dict d;
        d["levels"] = levels;
        d["weights"] = weights;
        d["certificate"] = r.certificate.to_vector();
        d["queries"] = r.queries;
        d["guesses"] = r.guesses;
        return d;
      },
      py::arg("instance"), py::arg("gamma") = py::none(),
      "Heaviest common independent set of every size. Without gamma the pair "
      "must satisfy the no-circuit-inclusion promise; with gamma, circuits of "
      "one matroid have at most gamma elements.");
  m.def(
      "lexicographic_max",
      [](const Instance& inst) {
        MinRankOracle oracle = oracle_for(inst);
        const WeightFn w = inst.weights_or_ones();
        const ElementSet s = lexicographic_max(oracle, w);
        py::dict d;
        d["set"] = s.to_vector();
        d["weight"] = format_rational(weight_of(w, s));
        d["class_counts"] = class_counts(weight_classes(w, ElementSet::universe(inst.n)), s);
        d["queries"] = oracle.query_count();
        return d;
      },
      py::arg("instance"), "Lexicographically maximal common independent set.");
  m.def(
      "approx_max_weight",
      [](const Instance& inst) {
        MinRankOracle oracle = oracle_for(inst);
        const ApproxResult r = approx_max_weight(oracle, inst.weights_or_ones());
        py::dict d;
        d["set"] = r.set.to_vector();
        d["weight"] = format_rational(r.weight);
        d["alpha"] = format_rational(r.alpha);
        d["guarantee"] = format_rational(r.guarantee);
        d["queries"] = oracle.query_count();
        return d;
      },
      py::arg("instance"), "Approximate maximum-weight common independent set.");

  m.def(
      "brute_max_common",
      [](const Instance& inst) {
        const MaxCommon r = brute_max_common(inst.pair);
        return std::make_pair(r.size, r.witness.to_vector());
      },
      py::arg("instance"), "Exhaustive maximum common independent set (hidden access).");
  m.def(
      "brute_max_weight",
      [](const Instance& inst) {
        return format_rational(brute_max_weight(inst.pair, inst.weights_or_ones()));
      },
      py::arg("instance"), "Exhaustive maximum weight (hidden access).");
  m.def(
      "check_promise",
      [](const Instance& inst) { return check_promise_no_circuit_inclusion(inst.pair); },
      py::arg("instance"), "Whether the no-circuit-inclusion promise holds.");
  m.def(
      "largest_circuits",
      [](const Instance& inst) {
        return std::make_pair(largest_circuit(inst.pair.first), largest_circuit(inst.pair.second));
      },
      py::arg("instance"), "Largest circuit size of each matroid.");
  m.def(
      "verify_instance",
      [](const Instance& inst, const std::string& name) {
        SuiteOptions options;
        options.instance = name;
        return report_list(verify_instance(inst.pair, inst.weights_or_ones(), options));
      },
      py::arg("instance"), py::arg("name") = "", "Cross-check every solver against brute force.");

  m.def(
      "gadget_round_trip",
      [](int vertices, std::vector<std::pair<int, int>> edges) {
        const ColoredGraph g = colored_graph(vertices, std::move(edges), std::nullopt);
        const GadgetLayout layout = gadget_layout(g);
        const ColoringEnumeration e =
            colorings_from_consistent_graphs(layout, prescribe_gadget(layout));
        py::dict d;
        d["colorings"] = e.colorings;
        d["proper_colorings"] = proper_colorings(g);
        d["vertex_situations"] = e.vertex_situations;
        d["projection_is_color"] = e.projection_is_color;
        return d;
      },
      py::arg("vertices"), py::arg("edges"),
      "Colorings read off every graph consistent with the gadget values.");
  m.def(
      "gadget_instance",
      [](int vertices, std::vector<std::pair<int, int>> edges,
         std::vector<std::pair<int, int>> coloring) {
        const GadgetInstance gi = build_gadget(colored_graph(vertices, std::move(edges), coloring));
        return py::make_tuple(gadget_instance_file(gi), report_list(verify_gadget(gi)));
      },
      py::arg("vertices"), py::arg("edges"), py::arg("coloring"),
      "Linear matroid pair realizing a proper coloring, with its checks.");
}
