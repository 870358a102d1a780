// Copyright 2026 The qcrel Authors
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

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qcrel/algorithms.hpp"
#include "qcrel/errors.hpp"
#include "qcrel/groupoid.hpp"
#include "qcrel/io.hpp"
#include "qcrel/oracle.hpp"
#include "qcrel/relation.hpp"
#include "qcrel/structmaps.hpp"

namespace py = pybind11;
using namespace qcrel;

namespace {

std::vector<std::pair<Index, Index>> pair_list(const FinRel& r) {
  return {r.pairs().begin(), r.pairs().end()};
}

std::vector<Index> member_list(const StateVec& s) {
  return {s.members().begin(), s.members().end()};
}

py::dict laws_dict(const ClassicalLaws& l) {
  py::dict d;
  d["coassoc"] = l.coassoc;
  d["counital"] = l.counital;
  d["frobenius"] = l.frobenius;
  d["special"] = l.special;
  d["symmetric"] = l.symmetric;
  return d;
}

// Reports cross the boundary as their JSON text; the Python wrapper decodes
// them into plain dictionaries.
std::string report_json(const RunReport& r) { return report_to_json(r).dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite relations, groupoid bases and relational oracles";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<UnsupportedPair>(m, "UnsupportedPair",
                                          PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded",
                                         PyExc_RuntimeError);

  py::class_<FinRel>(m, "FinRel")
      .def(py::init([](std::size_t dom, std::size_t cod,
                       std::vector<IndexPair> pairs) {
             return FinRel(dom, cod, std::move(pairs));
           }),
           py::arg("dom"), py::arg("cod"), py::arg("pairs"))
      .def_property_readonly("dom", &FinRel::dom)
      .def_property_readonly("cod", &FinRel::cod)
      .def_property_readonly("pairs", &pair_list)
      .def("contains", &FinRel::contains)
      .def("__len__", &FinRel::size)
      .def(py::self == py::self)
      .def("__repr__", [](const FinRel& r) { return to_string(r); })
      .def("to_json", [](const FinRel& r) { return relation_to_json(r).dump(); });

  py::class_<StateVec>(m, "StateVec")
      .def(py::init([](std::size_t n, std::vector<Index> members) {
             return StateVec(n, std::move(members));
           }),
           py::arg("space"), py::arg("members"))
      .def_property_readonly("space", &StateVec::space_size)
      .def_property_readonly("members", &member_list)
      .def("as_state", &StateVec::as_state)
      .def("as_effect", &StateVec::as_effect)
      .def(py::self == py::self)
      .def("__repr__", [](const StateVec& s) { return to_string(s); });

  m.def("then", &then, py::arg("first"), py::arg("second"));
  m.def("after", &after, py::arg("second"), py::arg("first"));
  m.def("converse", &converse);
  m.def("tensor", &tensor);
  m.def("identity", &identity);
  m.def("apply", &apply);
  m.def("is_unitary", &is_unitary);
  m.def("born", [](const StateVec& e, const StateVec& s) {
    return born_scalar(e, s).possible;
  });
  m.def("parse_relation", [](const std::string& text) {
    return parse_relation_text(text);
  });

  py::class_<AbelianGroup>(m, "AbelianGroup")
      .def_property_readonly("order", &AbelianGroup::order)
      .def("__repr__", &AbelianGroup::to_string);

  py::class_<Groupoid>(m, "Groupoid")
      .def(py::init([](const std::string& spec) {
        return parse_groupoid_spec(spec);
      }))
      .def_property_readonly("size", &Groupoid::size)
      .def_property_readonly("copies", &Groupoid::copies)
      .def("multiply", &Groupoid::multiply)
      .def("inverse", &Groupoid::inverse)
      .def("classical_states",
           [](const Groupoid& g) { return classical_states(g); })
      .def("unbiased_states",
           [](const Groupoid& g) { return unbiased_states(g); })
      .def("__repr__", &groupoid_spec);

  py::class_<ComplementaryPair>(m, "ComplementaryPair")
      .def(py::init([](const std::string& spec) {
        return parse_pair_spec(spec);
      }))
      .def_property_readonly("z", &ComplementaryPair::z)
      .def_property_readonly("x", &ComplementaryPair::x)
      .def_property_readonly("size", &ComplementaryPair::size)
      .def("z_classical", &ComplementaryPair::z_classical)
      .def("x_classical", &ComplementaryPair::x_classical)
      .def("__repr__", &ComplementaryPair::to_string);

  m.def("verify_classical_structure", [](const std::string& spec) {
    return laws_dict(verify_classical_structure(parse_groupoid_spec(spec)));
  });
  m.def("cnot", [](const ComplementaryPair& p) { return cnot(p); });
  m.def("fourier", &fourier_rel);

  m.def(
      "enumerate_classical_relations",
      [](const std::string& from, const std::string& to, std::uint64_t budget,
         unsigned threads) {
        EnumerateOptions options;
        options.budget_bits = budget;
        options.threads = threads;
        py::gil_scoped_release release;
        return enumerate_classical_relations(parse_groupoid_spec(from),
                                             parse_groupoid_spec(to), options);
      },
      py::arg("source"), py::arg("target"), py::arg("budget_bits") = 24,
      py::arg("threads") = 0);

  m.def("check_relation", [](const FinRel& r, const std::string& from,
                             const std::string& to) {
    const RelationVerdicts v = check_all(
        StructuredRel(r, parse_groupoid_spec(from), parse_groupoid_spec(to)));
    py::dict d;
    d["groupoid_hom"] = v.groupoid_hom;
    d["surjective_on_objects"] = v.surjective_on_objects;
    d["monoid_hom"] = v.monoid_hom;
    d["classical"] = v.classical;
    d["self_conjugate"] = v.self_conjugate;
    return d;
  });

  m.def(
      "build_oracle",
      [](const ComplementaryPair& pa, const ComplementaryPair& pb,
         const FinRel& f, bool unchecked) {
        return build_oracle(OracleSpec(pa.z(), pb, StructuredRel(f, pa.z(), pb.z())),
                            unchecked ? OracleCheck::kUnchecked
                                      : OracleCheck::kChecked);
      },
      py::arg("pair_a"), py::arg("pair_b"), py::arg("f"),
      py::arg("unchecked") = false);

  m.def(
      "_dj_run",
      [](const ComplementaryPair& pa, const ComplementaryPair& pb,
         const FinRel& f, bool unchecked) {
        return report_json(dj_run(DJInstance(pa, pb, f), {.unchecked = unchecked}));
      },
      py::arg("pair_a"), py::arg("pair_b"), py::arg("f"),
      py::arg("unchecked") = false);
  m.def(
      "_grover_run",
      [](const ComplementaryPair& ps, const ComplementaryPair& pb,
         const FinRel& f, const StateVec& sigma, bool unchecked) {
        return report_json(grover_run(GroverInstance(ps, pb, f, sigma),
                                      {.unchecked = unchecked}));
      },
      py::arg("pair_s"), py::arg("pair_b"), py::arg("f"), py::arg("sigma"),
      py::arg("unchecked") = false);
  m.def(
      "_homid_run",
      [](const ComplementaryPair& pg, const ComplementaryPair& pa,
         const FinRel& f, const StateVec& sigma, bool unchecked) {
        return report_json(grouphomid_run(HomIDInstance(pg, pa, f, sigma),
                                          {.unchecked = unchecked}));
      },
      py::arg("pair_g"), py::arg("pair_a"), py::arg("f"), py::arg("sigma"),
      py::arg("unchecked") = false);
}
