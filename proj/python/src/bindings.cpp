/*
   Copyright 2026 The invar-lattice Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "invlat/report_io.hpp"
#include "invlat/sweep.hpp"

namespace py = pybind11;
using namespace invlat;

namespace {

// Either modulus + integer characters, or factors + residue tuples.
CharSupport make_support(std::optional<Int> modulus, std::optional<std::vector<Int>> factors,
                         const std::vector<Vec>& chars)
{
    if (modulus.has_value() == factors.has_value())
        throw Error(ErrorCode::invalid_argument, "give exactly one of modulus or factors");
    const AbelianGroup g = modulus ? make_group({*modulus}) : make_group(*factors);
    std::vector<Character> cs;
    cs.reserve(chars.size());
    for (const Vec& c : chars)
        cs.push_back(Character::reduce(g, c));
    CharSupport s = reduce_support(g, cs);
    if (s.empty())
        throw Error(ErrorCode::trivial_representation, "support is empty after removing trivial characters");
    return s;
}

py::object index_value(const LatticeIndex& idx)
{
    if (idx.is_infinite())
        return py::float_(INFINITY);
    return py::int_(idx.value());
}

Geometry geometry_arg(const std::string& g) { return parse_geometry(g); }

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Lattice computations behind invariant Laurent monomial degree bounds";

    // Lives as long as the interpreter; the module keeps a reference too.
    static py::handle error_type = py::exception<Error>(m, "InvarLatticeError").release();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const Error& e) {
            const std::string code(to_string(e.code()));
            py::object exc = py::reinterpret_borrow<py::object>(error_type)(code + ": " + e.what());
            exc.attr("code") = code;
            PyErr_SetObject(error_type.ptr(), exc.ptr());
        }
    });

    py::class_<CharSupport>(m, "Support")
        .def(py::init(&make_support), py::arg("modulus") = py::none(), py::arg("factors") = py::none(),
             py::arg("chars"))
        .def_property_readonly("factors", [](const CharSupport& s) { return s.group().factor_orders(); })
        .def_property_readonly("group_order", [](const CharSupport& s) { return s.group().order(); })
        .def_property_readonly("chars",
                               [](const CharSupport& s) {
                                   std::vector<Vec> out;
                                   for (const Character& c : s.chars())
                                       out.push_back(c.residues());
                                   return out;
                               })
        .def_property_readonly("m", &CharSupport::size)
        .def_property_readonly("effective_order", [](const CharSupport& s) { return effective_order(s); })
        .def("__repr__", [](const CharSupport& s) { return "Support(" + s.group().describe() + ", " + s.describe() + ")"; })
        .def(py::self == py::self);

    m.def("gamma_rational", [](const CharSupport& s, std::uint64_t budget) { return gamma_rational(s, {budget}); },
          py::arg("support"), py::arg("budget") = default_point_budget);
    m.def("beta_rational", [](const CharSupport& s, std::uint64_t budget) { return beta_rational(s, {budget}); },
          py::arg("support"), py::arg("budget") = default_point_budget);
    m.def("gamma_poly", [](const CharSupport& s, std::uint64_t budget) { return gamma_poly(s, {budget}); },
          py::arg("support"), py::arg("budget") = default_point_budget);
    m.def("beta_poly", [](const CharSupport& s, std::uint64_t budget) { return beta_poly(s, {budget}); },
          py::arg("support"), py::arg("budget") = default_point_budget);
    m.def("successive_minima",
          [](const CharSupport& s, std::uint64_t budget) { return successive_minima(s, {budget}); },
          py::arg("support"), py::arg("budget") = default_point_budget);
    m.def("extension_index",
          [](const CharSupport& s, Int d, const std::string& g, std::uint64_t budget) {
              return index_value(extension_index(s, d, geometry_arg(g), {budget}));
          },
          py::arg("support"), py::arg("degree"), py::arg("geometry") = "cross",
          py::arg("budget") = default_point_budget, "Index of the degree-d span; math.inf when not full rank.");

    m.def("lattice_basis", [](const CharSupport& s) { return invariant_lattice(s).basis(); }, py::arg("support"));
    m.def("lattice_determinant", [](const CharSupport& s) { return *invariant_lattice(s).determinant(); },
          py::arg("support"));
    m.def("contains", [](const CharSupport& s, const Vec& a) { return invariant_lattice(s).contains(a); },
          py::arg("support"), py::arg("a"));
    m.def("shell_points",
          [](const CharSupport& s, Int d, const std::string& g, std::uint64_t budget) {
              return shell_points(invariant_lattice(s), d, geometry_arg(g), budget).points.points();
          },
          py::arg("support"), py::arg("degree"), py::arg("geometry") = "cross",
          py::arg("budget") = default_point_budget);

    m.def("monomial_string",
          [](const Vec& a, const std::vector<std::string>& names) { return monomial_string(a, names); },
          py::arg("a"), py::arg("names"));
    m.def("variable_names", &default_variable_names, py::arg("support"));
    m.def("witness_json",
          [](const CharSupport& s, Int d, const std::string& g, std::uint64_t budget) {
              const GeneratorCertificate c = generator_witness(s, d, geometry_arg(g), budget);
              return certificate_to_json(c, default_variable_names(s)).dump();
          },
          py::arg("support"), py::arg("degree"), py::arg("geometry") = "cross",
          py::arg("budget") = default_point_budget);

    m.def("report_json",
          [](const CharSupport& s, const std::string& mode, std::uint64_t budget, bool witnesses) {
              VerifyOptions opts;
              opts.mode = parse_mode(mode);
              opts.point_budget = budget;
              opts.witnesses = witnesses;
              BoundsReport r;
              {
                  py::gil_scoped_release release;
                  r = verify_all(s, opts);
              }
              return report_to_json(r).dump();
          },
          py::arg("support"), py::arg("mode") = "both", py::arg("budget") = default_point_budget,
          py::arg("witnesses") = true);

    m.def("family_support", &family_support, py::arg("n"), py::arg("m"));
    m.def("family_value", &family_value, py::arg("n"), py::arg("m"));
    m.def("root_lower_bound", &root_lower_bound, py::arg("effective_order"), py::arg("m"));
    m.def("hard_floor", &hard_floor, py::arg("support"));
    m.def("family_sweep",
          [](const std::string& n, const std::string& mm, unsigned workers) {
              std::vector<FamilyRow> rows;
              {
                  py::gil_scoped_release release;
                  rows = family_sweep(IntRange::parse(n), IntRange::parse(mm), workers);
              }
              py::list out;
              for (const FamilyRow& r : rows) {
                  py::dict d;
                  d["n"] = r.n;
                  d["m"] = r.m;
                  d["predicted"] = r.predicted;
                  d["computed_beta_r"] = r.beta_r;
                  d["computed_gamma_r"] = r.gamma_r;
                  d["match"] = r.match;
                  out.append(d);
              }
              return out;
          },
          py::arg("n"), py::arg("m"), py::arg("workers") = 1);

    m.attr("SCHEMA") = std::string(report_schema);
}
