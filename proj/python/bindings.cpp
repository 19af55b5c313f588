// Copyright 2026 The csszx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "csszx/io.hpp"
#include "csszx/nf.hpp"
#include "csszx/rewrite.hpp"
#include "csszx/sem.hpp"
#include "csszx/xform.hpp"

namespace py = pybind11;
using namespace csszx;

namespace {

PauliKind parse_basis(const std::string &b) {
    if (b == "X" || b == "x") return PauliKind::X;
    if (b == "Z" || b == "z") return PauliKind::Z;
    throw std::invalid_argument("basis must be 'X' or 'Z'");
}

std::vector<std::size_t> zero_based(const std::vector<std::size_t> &subset) {
    std::vector<std::size_t> out;
    for (auto q : subset) {
        if (q == 0) throw std::out_of_range("qubit indices are 1-based");
        out.push_back(q - 1);
    }
    return out;
}

py::array_t<std::complex<double>> to_numpy(const DenseMap &m) {
    py::array_t<std::complex<double>> out({m.rows(), m.cols()});
    auto view = out.mutable_unchecked<2>();
    const double scale = std::pow(2.0, m.sqrt2_exponent() / 2.0);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) view(r, c) = m.at(r, c) * scale;
    return out;
}

ZxDiagram normal_form(const std::string &name, const std::string &form) {
    if (form == "subsystem") return subsystem_zx_normal_form(catalog_subsystem(name));
    auto code = catalog_css(name);
    if (form == "zx") return zx_normal_form(code);
    if (form == "xz") return xz_normal_form(code);
    throw std::invalid_argument("form must be 'zx', 'xz' or 'subsystem'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Native core of csszx";

    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
    py::register_exception<VerificationError>(m, "VerificationError", PyExc_RuntimeError);

    m.def("catalog_names", &catalog_names);
    m.def("code_json", [](const std::string &name) {
        return std::visit([](const auto &c) { return code_to_json(c).dump(); }, catalog(name));
    });
    m.def("parameters", [](const std::string &name) {
        auto c = catalog_css(name);
        return py::make_tuple(c.n(), c.k(), distance(c));
    });
    m.def("normal_form_json", [](const std::string &name, const std::string &form) {
        return diagram_to_json(normal_form(name, form)).dump();
    }, py::arg("name"), py::arg("form") = "zx");
    m.def("evaluate_normal_form", [](const std::string &name, const std::string &form) {
        return to_numpy(evaluate(normal_form(name, form)));
    }, py::arg("name"), py::arg("form") = "zx");
    m.def("encoder_oracle", [](const std::string &name) { return to_numpy(encoder_oracle(catalog_css(name))); });
    m.def("morph_json", [](const std::string &name, const std::vector<std::size_t> &subset) {
        return morph_to_json(morph(catalog_css(name), zero_based(subset))).dump();
    });
    m.def("gauge_fix_json", [](const std::string &basis, const std::string &outcomes) {
        return gauge_fix_to_json(gauge_fix(catalog_subsystem("sub15"), parse_basis(basis), BitVec::from_string(outcomes)))
            .dump();
    });
    m.def("switch_json", [](const std::string &from, const std::string &to) {
        return switch_to_json(switch_code(from, to)).dump();
    });
    m.def("check_rules", [](std::size_t samples, std::uint64_t seed) {
        py::list out;
        for (const auto &c : check_rules(samples, seed)) {
            out.append(py::make_tuple(std::string(rule_name(c.rule)), c.samples, c.passed, c.nonzero));
        }
        return out;
    }, py::arg("samples") = 50, py::arg("seed") = 1);
}
