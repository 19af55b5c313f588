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

#pragma once

#include <vector>

#include "csszx/code.hpp"
#include "csszx/zx.hpp"

namespace csszx {

/// Which side of the code a normal form is built from. Zx uses the X-type
/// stabilizers and logicals (X spiders on the physical wires), Xz the Z-type ones.
enum class NormalFormSide { Zx, Xz };

/// Spider ids of a freshly built normal form.
struct NormalFormLayout {
    std::vector<VertexId> qubits;       ///< one per physical qubit, in qubit order
    std::vector<VertexId> stabilizers;  ///< one per stabilizer row
    std::vector<VertexId> logicals;     ///< one per logical row, each with an input
    std::vector<VertexId> gauges;       ///< one per gauge row (subsystem forms only)
};

struct NormalForm {
    ZxDiagram diagram;
    NormalFormLayout layout;
};

/// The unsimplified normal form with its layout. Inputs follow the logical row
/// order; outputs follow qubit order.
NormalForm build_normal_form(const CssCode &code, NormalFormSide side);

/// Normal forms with trivial input-to-output chains collapsed into bare wires.
ZxDiagram zx_normal_form(const CssCode &code);
ZxDiagram xz_normal_form(const CssCode &code);

enum class GaugeMode { OpenWires, State };

/// How the gauge spiders of a subsystem normal form are terminated. With
/// OpenWires each gauge spider gets an input placed after the logical inputs;
/// with State the gauge inputs are capped by `states` (|+> for every gauge
/// qubit when left empty).
struct GaugeBoundary {
    GaugeMode mode = GaugeMode::OpenWires;
    std::vector<BasisState> states;
};

NormalForm build_subsystem_normal_form(const SubsystemCssCode &code, NormalFormSide side,
                                       const GaugeBoundary &gauge = {});
ZxDiagram subsystem_zx_normal_form(const SubsystemCssCode &code, const GaugeBoundary &gauge = {});
ZxDiagram subsystem_xz_normal_form(const SubsystemCssCode &code, const GaugeBoundary &gauge = {});

/// Rows of a normal-form-shaped diagram: `kind` is the color of the qubit
/// spiders, `stabilizers` the rows of input-free row spiders (id order) and
/// `logicals` the rows carrying inputs (input order). Throws DiagramError.
struct NormalFormRows {
    VertexKind kind = VertexKind::X;
    std::size_t n = 0;
    BinaryMatrix stabilizers;
    BinaryMatrix logicals;
};
NormalFormRows read_normal_form_rows(const ZxDiagram &d);

/// Reads a code back from a normal-form-shaped diagram. The side is detected
/// from the color of the spiders on the outputs; the missing stabilizer side is
/// completed as the kernel of the stacked stabilizer and logical rows. Bare
/// input-to-output wires become weight-one logicals. Throws DiagramError on a
/// shape violation.
///
/// When the input rows are dependent modulo the stabilizer rows the diagram is
/// not an isometry. The code then keeps one logical qubit per input: the row
/// span is padded with unit vectors (lowest qubit first) up to the full count
/// before taking the kernel, and the logicals are canonical. `is_encoder`
/// reports which case applied.
CssCode code_from_normal_form(const ZxDiagram &d, std::string name = "", bool *is_encoder = nullptr);

}  // namespace csszx
