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

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "csszx/code.hpp"
#include "csszx/nf.hpp"
#include "csszx/pauli.hpp"
#include "csszx/rewrite.hpp"
#include "csszx/sem.hpp"
#include "csszx/zx.hpp"

namespace csszx {

/// Raised when a transformation's dense self-check fails.
class VerificationError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

// Push-through --------------------------------------------------------------

/// Physical implementation of logical X_i / Z_i (i is 1-based): the i-th
/// logical row as a transversal Pauli.
PauliOperator transversal_pauli(const CssCode &code, PauliKind which, std::size_t i);

enum class PrimitiveType { PauliX, PauliZ, ZSpiderGadget, XSpiderGadget };

/// One primitive of a logical layer. `wires` are 1-based logical indices; a
/// gadget is a single phase-free spider on those wires with `external_legs`
/// further legs, which become extra inputs of the layer.
struct LayerPrimitive {
    PrimitiveType type = PrimitiveType::PauliX;
    std::vector<std::size_t> wires;
    std::size_t external_legs = 1;
};

struct LogicalLayer {
    std::vector<LayerPrimitive> ops;

    /// Parses "X:1;Z:2;ZS:1,2;XS:1#2" where "#e" sets the external leg count.
    static LogicalLayer parse(std::string_view text);
    std::string str() const;
    std::size_t external_legs() const;
    /// Throws std::out_of_range when a wire index is outside 1..k.
    void validate(std::size_t k) const;
};

/// The layer as a diagram on k logical wires; external legs are inputs placed
/// after the k logical inputs, in primitive order.
ZxDiagram logical_layer_diagram(const LogicalLayer &layer, std::size_t k);

/// Physical diagram P on n wires with E o L = P o E up to scalar, where E is the
/// ZX normal form. External legs follow the n physical inputs. The identity is
/// checked densely and a VerificationError thrown on failure.
ZxDiagram push_through(const CssCode &code, const LogicalLayer &layer, double tol = 1e-9);
/// Dense comparison of E o L with P o E.
bool verify_push_through(const CssCode &code, const LogicalLayer &layer, const ZxDiagram &physical,
                         double tol = 1e-9);

// Morphing ------------------------------------------------------------------

class MorphError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

struct MorphResult {
    CssCode child;
    CssCode morphed;
    /// 0-based qubits of the child side, increasing.
    std::vector<std::size_t> subset;
    /// Unfused spider id of the parent normal form -> 0-based qubit index of the
    /// new qubit in the morphed code.
    std::map<VertexId, std::size_t> new_qubit_map;
    /// Output j of (I (x) E_child) o E_morphed is parent qubit permutation[j].
    std::vector<std::size_t> permutation;
    std::vector<RewriteStep> trace;
    ZxDiagram child_diagram;
    ZxDiagram morphed_diagram;
    /// False when the cut rows are dependent modulo the child's stabilizers, so
    /// the child diagram is not the child code's encoder.
    bool child_is_encoder = true;
    bool verified = false;
};

struct MorphOptions {
    NormalFormSide side = NormalFormSide::Zx;
    bool verify = true;
    double tol = 1e-9;
};

/// Splits the normal form of `code` along `subset` (0-based qubits): every row
/// spider touching both sides is unfused and an identity spider (the new
/// qubit) is inserted on the joining edge, whose far half joins the child.
/// Logical inputs count as legs outside the subset.
MorphResult morph(const CssCode &code, const std::vector<std::size_t> &subset, const MorphOptions &options = {});

/// Dense check of the split E_code = sigma o (I (x) D_child) o D_morphed and,
/// when the child diagram is an encoder, of the same identity with the normal
/// forms of the extracted codes.
bool verify_morph(const CssCode &code, const MorphResult &result, double tol = 1e-9);

/// First morph subset (in lexicographic order of 0-based subsets of the given
/// size) whose child and morphed codes have the requested parameters and whose
/// child diagram is an encoder.
struct MorphTarget {
    std::size_t subset_size = 0;
    std::size_t child_k = 0;
    std::size_t child_d = 0;
    std::size_t morphed_n = 0;
    std::size_t morphed_k = 0;
    std::size_t morphed_d = 0;
};
std::optional<MorphResult> find_morph_subset(const CssCode &code, const MorphTarget &target, double tol = 1e-9);

// Gauge fixing and switching -----------------------------------------------

/// Pauli operator as a diagram of pi spiders (Z before X on each wire).
ZxDiagram pauli_diagram(const PauliOperator &p);

/// Product of the opposite-basis partners of the gauge rows with outcome 1.
PauliOperator gauge_recovery(const SubsystemCssCode &code, PauliKind basis, const BitVec &outcomes);

/// gauge_recovery followed by the chosen-basis projectors as one diagram on n wires.
ZxDiagram gauge_correction_diagram(const SubsystemCssCode &code, PauliKind basis, const BitVec &outcomes);

struct GaugeFixResult {
    CssCode fixed_code;
    PauliOperator recovery;
    BitVec outcomes;
    PauliKind basis = PauliKind::X;
    bool verified = false;
    /// Gauge inputs g (as integers, gauge qubit 1 most significant) for which
    /// this outcome has nonzero amplitude.
    std::vector<std::size_t> nonzero_inputs;
    std::vector<std::string> trace;
};

/// Fixes the `basis` gauge rows; verification runs over every computational
/// gauge input state. Throws std::invalid_argument on an outcome length mismatch.
GaugeFixResult gauge_fix(const SubsystemCssCode &code, PauliKind basis, const BitVec &outcomes, double tol = 1e-9);

struct GaugeGridReport {
    PauliKind basis = PauliKind::X;
    std::size_t checked = 0;
    std::size_t nonzero = 0;
    bool all_verified = true;
    /// For each gauge input, the number of nonzero outcome strings.
    std::vector<std::size_t> nonzero_per_input;
    std::vector<std::string> failures;
};

/// Every gauge input state against every outcome string, spread over
/// worker_count() threads. Each capped normal form is evaluated once; the
/// projectors and recovery are then applied densely.
GaugeGridReport gauge_fix_grid(const SubsystemCssCode &code, PauliKind basis, double tol = 1e-9);

struct SwitchStep {
    PauliOperator measured;
    PauliOperator recovery;
    PauliOperator removed;
    CssCode before;
    CssCode after;
    bool verified = false;
};

struct SwitchResult {
    std::string from;
    std::string to;
    std::vector<SwitchStep> steps;
    CssCode final_code;
    bool reached_target = false;
    bool verified = false;
};

/// Switches between the two gauge-fixed codes of sub15 by measuring the
/// complementary gauge rows one at a time. Each step is verified for both
/// outcomes. `from` and `to` are catalog names among qrm15 and ext_steane.
SwitchResult switch_code(std::string_view from, std::string_view to, double tol = 1e-9);

// Factorization -------------------------------------------------------------

struct EtaResult {
    /// 0-based qubits carrying the smaller code and the eta state.
    std::vector<std::size_t> code_part;
    std::vector<std::size_t> eta_part;
    DenseMap eta;
    std::size_t eta_nonzero = 0;
    bool equal_magnitudes = false;
    bool verified = false;
};

/// Finds a partition with E_ext = sigma o (E_small (x) |eta>), where |eta> pairs
/// one qubit with a logical state of the small code on the remaining ones.
EtaResult eta_factorization(const CssCode &ext, const CssCode &small, double tol = 1e-9);

/// The eta state as a diagram: the small code's normal form with its input bent
/// into an output placed first.
ZxDiagram eta_state_diagram(const CssCode &small);

/// Worker threads used by the verification grids: CSSZX_WORKERS or 1.
std::size_t worker_count();

}  // namespace csszx
