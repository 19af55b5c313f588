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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "csszx/f2.hpp"
#include "csszx/pauli.hpp"

namespace csszx {

/// Raised when matrices do not describe a valid (subsystem) CSS code.
class CodeError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Optional user-chosen logical representatives.
///
/// With only one side given, the other side is the canonical dual basis. With
/// both sides given and an invertible (non-identity) pairing matrix, the Z side
/// is re-paired by row operations so that Lx * Lz^T = I.
struct LogicalSeed {
    std::optional<BinaryMatrix> x;
    std::optional<BinaryMatrix> z;
};

/// CSS stabilizer code <G^X, H^Z> with paired logical representatives.
class CssCode {
   public:
    CssCode() = default;

    std::size_t n() const { return n_; }
    std::size_t k() const { return lx_.rows(); }
    const BinaryMatrix &x_stabilizers() const { return g_; }
    const BinaryMatrix &z_stabilizers() const { return h_; }
    const BinaryMatrix &x_logicals() const { return lx_; }
    const BinaryMatrix &z_logicals() const { return lz_; }
    const std::string &name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    /// All stabilizer generators, X-type first.
    std::vector<PauliOperator> stabilizer_generators() const;

   private:
    friend CssCode new_css(std::size_t, const BinaryMatrix &, const BinaryMatrix &, const LogicalSeed &,
                           std::string);
    std::size_t n_ = 0;
    BinaryMatrix g_, h_, lx_, lz_;
    std::string name_;
};

/// Validates and canonicalizes a CSS code. Redundant stabilizer rows are dropped
/// (first occurrences kept, order preserved). Throws CodeError.
CssCode new_css(std::size_t n, const BinaryMatrix &g, const BinaryMatrix &h, const LogicalSeed &seed = {},
                std::string name = "");

struct LogicalPair {
    BinaryMatrix x;
    BinaryMatrix z;
};

/// Canonical logical bases: Lx spans ker(H) mod row-space(G), Lz is the dual
/// basis in ker(G) reduced modulo row-space(H), so Lx * Lz^T = I.
LogicalPair compute_logicals(const BinaryMatrix &g, const BinaryMatrix &h);

/// Rows z with [g; lx] z^T = (0, e_j), reduced modulo row-space(h).
BinaryMatrix dual_logicals(const BinaryMatrix &g, const BinaryMatrix &lx, const BinaryMatrix &h);

struct DistanceBreakdown {
    std::size_t x = 0;  ///< min weight of a nontrivial X-type logical
    std::size_t z = 0;
    std::size_t overall() const { return x < z ? x : z; }
};

/// Log2 of the enumeration budget accepted by distance().
inline constexpr std::size_t kDistanceBudgetLog2 = 26;

/// Brute-force CSS distance min(d_X, d_Z). Returns 0 when k = 0. Throws
/// std::length_error when 2^(m_x+k) + 2^(m_z+k) exceeds 2^26.
std::size_t distance(const CssCode &code);
DistanceBreakdown distance_breakdown(const CssCode &code);

struct SupportedStabilizers {
    BinaryMatrix x;
    BinaryMatrix z;
};

/// Basis of the stabilizer subgroup whose elements are supported on `subset`
/// (0-based qubit indices), in reduced row-echelon form.
SupportedStabilizers stabilizers_supported_on(const CssCode &code, const std::vector<std::size_t> &subset);

/// CSS subsystem code (S, G) with canonically paired gauge operators.
class SubsystemCssCode {
   public:
    SubsystemCssCode() = default;

    std::size_t n() const { return n_; }
    std::size_t k() const { return lx_.rows(); }
    std::size_t r() const { return gx_.rows(); }
    const BinaryMatrix &x_stabilizers() const { return sx_; }
    const BinaryMatrix &z_stabilizers() const { return sz_; }
    /// Gauge pairs: row i of x_gauges() anticommutes only with row i of z_gauges().
    const BinaryMatrix &x_gauges() const { return gx_; }
    const BinaryMatrix &z_gauges() const { return gz_; }
    const BinaryMatrix &x_logicals() const { return lx_; }
    const BinaryMatrix &z_logicals() const { return lz_; }
    const std::string &name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    /// Stabilizer code obtained by promoting the `kind` gauge rows into the stabilizer group.
    CssCode gauge_fixed(PauliKind kind) const;
    /// Stabilizer code with the same stabilizers and logicals [Lx; Gx], [Lz; Gz].
    CssCode as_stabilizer_code() const;

   private:
    friend SubsystemCssCode new_subsystem(std::size_t, const BinaryMatrix &, const BinaryMatrix &,
                                          const BinaryMatrix &, const BinaryMatrix &, const LogicalSeed &,
                                          std::string);
    std::size_t n_ = 0;
    BinaryMatrix sx_, sz_, gx_, gz_, lx_, lz_;
    std::string name_;
};

/// Validates and canonicalizes a subsystem code: gauge rows are reduced modulo
/// stabilizers and the Z gauge rows are recombined so that Gx * Gz^T = I.
/// Throws CodeError when the pairing matrix is singular.
SubsystemCssCode new_subsystem(std::size_t n, const BinaryMatrix &sx, const BinaryMatrix &sz,
                               const BinaryMatrix &gx_raw, const BinaryMatrix &gz_raw, const LogicalSeed &seed = {},
                               std::string name = "");

/// "⟦n,k⟧" or "⟦n,k,d⟧".
std::string parameters_string(const CssCode &code, std::optional<std::size_t> d = std::nullopt);

// Catalog -------------------------------------------------------------------

using CatalogEntry = std::variant<CssCode, SubsystemCssCode>;

/// Names known to catalog(): steane, ext_steane, qrm15, sub15, int15, c422.
std::vector<std::string> catalog_names();
/// Throws std::out_of_range for unknown names.
CatalogEntry catalog(std::string_view name);
/// The named entry as a stabilizer code; throws for subsystem entries.
CssCode catalog_css(std::string_view name);
SubsystemCssCode catalog_subsystem(std::string_view name);

/// Steane matrix G (3 x 7).
BinaryMatrix steane_matrix();
/// The 15-qubit building blocks F (4 x 15), H (3 x 15) and J (3 x 15).
BinaryMatrix rm_f_matrix();
BinaryMatrix rm_h_matrix();
BinaryMatrix rm_j_matrix();

}  // namespace csszx
