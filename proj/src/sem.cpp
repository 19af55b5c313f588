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

#include "csszx/sem.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

namespace csszx {

// DenseMap ------------------------------------------------------------------

DenseMap::DenseMap(std::size_t num_outputs, std::size_t num_inputs) : out_(num_outputs), in_(num_inputs) {
    if (num_outputs + num_inputs > 40) throw std::length_error("DenseMap: too many wires");
    data_.assign(rows() * cols(), Amplitude{0.0, 0.0});
}

DenseMap DenseMap::identity(std::size_t wires) {
    DenseMap m(wires, wires);
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, i) = 1.0;
    return m;
}

namespace {

std::uint64_t msb_mask(const BitVec &bits) {
    std::uint64_t mask = 0;
    const auto n = bits.size();
    for (std::size_t q = 0; q < n; ++q) {
        if (bits.get(q)) mask |= std::uint64_t{1} << (n - 1 - q);
    }
    return mask;
}

int parity(std::uint64_t v) { return std::popcount(v) & 1; }

}  // namespace

DenseMap DenseMap::from_pauli(const PauliOperator &p) {
    return apply_pauli(p, identity(p.num_qubits()));
}

DenseMap DenseMap::column(std::vector<Amplitude> amplitudes) {
    auto n = static_cast<std::size_t>(std::countr_zero(amplitudes.size()));
    if (amplitudes.empty() || (std::size_t{1} << n) != amplitudes.size()) {
        throw std::invalid_argument("DenseMap::column: length must be a power of two");
    }
    DenseMap m(n, 0);
    m.data_ = std::move(amplitudes);
    return m;
}

double DenseMap::max_abs() const {
    double best = 0.0;
    for (const auto &a : data_) best = std::max(best, std::abs(a));
    return best;
}

std::size_t DenseMap::nonzero_count(double eps) const {
    return static_cast<std::size_t>(
        std::count_if(data_.begin(), data_.end(), [eps](const Amplitude &a) { return std::abs(a) > eps; }));
}

DenseMap DenseMap::adjoint() const {
    DenseMap m(in_, out_);
    for (std::size_t r = 0; r < rows(); ++r) {
        for (std::size_t c = 0; c < cols(); ++c) m.at(c, r) = std::conj(at(r, c));
    }
    m.sqrt2_exponent_ = sqrt2_exponent_;
    return m;
}

DenseMap operator*(const DenseMap &a, const DenseMap &b) {
    if (a.num_inputs() != b.num_outputs()) throw std::invalid_argument("DenseMap product: shape mismatch");
    DenseMap m(a.num_outputs(), b.num_inputs());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            auto x = a.at(r, j);
            if (x == Amplitude{}) continue;
            for (std::size_t c = 0; c < b.cols(); ++c) m.at(r, c) += x * b.at(j, c);
        }
    }
    m.set_sqrt2_exponent(a.sqrt2_exponent() + b.sqrt2_exponent());
    return m;
}

DenseMap kron(const DenseMap &a, const DenseMap &b) {
    DenseMap m(a.num_outputs() + b.num_outputs(), a.num_inputs() + b.num_inputs());
    for (std::size_t ra = 0; ra < a.rows(); ++ra) {
        for (std::size_t ca = 0; ca < a.cols(); ++ca) {
            auto x = a.at(ra, ca);
            if (x == Amplitude{}) continue;
            for (std::size_t rb = 0; rb < b.rows(); ++rb) {
                for (std::size_t cb = 0; cb < b.cols(); ++cb) {
                    m.at(ra * b.rows() + rb, ca * b.cols() + cb) = x * b.at(rb, cb);
                }
            }
        }
    }
    m.set_sqrt2_exponent(a.sqrt2_exponent() + b.sqrt2_exponent());
    return m;
}

DenseMap apply_pauli(const PauliOperator &p, const DenseMap &m) {
    if (p.num_qubits() != m.num_outputs()) throw std::invalid_argument("apply_pauli: qubit count mismatch");
    const auto xm = msb_mask(p.x());
    const auto zm = msb_mask(p.z());
    DenseMap out(m.num_outputs(), m.num_inputs());
    out.set_sqrt2_exponent(m.sqrt2_exponent());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        double s = p.sign() * (parity(zm & r) ? -1.0 : 1.0);
        for (std::size_t c = 0; c < m.cols(); ++c) out.at(r ^ xm, c) = s * m.at(r, c);
    }
    return out;
}

// evaluate ------------------------------------------------------------------

namespace {

struct FrontierKey {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    bool get(std::size_t slot) const { return ((slot < 64 ? lo : hi) >> (slot & 63)) & 1; }
    void set(std::size_t slot, bool value) {
        auto &w = slot < 64 ? lo : hi;
        auto bit = std::uint64_t{1} << (slot & 63);
        w = value ? (w | bit) : (w & ~bit);
    }
    friend bool operator==(const FrontierKey &, const FrontierKey &) = default;
};

struct FrontierHash {
    std::size_t operator()(const FrontierKey &k) const {
        std::uint64_t h = k.lo * 0x9E3779B97F4A7C15ULL;
        h ^= (k.hi + 0x632BE59BD9B4E019ULL) * 0xC2B2AE3D27D4EB4FULL;
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};

using Frontier = std::unordered_map<FrontierKey, Amplitude, FrontierHash>;

class Contraction {
   public:
    explicit Contraction(const ZxDiagram &d) : d_(d) {
        d.validate();
        if (d.inputs().size() + d.outputs().size() > kMaxBoundaryWires) {
            throw std::length_error("evaluate: more than 26 boundary wires");
        }
        for (const auto &[id, v] : d.vertices()) {
            if (v.kind != VertexKind::Boundary) spiders_.push_back(id);
        }
        frontier_.emplace(FrontierKey{}, Amplitude{1.0, 0.0});
        exponent_ = d.scalar_exponent();
        for (const auto &[e, edge] : d.edges()) {
            if (d.is_boundary(edge.a) && d.is_boundary(edge.b)) {
                auto slot = allocate(e);
                Frontier next;
                for (const auto &[key, amp] : frontier_) {
                    for (int bit = 0; bit < 2; ++bit) {
                        auto k = key;
                        k.set(slot, bit);
                        next[k] += amp;
                    }
                }
                frontier_ = std::move(next);
            }
        }
    }

    void run(const std::optional<std::vector<VertexId>> &order) {
        if (order) {
            std::vector<VertexId> sorted = *order;
            std::sort(sorted.begin(), sorted.end());
            if (sorted != spiders_) throw std::invalid_argument("evaluate: order must list every spider once");
            for (auto v : *order) process(v);
            return;
        }
        std::set<VertexId> pending(spiders_.begin(), spiders_.end());
        while (!pending.empty()) {
            // Smallest growth in stored entries first, then in open wires.
            VertexId best = *pending.begin();
            std::pair<long, long> best_cost{0, 0};
            long best_existing = -1;
            for (auto v : pending) {
                long existing = 0;
                long fresh = 0;
                for (auto e : d_.incident_edges(v)) {
                    if (d_.edge(e).is_self_loop()) continue;
                    if (slot_.count(e)) {
                        ++existing;
                    } else {
                        ++fresh;
                    }
                }
                long growth = 0;
                if (d_.vertex(v).kind == VertexKind::Z) {
                    growth = existing > 0 ? 0 : 1;
                } else {
                    growth = fresh > 0 ? fresh - 1 : (existing > 0 ? -1 : 0);
                }
                std::pair<long, long> cost{growth, fresh - existing};
                if (best_existing < 0 || cost < best_cost || (cost == best_cost && existing > best_existing)) {
                    best = v;
                    best_cost = cost;
                    best_existing = existing;
                }
            }
            pending.erase(best);
            process(best);
        }
    }

    DenseMap result() const {
        const auto &ins = d_.inputs();
        const auto &outs = d_.outputs();
        std::vector<std::size_t> in_slots, out_slots;
        for (auto p : ins) in_slots.push_back(slot_.at(d_.incident_edges(p).front()));
        for (auto p : outs) out_slots.push_back(slot_.at(d_.incident_edges(p).front()));
        DenseMap m(outs.size(), ins.size());
        for (const auto &[key, amp] : frontier_) {
            std::size_t row = 0;
            std::size_t col = 0;
            for (auto s : out_slots) row = (row << 1) | key.get(s);
            for (auto s : in_slots) col = (col << 1) | key.get(s);
            m.at(row, col) += amp;
        }
        m.set_sqrt2_exponent(exponent_);
        return m;
    }

   private:
    const ZxDiagram &d_;
    std::vector<VertexId> spiders_;
    Frontier frontier_;
    std::map<EdgeId, std::size_t> slot_;
    std::vector<std::size_t> free_slots_;
    std::size_t slots_used_ = 0;
    int exponent_ = 0;

    std::size_t allocate(EdgeId e) {
        std::size_t s;
        if (!free_slots_.empty()) {
            s = free_slots_.back();
            free_slots_.pop_back();
        } else {
            if (slots_used_ >= kMaxFrontier) throw std::length_error("evaluate: frontier exceeds 128 wires");
            s = slots_used_++;
        }
        slot_[e] = s;
        return s;
    }

    void release(EdgeId e) {
        free_slots_.push_back(slot_.at(e));
        slot_.erase(e);
    }

    void process(VertexId v) {
        const auto &vert = d_.vertex(v);
        std::vector<std::size_t> existing, fresh;
        std::vector<EdgeId> closing;
        std::size_t loops = 0;
        for (auto e : d_.incident_edges(v)) {
            if (d_.edge(e).is_self_loop()) {
                ++loops;
            } else if (auto it = slot_.find(e); it != slot_.end()) {
                existing.push_back(it->second);
                closing.push_back(e);
            }
        }
        // Wires opened here get slots distinct from the closing ones.
        std::vector<EdgeId> opened;
        for (auto e : d_.incident_edges(v)) {
            if (!d_.edge(e).is_self_loop() && std::find(closing.begin(), closing.end(), e) == closing.end()) {
                opened.push_back(e);
            }
        }
        for (auto e : opened) fresh.push_back(allocate(e));

        Frontier next;
        next.reserve(frontier_.size() * 2);
        if (vert.kind == VertexKind::Z) {
            for (const auto &[key, amp] : frontier_) {
                int lo = 0, hi = 1;
                if (!existing.empty()) {
                    bool first = key.get(existing.front());
                    bool ok = std::all_of(existing.begin(), existing.end(),
                                          [&](std::size_t s) { return key.get(s) == first; });
                    if (!ok) continue;
                    lo = hi = first ? 1 : 0;
                }
                for (int val = lo; val <= hi; ++val) {
                    auto k = key;
                    for (auto s : existing) k.set(s, false);
                    for (auto s : fresh) k.set(s, val);
                    next[k] += (vert.phase && val) ? -amp : amp;
                }
            }
        } else {
            const double loop_factor = std::ldexp(1.0, static_cast<int>(loops));
            const std::size_t t = fresh.size();
            for (const auto &[key, amp] : frontier_) {
                bool p = vert.phase;
                for (auto s : existing) p ^= key.get(s);
                auto base = key;
                for (auto s : existing) base.set(s, false);
                if (t == 0) {
                    if (!p) next[base] += amp * loop_factor;
                    continue;
                }
                for (std::uint64_t a = 0; a < (std::uint64_t{1} << (t - 1)); ++a) {
                    auto k = base;
                    bool last = p;
                    for (std::size_t i = 0; i + 1 < t; ++i) {
                        bool b = (a >> i) & 1;
                        k.set(fresh[i], b);
                        last ^= b;
                    }
                    k.set(fresh[t - 1], last);
                    next[k] += amp * loop_factor;
                }
            }
            exponent_ += 2 - static_cast<int>(d_.degree(v));
        }
        for (auto e : closing) release(e);
        for (auto it = next.begin(); it != next.end();) {
            it = (it->second == Amplitude{}) ? next.erase(it) : std::next(it);
        }
        frontier_ = std::move(next);
    }
};

}  // namespace

DenseMap evaluate(const ZxDiagram &d, const std::optional<std::vector<VertexId>> &order) {
    Contraction c(d);
    c.run(order);
    return c.result();
}

DenseMap encoder_oracle(const CssCode &code) {
    const auto n = code.n();
    const auto k = code.k();
    const auto &g = code.x_stabilizers();
    if (n > 20 || g.rows() + k > 20) throw std::length_error("encoder_oracle: code too large");
    std::vector<std::uint64_t> grows, lrows;
    for (std::size_t i = 0; i < g.rows(); ++i) grows.push_back(msb_mask(g.row(i)));
    for (std::size_t i = 0; i < k; ++i) lrows.push_back(msb_mask(code.x_logicals().row(i)));
    DenseMap m(n, k);
    for (std::size_t a = 0; a < m.cols(); ++a) {
        std::uint64_t v = 0;
        for (std::size_t j = 0; j < k; ++j) {
            if ((a >> (k - 1 - j)) & 1) v ^= lrows[j];
        }
        // Gray-code walk over the coset.
        m.at(v, a) += 1.0;
        for (std::uint64_t u = 1; u < (std::uint64_t{1} << grows.size()); ++u) {
            v ^= grows[std::countr_zero(u)];
            m.at(v, a) += 1.0;
        }
    }
    return m;
}

bool equal_up_to_scalar(const DenseMap &a, const DenseMap &b, double tol) {
    if (a.num_inputs() != b.num_inputs() || a.num_outputs() != b.num_outputs()) {
        throw std::invalid_argument("equal_up_to_scalar: shape mismatch");
    }
    const double na = a.max_abs();
    const double nb = b.max_abs();
    if (na == 0.0 || nb == 0.0) return na == nb;
    std::size_t pivot = 0;
    for (std::size_t i = 0; i < b.data().size(); ++i) {
        if (std::abs(b.data()[i]) > std::abs(b.data()[pivot])) pivot = i;
    }
    const Amplitude c = (a.data()[pivot] / na) / (b.data()[pivot] / nb);
    if (std::abs(c) <= tol) return false;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        if (std::abs(a.data()[i] / na - c * (b.data()[i] / nb)) > tol) return false;
    }
    return true;
}

bool is_isometry(const DenseMap &a, double tol) {
    if (a.rows() < a.cols()) return false;
    const auto cols = a.cols();
    std::vector<Amplitude> gram(cols * cols);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t i = 0; i < cols; ++i) {
            auto x = std::conj(a.at(r, i));
            if (x == Amplitude{}) continue;
            for (std::size_t j = 0; j < cols; ++j) gram[i * cols + j] += x * a.at(r, j);
        }
    }
    const double scale = gram[0].real();
    if (!(scale > 0.0)) return false;
    for (std::size_t i = 0; i < cols; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            Amplitude want = i == j ? Amplitude{scale} : Amplitude{};
            if (std::abs(gram[i * cols + j] - want) > tol * scale) return false;
        }
    }
    return true;
}

bool stabilizes(const PauliOperator &p, const DenseMap &m, double tol) {
    auto pm = apply_pauli(p, m);
    const double scale = std::max(m.max_abs(), 1e-300);
    for (std::size_t i = 0; i < m.data().size(); ++i) {
        if (std::abs(pm.data()[i] - m.data()[i]) > tol * scale) return false;
    }
    return true;
}

std::string dense_to_json(const DenseMap &m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row.push_back({{"re", m.at(r, c).real()}, {"im", m.at(r, c).imag()}});
        }
        rows.push_back(std::move(row));
    }
    return rows.dump();
}

}  // namespace csszx
