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

#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "csszx/io.hpp"
#include "csszx/nf.hpp"
#include "csszx/rewrite.hpp"
#include "csszx/sem.hpp"
#include "csszx/xform.hpp"

namespace csszx::cli {

namespace {

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

CatalogEntry load_code(const std::string &spec) {
    for (const auto &name : catalog_names()) {
        if (name == spec) return catalog(name);
    }
    if (!std::filesystem::exists(spec)) {
        std::string known;
        for (const auto &name : catalog_names()) known += " " + name;
        throw UsageError("unknown code '" + spec + "' (catalog:" + known + ", or a JSON file)");
    }
    std::ifstream in(spec);
    std::stringstream text;
    text << in.rdbuf();
    return code_from_json(parse_json(text.str()));
}

CssCode load_css(const std::string &spec) {
    auto entry = load_code(spec);
    if (auto *css = std::get_if<CssCode>(&entry)) return *css;
    throw UsageError("'" + spec + "' is a subsystem code; this command needs a stabilizer code");
}

SubsystemCssCode load_subsystem(const std::string &spec) {
    auto entry = load_code(spec);
    if (auto *sub = std::get_if<SubsystemCssCode>(&entry)) return *sub;
    throw UsageError("'" + spec + "' is a stabilizer code; this command needs a subsystem code");
}

void write_text(const std::string &path, const std::string &text, std::ostream &out) {
    if (path == "-") {
        out << text;
        if (!text.empty() && text.back() != '\n') out << '\n';
        return;
    }
    std::ofstream file(path);
    if (!file) throw UsageError("cannot write '" + path + "'");
    file << text;
    if (!text.empty() && text.back() != '\n') file << '\n';
}

std::string join(const std::vector<std::size_t> &v, std::size_t offset = 1) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i] + offset);
    }
    return s;
}

std::vector<std::size_t> parse_subset(const std::string &text) {
    std::vector<std::size_t> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
            throw UsageError("subset entries must be positive integers, got '" + item + "'");
        }
        auto q = std::stoul(item);
        if (q == 0) throw UsageError("qubit indices are 1-based");
        out.push_back(q - 1);
    }
    return out;
}

PauliKind parse_basis(const std::string &text) {
    if (text == "X" || text == "x") return PauliKind::X;
    if (text == "Z" || text == "z") return PauliKind::Z;
    throw UsageError("basis must be X or Z");
}

void print_rows(std::ostream &out, const char *label, PauliKind kind, const BinaryMatrix &rows) {
    out << label << " (" << rows.rows() << "):\n";
    for (std::size_t i = 0; i < rows.rows(); ++i) {
        out << "  " << rows.row(i).to_string() << "  " << PauliOperator::from_bits(kind, rows.row(i)).str() << '\n';
    }
}

void describe(std::ostream &out, const CssCode &code, bool with_distance) {
    std::optional<std::size_t> d;
    if (with_distance) d = distance(code);
    out << (code.name().empty() ? "code" : code.name()) << ' ' << parameters_string(code, d) << '\n';
    print_rows(out, "X stabilizers", PauliKind::X, code.x_stabilizers());
    print_rows(out, "Z stabilizers", PauliKind::Z, code.z_stabilizers());
    print_rows(out, "X logicals", PauliKind::X, code.x_logicals());
    print_rows(out, "Z logicals", PauliKind::Z, code.z_logicals());
}

void describe(std::ostream &out, const SubsystemCssCode &code, bool with_distance) {
    out << code.name() << " n=" << code.n() << " k=" << code.k() << " r=" << code.r();
    if (with_distance) out << " d=" << distance(code.gauge_fixed(PauliKind::X)) << " (X-fixed)";
    out << '\n';
    print_rows(out, "X stabilizers", PauliKind::X, code.x_stabilizers());
    print_rows(out, "Z stabilizers", PauliKind::Z, code.z_stabilizers());
    print_rows(out, "X gauges", PauliKind::X, code.x_gauges());
    print_rows(out, "Z gauges", PauliKind::Z, code.z_gauges());
    print_rows(out, "X logicals", PauliKind::X, code.x_logicals());
    print_rows(out, "Z logicals", PauliKind::Z, code.z_logicals());
}

/// Catalog name of a stabilizer code with the same stabilizer group, if any.
std::string catalog_match(const CssCode &code) {
    for (const auto &name : catalog_names()) {
        auto entry = catalog(name);
        auto *css = std::get_if<CssCode>(&entry);
        if (!css || css->n() != code.n()) continue;
        if (row_space_equal(css->x_stabilizers(), code.x_stabilizers()) &&
            row_space_equal(css->z_stabilizers(), code.z_stabilizers())) {
            return name;
        }
    }
    return "";
}

std::string diagram_summary(const ZxDiagram &d) {
    std::ostringstream s;
    s << d.inputs().size() << " inputs, " << d.outputs().size() << " outputs, " << d.count_spiders(VertexKind::Z)
      << " Z spiders, " << d.count_spiders(VertexKind::X) << " X spiders, " << d.edges().size() << " edges";
    return s.str();
}

/// Collects PASS/FAIL lines and the names of failing identities.
class Report {
   public:
    explicit Report(std::ostream &out) : out_(out) {}

    void check(bool ok, const std::string &what) {
        out_ << (ok ? "PASS " : "FAIL ") << what << '\n';
        if (!ok) failed_.push_back(what);
    }

    int finish() {
        if (failed_.empty()) {
            out_ << "PASS\n";
            return kExitPass;
        }
        out_ << "FAIL:";
        for (std::size_t i = 0; i < failed_.size(); ++i) out_ << (i ? "; " : " ") << failed_[i];
        out_ << '\n';
        return kExitFail;
    }

   private:
    std::ostream &out_;
    std::vector<std::string> failed_;
};

bool stabilizes_all(const std::vector<PauliOperator> &ops, const DenseMap &m, double tol) {
    return std::all_of(ops.begin(), ops.end(), [&](const PauliOperator &p) { return stabilizes(p, m, tol); });
}

int verify_css(const CssCode &code, double tol, std::ostream &out) {
    Report report(out);
    const auto oracle = encoder_oracle(code);
    const auto zx = evaluate(zx_normal_form(code));
    report.check(equal_up_to_scalar(zx, oracle, tol), "ZX normal form = encoder oracle");
    report.check(equal_up_to_scalar(evaluate(xz_normal_form(code)), oracle, tol), "XZ normal form = encoder oracle");
    report.check(is_isometry(zx, tol), "encoder is an isometry");
    report.check(stabilizes_all(code.stabilizer_generators(), zx, tol), "stabilizers fix the encoder image");
    for (std::size_t i = 1; i <= code.k(); ++i) {
        for (auto kind : {PauliKind::X, PauliKind::Z}) {
            std::string op = std::string(1, to_char(kind)) + ":" + std::to_string(i);
            auto layer = LogicalLayer::parse(op);
            bool ok = false;
            try {
                ok = verify_push_through(code, layer, push_through(code, layer, tol), tol);
            } catch (const VerificationError &) {
            }
            report.check(ok, "logical " + op + " pushes to " + transversal_pauli(code, kind, i).str());
        }
    }
    return report.finish();
}

int verify_subsystem(const SubsystemCssCode &code, double tol, std::ostream &out) {
    Report report(out);
    const auto open = evaluate(subsystem_zx_normal_form(code));
    report.check(is_isometry(open, tol), "open-gauge normal form is an isometry");
    report.check(equal_up_to_scalar(open, encoder_oracle(code.as_stabilizer_code()), tol),
                 "open-gauge normal form = encoder oracle of the gauge-extended code");
    std::vector<PauliOperator> stabs;
    for (std::size_t i = 0; i < code.x_stabilizers().rows(); ++i) {
        stabs.push_back(PauliOperator::from_bits(PauliKind::X, code.x_stabilizers().row(i)));
    }
    for (std::size_t i = 0; i < code.z_stabilizers().rows(); ++i) {
        stabs.push_back(PauliOperator::from_bits(PauliKind::Z, code.z_stabilizers().row(i)));
    }
    report.check(stabilizes_all(stabs, open, tol), "stabilizers fix the encoder image");
    const std::vector<BasisState> plus(code.r(), BasisState::Plus);
    const std::vector<BasisState> zero(code.r(), BasisState::Zero);
    auto capped_plus = evaluate(subsystem_zx_normal_form(code, {GaugeMode::State, plus}));
    auto capped_zero = evaluate(subsystem_zx_normal_form(code, {GaugeMode::State, zero}));
    report.check(equal_up_to_scalar(capped_plus, encoder_oracle(code.gauge_fixed(PauliKind::X)), tol),
                 "gauge wires in |+...+> give the X-fixed code");
    report.check(equal_up_to_scalar(capped_zero, encoder_oracle(code.gauge_fixed(PauliKind::Z)), tol),
                 "gauge wires in |0...0> give the Z-fixed code");
    return report.finish();
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Phase-free ZX tools for CSS codes", "csszx"};
    app.require_subcommand(1);
    double tol = 1e-9;
    app.add_option("--tol", tol, "Tolerance for equality up to scalar")->check(CLI::PositiveNumber);

    auto *code_cmd = app.add_subcommand("code", "Inspect catalog codes and code files");
    code_cmd->require_subcommand(1);
    auto *code_list = code_cmd->add_subcommand("list", "List the catalog");
    auto *code_show = code_cmd->add_subcommand("show", "Print a code's matrices");
    std::string show_code;
    bool show_distance = false;
    std::string show_json;
    code_show->add_option("code", show_code, "Catalog name or JSON file")->required();
    code_show->add_flag("--distance", show_distance, "Compute the distance by enumeration");
    code_show->add_option("--json", show_json, "Write the code as JSON ('-' for stdout)");

    auto *nf_cmd = app.add_subcommand("nf", "Build a normal form");
    std::string nf_code, nf_form = "zx", nf_gauge = "open", nf_dot, nf_json;
    nf_cmd->add_option("code", nf_code, "Catalog name or JSON file")->required();
    nf_cmd->add_option("--form", nf_form, "zx, xz or subsystem")
        ->check(CLI::IsMember({"zx", "xz", "subsystem"}));
    nf_cmd->add_option("--gauge", nf_gauge, "Subsystem gauge wires: open, plus or zero")
        ->check(CLI::IsMember({"open", "plus", "zero"}));
    nf_cmd->add_option("--dot", nf_dot, "Write Graphviz text ('-' for stdout)");
    nf_cmd->add_option("--json", nf_json, "Write diagram JSON ('-' for stdout)");

    auto *verify_cmd = app.add_subcommand("verify", "Check normal forms, isometry and transversal Paulis");
    std::string verify_code;
    verify_cmd->add_option("code", verify_code, "Catalog name or JSON file")->required();

    auto *push_cmd = app.add_subcommand("push", "Push a logical layer through the encoder");
    std::string push_code, push_op, push_dot, push_json;
    push_cmd->add_option("code", push_code, "Catalog name or JSON file")->required();
    push_cmd->add_option("--op", push_op, "Layer such as \"X:1;Z:2;ZS:1,2;XS:1#2\"")->required();
    push_cmd->add_option("--dot", push_dot, "Write the physical diagram as Graphviz text");
    push_cmd->add_option("--json", push_json, "Write the physical diagram as JSON");

    auto *morph_cmd = app.add_subcommand("morph", "Split a code along a qubit subset");
    std::string morph_code, morph_subset, morph_emit = "both", morph_side = "zx", morph_json;
    morph_cmd->add_option("code", morph_code, "Catalog name or JSON file")->required();
    morph_cmd->add_option("--subset", morph_subset, "1-based qubits of the child, e.g. 2,3,6,7")->required();
    morph_cmd->add_option("--emit", morph_emit, "child, morphed or both")
        ->check(CLI::IsMember({"child", "morphed", "both"}));
    morph_cmd->add_option("--side", morph_side, "Normal form to split: zx or xz")
        ->check(CLI::IsMember({"zx", "xz"}));
    morph_cmd->add_option("--json", morph_json, "Write the result as JSON ('-' for stdout)");

    auto *gauge_cmd = app.add_subcommand("gaugefix", "Fix the gauge of a subsystem code");
    std::string gauge_code, gauge_basis = "X", gauge_outcomes, gauge_json;
    gauge_cmd->add_option("code", gauge_code, "Subsystem catalog name or JSON file")->required();
    gauge_cmd->add_option("--basis", gauge_basis, "Gauge rows to measure: X or Z");
    gauge_cmd->add_option("--outcomes", gauge_outcomes, "Measurement outcomes, one bit per gauge pair");
    gauge_cmd->add_option("--json", gauge_json, "Write the result as JSON ('-' for stdout)");

    auto *switch_cmd = app.add_subcommand("switch", "Switch between the gauge-fixed codes of sub15");
    std::string switch_from, switch_to, switch_json;
    switch_cmd->add_option("--from", switch_from, "qrm15 or ext_steane")->required();
    switch_cmd->add_option("--to", switch_to, "qrm15 or ext_steane")->required();
    switch_cmd->add_option("--json", switch_json, "Write the result as JSON ('-' for stdout)");

    auto *rules_cmd = app.add_subcommand("rules", "Rewrite rule checks");
    rules_cmd->require_subcommand(1);
    auto *rules_check = rules_cmd->add_subcommand("check", "Random soundness check of every rule");
    std::size_t samples = 200;
    std::uint64_t seed = 1;
    rules_check->add_option("--samples", samples, "Instances per rule");
    rules_check->add_option("--seed", seed, "Random seed");

    auto *eta_cmd = app.add_subcommand("eta", "Factorization of ext_steane");
    eta_cmd->require_subcommand(1);
    auto *eta_check = eta_cmd->add_subcommand("check", "Verify E_ext = sigma o (E_steane (x) |eta>)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (code_list->parsed()) {
            for (const auto &name : catalog_names()) {
                auto entry = catalog(name);
                if (auto *css = std::get_if<CssCode>(&entry)) {
                    out << name << ' ' << parameters_string(*css) << '\n';
                } else {
                    const auto &sub = std::get<SubsystemCssCode>(entry);
                    out << name << " n=" << sub.n() << " k=" << sub.k() << " r=" << sub.r() << '\n';
                }
            }
            return kExitPass;
        }
        if (code_show->parsed()) {
            auto entry = load_code(show_code);
            std::visit([&](const auto &c) { describe(out, c, show_distance); }, entry);
            if (!show_json.empty()) {
                std::visit([&](const auto &c) { write_text(show_json, code_to_json(c).dump(2), out); }, entry);
            }
            return kExitPass;
        }
        if (nf_cmd->parsed()) {
            auto entry = load_code(nf_code);
            ZxDiagram d;
            if (nf_form == "subsystem") {
                auto *sub = std::get_if<SubsystemCssCode>(&entry);
                if (!sub) throw UsageError("--form subsystem needs a subsystem code");
                GaugeBoundary gauge;
                if (nf_gauge != "open") {
                    gauge.mode = GaugeMode::State;
                    gauge.states.assign(sub->r(), nf_gauge == "plus" ? BasisState::Plus : BasisState::Zero);
                }
                d = subsystem_zx_normal_form(*sub, gauge);
            } else {
                auto *css = std::get_if<CssCode>(&entry);
                if (!css) throw UsageError("--form zx|xz needs a stabilizer code; use --form subsystem");
                d = nf_form == "zx" ? zx_normal_form(*css) : xz_normal_form(*css);
            }
            out << nf_form << " normal form: " << diagram_summary(d) << '\n';
            if (!nf_dot.empty()) write_text(nf_dot, diagram_to_dot(d, nf_code + "_" + nf_form), out);
            if (!nf_json.empty()) write_text(nf_json, diagram_to_json(d).dump(2), out);
            return kExitPass;
        }
        if (verify_cmd->parsed()) {
            auto entry = load_code(verify_code);
            if (auto *css = std::get_if<CssCode>(&entry)) return verify_css(*css, tol, out);
            return verify_subsystem(std::get<SubsystemCssCode>(entry), tol, out);
        }
        if (push_cmd->parsed()) {
            auto code = load_css(push_code);
            auto layer = LogicalLayer::parse(push_op);
            layer.validate(code.k());
            out << "layer " << layer.str() << " on " << parameters_string(code) << '\n';
            for (const auto &op : layer.ops) {
                if (op.type == PrimitiveType::PauliX || op.type == PrimitiveType::PauliZ) {
                    auto kind = op.type == PrimitiveType::PauliX ? PauliKind::X : PauliKind::Z;
                    out << "  " << to_char(kind) << ':' << op.wires.front() << " -> "
                        << transversal_pauli(code, kind, op.wires.front()).str() << '\n';
                }
            }
            Report report(out);
            ZxDiagram physical;
            bool ok = true;
            try {
                physical = push_through(code, layer, tol);
            } catch (const VerificationError &) {
                ok = false;
            }
            if (ok) out << "physical diagram: " << diagram_summary(physical) << '\n';
            report.check(ok, "E o L = P o E");
            if (ok && !push_dot.empty()) write_text(push_dot, diagram_to_dot(physical, "push"), out);
            if (ok && !push_json.empty()) write_text(push_json, diagram_to_json(physical).dump(2), out);
            return report.finish();
        }
        if (morph_cmd->parsed()) {
            auto code = load_css(morph_code);
            MorphOptions options;
            options.side = morph_side == "zx" ? NormalFormSide::Zx : NormalFormSide::Xz;
            options.tol = tol;
            auto m = morph(code, parse_subset(morph_subset), options);
            std::vector<std::size_t> rest;
            for (std::size_t q = 0; q < code.n(); ++q) {
                if (!std::binary_search(m.subset.begin(), m.subset.end(), q)) rest.push_back(q);
            }
            out << "child " << parameters_string(m.child, distance(m.child)) << " on qubits " << join(m.subset)
                << '\n';
            out << "morphed " << parameters_string(m.morphed, distance(m.morphed)) << " on qubits " << join(rest);
            if (!m.new_qubit_map.empty()) out << " and " << m.new_qubit_map.size() << " new";
            out << '\n';
            for (const auto &[spider, qubit] : m.new_qubit_map) {
                out << "  new qubit " << qubit + 1 << " splits row spider " << spider << '\n';
            }
            if (morph_emit != "morphed") describe(out, m.child, false);
            if (morph_emit != "child") describe(out, m.morphed, false);
            if (!m.child_is_encoder) out << "note: the child diagram is not an isometry; checked as diagrams\n";
            if (!morph_json.empty()) write_text(morph_json, morph_to_json(m).dump(2), out);
            Report report(out);
            report.check(m.verified, "E_code = sigma o (I (x) E_child) o E_morphed");
            return report.finish();
        }
        if (gauge_cmd->parsed()) {
            auto code = load_subsystem(gauge_code);
            auto basis = parse_basis(gauge_basis);
            std::string bits = gauge_outcomes.empty() ? std::string(code.r(), '0') : gauge_outcomes;
            if (bits.size() != code.r() || bits.find_first_not_of("01") != std::string::npos) {
                throw UsageError("--outcomes needs " + std::to_string(code.r()) + " bits");
            }
            auto g = gauge_fix(code, basis, BitVec::from_string(bits), tol);
            for (const auto &line : g.trace) out << line << '\n';
            auto match = catalog_match(g.fixed_code);
            out << "fixed code " << parameters_string(g.fixed_code);
            if (!match.empty()) out << " = " << match;
            out << '\n' << "recovery " << g.recovery.str() << '\n';
            out << "nonzero for gauge inputs:";
            for (auto v : g.nonzero_inputs) {
                out << ' ';
                for (std::size_t i = code.r(); i-- > 0;) out << ((v >> i) & 1);
            }
            out << '\n';
            if (!gauge_json.empty()) write_text(gauge_json, gauge_fix_to_json(g).dump(2), out);
            Report report(out);
            report.check(g.verified, "R o P o E_sub (I (x) |g>) = 0 or E_fixed for every gauge input");
            return report.finish();
        }
        if (switch_cmd->parsed()) {
            auto s = switch_code(switch_from, switch_to, tol);
            Report report(out);
            for (std::size_t i = 0; i < s.steps.size(); ++i) {
                const auto &step = s.steps[i];
                report.check(step.verified, "step " + std::to_string(i + 1) + ": measure " + step.measured.str() +
                                                ", recovery " + step.recovery.str() + ", removes " +
                                                step.removed.str());
            }
            report.check(s.reached_target, "final stabilizer group equals " + switch_to);
            if (!switch_json.empty()) write_text(switch_json, switch_to_json(s).dump(2), out);
            return report.finish();
        }
        if (rules_check->parsed()) {
            Report report(out);
            for (const auto &c : check_rules(samples, seed, tol)) {
                report.check(c.passed == c.samples, std::string(rule_name(c.rule)) + " " + std::to_string(c.passed) +
                                                        "/" + std::to_string(c.samples) + " (" +
                                                        std::to_string(c.nonzero) + " nonzero)");
                for (const auto &f : c.failures) out << "  " << f << '\n';
            }
            return report.finish();
        }
        if (eta_check->parsed()) {
            auto eta = eta_factorization(catalog_css("ext_steane"), catalog_css("steane"), tol);
            out << "steane on qubits " << join(eta.code_part) << '\n';
            out << "eta on qubits " << join(eta.eta_part) << '\n';
            out << "eta amplitudes: " << eta.eta_nonzero << " nonzero"
                << (eta.equal_magnitudes ? ", equal magnitudes" : ", unequal magnitudes") << '\n';
            Report report(out);
            report.check(eta.verified, "E_ext = sigma o (E_steane (x) |eta>)");
            return report.finish();
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const VerificationError &e) {
        out << "FAIL " << e.what() << '\n';
        return kExitFail;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::length_error &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace csszx::cli
