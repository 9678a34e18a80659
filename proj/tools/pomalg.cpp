// Copyright 2026 The pomalg developers
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

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pomalg/hermitian_algebra.hpp"
#include "pomalg/io.hpp"
#include "pomalg/joint_algebra.hpp"
#include "pomalg/phase.hpp"

namespace {

using namespace pomalg;
using pomalg::io::json;

struct Options {
    Tolerance tol;
    std::string out;
    std::string manifest;
    std::uint64_t seed = 0;
};

void add_common(CLI::App *cmd, Options &opt) {
    cmd->add_option("--tol-pos", opt.tol.eps_pos, "positivity slack");
    cmd->add_option("--tol-eq", opt.tol.eps_eq, "equality slack");
    cmd->add_option("--tol-rank", opt.tol.eps_rank,
                    "relative spectral cutoff");
    cmd->add_option("--manifest", opt.manifest,
                    "JSON file with tolerance/seed defaults");
    cmd->add_option("--out", opt.out, "output file (default: stdout)");
}

/// Manifest files supply defaults; explicit flags win.
void apply_manifest(const CLI::App *cmd, Options &opt) {
    if (opt.manifest.empty()) {
        return;
    }
    const json m = io::load_json(opt.manifest);
    if (!m.is_object() || m.value("format_version", "") != "1") {
        throw FormatError("manifest " + opt.manifest +
                          ": format_version must be \"1\"");
    }
    auto unset = [&](const std::string &flag) {
        const CLI::Option *option = cmd->get_option_no_throw(flag);
        return option != nullptr && option->count() == 0;
    };
    if (m.contains("tol_pos") && unset("--tol-pos")) {
        opt.tol.eps_pos = m.at("tol_pos").get<double>();
    }
    if (m.contains("tol_eq") && unset("--tol-eq")) {
        opt.tol.eps_eq = m.at("tol_eq").get<double>();
    }
    if (m.contains("tol_rank") && unset("--tol-rank")) {
        opt.tol.eps_rank = m.at("tol_rank").get<double>();
    }
    if (m.contains("seed") && unset("--seed")) {
        opt.seed = m.at("seed").get<std::uint64_t>();
    }
}

void emit(const json &doc, const Options &opt) {
    if (opt.out.empty()) {
        std::cout << doc.dump(2) << "\n";
    } else {
        io::save_json(doc, opt.out);
    }
}

/// POM inputs are JSON files or the builtin specs number:D and phase:D,M.
io::AnyPom load_pom(const std::string &spec) {
    if (spec.rfind("number:", 0) == 0) {
        return number_pom(std::stoll(spec.substr(7)));
    }
    if (spec.rfind("phase:", 0) == 0) {
        const auto comma = spec.find(',');
        if (comma == std::string::npos) {
            throw FormatError("phase POM spec needs phase:D,M");
        }
        return canonical_phase_pom(std::stoll(spec.substr(6)),
                                   std::stoll(spec.substr(comma + 1)));
    }
    json j = io::load_json(spec);
    // outputs of reduce/maximalize/combine-* compose as inputs
    if (j.is_object() && !j.contains("kind") && j.contains("pom")) {
        j = j.at("pom");
    }
    return io::pom_from_json(j);
}

GeneralPom load_general(const std::string &spec, const Tolerance &tol,
                        bool must_be_valid = true) {
    const GeneralPom pom = io::to_general(load_pom(spec));
    if (must_be_valid && !validate(pom, tol).pass) {
        throw ValidationError("input POM fails validation: " + spec);
    }
    return pom;
}

/// General POMs are maximalised on the way in; maximal ones pass through.
MaximalPom load_maximal(const std::string &spec, const Tolerance &tol) {
    io::AnyPom any = load_pom(spec);
    if (std::holds_alternative<MaximalPom>(any)) {
        const auto &pom = std::get<MaximalPom>(any);
        if (!validate(pom, tol).pass) {
            throw ValidationError("input POM fails validation: " + spec);
        }
        return pom;
    }
    const auto &pom = std::get<GeneralPom>(any);
    if (!validate(pom, tol).pass) {
        throw ValidationError("input POM fails validation: " + spec);
    }
    return maximal_extension(pom, tol);
}

ComplexMatrix load_hermitian(const std::string &path, const Tolerance &tol) {
    const json j = io::load_json(path);
    ComplexMatrix x;
    if (j.is_object() && j.contains("matrix")) {
        x = io::matrix_from_json(j.at("matrix"), "/matrix");
    } else {
        x = io::matrix_from_json(j, "");
    }
    if (!is_hermitian(x, tol.eps_eq)) {
        throw HermiticityError("operator in " + path + " is not Hermitian");
    }
    return x;
}

/// --state vacuum | fock:n | coherent:re,im | file:path
FockState load_fock(const std::string &spec, std::optional<Index> dim) {
    if (spec == "vacuum") {
        return vacuum_state(dim.value_or(1));
    }
    if (spec.rfind("fock:", 0) == 0) {
        const Index n = std::stoll(spec.substr(5));
        return fock_state(n, dim.value_or(n + 1));
    }
    if (spec.rfind("coherent:", 0) == 0) {
        const std::string args = spec.substr(9);
        const auto comma = args.find(',');
        const double re = std::stod(args.substr(0, comma));
        const double im =
            comma == std::string::npos ? 0.0 : std::stod(args.substr(comma + 1));
        if (dim) {
            return coherent_state_with_dim(Complex(re, im), *dim);
        }
        return coherent_state(Complex(re, im));
    }
    if (spec.rfind("file:", 0) == 0) {
        const State s = io::state_from_json(io::load_json(spec.substr(5)));
        FockState psi;
        psi.amplitudes = s.ket;
        return psi;
    }
    throw FormatError("unknown state spec: " + spec +
                      " (expected vacuum|fock:n|coherent:re,im|file:path)");
}

State load_state(const std::string &spec, std::optional<Index> dim) {
    return load_fock(spec, dim).to_state();
}

json report_to_json(const ValidationReport &report) {
    json pairs = json::array();
    for (const auto &p : report.redundancy_pairs) {
        pairs.push_back({{"first", p.first},
                         {"second", p.second},
                         {"scale", io::sig12(p.scale)}});
    }
    json mins = json::array();
    for (double v : report.min_eigenvalues) {
        mins.push_back(io::sig12(v));
    }
    return json{{"pass", report.pass},
                {"positivity_ok", report.positivity_ok},
                {"completeness_ok", report.completeness_ok},
                {"completeness_defect", io::sig12(report.completeness_defect)},
                {"min_eigenvalues", mins},
                {"redundancy_pairs", pairs}};
}

/// Groups per-element probabilities by outcome (within eps) for display.
json grouped_distribution(const MaximalPom &pom, const State &psi,
                          double eps) {
    const RealVector p = probabilities(pom, psi);
    std::map<double, double> grouped;
    for (Index i = 0; i < pom.size(); ++i) {
        const double outcome =
            pom.elements[static_cast<std::size_t>(i)].outcome;
        bool merged = false;
        for (auto &[key, mass] : grouped) {
            if (std::abs(key - outcome) <= eps) {
                mass += p[i];
                merged = true;
                break;
            }
        }
        if (!merged) {
            grouped[outcome] += p[i];
        }
    }
    json out = json::array();
    for (const auto &[outcome, mass] : grouped) {
        out.push_back(
            {{"outcome", io::sig12(outcome)}, {"p", io::sig12(mass)}});
    }
    return out;
}

std::function<double(double)> outcome_function(const std::string &name) {
    if (name == "id") {
        return [](double a) { return a; };
    }
    if (name == "sq") {
        return [](double a) { return a * a; };
    }
    if (name == "abs") {
        return [](double a) { return std::abs(a); };
    }
    if (name == "cos") {
        return [](double a) { return std::cos(a); };
    }
    if (name == "sin") {
        return [](double a) { return std::sin(a); };
    }
    throw FormatError("unknown outcome function: " + name +
                      " (expected id|sq|abs|cos|sin)");
}

int run(int argc, char **argv) {
    CLI::App app{"Algebra of generalised quantum observables"};
    app.require_subcommand(1);

    // one option block per subcommand; CLI11 keeps them independent
    struct {
        Options opt;
        std::string pom, a, b, x, state, g, f = "id";
        std::vector<std::string> xs;
        std::optional<Index> dim;
        Index bins = 0;
        std::size_t n = 1;
        bool emit_outcomes = false;
    } ctx;

    auto dim_option = [&](CLI::App *cmd) {
        cmd->add_option_function<Index>(
            "--dim", [&](Index d) { ctx.dim = d; },
            "state-space dimension / Fock truncation");
    };

    int exit_code = 0;
    json doc;

    auto *validate_cmd =
        app.add_subcommand("validate", "check POM invariants");
    validate_cmd->add_option("--pom", ctx.pom, "POM document")->required();
    add_common(validate_cmd, ctx.opt);
    validate_cmd->callback([&, cmd = validate_cmd] {
        apply_manifest(cmd, ctx.opt);
        const GeneralPom pom = load_general(ctx.pom, ctx.opt.tol, false);
        const ValidationReport report = validate(pom, ctx.opt.tol);
        doc = {{"command", "validate"}, {"report", report_to_json(report)}};
        if (!report.pass) {
            exit_code = 1;
        }
    });

    auto *reduce_cmd =
        app.add_subcommand("reduce", "merge proportional POM elements");
    reduce_cmd->add_option("--pom", ctx.pom, "POM document")->required();
    add_common(reduce_cmd, ctx.opt);
    reduce_cmd->callback([&, cmd = reduce_cmd] {
        apply_manifest(cmd, ctx.opt);
        const ReduceResult result =
            reduce_nonredundant(load_general(ctx.pom, ctx.opt.tol),
                                ctx.opt.tol);
        json warnings = json::array();
        for (const auto &w : result.warnings) {
            warnings.push_back({{"merged_indices", w.merged_indices},
                                {"outcomes", w.outcomes},
                                {"chosen_outcome", io::sig12(w.chosen_outcome)}});
        }
        doc = {{"command", "reduce"},
               {"pom", io::to_json(result.pom)},
               {"warnings", warnings}};
    });

    auto *maximalize_cmd = app.add_subcommand(
        "maximalize", "decompose POM elements into rank-1 kets");
    maximalize_cmd->add_option("--pom", ctx.pom, "POM document")->required();
    add_common(maximalize_cmd, ctx.opt);
    maximalize_cmd->callback([&, cmd = maximalize_cmd] {
        apply_manifest(cmd, ctx.opt);
        doc = {{"command", "maximalize"},
               {"pom", io::to_json(maximal_extension(
                           load_general(ctx.pom, ctx.opt.tol), ctx.opt.tol))}};
    });

    auto *expect_cmd = app.add_subcommand(
        "expect", "expectation of a function of the outcome");
    expect_cmd->add_option("--pom", ctx.pom, "POM document")->required();
    expect_cmd->add_option("--state", ctx.state, "state spec")->required();
    expect_cmd->add_option("--f", ctx.f, "outcome function id|sq|abs|cos|sin");
    dim_option(expect_cmd);
    add_common(expect_cmd, ctx.opt);
    expect_cmd->callback([&, cmd = expect_cmd] {
        apply_manifest(cmd, ctx.opt);
        const GeneralPom pom = load_general(ctx.pom, ctx.opt.tol);
        const State psi = load_state(ctx.state, ctx.dim ? ctx.dim
                                                        : std::optional<Index>(
                                                              pom.dim));
        const RealVector p = probabilities(pom, psi);
        json probs = json::array();
        for (Index i = 0; i < p.size(); ++i) {
            probs.push_back(io::sig12(p[i]));
        }
        doc = {{"command", "expect"},
               {"value", io::sig12(expect_f(pom, outcome_function(ctx.f), psi,
                                            ctx.opt.tol))},
               {"probabilities", probs}};
    });

    auto *variance_cmd =
        app.add_subcommand("variance", "variance of the outcome");
    variance_cmd->add_option("--pom", ctx.pom, "POM document")->required();
    variance_cmd->add_option("--state", ctx.state, "state spec")->required();
    dim_option(variance_cmd);
    add_common(variance_cmd, ctx.opt);
    variance_cmd->callback([&, cmd = variance_cmd] {
        apply_manifest(cmd, ctx.opt);
        const GeneralPom pom = load_general(ctx.pom, ctx.opt.tol);
        const State psi = load_state(
            ctx.state, ctx.dim ? ctx.dim : std::optional<Index>(pom.dim));
        doc = {{"command", "variance"},
               {"value", io::sig12(variance(pom, psi, ctx.opt.tol))}};
    });

    auto *sample_cmd =
        app.add_subcommand("sample", "draw outcomes from p(a|psi)");
    sample_cmd->add_option("--pom", ctx.pom, "POM document")->required();
    sample_cmd->add_option("--state", ctx.state, "state spec")->required();
    sample_cmd->add_option("--n", ctx.n, "number of draws")->required();
    sample_cmd->add_option("--seed", ctx.opt.seed, "RNG seed");
    sample_cmd->add_flag("--emit-outcomes", ctx.emit_outcomes,
                         "include the full outcome sequence");
    dim_option(sample_cmd);
    add_common(sample_cmd, ctx.opt);
    sample_cmd->callback([&, cmd = sample_cmd] {
        apply_manifest(cmd, ctx.opt);
        const GeneralPom pom = load_general(ctx.pom, ctx.opt.tol);
        const State psi = load_state(
            ctx.state, ctx.dim ? ctx.dim : std::optional<Index>(pom.dim));
        const auto outcomes = sample(pom, psi, ctx.n, ctx.opt.seed);
        std::map<double, std::size_t> counts;
        for (double o : outcomes) {
            ++counts[o];
        }
        json counts_json = json::array();
        for (const auto &[outcome, count] : counts) {
            counts_json.push_back(
                {{"outcome", io::sig12(outcome)}, {"count", count}});
        }
        doc = {{"command", "sample"},
               {"n", ctx.n},
               {"seed", ctx.opt.seed},
               {"counts", counts_json}};
        if (ctx.emit_outcomes) {
            doc["outcomes"] = outcomes;
        }
    });

    auto *deviation_cmd = app.add_subcommand(
        "deviation", "statistical deviation <(X - A)^2>");
    deviation_cmd->add_option("--a", ctx.a, "maximal POM")->required();
    deviation_cmd->add_option("--x", ctx.x, "Hermitian operator")->required();
    deviation_cmd->add_option("--state", ctx.state, "state spec")->required();
    dim_option(deviation_cmd);
    add_common(deviation_cmd, ctx.opt);
    deviation_cmd->callback([&, cmd = deviation_cmd] {
        apply_manifest(cmd, ctx.opt);
        const MaximalPom a = load_maximal(ctx.a, ctx.opt.tol);
        const State psi = load_state(
            ctx.state, ctx.dim ? ctx.dim : std::optional<Index>(a.dim));
        doc = {{"command", "deviation"},
               {"value", io::sig12(deviation(
                             a, load_hermitian(ctx.x, ctx.opt.tol), psi,
                             ctx.opt.tol))}};
    });

    auto *distance_cmd = app.add_subcommand(
        "distance", "metric distance between a POM and a Hermitian operator");
    distance_cmd->add_option("--a", ctx.a, "maximal POM")->required();
    distance_cmd->add_option("--x", ctx.x, "Hermitian operator")->required();
    add_common(distance_cmd, ctx.opt);
    distance_cmd->callback([&, cmd = distance_cmd] {
        apply_manifest(cmd, ctx.opt);
        doc = {{"command", "distance"},
               {"value", io::sig12(distance(
                             load_maximal(ctx.a, ctx.opt.tol),
                             load_hermitian(ctx.x, ctx.opt.tol),
                             ctx.opt.tol))}};
    });

    auto *mindist_cmd = app.add_subcommand(
        "mindist", "closest Hermitian operator and the distance to it");
    mindist_cmd->add_option("--a", ctx.a, "maximal POM")->required();
    add_common(mindist_cmd, ctx.opt);
    mindist_cmd->callback([&, cmd = mindist_cmd] {
        apply_manifest(cmd, ctx.opt);
        const auto [value, mean] =
            min_distance(load_maximal(ctx.a, ctx.opt.tol), ctx.opt.tol);
        doc = {{"command", "mindist"},
               {"value", io::sig12(value)},
               {"mean_operator", io::to_json(mean)}};
    });

    auto *combine_hx_cmd = app.add_subcommand(
        "combine-hx", "combine a POM with a Hermitian observable");
    combine_hx_cmd->add_option("--a", ctx.a, "maximal POM")->required();
    combine_hx_cmd->add_option("--x", ctx.x, "Hermitian operator")->required();
    combine_hx_cmd->add_option("--g", ctx.g, "expression over a, x")
        ->required();
    combine_hx_cmd->add_option("--state", ctx.state,
                               "optional state for the distribution");
    dim_option(combine_hx_cmd);
    add_common(combine_hx_cmd, ctx.opt);
    combine_hx_cmd->callback([&, cmd = combine_hx_cmd] {
        apply_manifest(cmd, ctx.opt);
        const MaximalPom a = load_maximal(ctx.a, ctx.opt.tol);
        const ComplexMatrix x = load_hermitian(ctx.x, ctx.opt.tol);
        const OpExpr g = OpExpr::parse(ctx.g, {"a", "x"});
        const CombinedPom combined =
            combine_with_hermitian(a, x, g, ctx.opt.tol);
        doc = {{"command", "combine-hx"},
               {"expression", combined.expression},
               {"pom", io::to_json(combined.pom)}};
        if (!ctx.state.empty()) {
            const State psi = load_state(
                ctx.state, ctx.dim ? ctx.dim : std::optional<Index>(a.dim));
            doc["distribution"] =
                grouped_distribution(combined.pom, psi, ctx.opt.tol.eps_eq);
            const double shortcut = expect_g(a, x, g, psi, ctx.opt.tol);
            doc["expect_shortcut"] = io::sig12(shortcut);
        }
    });

    auto *combine_pp_cmd =
        app.add_subcommand("combine-pp", "combine two POM observables");
    combine_pp_cmd->add_option("--a", ctx.a, "maximal POM")->required();
    combine_pp_cmd->add_option("--b", ctx.b, "maximal POM")->required();
    combine_pp_cmd->add_option("--g", ctx.g, "expression over a, b")
        ->required();
    combine_pp_cmd->add_option("--state", ctx.state,
                               "optional state for the distribution");
    dim_option(combine_pp_cmd);
    add_common(combine_pp_cmd, ctx.opt);
    combine_pp_cmd->callback([&, cmd = combine_pp_cmd] {
        apply_manifest(cmd, ctx.opt);
        const MaximalPom a = load_maximal(ctx.a, ctx.opt.tol);
        const MaximalPom b = load_maximal(ctx.b, ctx.opt.tol);
        const OpExpr g = OpExpr::parse(ctx.g, {"a", "b"});
        const JointSpace js = build_joint_space(a, b, ctx.opt.tol);
        const CombinedPom combined = combine(js, g, ctx.opt.tol);
        doc = {{"command", "combine-pp"},
               {"expression", combined.expression},
               {"joint_dim", js.joint_dim},
               {"common_elements", js.dec.common.size()},
               {"pom", io::to_json(combined.pom)}};
        if (!ctx.state.empty()) {
            const State psi = load_state(
                ctx.state, ctx.dim ? ctx.dim : std::optional<Index>(a.dim));
            doc["distribution"] =
                grouped_distribution(combined.pom, psi, ctx.opt.tol.eps_eq);
            const Complex shortcut = expect_joint(js, g, psi, ctx.opt.tol);
            doc["expect_shortcut"] = io::complex_to_json(shortcut);
        }
    });

    auto *uncertainty_cmd = app.add_subcommand(
        "uncertainty", "generalised uncertainty relation report");
    uncertainty_cmd->add_option("--a", ctx.a, "maximal POM")->required();
    uncertainty_cmd->add_option("--b", ctx.b, "maximal POM")->required();
    uncertainty_cmd->add_option("--state", ctx.state, "state spec")
        ->required();
    dim_option(uncertainty_cmd);
    add_common(uncertainty_cmd, ctx.opt);
    uncertainty_cmd->callback([&, cmd = uncertainty_cmd] {
        apply_manifest(cmd, ctx.opt);
        const MaximalPom a = load_maximal(ctx.a, ctx.opt.tol);
        const MaximalPom b = load_maximal(ctx.b, ctx.opt.tol);
        const State psi = load_state(
            ctx.state, ctx.dim ? ctx.dim : std::optional<Index>(a.dim));
        const UncertaintyReport report = uncertainty(a, b, psi, ctx.opt.tol);
        doc = {{"command", "uncertainty"},
               {"delta_a", io::sig12(report.delta_a)},
               {"delta_b", io::sig12(report.delta_b)},
               {"bound", io::sig12(report.bound)},
               {"commutator_expectation",
                io::complex_to_json(report.commutator_expectation)},
               {"satisfied", report.satisfied}};
    });

    auto *phase_canonical_cmd = app.add_subcommand(
        "phase-canonical", "discretised canonical phase POM");
    phase_canonical_cmd->add_option("--dim", ctx.n, "Fock truncation")
        ->required();
    phase_canonical_cmd->add_option("--bins", ctx.bins, "grid size")
        ->required();
    add_common(phase_canonical_cmd, ctx.opt);
    phase_canonical_cmd->callback([&, cmd = phase_canonical_cmd] {
        apply_manifest(cmd, ctx.opt);
        doc = {{"command", "phase-canonical"},
               {"pom", io::to_json(canonical_phase_pom(
                           static_cast<Index>(ctx.n), ctx.bins))}};
    });

    auto *phase_bound_cmd = app.add_subcommand(
        "phase-bound", "number-phase uncertainty bound");
    phase_bound_cmd->add_option("--state", ctx.state, "state spec")
        ->required();
    phase_bound_cmd->add_option("--bins", ctx.bins, "grid size")->required();
    dim_option(phase_bound_cmd);
    add_common(phase_bound_cmd, ctx.opt);
    phase_bound_cmd->callback([&, cmd = phase_bound_cmd] {
        apply_manifest(cmd, ctx.opt);
        const FockState psi = load_fock(ctx.state, ctx.dim);
        const double closed = number_phase_bound(psi, ctx.bins);
        const double algebraic =
            number_phase_bound_algebraic(psi, ctx.bins, ctx.opt.tol);
        doc = {{"command", "phase-bound"},
               {"bins", ctx.bins},
               {"closed_form", io::sig12(closed)},
               {"algebraic", io::sig12(algebraic)},
               {"difference", io::sig12(std::abs(closed - algebraic))}};
    });

    auto *phase_delta_cmd = app.add_subcommand(
        "phase-delta",
        "circular deviation between canonical and heterodyne phase");
    phase_delta_cmd->add_option("--state", ctx.state, "state spec")
        ->required();
    dim_option(phase_delta_cmd);
    add_common(phase_delta_cmd, ctx.opt);
    phase_delta_cmd->callback([&, cmd = phase_delta_cmd] {
        apply_manifest(cmd, ctx.opt);
        const FockState psi = load_fock(ctx.state, ctx.dim);
        const double delta = circular_deviation(psi, ctx.opt.tol);
        const double asymptote = delta_asymptote(psi);
        doc = {{"command", "phase-delta"},
               {"delta", io::sig12(delta)},
               {"asymptote", io::sig12(asymptote)},
               {"ratio", io::sig12(delta / asymptote)},
               {"truncation_tail", io::sig12(psi.truncation_tail)}};
    });

    auto *chain_cmd = app.add_subcommand(
        "chain", "combine two POMs with Hermitian observables");
    chain_cmd->add_option("--a", ctx.a, "maximal POM")->required();
    chain_cmd->add_option("--b", ctx.b, "maximal POM")->required();
    chain_cmd->add_option("--x", ctx.xs, "Hermitian operators (repeatable)");
    chain_cmd->add_option("--g", ctx.g, "expression over a, b, x1..xn")
        ->required();
    chain_cmd->add_option("--state", ctx.state, "state spec")->required();
    dim_option(chain_cmd);
    add_common(chain_cmd, ctx.opt);
    chain_cmd->callback([&, cmd = chain_cmd] {
        apply_manifest(cmd, ctx.opt);
        const MaximalPom a = load_maximal(ctx.a, ctx.opt.tol);
        const MaximalPom b = load_maximal(ctx.b, ctx.opt.tol);
        std::vector<std::string> slots{"a", "b"};
        std::vector<ComplexMatrix> herms;
        for (std::size_t i = 0; i < ctx.xs.size(); ++i) {
            slots.push_back("x" + std::to_string(i + 1));
            herms.push_back(load_hermitian(ctx.xs[i], ctx.opt.tol));
        }
        const OpExpr g = OpExpr::parse(ctx.g, slots);
        const State psi = load_state(
            ctx.state, ctx.dim ? ctx.dim : std::optional<Index>(a.dim));
        const Complex value = expect_chain(a, b, herms, g, psi, ctx.opt.tol);
        doc = {{"command", "chain"},
               {"value", io::complex_to_json(value)}};
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    emit(doc, ctx.opt);
    return exit_code;
}

} // namespace

int main(int argc, char **argv) {
    try {
        return run(argc, argv);
    } catch (const FormatError &e) {
        std::cerr << "format error: " << e.what() << "\n";
        return 2;
    } catch (const ShapeError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError &e) {
        std::cerr << "validation failure: " << e.what() << "\n";
        return 1;
    } catch (const Error &e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
