#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "liealg/algebra_io.hpp"
#include "liealg/catalog.hpp"
#include "liealg/errors.hpp"
#include "liealg/invariants.hpp"
#include "liealg/report.hpp"

namespace {

using namespace liealg;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIllDefined = 3;

LieAlgebra resolve_algebra(const std::string& source) {
    if (is_builtin(source)) return load_builtin(source).algebra;
    return load_algebra_file(source);
}

void print_bracket_table(std::ostream& os, const LieAlgebra& L) {
    os << "algebra: " << L.name() << "\n";
    os << "dimension: " << L.dimension() << "\n";
    os << "generators:";
    for (const auto& g : L.generators()) os << " " << g;
    os << "\n";
    const int n = L.dimension();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const AlgebraElement e = L.bracket_basis(a, b);
            if (e.is_zero()) continue;
            os << "[" << L.generators()[a] << ", " << L.generators()[b]
               << "] = " << e.to_string() << "\n";
        }
}

int run(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for Lie algebra contractions and Casimir invariants"};
    app.require_subcommand(1);

    std::string format = "text";
    int degree_cap = 4;
    unsigned long seed = 1;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "report"}))
        ->capture_default_str();
    app.add_option("--degree-cap", degree_cap, "largest invariant degree the CLI will solve")
        ->capture_default_str();
    app.add_option("--seed", seed, "seed for the generic-rank sampling")
        ->capture_default_str();

    std::string source;
    std::string export_path;
    auto* show = app.add_subcommand("show", "print generators and nonzero brackets");
    show->add_option("algebra", source, "builtin name or algebra file")->required();
    show->add_option("--export", export_path, "also write the algebra file format here");

    auto* check = app.add_subcommand("check", "validate the Jacobi identity");
    check->add_option("algebra", source, "builtin name or algebra file")->required();

    int degree = 2;
    bool only_new = false;
    bool as_json = false;
    auto* casimir = app.add_subcommand("casimir", "compute homogeneous polynomial invariants");
    casimir->add_option("algebra", source, "builtin name or algebra file")->required();
    casimir->add_option("--degree", degree, "homogeneous degree")->required();
    casimir->add_flag("--new", only_new, "quotient out products of lower-degree invariants");
    casimir->add_flag("--json", as_json, "emit the basis with metadata as JSON");

    std::string scale_spec;
    std::string scale_file;
    std::string compare_ref;
    std::string map_spec;
    auto* contract = app.add_subcommand("contract", "contract along an integer grading");
    contract->add_option("algebra", source, "builtin name or algebra file")->required();
    contract->add_option("--scale", scale_spec,
                         "inline grading, e.g. J=0,P=1,K=1,Hbar=0,M=2 or all=0");
    contract->add_option("--scale-file", scale_file, "grading file (JSON)");
    contract->add_option("--compare", compare_ref, "reference algebra for a structure match");
    contract->add_option("--map", map_spec, "relabeling onto the reference, e.g. KP=KG,Hbar=H");

    auto* rank = app.add_subcommand("rank", "count functionally independent invariants");
    rank->add_option("algebra", source, "builtin name or algebra file")->required();

    std::string report_path;
    auto* verify = app.add_subcommand("verify-paper", "run the full verification pipeline");
    verify->add_option("--report", report_path, "write the structured report to this file");

    auto* catalog_cmd = app.add_subcommand("catalog", "list builtin algebras");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (show->parsed()) {
            const LieAlgebra L = resolve_algebra(source);
            print_bracket_table(std::cout, L);
            if (!export_path.empty()) write_algebra_file(L, export_path);
            return kExitOk;
        }
        if (check->parsed()) {
            const LieAlgebra L = resolve_algebra(source);
            const auto violations = jacobi_check(L);
            if (violations.empty()) {
                std::cout << "valid\n";
                return kExitOk;
            }
            for (const auto& t : violations)
                std::cout << "jacobi violated at (" << t[0] << ", " << t[1] << ", " << t[2]
                          << ")\n";
            return kExitCheckFailed;
        }
        if (casimir->parsed()) {
            if (degree < 0 || degree > degree_cap)
                throw liealg::ParseError("degree must lie in [0, " +
                                         std::to_string(degree_cap) +
                                         "]; raise --degree-cap to go higher");
            const LieAlgebra L = resolve_algebra(source);
            InvariantBasis basis;
            if (only_new) {
                std::vector<InvariantBasis> lower;
                for (int d = 1; d < degree; ++d) lower.push_back(invariant_space(L, d));
                basis = new_invariants(L, degree, lower);
            } else {
                basis = invariant_space(L, degree);
            }
            if (as_json)
                std::cout << serialize_invariant_basis(basis, only_new);
            else
                for (const auto& p : basis.polynomials) std::cout << p.to_string() << "\n";
            return kExitOk;
        }
        if (contract->parsed()) {
            const LieAlgebra L = resolve_algebra(source);
            GradedScaling s;
            if (!scale_spec.empty())
                s = parse_scale_spec(L, scale_spec);
            else if (!scale_file.empty())
                s = load_scaling_file(scale_file).second;
            else
                throw liealg::ParseError("contract needs --scale or --scale-file");
            const LieAlgebra limit = contraction_limit(rescale(L, s));
            if (compare_ref.empty()) {
                print_bracket_table(std::cout, limit);
                return kExitOk;
            }
            const LieAlgebra ref = resolve_algebra(compare_ref);
            const auto relabel = parse_map_spec(limit, ref, map_spec);
            if (same_structure(limit, ref, relabel)) {
                std::cout << "MATCH\n";
                return kExitOk;
            }
            std::cout << "MISMATCH\n";
            return kExitCheckFailed;
        }
        if (rank->parsed()) {
            const LieAlgebra L = resolve_algebra(source);
            std::cout << invariant_count(L, seed) << "\n";
            return kExitOk;
        }
        if (catalog_cmd->parsed()) {
            for (const auto& [name, dim] : list_builtins())
                std::cout << name << " " << dim << "\n";
            return kExitOk;
        }
        if (verify->parsed()) {
            VerifyOptions options;
            options.seed = seed;
            options.second_seed = seed + 1;
            const VerificationReport report = run_paper_verification(options);
            std::cout << (format == "report" ? report.render_report() : report.render_text());
            if (!report_path.empty()) {
                std::ofstream out(report_path);
                if (!out) throw liealg::ParseError("cannot write '" + report_path + "'");
                out << report.render_report();
            }
            return report.fail_count() == 0 ? kExitOk : kExitCheckFailed;
        }
    } catch (const IllDefinedContraction& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIllDefined;
    } catch (const liealg::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const liealg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
