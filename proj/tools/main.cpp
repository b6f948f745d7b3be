#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "hyperdelta/jsonio.hpp"

using namespace hyperdelta;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

int run_solve(const std::string& file, int version, bool json_out, bool genexp_only, int sharpen,
              bool verify) {
    SystemDocument doc = load_system(file);
    std::vector<Warning> warnings;
    GenExpSet g = unramified_gen_exps(doc.matrix);
    warnings.insert(warnings.end(), g.warnings.begin(), g.warnings.end());

    std::vector<HyperSol> sols;
    if (!genexp_only) {
        sols = version == 1 ? hyper_solve_v1(doc.matrix) : hyper_solve_v3(doc.matrix, nullptr, sharpen);
        if (verify) {
            for (const auto& s : sols)
                if (!verify_solution(doc.matrix, s)) throw internal_error("back-substitution check failed");
        }
    }
    if (json_out) {
        std::cout << solutions_to_json(sols, g.exps, warnings) << "\n";
    } else {
        for (const auto& e : g.exps) std::cout << "genexp " << to_pretty(e) << "\n";
        for (const auto& s : sols) std::cout << "solution " << to_pretty(s) << "\n";
        if (!genexp_only && sols.empty()) std::cout << "no hypergeometric solutions\n";
        for (const auto& w : warnings) std::cerr << "warning: " << w.code << ": " << w.detail << "\n";
    }
    return kExitOk;
}

int run_factor(const std::string& file, int order, bool json_out) {
    OperatorDocument doc = load_operator(file);
    FactorSearch fs = right_factors(doc.op, order);
    if (json_out) {
        std::cout << factors_to_json(fs) << "\n";
    } else {
        for (const auto& f : fs.factors) std::cout << "factor " << to_pretty(f) << "\n";
        if (fs.factors.empty()) std::cout << "no order-" << order << " right factors\n";
        for (const auto& w : fs.warnings) std::cerr << "warning: " << w.code << ": " << w.detail << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypergeometric solutions of linear difference systems over Q(x)"};
    app.require_subcommand(1);

    std::string file;
    int version = 3;
    bool json_out = false;
    bool genexp_only = false;
    int sharpen = 1;
    bool verify = true;

    auto* solve = app.add_subcommand("solve", "compute hypergeometric solutions of tau(Y) = M Y");
    solve->add_option("file", file, "system JSON document")->required();
    solve->add_option("--version", version, "algorithm version (1 or 3)")->check(CLI::IsMember({1, 3}));
    solve->add_flag("--json", json_out, "machine-readable output");
    solve->add_flag("--genexp-only", genexp_only, "only print the unramified generalized exponents");
    solve->add_option("--sharpen-level", sharpen, "local-type bound level")->check(CLI::IsMember({1, 2}));
    solve->add_flag("--verify,!--no-verify", verify, "back-substitute every solution (default on)");

    auto* genexp = app.add_subcommand("genexp", "print the unramified generalized exponents");
    genexp->add_option("file", file, "system JSON document")->required();
    genexp->add_flag("--json", json_out, "machine-readable output");

    std::string op_file;
    int order = 1;
    auto* factor = app.add_subcommand("factor", "right factors of an operator in Q(x)[tau]");
    factor->add_option("file", op_file, "operator JSON document")->required();
    factor->add_option("--order", order, "order of the right factors")->required();
    factor->add_flag("--json", json_out, "machine-readable output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return run_solve(file, version, json_out, genexp_only, sharpen, verify);
        if (genexp->parsed()) return run_solve(file, 3, json_out, true, 1, false);
        if (factor->parsed()) return run_factor(op_file, order, json_out);
    } catch (const parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const singular_matrix_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const budget_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const hd_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitOk;
}
