#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "ratginv/bench.hpp"
#include "ratginv/errors.hpp"
#include "ratginv/float_linalg.hpp"
#include "ratginv/ginv.hpp"
#include "ratginv/parse.hpp"
#include "ratginv/print.hpp"

namespace ratginv {

namespace detail {

inline FloatMatrix to_float_matrix(const RatMatrix& a) {
    FloatMatrix f(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (!a(i, j).is_constant())
                throw std::runtime_error("the float backend needs a constant matrix; entry (" +
                                         std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                         ") depends on x");
            f(i, j) = a(i, j).constant_value().to_double();
        }
    return f;
}

inline std::string bool_word(bool b) { return b ? "true" : "false"; }

}  // namespace detail

// Runs one CLI invocation. Exit status: 0 on success, 2 for usage errors,
// 1 for computation errors (bad files, shape errors, singular inputs, ...).
inline int run_command(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
    CLI::App app{"Exact generalized inverses of matrices over Q(x), with a float backend "
                 "for constant matrices"};
    app.require_subcommand(1);

    std::string matrix_path, helper_path, candidate_path, branch_name = "auto", csv_path;
    bool use_float = false;
    double tol = 1e-11;
    std::vector<std::string> family_names{"S", "F", "A"};
    std::vector<std::size_t> sizes{5, 10, 25};
    std::vector<std::string> method_names{"geninv", "modginv"};
    double a_param = 1.0;
    std::size_t runs = 5;

    CLI::App* rank_cmd = app.add_subcommand("rank", "Exact rank of a matrix over Q(x)");
    rank_cmd->add_option("file", matrix_path, "matrix file")->required();

    CLI::App* mp_cmd = app.add_subcommand("mp", "Moore-Penrose inverse");
    mp_cmd->add_option("file", matrix_path, "matrix file")->required();
    mp_cmd->add_flag("--float", use_float, "use the float backend (constant matrices only)");
    mp_cmd->add_option("--tol", tol, "pivot tolerance for the float backend");

    CLI::App* ginv_cmd =
        app.add_subcommand("ginv", "{i,j,k}-inverse from a helper matrix");
    ginv_cmd->add_option("file", matrix_path, "matrix file")->required();
    ginv_cmd->add_option("--helper", helper_path, "helper matrix file")->required();
    ginv_cmd->add_option("--branch", branch_name, "left, right or auto")
        ->check(CLI::IsMember({"left", "right", "auto"}));

    CLI::App* check_cmd = app.add_subcommand("check", "Verify the Penrose equations");
    check_cmd->add_option("file", matrix_path, "matrix file")->required();
    check_cmd->add_option("--candidate", candidate_path, "candidate inverse file")->required();

    CLI::App* bench_cmd = app.add_subcommand("bench", "Float benchmark harness");
    bench_cmd->add_option("--families", family_names, "test families")->delimiter(',');
    bench_cmd->add_option("--sizes", sizes, "matrix sizes")->delimiter(',');
    bench_cmd->add_option("--methods", method_names, "geninv and/or modginv")->delimiter(',');
    bench_cmd->add_option("--csv", csv_path, "also write the records as CSV");
    bench_cmd->add_option("--param", a_param, "family parameter a");
    bench_cmd->add_option("--runs", runs, "timing runs per cell (median reported)");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*rank_cmd) {
            out << rank(load_matrix_file(matrix_path)) << "\n";
        } else if (*mp_cmd) {
            const RatMatrix a = load_matrix_file(matrix_path);
            if (use_float) {
                out << to_string(geninv_float(detail::to_float_matrix(a), tol));
            } else {
                out << to_string(moore_penrose(a));
            }
        } else if (*ginv_cmd) {
            GInvTask task;
            task.a = load_matrix_file(matrix_path);
            task.helper = load_matrix_file(helper_path);
            task.branch = branch_name == "left"    ? Branch::left
                          : branch_name == "right" ? Branch::right
                                                   : Branch::automatic;
            const GInvResult res = algorithm_2_1(task);
            const CheckReport rep = penrose_check(task.a, res.x);
            out << to_string(res.x);
            out << "s: " << res.s << "\n";
            out << "branch: " << (res.branch_taken == Branch::left ? "left" : "right") << "\n";
            out << "class: " << rep.classification << "\n";
            if (!res.diagnostic.empty()) err << "note: " << res.diagnostic << "\n";
        } else if (*check_cmd) {
            const RatMatrix a = load_matrix_file(matrix_path);
            const RatMatrix x = load_matrix_file(candidate_path);
            const CheckReport rep = penrose_check(a, x);
            out << "1:" << detail::bool_word(rep.eq1) << " 2:" << detail::bool_word(rep.eq2)
                << " 3:" << detail::bool_word(rep.eq3) << " 4:" << detail::bool_word(rep.eq4)
                << "\n";
            out << "rank: " << rep.rank_x << "\n";
            out << "class: " << rep.classification << "\n";
        } else if (*bench_cmd) {
            std::vector<TestFamily> families;
            for (const auto& name : family_names) families.push_back(parse_family(name));
            std::vector<BenchMethod> methods;
            for (const auto& name : method_names) methods.push_back(parse_method(name));
            const auto records = bench_run(families, sizes, methods, a_param, runs);
            write_table(out, records);
            if (!csv_path.empty()) {
                std::ofstream csv(csv_path);
                if (!csv) throw std::runtime_error("cannot write CSV file '" + csv_path + "'");
                write_csv(csv, records);
            }
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace ratginv
