// Command-line front end: ad-hoc bracket evaluation, C-bracket comparison,
// and the named verification suites. Batch only; all sampling is seeded, so
// identical flags give byte-identical output.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "koszul/checks.hpp"

namespace {

using namespace koszul;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// literal expression text, or the contents of a file when the argument
// names one
std::string file_or_literal(const std::string& arg) {
    std::ifstream probe(arg);
    if (probe.good()) return read_file(arg);
    return arg;
}

void print_report(const verification_report& report) {
    for (const check_result& c : report.checks) {
        if (c.pass) {
            std::cout << "CHECK " << c.name << ": PASS\n";
        } else {
            std::cout << "CHECK " << c.name << ": FAIL";
            if (c.residual) std::cout << " residual=" << print_expression(*c.residual);
            std::cout << "\n";
        }
    }
}

int report_exit(const verification_report& report) { return report.all_pass() ? 0 : 1; }

structure_file load_structure(const std::string& path) {
    return parse_structure(read_file(path));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic engine for graded Poisson brackets, Courant "
                 "algebroids, and the double field theory C-bracket"};
    app.require_subcommand(1);

    // bracket ---------------------------------------------------------------
    std::string expr_a, expr_b;
    int dim = 3;
    bool doubled = false;
    auto* bracket_cmd =
        app.add_subcommand("bracket", "Poisson bracket of two expressions");
    bracket_cmd->add_option("exprA", expr_a, "first expression (literal or file)")
        ->required();
    bracket_cmd->add_option("exprB", expr_b, "second expression (literal or file)")
        ->required();
    bracket_cmd->add_option("--dim", dim, "chart dimension (default 3)");
    bracket_cmd->add_flag("--doubled", doubled, "use the doubled chart");

    // cbracket --------------------------------------------------------------
    std::string section_a, section_b;
    auto* cbracket_cmd = app.add_subcommand(
        "cbracket", "C-bracket of two double sections, both routes compared");
    cbracket_cmd->add_option("sectionA", section_a, "section file")->required();
    cbracket_cmd->add_option("sectionB", section_b, "section file")->required();

    // check -----------------------------------------------------------------
    std::string kind;
    std::string data_file;
    sample_params params{2, 2, 20, 1};
    auto* check_cmd = app.add_subcommand("check", "run a named verification suite");
    check_cmd
        ->add_option("kind", kind,
                     "one of: bialgebroid, courant, proto, strong, project, genlie, metric")
        ->required();
    check_cmd->add_option("data", data_file, "structure data file (where applicable)");
    check_cmd->add_option("--dim", params.dim, "dimension for sampled suites");
    check_cmd->add_option("--degree", params.degree, "max coefficient degree");
    check_cmd->add_option("--samples", params.samples, "number of seeded samples");
    check_cmd->add_option("--seed", params.seed, "sampling seed");

    // selftest --------------------------------------------------------------
    bool quick = false;
    auto* selftest_cmd =
        app.add_subcommand("selftest", "run the full property and identity battery");
    selftest_cmd->add_flag("--quick", quick, "reduced sample counts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*bracket_cmd) {
            const chart c = doubled ? doubled_chart(dim) : base_chart(dim);
            expression a = parse_expression(file_or_literal(expr_a), c);
            expression b = parse_expression(file_or_literal(expr_b), c);
            std::cout << print_expression(poisson(a, b)) << "\n";
            return 0;
        }

        if (*cbracket_cmd) {
            structure_file fa = load_structure(section_a);
            structure_file fb = load_structure(section_b);
            if (fa.dim() != fb.dim()) throw data_error("section files disagree on dim");
            const chart c = doubled_chart(fa.dim());
            double_section s1 = fa.to_section();
            double_section s2 = fb.to_section();

            expression derived_route = c_bracket(s1, s2);
            double_section comps = c_bracket_components(s1, s2);
            std::cout << "derived = " << print_expression(derived_route) << "\n";
            for (int i = 1; i <= fa.dim(); ++i)
                std::cout << "X[" << i << "] = "
                          << print_expression(comps.vec[static_cast<std::size_t>(i - 1)])
                          << "\n";
            for (int i = 1; i <= fa.dim(); ++i)
                std::cout << "eta[" << i << "] = "
                          << print_expression(comps.form[static_cast<std::size_t>(i - 1)])
                          << "\n";
            expression difference = derived_route - lift_double(c, comps);
            std::cout << "difference = " << print_expression(difference) << "\n";
            return difference.is_zero() ? 0 : 1;
        }

        if (*check_cmd) {
            verification_report report;
            if (kind == "bialgebroid") {
                if (data_file.empty()) throw error("check bialgebroid needs a data file");
                check_result r = check_bialgebroid(load_structure(data_file).to_bialgebroid());
                report.add(r);
            } else if (kind == "courant") {
                lie_bialgebroid B = data_file.empty()
                                        ? so3_bialgebroid()
                                        : load_structure(data_file).to_bialgebroid();
                if (params.dim != B.dim()) params.dim = B.dim();
                report = check_courant_suite(B, params);
            } else if (kind == "proto") {
                if (data_file.empty()) {
                    report = check_proto_suite();
                } else {
                    structure_file sf = load_structure(data_file);
                    report.add(check_proto(sf.to_bialgebroid(), sf.to_flux()));
                }
            } else if (kind == "strong") {
                report = check_strong_constraint(params);
            } else if (kind == "project") {
                report = check_projection(params);
            } else if (kind == "genlie") {
                report = check_gen_lie_closure(params);
            } else if (kind == "metric") {
                report = check_metric_suite(params);
            } else {
                throw error("unknown check kind: " + kind);
            }
            print_report(report);
            return report_exit(report);
        }

        if (*selftest_cmd) {
            verification_report report = run_selftest(quick);
            print_report(report);
            return report_exit(report);
        }
    } catch (const parse_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
