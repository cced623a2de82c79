// korder: order-derivatives of the modified Bessel function K and its damped
// cosine kernel at order one half, plus the weighted Bessel series they feed.
//
//   korder eval   --n 2 --x 1.5          one derivative, with comparator
//   korder table  --n 3 --x-grid 0.5,4,8 derivative table over a grid
//   korder verify --suite all            self-check suites
//   korder alpha  --n 2 --j-max 60       series Taylor coefficients
//
// Data goes to stdout, diagnostics to stderr.  Exit codes: 0 success,
// 1 a verification check failed, 2 infrastructure trouble (bad arguments or
// quadrature non-convergence).

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "korder/cli_app.hpp"

int main(int argc, char** argv) {
    CLI::App app{"order-derivatives of Bessel K at one half"};
    app.require_subcommand(1);

    korder::RunConfig cfg;
    std::string grid_text;
    std::string format_text = "json";

    // The default tolerance can come from the environment; an explicit --tol
    // always wins.
    if (const char* env = std::getenv("KORDER_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0.0) cfg.tol = v;
    }

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--tol", cfg.tol, "absolute quadrature tolerance");
        cmd->add_option("--format", format_text, "output format: json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--digits", cfg.digits, "significant digits in output")
            ->check(CLI::Range(1, 17));
    };

    CLI::App* eval = app.add_subcommand("eval", "one derivative order at one x");
    eval->add_option("--n", cfg.n, "derivative order (0..6)")->check(CLI::Range(0, 6));
    eval->add_option("--x", cfg.x, "evaluation point, x > 0");
    add_common(eval);

    CLI::App* table = app.add_subcommand("table", "derivative table over an x grid");
    table->add_option("--n", cfg.n, "highest order (0..6)")->check(CLI::Range(0, 6));
    table->add_option("--x", cfg.x, "single evaluation point");
    table->add_option("--x-grid", grid_text, "grid as start,stop,count");
    add_common(table);

    CLI::App* verify = app.add_subcommand("verify", "run a self-check suite");
    verify->add_option("--suite", cfg.suite,
                       "kernels|quadrature|first-order|higher-order|zeta|all");
    add_common(verify);

    CLI::App* alpha = app.add_subcommand("alpha", "series Taylor coefficients");
    alpha->add_option("--n", cfg.n, "highest coefficient order (0..4)")
        ->check(CLI::Range(0, 4));
    alpha->add_option("--j-max", cfg.j_max, "series truncation")
        ->check(CLI::Range(1, 100000));
    add_common(alpha);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        // CLI11 returns 0 for --help; anything else is an argument problem.
        return code == 0 ? korder::exit_ok : korder::exit_infrastructure;
    }

    cfg.format = format_text == "csv" ? korder::OutputFormat::csv
                                      : korder::OutputFormat::json;
    try {
        if (!grid_text.empty()) cfg.x_grid = korder::parse_grid(grid_text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return korder::exit_infrastructure;
    }

    if (eval->parsed()) return korder::run_eval(cfg, std::cout, std::cerr);
    if (table->parsed()) return korder::run_table(cfg, std::cout, std::cerr);
    if (verify->parsed()) return korder::run_verify(cfg, std::cout, std::cerr);
    if (alpha->parsed()) return korder::run_alpha(cfg, std::cout, std::cerr);
    return korder::exit_infrastructure;  // unreachable with require_subcommand
}
