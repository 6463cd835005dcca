// Command-line front end: fixed-point tables, localized A-hat series and the
// spin obstruction check for circle actions with isolated fixed points.

#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <ahat/cli.hpp>

namespace
{

struct source_options {
    std::int64_t n = 0;
    std::vector<std::int64_t> exponents;
    std::string input;
    std::int64_t order = 0;
    std::string format = "table";
    bool dense = false;
};

CLI::App *add_subcommand(CLI::App &app, const std::string &name, const std::string &description,
                         source_options &opts, bool with_sources, bool with_order, bool with_dense)
{
    auto *sub = app.add_subcommand(name, description);
    auto *n_opt = sub->add_option("--n", opts.n, "standard action on CP^n");
    if (with_sources) {
        auto *e_opt = sub->add_option("--exponents", opts.exponents, "exponents a0,a1,... of a linear action")
                          ->delimiter(',');
        auto *i_opt = sub->add_option("--input", opts.input, "fixed-point data document (JSON)");
        n_opt->excludes(e_opt)->excludes(i_opt);
        e_opt->excludes(i_opt);
    }
    if (with_order) {
        sub->add_option("--order", opts.order, "truncation order in s (default 2 * max weight sum + 1)");
    }
    sub->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"table", "structured"}));
    if (with_dense) {
        sub->add_flag("--dense", opts.dense, "print every coefficient, zeros included");
    }
    return sub;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Equivariant A-hat localization and spin obstruction for circle actions"};
    app.require_subcommand(1);

    source_options opts;
    const std::map<std::string, ahat::cli::subcommand> commands{
        {"weights", ahat::cli::subcommand::weights},
        {"series", ahat::cli::subcommand::series},
        {"check", ahat::cli::subcommand::check},
        {"cross-validate", ahat::cli::subcommand::cross_validate},
    };
    add_subcommand(app, "weights", "print the fixed-point table", opts, true, false, false);
    add_subcommand(app, "series", "print the localized A-hat series", opts, true, true, true);
    add_subcommand(app, "check", "run the spin obstruction check", opts, true, true, false);
    add_subcommand(app, "cross-validate", "compare parity, series vanishing and obstruction on CP^n", opts, false,
                   true, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const auto code = app.exit(e);
        return code == 0 ? 0 : ahat::cli::exit_usage;
    }

    ahat::cli::command_config cfg;
    for (const auto &[name, command] : commands) {
        const auto *sub = app.get_subcommand(name);
        if (!sub->parsed()) {
            continue;
        }
        cfg.command = command;
        if (sub->count("--n") > 0) {
            cfg.n = opts.n;
        }
        if (sub->get_option_no_throw("--exponents") != nullptr && sub->count("--exponents") > 0) {
            cfg.exponents = opts.exponents;
        }
        if (sub->get_option_no_throw("--input") != nullptr && sub->count("--input") > 0) {
            cfg.input_path = opts.input;
        }
        if (sub->get_option_no_throw("--order") != nullptr && sub->count("--order") > 0) {
            cfg.order = opts.order;
        }
    }
    cfg.format = opts.format == "structured" ? ahat::cli::output_format::structured : ahat::cli::output_format::table;
    cfg.dense = opts.dense;

    const auto result = ahat::cli::run(cfg);
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}
