#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"
#include "svet/errors.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Svetlichny-operator toolkit for N-party spin-j GHZ states"};
    app.require_subcommand(1);

    svetcli::Options opt;

    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "Output format: table, json, or csv")
            ->check(CLI::IsMember({"table", "json", "csv"}))
            ->each([&](const std::string&) { opt.format_given = true; });
    };
    const auto add_threads = [&](CLI::App* cmd) {
        cmd->add_option("--threads", opt.threads,
                        "Worker threads (0 = available parallelism)");
    };

    CLI::App* bounds = app.add_subcommand(
        "bounds", "LHV, quantum, and fixed-sign bounds for a party range");
    bounds->add_option("--n", opt.n_text, "Party count or inclusive range a..b")
        ->required();
    add_format(bounds);

    CLI::App* scheme = app.add_subcommand(
        "scheme", "Build the optimal measurement scheme and report its value");
    scheme->add_option("--n", opt.n_text, "Party count")->required();
    scheme->add_option("--spin", opt.spin_text, "Spin, e.g. 1/2, 3/2, 1, 2")
        ->required();
    scheme->add_option("--signs", opt.signs_text,
                       "Zero-phase signs per party, e.g. ++,++,+-");
    scheme->add_flag("--auto-signs", opt.auto_signs,
                     "Search for the optimal zero-phase signs (integer spin)");
    scheme->add_option("--out", opt.out_file, "Write the scenario JSON here");
    scheme->add_option("--max-n", opt.max_parties, "Evaluation cap on parties");
    add_format(scheme);
    add_threads(scheme);

    CLI::App* evaluate = app.add_subcommand(
        "evaluate", "Evaluate the Svetlichny expectation of a scenario file");
    evaluate->add_option("--file", opt.scenario_file, "Scenario JSON file")
        ->required();
    evaluate->add_flag("--oracle", opt.oracle,
                       "Also run the dense matrix oracle and print the difference");
    evaluate->add_option("--dimension-guard", opt.dimension_guard,
                         "Amplitude cap for the oracle state");
    evaluate->add_option("--max-n", opt.max_parties, "Evaluation cap on parties");
    add_format(evaluate);

    CLI::App* search = app.add_subcommand(
        "search", "Exhaustive search over the m=0 sign assignments");
    search->add_option("--n", opt.n_text, "Party count")->required();
    add_format(search);
    add_threads(search);

    CLI::App* sweep = app.add_subcommand(
        "sweep", "Scheme values over ranges of parties and spins (CSV by default)");
    sweep->add_option("--n", opt.n_text, "Party count or inclusive range a..b")
        ->required();
    sweep->add_option("--spin", opt.spin_text,
                      "Spin or inclusive range, e.g. 1..10 or 1/2..5/2")
        ->required();
    sweep->add_option("--max-n", opt.max_parties, "Evaluation cap on parties");
    add_format(sweep);
    add_threads(sweep);

    CLI::App* verify = app.add_subcommand(
        "verify", "Recompute all published values and check them");
    verify->add_flag("--quick", opt.quick,
                     "Skip oracle cross-checks above 2^12 amplitudes");
    verify->add_option("--fixtures", opt.fixtures_file,
                       "JSON file overriding the golden values");
    verify->add_option("--dimension-guard", opt.dimension_guard,
                       "Amplitude cap for the oracle state");
    add_threads(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (bounds->parsed())
            return svetcli::run_bounds(opt);
        if (scheme->parsed())
            return svetcli::run_scheme(opt);
        if (evaluate->parsed())
            return svetcli::run_evaluate(opt);
        if (search->parsed())
            return svetcli::run_search(opt);
        if (sweep->parsed())
            return svetcli::run_sweep(opt);
        if (verify->parsed())
            return svetcli::run_verify(opt);
    } catch (const svet::GuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
