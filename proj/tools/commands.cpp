#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "svet/errors.hpp"
#include "svet/io.hpp"
#include "svet/schemes.hpp"
#include "svet/svetlichny.hpp"
#include "verify_checks.hpp"

namespace svetcli {

namespace {

namespace io = svet::io;
using svet::SpinJ;

int parse_int(std::string_view text, const char* what) {
    int value = 0;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        throw std::invalid_argument(std::string(what) + ": cannot parse \"" +
                                    std::string(text) + "\"");
    return value;
}

// "a" or "a..b", both ends inclusive.
std::pair<std::string_view, std::string_view> split_range(std::string_view text) {
    const auto dots = text.find("..");
    if (dots == std::string_view::npos)
        return {text, text};
    return {text.substr(0, dots), text.substr(dots + 2)};
}

std::pair<int, int> parse_n_range(const std::string& text) {
    const auto [lo_text, hi_text] = split_range(text);
    const int lo = parse_int(lo_text, "n");
    const int hi = parse_int(hi_text, "n");
    if (lo < 3)
        throw std::invalid_argument("n must be >= 3");
    if (hi < lo)
        throw std::invalid_argument("n range must not decrease");
    return {lo, hi};
}

int parse_single_n(const std::string& text) {
    const auto [lo, hi] = parse_n_range(text);
    if (lo != hi)
        throw std::invalid_argument("this command takes a single n, not a range");
    return lo;
}

// Spin text "p" or "p/q" with q in {1, 2}; returns 2j.
int parse_spin_twice(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return 2 * parse_int(text, "spin");
    const int num = parse_int(text.substr(0, slash), "spin");
    const int den = parse_int(text.substr(slash + 1), "spin");
    if (den == 1)
        return 2 * num;
    if (den == 2)
        return num;
    throw std::invalid_argument("spin denominator must be 1 or 2");
}

std::vector<int> parse_spin_range(const std::string& text) {
    const auto [lo_text, hi_text] = split_range(text);
    const int lo = parse_spin_twice(lo_text);
    const int hi = parse_spin_twice(hi_text);
    if (hi < lo)
        throw std::invalid_argument("spin range must not decrease");
    if (((hi - lo) & 1) != 0)
        throw std::invalid_argument(
            "spin range endpoints must both be integer or both half-integer");
    std::vector<int> twice;
    for (int t = lo; t <= hi; t += 2)
        twice.push_back(t);
    return twice;
}

void enforce_party_cap(int n, const Options& opt) {
    if (n > opt.max_parties)
        throw svet::GuardError("n = " + std::to_string(n) +
                               " exceeds the evaluation cap of " +
                               std::to_string(opt.max_parties) +
                               " parties (raise with --max-n)");
}

const svet::SignAssignment& lexicographic_smallest(const svet::SearchResult& result) {
    return *std::min_element(
        result.best_assignments.begin(), result.best_assignments.end(),
        [](const svet::SignAssignment& a, const svet::SignAssignment& b) {
            return a.str() < b.str();
        });
}

// Scheme selection for one (n, j): fermionic spins need no signs; integer
// spins take --signs or the search maximizer under --auto-signs.
svet::Scenario build_scheme(int n, SpinJ j, const Options& opt) {
    if (j.is_half_integer())
        return svet::fermion_scheme(n, j);
    if (!opt.signs_text.empty())
        return svet::boson_scheme(n, j, svet::SignAssignment::parse(opt.signs_text));
    if (opt.auto_signs) {
        const auto result = svet::search_zero_signs(n, opt.threads);
        return svet::boson_scheme(n, j, lexicographic_smallest(result));
    }
    throw std::invalid_argument(
        "integer spin needs a zero-sign assignment: pass --signs or --auto-signs");
}

void print_report_table(const svet::SvetlichnyReport& r) {
    std::printf("parties        %d\n", r.n);
    std::printf("twice spin     %d\n", r.twice_j);
    std::printf("value          %s\n", io::format_double(r.value).c_str());
    std::printf("lhv bound      %s\n", io::format_double(r.lhv_bound).c_str());
    std::printf("quantum bound  %s\n", io::format_double(r.quantum_bound).c_str());
    std::printf("fixed-sign     %s\n", io::format_double(r.fixed_sign_bound).c_str());
    std::printf("ratio          %s\n", io::format_double(r.ratio).c_str());
    std::printf("violated       %s\n", r.violated ? "yes" : "no");
}

std::vector<std::string> report_csv_fields(const svet::SvetlichnyReport& r) {
    return {std::to_string(r.n),        std::to_string(r.twice_j),
            io::format_double(r.value), io::format_double(r.lhv_bound),
            io::format_double(r.ratio), r.violated ? "true" : "false"};
}

constexpr const char* kSweepHeader = "n,twice_j,value,lhv_bound,ratio,violated";

} // namespace

int run_bounds(const Options& opt) {
    const auto [lo, hi] = parse_n_range(opt.n_text);
    if (opt.format == "json") {
        std::string out = "[";
        for (int n = lo; n <= hi; ++n) {
            const auto b = svet::bounds(n);
            if (n > lo)
                out += ',';
            out += "{\"n\":" + std::to_string(n);
            out += ",\"lhv_bound\":" + io::format_double(b.lhv);
            out += ",\"quantum_bound\":" + io::format_double(b.quantum);
            out += ",\"fixed_sign_bound\":" + io::format_double(b.fixed_sign) + "}";
        }
        std::cout << out << "]\n";
    } else if (opt.format == "csv") {
        std::cout << "n,lhv_bound,quantum_bound,fixed_sign_bound\n";
        for (int n = lo; n <= hi; ++n) {
            const auto b = svet::bounds(n);
            std::cout << io::csv_row({std::to_string(n), io::format_double(b.lhv),
                                      io::format_double(b.quantum),
                                      io::format_double(b.fixed_sign)})
                      << "\n";
        }
    } else {
        std::printf("%4s %14s %14s %14s\n", "n", "lhv", "quantum", "fixed-sign");
        for (int n = lo; n <= hi; ++n) {
            const auto b = svet::bounds(n);
            std::printf("%4d %14s %14s %14s\n", n, io::format_double(b.lhv).c_str(),
                        io::format_double(b.quantum).c_str(),
                        io::format_double(b.fixed_sign).c_str());
        }
    }
    return 0;
}

int run_scheme(const Options& opt) {
    const int n = parse_single_n(opt.n_text);
    enforce_party_cap(n, opt);
    const SpinJ j(parse_spin_twice(opt.spin_text));
    const svet::Scenario scenario = build_scheme(n, j, opt);
    const double value = svet::expectation_analytic(scenario);
    const auto report = svet::make_report(n, j, value);

    if (!opt.out_file.empty()) {
        std::ofstream out(opt.out_file, std::ios::binary);
        if (!out)
            throw std::invalid_argument("cannot write scenario file: " + opt.out_file);
        out << io::to_json(scenario) << "\n";
    }

    if (opt.format == "json") {
        std::cout << io::to_json(report) << "\n";
    } else if (opt.format == "csv") {
        std::cout << kSweepHeader << "\n"
                  << io::csv_row(report_csv_fields(report)) << "\n";
    } else {
        print_report_table(report);
        if (!opt.out_file.empty())
            std::printf("scenario       %s\n", opt.out_file.c_str());
    }
    return 0;
}

int run_evaluate(const Options& opt) {
    const svet::Scenario scenario = io::load_scenario(opt.scenario_file);
    enforce_party_cap(scenario.parties(), opt);
    const double value = svet::expectation_analytic(scenario);
    const auto report = svet::make_report(scenario.parties(), scenario.spin(), value);

    std::optional<double> oracle;
    if (opt.oracle)
        oracle = svet::expectation_oracle(scenario, opt.dimension_guard);

    if (opt.format == "json") {
        if (oracle) {
            std::cout << "{\"report\":" << io::to_json(report)
                      << ",\"oracle_value\":" << io::format_double(*oracle)
                      << ",\"difference\":" << io::format_double(value - *oracle)
                      << "}\n";
        } else {
            std::cout << io::to_json(report) << "\n";
        }
    } else if (opt.format == "csv") {
        std::cout << kSweepHeader << "\n"
                  << io::csv_row(report_csv_fields(report)) << "\n";
    } else {
        print_report_table(report);
        if (oracle) {
            std::printf("oracle         %s\n", io::format_double(*oracle).c_str());
            std::printf("difference     %s\n",
                        io::format_double(value - *oracle).c_str());
        }
    }
    return 0;
}

int run_search(const Options& opt) {
    const int n = parse_single_n(opt.n_text);
    const auto result = svet::search_zero_signs(n, opt.threads);
    const double bound = svet::bounds(n).fixed_sign;
    if (opt.format == "json") {
        std::cout << io::to_json(result) << "\n";
    } else if (opt.format == "csv") {
        std::cout << "n,best_value,bound,evaluated,maximizers\n"
                  << io::csv_row({std::to_string(n), std::to_string(result.best_value),
                                  io::format_double(bound),
                                  std::to_string(result.evaluated_count),
                                  std::to_string(result.best_assignments.size())})
                  << "\n";
    } else {
        std::printf("parties        %d\n", n);
        std::printf("best value     %lld\n", result.best_value);
        std::printf("bound          %s\n", io::format_double(bound).c_str());
        std::printf("evaluated      %lld\n", result.evaluated_count);
        std::printf("maximizers     %zu\n", result.best_assignments.size());
        std::printf("smallest       %s\n",
                    lexicographic_smallest(result).str().c_str());
    }
    return 0;
}

int run_sweep(const Options& opt) {
    const auto [nlo, nhi] = parse_n_range(opt.n_text);
    enforce_party_cap(nhi, opt);
    const std::vector<int> spins = parse_spin_range(opt.spin_text);
    const std::string format = opt.format_given ? opt.format : "csv";

    // One search per integer-spin n, shared across the spin sweep.
    std::map<int, svet::SignAssignment> auto_signs;
    std::vector<svet::SvetlichnyReport> rows;
    for (int n = nlo; n <= nhi; ++n) {
        for (int twice : spins) {
            const SpinJ j(twice);
            const svet::Scenario scenario = [&] {
                if (j.is_half_integer())
                    return svet::fermion_scheme(n, j);
                auto found = auto_signs.find(n);
                if (found == auto_signs.end()) {
                    const auto result = svet::search_zero_signs(n, opt.threads);
                    found = auto_signs.emplace(n, lexicographic_smallest(result)).first;
                }
                return svet::boson_scheme(n, j, found->second);
            }();
            rows.push_back(
                svet::make_report(n, j, svet::expectation_analytic(scenario)));
        }
    }

    if (format == "json") {
        std::string out = "[";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i > 0)
                out += ',';
            out += io::to_json(rows[i]);
        }
        std::cout << out << "]\n";
    } else if (format == "table") {
        std::printf("%4s %8s %14s %12s %12s %9s\n", "n", "twice_j", "value", "lhv",
                    "ratio", "violated");
        for (const auto& r : rows)
            std::printf("%4d %8d %14s %12s %12s %9s\n", r.n, r.twice_j,
                        io::format_double(r.value).c_str(),
                        io::format_double(r.lhv_bound).c_str(),
                        io::format_double(r.ratio).c_str(),
                        r.violated ? "true" : "false");
    } else {
        std::cout << kSweepHeader << "\n";
        for (const auto& r : rows)
            std::cout << io::csv_row(report_csv_fields(r)) << "\n";
    }
    return 0;
}

int run_verify(const Options& opt) {
    VerifyConfig config;
    config.quick = opt.quick;
    config.dimension_guard = opt.dimension_guard;
    config.threads = opt.threads;
    config.fixtures_file = opt.fixtures_file;

    const auto checks = run_golden_checks(config);
    bool all_passed = true;
    for (const CheckResult& check : checks) {
        if (check.passed) {
            std::printf("PASS  %-18s %s\n", check.name.c_str(), check.detail.c_str());
        } else {
            all_passed = false;
            std::printf("FAIL  %-18s %s\n", check.name.c_str(), check.detail.c_str());
        }
    }
    if (!all_passed) {
        std::printf("verification failed\n");
        return 4;
    }
    std::printf("all %zu checks passed\n", checks.size());
    return 0;
}

} // namespace svetcli
