#pragma once

#include <cstdint>
#include <string>

#include "svet/state.hpp"

namespace svetcli {

struct Options {
    std::string n_text = "3";
    std::string spin_text;
    std::string signs_text;
    bool auto_signs = false;
    std::string scenario_file;
    std::string out_file;
    std::string fixtures_file;
    std::string format = "table";
    bool format_given = false;
    bool oracle = false;
    bool quick = false;
    std::int64_t dimension_guard = svet::kDefaultDimensionGuard;
    int max_parties = 16;
    unsigned threads = 0;
};

int run_bounds(const Options& opt);
int run_scheme(const Options& opt);
int run_evaluate(const Options& opt);
int run_search(const Options& opt);
int run_sweep(const Options& opt);
int run_verify(const Options& opt);

} // namespace svetcli
