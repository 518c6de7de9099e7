#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace svetcli {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyConfig {
    bool quick = false;
    std::int64_t dimension_guard = 0;
    unsigned threads = 0;
    std::string fixtures_file; // optional JSON overriding the golden values
};

/// Recomputes every published number and verifies it against the golden
/// values (or the overrides from fixtures_file).
std::vector<CheckResult> run_golden_checks(const VerifyConfig& config);

} // namespace svetcli
