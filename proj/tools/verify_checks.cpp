#include "verify_checks.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "svet/errors.hpp"
#include "svet/io.hpp"
#include "svet/schemes.hpp"
#include "svet/svetlichny.hpp"
#include "svet/tolerances.hpp"

namespace svetcli {

namespace {

using namespace svet;

// Golden values; a fixtures file may override them.
struct Goldens {
    std::vector<long long> search_maxima = {4, 8, 8, 16, 16};      // n = 4..8
    std::vector<double> violation_ratios = {1.10948, 1.10948, 1.02614,
                                            1.02614, 0.984476};    // j = 1
    double ratio_tolerance = 1e-5;
    double three_party_boson_value = (2.0 / 3.0) * (2.0 + 4.0 * std::sqrt(2.0));
};

Goldens load_goldens(const std::string& path) {
    Goldens goldens;
    if (path.empty())
        return goldens;
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::invalid_argument("cannot open fixtures file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("fixtures file: " + std::string(e.what()));
    }
    if (doc.contains("search_maxima"))
        goldens.search_maxima = doc["search_maxima"].get<std::vector<long long>>();
    if (doc.contains("violation_ratios"))
        goldens.violation_ratios = doc["violation_ratios"].get<std::vector<double>>();
    if (doc.contains("ratio_tolerance"))
        goldens.ratio_tolerance = doc["ratio_tolerance"].get<double>();
    if (doc.contains("three_party_boson_value"))
        goldens.three_party_boson_value =
            doc["three_party_boson_value"].get<double>();
    return goldens;
}

RationalAngle random_angle(std::mt19937& rng) {
    const int den = std::uniform_int_distribution<int>(1, 24)(rng);
    return {std::uniform_int_distribution<int>(0, 2 * den - 1)(rng), den};
}

PhaseTable random_table(SpinJ j, std::mt19937& rng) {
    std::vector<Phase> upper;
    for (int i = 0; i < positive_m_count(j); ++i)
        upper.emplace_back(random_angle(rng));
    std::optional<Phase> zero;
    if (j.is_integer())
        zero = Phase(std::uniform_int_distribution<int>(0, 1)(rng)
                         ? RationalAngle::pi()
                         : RationalAngle());
    return make_phase_table(j, std::move(upper), zero);
}

Scenario random_scenario(int n, SpinJ j, std::mt19937& rng) {
    std::vector<PartyTables> parties;
    for (int i = 0; i < n; ++i)
        parties.push_back({random_table(j, rng), random_table(j, rng)});
    return {j, std::move(parties)};
}

CheckResult fermion_maximum() {
    double worst = 0.0;
    for (int n = 3; n <= 8; ++n)
        for (int twice_j : {1, 3, 5}) {
            const double target = std::ldexp(1.0, n - 1) * std::sqrt(2.0);
            const double value =
                expectation_analytic(fermion_scheme(n, SpinJ(twice_j)));
            worst = std::max(worst, std::abs(value - target));
        }
    return {"fermion-maximum", worst <= 1e-9,
            "max deviation from 2^{n-1} sqrt(2): " + io::format_double(worst)};
}

CheckResult three_party_boson(const Goldens& goldens) {
    const double value = expectation_analytic(
        boson_scheme(3, SpinJ(2), SignAssignment::parse("++,++,+-")));
    const bool ok = std::abs(value - goldens.three_party_boson_value) <= 1e-9 &&
                    value > 4.0;
    return {"three-party-boson", ok,
            "value " + io::format_double(value) + ", expected " +
                io::format_double(goldens.three_party_boson_value)};
}

CheckResult sign_search(const Goldens& goldens, const VerifyConfig& config) {
    for (int n = 4; n <= 8; ++n) {
        const SearchResult result = search_zero_signs(n, config.threads);
        const long long expected = goldens.search_maxima.at(n - 4);
        if (result.best_value != expected)
            return {"sign-search", false,
                    "n=" + std::to_string(n) + ": maximum " +
                        std::to_string(result.best_value) + ", expected " +
                        std::to_string(expected)};
        const double ratio =
            predicted_max(n, SpinJ(2), result.best_value) / bounds(n).lhv;
        if (std::abs(ratio - goldens.violation_ratios.at(n - 4)) >
            goldens.ratio_tolerance)
            return {"sign-search", false,
                    "n=" + std::to_string(n) + ": ratio " + io::format_double(ratio) +
                        ", expected " +
                        io::format_double(goldens.violation_ratios.at(n - 4))};
        const bool expect_violation = n <= 7;
        if ((ratio > 1.0) != expect_violation)
            return {"sign-search", false,
                    "n=" + std::to_string(n) + ": unexpected violation flag"};
    }
    return {"sign-search", true, "maxima and spin-1 ratios for n = 4..8"};
}

CheckResult fixed_sign_bound() {
    for (int n = 3; n <= 8; ++n) {
        const double bound = std::sqrt(std::ldexp(1.0, n + 1));
        for (std::uint32_t mask = 0; mask < (1u << (2 * n)); ++mask) {
            const SignAssignment signs = SignAssignment::from_mask(n, mask);
            const long long sum = zero_sign_tuple_sum(signs);
            if (static_cast<double>(sum) > bound + 1e-12)
                return {"fixed-sign-bound", false,
                        "n=" + std::to_string(n) + ": sum " + std::to_string(sum) +
                            " above sqrt(2^{n+1})"};
            const FValue f = f_function(signs);
            if (f.re + f.im != sum || f.re * f.re + f.im * f.im != (1ll << n))
                return {"fixed-sign-bound", false,
                        "n=" + std::to_string(n) + ": f identities broken"};
        }
    }
    return {"fixed-sign-bound", true, "all assignments for n = 3..8"};
}

CheckResult oracle_agreement(const VerifyConfig& config) {
    static constexpr int kMaxD[] = {40, 16, 9, 6, 4, 4}; // n = 3..8
    std::mt19937 rng(424242);
    double worst = 0.0;
    int evaluated = 0;
    for (int i = 0; i < 200; ++i) {
        const int n = 3 + i % 6;
        const int span = kMaxD[n - 3] - 1;
        const int d = 2 + (i / 6) % span;
        std::int64_t dim = 1;
        for (int p = 0; p < n; ++p)
            dim *= d;
        if (config.quick && dim > (1 << 12))
            continue;
        if (dim > config.dimension_guard)
            continue;
        const Scenario sc = random_scenario(n, SpinJ(d - 1), rng);
        const double analytic = expectation_analytic(sc);
        const double oracle = expectation_oracle(sc, config.dimension_guard);
        worst = std::max(worst, std::abs(analytic - oracle));
        ++evaluated;
    }
    return {"oracle-agreement", worst <= kOracleTol,
            std::to_string(evaluated) + " scenarios, max difference " +
                io::format_double(worst)};
}

CheckResult operator_properties() {
    std::mt19937 rng(424243);
    for (int iter = 0; iter < 1000; ++iter) {
        const SpinJ j(std::uniform_int_distribution<int>(1, 8)(rng));
        const auto op = make_operator(random_table(j, rng));
        if (!check_hermitian(op) || !check_involution(op))
            return {"operator-properties", false,
                    "matrix check failed at iteration " + std::to_string(iter)};
        for (double value : eigenvalue_set(op))
            if (std::abs(std::abs(value) - 1.0) > kEigenvalueTol)
                return {"operator-properties", false,
                        "eigenvalue " + io::format_double(value) + " at iteration " +
                            std::to_string(iter)};
    }
    return {"operator-properties", true, "1000 random tables up to spin 4"};
}

CheckResult large_spin_limit() {
    const double quantum = bounds(3).quantum;
    double previous = 0.0;
    for (int j = 1; j <= 50; ++j) {
        const double ratio = predicted_max(3, SpinJ(2 * j), 4) / quantum;
        if (ratio <= previous)
            return {"large-spin-limit", false,
                    "ratio not increasing at j = " + std::to_string(j)};
        previous = ratio;
    }
    const double far = predicted_max(3, SpinJ(1000), 4) / quantum;
    return {"large-spin-limit", far > 0.999,
            "ratio at j = 500: " + io::format_double(far)};
}

CheckResult phase_conditions() {
    for (int n = 3; n <= 10; ++n)
        if (!verify_condition(fermion_scheme(n, SpinJ(1)), MagneticIndex(SpinJ(1), 1)))
            return {"phase-conditions", false,
                    "condition violated at n = " + std::to_string(n)};
    return {"phase-conditions", true, "all tuples for n = 3..10"};
}

} // namespace

std::vector<CheckResult> run_golden_checks(const VerifyConfig& config) {
    const Goldens goldens = load_goldens(config.fixtures_file);
    std::vector<CheckResult> results;
    results.push_back(fermion_maximum());
    results.push_back(three_party_boson(goldens));
    results.push_back(sign_search(goldens, config));
    results.push_back(fixed_sign_bound());
    results.push_back(oracle_agreement(config));
    results.push_back(operator_properties());
    results.push_back(large_spin_limit());
    results.push_back(phase_conditions());
    return results;
}

} // namespace svetcli
