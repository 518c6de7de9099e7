#pragma once

// Seeded random generators for property-style tests.

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "svet/phase_table.hpp"
#include "svet/svetlichny.hpp"

namespace testsupport {

inline svet::RationalAngle random_angle(std::mt19937& rng, int max_den = 24) {
    const int den = std::uniform_int_distribution<int>(1, max_den)(rng);
    const int num = std::uniform_int_distribution<int>(0, 2 * den - 1)(rng);
    return {num, den};
}

inline svet::PhaseTable random_table(svet::SpinJ j, std::mt19937& rng,
                                     int max_den = 24) {
    std::vector<svet::Phase> upper;
    for (int i = 0; i < svet::positive_m_count(j); ++i)
        upper.emplace_back(random_angle(rng, max_den));
    std::optional<svet::Phase> zero;
    if (j.is_integer())
        zero = svet::Phase(std::uniform_int_distribution<int>(0, 1)(rng)
                               ? svet::RationalAngle::pi()
                               : svet::RationalAngle());
    return svet::make_phase_table(j, std::move(upper), zero);
}

inline svet::Scenario random_scenario(int n, svet::SpinJ j, std::mt19937& rng,
                                      int max_den = 24) {
    std::vector<svet::PartyTables> parties;
    for (int i = 0; i < n; ++i)
        parties.push_back({random_table(j, rng, max_den), random_table(j, rng, max_den)});
    return {j, std::move(parties)};
}

/// Shapes (n, twice_j) with d^n <= 2^16 for oracle-agreement runs. The first
/// shapes sit on the dimension boundary; the rest favour cheap dimensions so
/// the matrix oracle stays fast.
inline std::vector<std::pair<int, int>> oracle_shapes(int count,
                                                      std::mt19937& rng) {
    static constexpr int kMaxD[] = {40, 16, 9, 6, 4, 4}; // n = 3..8
    std::vector<std::pair<int, int>> shapes;
    for (int n = 3; n <= 8 && static_cast<int>(shapes.size()) < count; ++n)
        shapes.emplace_back(n, kMaxD[n - 3] - 1);
    while (static_cast<int>(shapes.size()) < count) {
        const int n = std::uniform_int_distribution<int>(3, 8)(rng);
        // Weight d by the inverse of the oracle cost 2^n * n * d^{n+1}.
        std::vector<double> weights;
        for (int d = 2; d <= kMaxD[n - 3]; ++d) {
            double cost = static_cast<double>(n) * static_cast<double>(1 << n);
            for (int i = 0; i <= n; ++i)
                cost *= d;
            weights.push_back(1.0 / cost);
        }
        std::discrete_distribution<int> pick(weights.begin(), weights.end());
        shapes.emplace_back(n, 2 + pick(rng) - 1);
    }
    return shapes;
}

} // namespace testsupport
