#include "svet/state.hpp"

#include <cmath>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "svet/errors.hpp"

namespace svet {

namespace {

constexpr double kNormTol = 1e-12;

}

StateVector::StateVector(int n_parties, SpinJ j, Eigen::VectorXcd amplitudes)
    : n_(n_parties), j_(j), amplitudes_(std::move(amplitudes)) {
    if (n_parties < 1)
        throw std::invalid_argument("state needs at least one party");
    __int128 dim = 1;
    for (int i = 0; i < n_parties && dim <= amplitudes_.size(); ++i)
        dim *= j.dimension();
    if (static_cast<__int128>(amplitudes_.size()) != dim)
        throw ShapeMismatch("amplitude count " + std::to_string(amplitudes_.size()) +
                            " does not equal (2j+1)^n for 2j = " +
                            std::to_string(j.twice()) + ", n = " +
                            std::to_string(n_parties));
    if (std::abs(amplitudes_.squaredNorm() - 1.0) > kNormTol)
        throw std::invalid_argument("state vector is not normalized");
}

std::int64_t guarded_dimension(int n_parties, SpinJ j, std::int64_t guard) {
    if (n_parties < 1)
        throw std::invalid_argument("need at least one party");
    const std::int64_t d = j.dimension();
    __int128 dim = 1;
    for (int i = 0; i < n_parties; ++i) {
        dim *= d;
        if (dim > guard)
            throw DimensionGuardExceeded(
                "product dimension " + std::string(dim > (__int128{1} << 62) ? ">2^62"
                                       : std::to_string(static_cast<std::int64_t>(dim))) +
                " exceeds the guard of " + std::to_string(guard) + " amplitudes");
    }
    return static_cast<std::int64_t>(dim);
}

StateVector make_ghz(int n_parties, SpinJ j, std::int64_t dimension_guard) {
    const std::int64_t dim = guarded_dimension(n_parties, j, dimension_guard);
    const int d = j.dimension();
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(dim);
    // All-parties-at-m indices are multiples of 1 + d + ... + d^{N-1}.
    const std::int64_t repunit = (dim - 1) / (d - 1);
    const double amplitude = 1.0 / std::sqrt(static_cast<double>(d));
    for (int t = 0; t < d; ++t)
        amps[t * repunit] = amplitude;
    return {n_parties, j, std::move(amps)};
}

StateVector apply_setting(const StateVector& state,
                          std::span<const OperatorPair> ops,
                          const SettingsTuple& settings) {
    const int n = state.parties();
    if (static_cast<int>(ops.size()) != n)
        throw ShapeMismatch("need one operator pair per party");
    if (settings.size() != n)
        throw ShapeMismatch("settings tuple length does not match party count");
    for (const OperatorPair& pair : ops)
        if (pair.setting0.spin() != state.spin() || pair.setting1.spin() != state.spin())
            throw ShapeMismatch("operator spin does not match the state");

    const int d = state.spin().dimension();
    Eigen::VectorXcd amps = state.amplitudes();
    std::vector<std::complex<double>> fiber(static_cast<std::size_t>(d));

    // Party 0 is most significant: its stride is d^{N-1}.
    std::int64_t stride = amps.size() / d;
    for (int party = 0; party < n; ++party) {
        const Eigen::MatrixXcd& m = ops[party][settings.setting(party)].matrix();
        const std::int64_t blocks = amps.size() / (stride * d);
        for (std::int64_t block = 0; block < blocks; ++block) {
            const std::int64_t base = block * stride * d;
            for (std::int64_t inner = 0; inner < stride; ++inner) {
                for (int r = 0; r < d; ++r)
                    fiber[static_cast<std::size_t>(r)] = amps[base + inner + r * stride];
                for (int r = 0; r < d; ++r) {
                    std::complex<double> acc = 0.0;
                    for (int c = 0; c < d; ++c)
                        acc += m(r, c) * fiber[static_cast<std::size_t>(c)];
                    amps[base + inner + r * stride] = acc;
                }
            }
        }
        stride /= d;
    }
    return {n, state.spin(), std::move(amps)};
}

} // namespace svet
