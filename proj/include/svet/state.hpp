#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>

#include "svet/operator.hpp"
#include "svet/settings_tuple.hpp"
#include "svet/spin.hpp"

namespace svet {

/// Default cap on the number of amplitudes a dense state may hold.
inline constexpr std::int64_t kDefaultDimensionGuard = std::int64_t{1} << 21;

/// A normalized pure state of N spin-j parties over the (2j+1)^N product
/// basis. Basis index = sum_i (basis index of party i's m) * d^{N-1-i}, with
/// party 0 most significant.
class StateVector {
public:
    StateVector(int n_parties, SpinJ j, Eigen::VectorXcd amplitudes);

    int parties() const noexcept { return n_; }
    SpinJ spin() const noexcept { return j_; }
    std::int64_t dimension() const noexcept { return amplitudes_.size(); }
    const Eigen::VectorXcd& amplitudes() const noexcept { return amplitudes_; }

private:
    int n_;
    SpinJ j_;
    Eigen::VectorXcd amplitudes_;
};

/// Product-space dimension d^n (d = 2j+1), or throws DimensionGuardExceeded
/// when it would pass the guard.
std::int64_t guarded_dimension(int n_parties, SpinJ j, std::int64_t guard);

/// The GHZ-type state (1/sqrt(2j+1)) sum_m |m>^{tensor n}.
StateVector make_ghz(int n_parties, SpinJ j,
                     std::int64_t dimension_guard = kDefaultDimensionGuard);

/// The two operators of one party, indexed by its setting bit.
struct OperatorPair {
    MeasurementOperator setting0;
    MeasurementOperator setting1;

    const MeasurementOperator& operator[](int setting) const {
        return setting == 0 ? setting0 : setting1;
    }
};

/// Applies the tensor product of each party's chosen operator to the state,
/// one party-local d x d factor at a time (the d^N x d^N product matrix is
/// never formed).
StateVector apply_setting(const StateVector& state,
                          std::span<const OperatorPair> ops,
                          const SettingsTuple& settings);

} // namespace svet
