#pragma once

#include <compare>
#include <vector>

#include "svet/errors.hpp"

namespace svet {

/// Spin value j, stored as 2j so that integers and half-integers share one
/// exact representation. Half-integer j (odd 2j) is fermionic, integer j
/// (even 2j) bosonic.
class SpinJ {
public:
    explicit SpinJ(int twice_j);

    int twice() const noexcept { return twice_; }
    double value() const noexcept { return 0.5 * twice_; }

    bool is_half_integer() const noexcept { return (twice_ & 1) != 0; }
    bool is_integer() const noexcept { return (twice_ & 1) == 0; }

    /// Hilbert-space dimension 2j + 1.
    int dimension() const noexcept { return twice_ + 1; }

    friend bool operator==(SpinJ, SpinJ) = default;

private:
    int twice_;
};

/// Magnetic quantum number m for some spin space, stored as 2m. Valid values
/// run over -j, -j+1, ..., j and share the parity of 2j.
class MagneticIndex {
public:
    MagneticIndex(SpinJ j, int twice_m);

    int twice() const noexcept { return twice_; }
    double value() const noexcept { return 0.5 * twice_; }
    bool is_zero() const noexcept { return twice_ == 0; }
    bool is_positive() const noexcept { return twice_ > 0; }

    /// Position of |m> in the basis ordered by increasing m (index 0 is m=-j).
    int basis_index(SpinJ j) const;
    static MagneticIndex at_basis_index(SpinJ j, int index);

    friend bool operator==(MagneticIndex, MagneticIndex) = default;

private:
    int twice_;
};

/// Number of strictly positive m values for spin j.
int positive_m_count(SpinJ j) noexcept;

/// All strictly positive m values in increasing order.
std::vector<MagneticIndex> positive_m_values(SpinJ j);

} // namespace svet
