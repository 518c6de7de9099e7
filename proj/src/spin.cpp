#include "svet/spin.hpp"

#include <string>

namespace svet {

SpinJ::SpinJ(int twice_j) : twice_(twice_j) {
    if (twice_j < 1)
        throw NonZeroSpinRequired("spin must be non-zero, got 2j = " +
                                  std::to_string(twice_j));
}

MagneticIndex::MagneticIndex(SpinJ j, int twice_m) : twice_(twice_m) {
    if (twice_m < -j.twice() || twice_m > j.twice())
        throw std::invalid_argument("magnetic index 2m = " + std::to_string(twice_m) +
                                    " out of range for 2j = " + std::to_string(j.twice()));
    if (((twice_m - j.twice()) & 1) != 0)
        throw std::invalid_argument("magnetic index 2m = " + std::to_string(twice_m) +
                                    " has wrong parity for 2j = " + std::to_string(j.twice()));
}

int MagneticIndex::basis_index(SpinJ j) const {
    if (twice_ < -j.twice() || twice_ > j.twice() || ((twice_ - j.twice()) & 1) != 0)
        throw std::invalid_argument("magnetic index does not belong to this spin space");
    return (twice_ + j.twice()) / 2;
}

MagneticIndex MagneticIndex::at_basis_index(SpinJ j, int index) {
    if (index < 0 || index >= j.dimension())
        throw std::invalid_argument("basis index out of range");
    return {j, 2 * index - j.twice()};
}

int positive_m_count(SpinJ j) noexcept {
    return (j.twice() + 1) / 2;
}

std::vector<MagneticIndex> positive_m_values(SpinJ j) {
    std::vector<MagneticIndex> out;
    const int first = j.is_integer() ? 2 : 1;
    for (int twice_m = first; twice_m <= j.twice(); twice_m += 2)
        out.emplace_back(j, twice_m);
    return out;
}

} // namespace svet
