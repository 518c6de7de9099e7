#include "svet/phase_table.hpp"

#include <string>
#include <utility>

namespace svet {

PhaseTable::PhaseTable(SpinJ j, std::vector<Phase> phases)
    : j_(j), phases_(std::move(phases)) {}

const Phase& PhaseTable::at(int basis_index) const {
    if (basis_index < 0 || basis_index >= dimension())
        throw std::invalid_argument("phase table basis index out of range");
    return phases_[static_cast<std::size_t>(basis_index)];
}

const Phase& PhaseTable::phase(MagneticIndex m) const {
    return at(m.basis_index(j_));
}

bool PhaseTable::all_exact() const noexcept {
    for (const Phase& p : phases_)
        if (!p.is_exact())
            return false;
    return true;
}

PhaseTable PhaseTable::unchecked(SpinJ j, std::vector<Phase> by_basis_index) {
    if (static_cast<int>(by_basis_index.size()) != j.dimension())
        throw ShapeMismatch("phase table needs " + std::to_string(j.dimension()) +
                            " entries, got " + std::to_string(by_basis_index.size()));
    return {j, std::move(by_basis_index)};
}

PhaseTable make_phase_table(SpinJ j, std::vector<Phase> upper_phases,
                            std::optional<Phase> zero_phase) {
    const int expected = positive_m_count(j);
    if (static_cast<int>(upper_phases.size()) != expected)
        throw WrongArity("expected " + std::to_string(expected) +
                         " phases for the positive m of 2j = " + std::to_string(j.twice()) +
                         ", got " + std::to_string(upper_phases.size()));
    if (j.is_half_integer()) {
        if (zero_phase)
            throw ZeroPhaseForbidden("half-integer spin has no m = 0 state");
    } else {
        if (!zero_phase)
            throw WrongArity("integer spin requires a zero phase");
        if (!zero_phase->is_zero_or_pi())
            throw IllegalZeroPhase("the m = 0 phase must be 0 or pi");
    }

    std::vector<Phase> by_index(static_cast<std::size_t>(j.dimension()));
    const int first_twice_m = j.is_integer() ? 2 : 1;
    for (int k = 0; k < expected; ++k) {
        const int twice_m = first_twice_m + 2 * k;
        by_index[static_cast<std::size_t>((twice_m + j.twice()) / 2)] = upper_phases[k];
        by_index[static_cast<std::size_t>((-twice_m + j.twice()) / 2)] =
            upper_phases[k].negated();
    }
    if (j.is_integer())
        by_index[static_cast<std::size_t>(j.twice() / 2)] = *zero_phase;
    return PhaseTable(j, std::move(by_index));
}

} // namespace svet
