#pragma once

#include <optional>
#include <vector>

#include "svet/rational_angle.hpp"
#include "svet/spin.hpp"

namespace svet {

/// The phases (alpha)_m of one measurement setting, one entry per m from -j
/// to j. Tables built through make_phase_table satisfy the antisymmetry
/// condition (alpha)_{-m} = -(alpha)_m (mod 2pi), and for integer j the m=0
/// phase is 0 or pi.
class PhaseTable {
public:
    SpinJ spin() const noexcept { return j_; }
    int dimension() const noexcept { return j_.dimension(); }

    /// Phase by basis index (0 is m=-j, increasing m).
    const Phase& at(int basis_index) const;
    const Phase& phase(MagneticIndex m) const;

    bool all_exact() const noexcept;

    /// A table from explicit per-basis-index phases, without enforcing the
    /// antisymmetry invariant. Used by the parser after validation and by
    /// tests that need deliberately broken tables.
    static PhaseTable unchecked(SpinJ j, std::vector<Phase> by_basis_index);

private:
    PhaseTable(SpinJ j, std::vector<Phase> phases);

    friend PhaseTable make_phase_table(SpinJ, std::vector<Phase>,
                                       std::optional<Phase>);

    SpinJ j_;
    std::vector<Phase> phases_;
};

/// Builds a table from the phases of the positive m values only (ordered by
/// increasing m); negative-m entries are filled in by antisymmetry. For
/// integer j a zero_phase of 0 or pi is required; for half-integer j it must
/// be absent.
///
/// Throws WrongArity when the number of phases does not match (or the zero
/// phase is missing for integer j), ZeroPhaseForbidden when a zero phase is
/// supplied for half-integer j, and IllegalZeroPhase when it is not 0 or pi.
PhaseTable make_phase_table(SpinJ j, std::vector<Phase> upper_phases,
                            std::optional<Phase> zero_phase = std::nullopt);

} // namespace svet
