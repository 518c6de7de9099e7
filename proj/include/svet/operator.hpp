#pragma once

#include <Eigen/Dense>
#include <vector>

#include "svet/phase_table.hpp"
#include "svet/spin.hpp"

namespace svet {

/// A dichotomic measurement operator on a spin-j space: the antidiagonal
/// matrix with entry e^{i phase(m)} at (row of -m, column of m). For valid
/// phase tables it is a Hermitian involution with spectrum {-1, +1}.
class MeasurementOperator {
public:
    /// Wraps a raw matrix. No structural checks beyond the dimension; use
    /// make_operator for checked construction from a phase table.
    MeasurementOperator(SpinJ j, Eigen::MatrixXcd matrix);

    SpinJ spin() const noexcept { return j_; }
    int dimension() const noexcept { return j_.dimension(); }
    const Eigen::MatrixXcd& matrix() const noexcept { return matrix_; }

private:
    SpinJ j_;
    Eigen::MatrixXcd matrix_;
};

MeasurementOperator make_operator(const PhaseTable& table);

/// Max entrywise |M - M^dagger| <= kHermitianTol.
bool check_hermitian(const MeasurementOperator& op);

/// Max entrywise |M*M - I| <= kInvolutionTol.
bool check_involution(const MeasurementOperator& op);

/// Eigenvalues in ascending order. Throws NotHermitian when the Hermiticity
/// check fails.
std::vector<double> eigenvalue_set(const MeasurementOperator& op);

} // namespace svet
