#include "svet/operator.hpp"

#include <complex>
#include <string>
#include <utility>

#include "svet/errors.hpp"
#include "svet/tolerances.hpp"

namespace svet {

MeasurementOperator::MeasurementOperator(SpinJ j, Eigen::MatrixXcd matrix)
    : j_(j), matrix_(std::move(matrix)) {
    if (matrix_.rows() != j.dimension() || matrix_.cols() != j.dimension())
        throw ShapeMismatch("operator matrix must be " + std::to_string(j.dimension()) +
                            "x" + std::to_string(j.dimension()));
}

MeasurementOperator make_operator(const PhaseTable& table) {
    const int d = table.dimension();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    // Column of |m>, row of |-m>: the matrix is antidiagonal.
    for (int col = 0; col < d; ++col)
        m(d - 1 - col, col) = std::polar(1.0, table.at(col).radians());
    return {table.spin(), std::move(m)};
}

bool check_hermitian(const MeasurementOperator& op) {
    const Eigen::MatrixXcd& m = op.matrix();
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= kHermitianTol;
}

bool check_involution(const MeasurementOperator& op) {
    const Eigen::MatrixXcd& m = op.matrix();
    const Eigen::MatrixXcd identity =
        Eigen::MatrixXcd::Identity(m.rows(), m.cols());
    return (m * m - identity).cwiseAbs().maxCoeff() <= kInvolutionTol;
}

std::vector<double> eigenvalue_set(const MeasurementOperator& op) {
    if (!check_hermitian(op))
        throw NotHermitian("operator is not Hermitian; eigenvalues would not be real");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(op.matrix(),
                                                           Eigen::EigenvaluesOnly);
    const auto& values = solver.eigenvalues();
    return {values.data(), values.data() + values.size()};
}

} // namespace svet
