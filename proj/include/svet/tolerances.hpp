#pragma once

namespace svet {

// Entrywise tolerance for the Hermiticity and involution checks. Operator
// matrices stay small (a few dozen rows at most), so double precision keeps
// the residue far below this.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kInvolutionTol = 1e-12;

// Eigen-solvers are less exact than direct matrix identities.
inline constexpr double kEigenvalueTol = 1e-9;

// Largest imaginary residue accepted when an expectation value is reduced to
// a real number. Anything above this signals a broken antisymmetry invariant.
inline constexpr double kImaginaryResidueTol = 1e-10;

// Required agreement between the analytic expectation and the matrix oracle.
inline constexpr double kOracleTol = 1e-9;

// Margin added to the local-hidden-variable bound when flagging violations.
inline constexpr double kViolationMargin = 1e-9;

} // namespace svet
