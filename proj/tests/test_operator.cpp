#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "support/generators.hpp"
#include "svet/operator.hpp"
#include "svet/tolerances.hpp"

using namespace std::complex_literals;
using svet::make_operator;
using svet::make_phase_table;
using svet::MeasurementOperator;
using svet::Phase;
using svet::PhaseTable;
using svet::RationalAngle;
using svet::SpinJ;

namespace {

Eigen::MatrixXcd matrix2(std::complex<double> a, std::complex<double> b,
                         std::complex<double> c, std::complex<double> d) {
    Eigen::MatrixXcd m(2, 2);
    m << a, b, c, d;
    return m;
}

} // namespace

TEST_CASE("zero phases give the exchange matrix") {
    const auto op = make_operator(make_phase_table(SpinJ(1), {Phase{}}));
    CHECK((op.matrix() - matrix2(0, 1, 1, 0)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("spin 1/2 with phase pi/2 gives [[0, i], [-i, 0]]") {
    // Hand evaluation: |1/2> -> e^{i pi/2}|-1/2> and |-1/2> -> e^{-i pi/2}|1/2>,
    // with rows/columns ordered m = -1/2, +1/2.
    const auto op =
        make_operator(make_phase_table(SpinJ(1), {Phase{RationalAngle(1, 2)}}));
    CHECK((op.matrix() - matrix2(0, 1i, -1i, 0)).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("spin 1 with zero phase pi is antidiagonal with a -1 center") {
    const auto op = make_operator(make_phase_table(
        SpinJ(2), {Phase{}}, Phase{RationalAngle::pi()}));
    Eigen::MatrixXcd expected(3, 3);
    expected << 0, 0, 1, 0, -1, 0, 1, 0, 0;
    CHECK((op.matrix() - expected).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("hermiticity holds for valid tables and fails for a bad m=0 phase") {
    CHECK(svet::check_hermitian(
        make_operator(make_phase_table(SpinJ(1), {Phase{}}))));

    // Forced phase(0) = pi/2 through the unchecked constructor: the center
    // entry becomes i, which no longer equals its own conjugate.
    const PhaseTable bad = PhaseTable::unchecked(
        SpinJ(2), {Phase{}, Phase{RationalAngle(1, 2)}, Phase{}});
    const auto op = make_operator(bad);
    CHECK_FALSE(svet::check_hermitian(op));
    CHECK_THROWS_AS(svet::eigenvalue_set(op), svet::NotHermitian);
}

TEST_CASE("identity-phase operator squares to the identity") {
    const SpinJ j(3);
    const auto op = make_operator(make_phase_table(j, {Phase{}, Phase{}}));
    CHECK(svet::check_involution(op));
    const Eigen::MatrixXcd square = op.matrix() * op.matrix();
    CHECK((square - Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("eigenvalue multisets") {
    SUBCASE("exchange matrix has spectrum {-1, +1}") {
        const auto op = make_operator(make_phase_table(SpinJ(1), {Phase{}}));
        const auto values = svet::eigenvalue_set(op);
        REQUIRE(values.size() == 2);
        CHECK(values[0] == doctest::Approx(-1.0).epsilon(1e-12));
        CHECK(values[1] == doctest::Approx(+1.0).epsilon(1e-12));
    }
    SUBCASE("spin 1, phase(0) = 0 pins |0> at +1") {
        const auto op = make_operator(make_phase_table(
            SpinJ(2), {Phase{RationalAngle(1, 4)}}, Phase{}));
        const auto values = svet::eigenvalue_set(op);
        REQUIRE(values.size() == 3);
        CHECK(values[0] == doctest::Approx(-1.0).epsilon(1e-10));
        CHECK(values[1] == doctest::Approx(+1.0).epsilon(1e-10));
        CHECK(values[2] == doctest::Approx(+1.0).epsilon(1e-10));
    }
    SUBCASE("spin 1, phase(0) = pi pins |0> at -1") {
        const auto op = make_operator(make_phase_table(
            SpinJ(2), {Phase{}}, Phase{RationalAngle::pi()}));
        const auto values = svet::eigenvalue_set(op);
        REQUIRE(values.size() == 3);
        CHECK(values[0] == doctest::Approx(-1.0).epsilon(1e-10));
        CHECK(values[1] == doctest::Approx(-1.0).epsilon(1e-10));
        CHECK(values[2] == doctest::Approx(+1.0).epsilon(1e-10));
    }
}

TEST_CASE("random tables: Hermitian involutions with unit antidiagonal") {
    std::mt19937 rng(7201);
    for (int iter = 0; iter < 400; ++iter) {
        const SpinJ j(std::uniform_int_distribution<int>(1, 8)(rng));
        const auto op = make_operator(testsupport::random_table(j, rng));
        CHECK(svet::check_hermitian(op));
        CHECK(svet::check_involution(op));

        // Exactly d nonzero entries, all of modulus 1, all on the antidiagonal.
        const int d = op.dimension();
        int nonzero = 0;
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) {
                const double mag = std::abs(op.matrix()(r, c));
                if (mag > 0.0) {
                    ++nonzero;
                    CHECK(r == d - 1 - c);
                    CHECK(mag == doctest::Approx(1.0).epsilon(1e-12));
                }
            }
        CHECK(nonzero == d);

        for (double value : svet::eigenvalue_set(op))
            CHECK(std::abs(std::abs(value) - 1.0) <= svet::kEigenvalueTol);
    }
}

TEST_CASE("raw construction rejects mismatched dimensions") {
    CHECK_THROWS_AS(MeasurementOperator(SpinJ(2), Eigen::MatrixXcd::Zero(2, 2)),
                    svet::ShapeMismatch);
}
