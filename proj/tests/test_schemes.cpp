#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "support/generators.hpp"
#include "svet/schemes.hpp"
#include "svet/tolerances.hpp"

using svet::boson_scheme;
using svet::expectation_analytic;
using svet::expectation_oracle;
using svet::f_function;
using svet::fermion_scheme;
using svet::MagneticIndex;
using svet::predicted_max;
using svet::RationalAngle;
using svet::Scenario;
using svet::search_zero_signs;
using svet::SettingsTuple;
using svet::SignAssignment;
using svet::SignPair;
using svet::SpinJ;
using svet::verify_condition;
using svet::zero_sign_tuple_sum;

TEST_CASE("fermion scheme reproduces the three-party optimal phases") {
    const SpinJ j(1);
    const Scenario sc = fermion_scheme(3, j);
    const MagneticIndex m(j, 1);
    CHECK(sc.table(0, 0).phase(m).rational() == RationalAngle(-1, 4));
    CHECK(sc.table(0, 1).phase(m).rational() == RationalAngle(1, 4));
    for (int party = 1; party < 3; ++party) {
        CHECK(sc.table(party, 0).phase(m).rational() == RationalAngle());
        CHECK(sc.table(party, 1).phase(m).rational() == RationalAngle(1, 2));
    }
    CHECK_THROWS_AS(fermion_scheme(3, SpinJ(2)), svet::NotHalfInteger);
}

TEST_CASE("fermion scheme reaches 2^{n-1} sqrt(2)") {
    CHECK(expectation_analytic(fermion_scheme(3, SpinJ(1))) ==
          doctest::Approx(4.0 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(expectation_analytic(fermion_scheme(3, SpinJ(3))) ==
          doctest::Approx(4.0 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(expectation_analytic(fermion_scheme(5, SpinJ(1))) ==
          doctest::Approx(16.0 * std::sqrt(2.0)).epsilon(1e-12));
    // Cross-check one case against the matrix oracle.
    CHECK(expectation_oracle(fermion_scheme(5, SpinJ(1))) ==
          doctest::Approx(16.0 * std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("residue classes") {
    CHECK(svet::residue_class(SettingsTuple({0, 0, 0})) == 0);
    CHECK(svet::residue_class(SettingsTuple({1, 1, 0})) == 2);
    CHECK(svet::residue_class(SettingsTuple({1, 1, 1, 1, 1})) == 1);
}

TEST_CASE("phase-sum condition holds for the scheme and fails for zero phases") {
    for (int n = 3; n <= 7; ++n) {
        const Scenario sc = fermion_scheme(n, SpinJ(1));
        CHECK(verify_condition(sc, MagneticIndex(SpinJ(1), 1)));
    }
    // Both positive m of j = 3/2.
    const Scenario wide = fermion_scheme(4, SpinJ(3));
    CHECK(verify_condition(wide, MagneticIndex(SpinJ(3), 1)));
    CHECK(verify_condition(wide, MagneticIndex(SpinJ(3), 3)));

    // All-zero phases: the (0,...,0) tuple sums to 0, not -pi/4.
    const auto zero_table = svet::make_phase_table(SpinJ(1), {svet::Phase{}});
    const Scenario zeros(SpinJ(1), std::vector<svet::PartyTables>(
                                       3, svet::PartyTables{zero_table, zero_table}));
    CHECK_FALSE(verify_condition(zeros, MagneticIndex(SpinJ(1), 1)));

    CHECK_THROWS_AS(verify_condition(zeros, MagneticIndex(SpinJ(1), -1)),
                    std::invalid_argument);

    // Real-valued phases cannot be checked exactly.
    const auto real_table = svet::make_phase_table(
        SpinJ(1), {svet::Phase::from_radians(-M_PI / 4)});
    const Scenario real(SpinJ(1), std::vector<svet::PartyTables>(
                                      3, svet::PartyTables{real_table, real_table}));
    CHECK_THROWS_AS(verify_condition(real, MagneticIndex(SpinJ(1), 1)),
                    svet::NonRationalPhase);
}

TEST_CASE("boson scheme values") {
    SUBCASE("three spin-1 parties with the last setting flipped") {
        const double value = expectation_analytic(
            boson_scheme(3, SpinJ(2), SignAssignment::parse("++,++,+-")));
        CHECK(value ==
              doctest::Approx((2.0 / 3.0) * (2.0 + 4.0 * std::sqrt(2.0))).epsilon(1e-12));
    }
    SUBCASE("four spin-1 parties reach ratio about 1.10948") {
        const double value = expectation_analytic(
            boson_scheme(4, SpinJ(2), SignAssignment::parse("++,++,++,+-")));
        CHECK(value / 8.0 == doctest::Approx(1.10948).epsilon(1e-5));
    }
    SUBCASE("all-plus signs contribute nothing at m = 0") {
        const double value = expectation_analytic(
            boson_scheme(3, SpinJ(2), SignAssignment::all_plus(3)));
        CHECK(value == doctest::Approx(8.0 * std::sqrt(2.0) / 3.0).epsilon(1e-12));
        CHECK(value < 4.0); // no violation
        CHECK(expectation_oracle(boson_scheme(3, SpinJ(2), SignAssignment::all_plus(3))) ==
              doctest::Approx(8.0 * std::sqrt(2.0) / 3.0).epsilon(1e-9));
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(boson_scheme(3, SpinJ(1), SignAssignment::all_plus(3)),
                        svet::NotInteger);
        CHECK_THROWS_AS(boson_scheme(4, SpinJ(2), SignAssignment::all_plus(3)),
                        svet::ShapeMismatch);
    }
}

TEST_CASE("scheme value decomposes into the m!=0 and m=0 parts (randomized)") {
    std::mt19937 rng(7501);
    for (int iter = 0; iter < 50; ++iter) {
        const int n = std::uniform_int_distribution<int>(3, 6)(rng);
        const SpinJ j(2 * std::uniform_int_distribution<int>(1, 2)(rng));
        const std::uint32_t mask = std::uniform_int_distribution<std::uint32_t>(
            0, (1u << (2 * n)) - 1)(rng);
        const SignAssignment signs = SignAssignment::from_mask(n, mask);
        const double value = expectation_analytic(boson_scheme(n, j, signs));
        const double expected =
            (std::ldexp(1.0, n - 1) * 2.0 * std::sqrt(2.0) * j.value() +
             static_cast<double>(zero_sign_tuple_sum(signs))) /
            (2.0 * j.value() + 1.0);
        CHECK(value == doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("sign assignments parse and print") {
    const SignAssignment a = SignAssignment::parse("++,+-,-+");
    CHECK(a.parties() == 3);
    CHECK(a.party(1) == SignPair{+1, -1});
    CHECK(a.party(2) == SignPair{-1, +1});
    CHECK(a.str() == "++,+-,-+");
    CHECK(SignAssignment::from_mask(3, a.mask()) == a);
    CHECK_THROWS_AS(SignAssignment::parse("++"), std::invalid_argument);
    CHECK_THROWS_AS(SignAssignment::parse("++,+x,++"), std::invalid_argument);
    CHECK_THROWS_AS(SignAssignment::parse(""), std::invalid_argument);
}

TEST_CASE("tuple sums of the reference assignments") {
    CHECK(zero_sign_tuple_sum(SignAssignment::parse("++,++,+-")) == 4);
    CHECK(zero_sign_tuple_sum(SignAssignment::parse("++,++,++,+-")) == 4);
    CHECK(zero_sign_tuple_sum(SignAssignment::parse("++,++,++,++,--")) == 8);
    CHECK(zero_sign_tuple_sum(SignAssignment::parse("++,++,++,++,++,--")) == 8);
    CHECK(zero_sign_tuple_sum(SignAssignment::parse("++,++,++,++,++,+-,--")) == 16);
    CHECK(zero_sign_tuple_sum(SignAssignment::all_plus(8)) == 16);
    // All-plus over three parties cancels: sum of v_k is 1 + 3 - 3 - 1.
    CHECK(zero_sign_tuple_sum(SignAssignment::all_plus(3)) == 0);
}

TEST_CASE("f function") {
    const svet::FValue all_plus = f_function(SignAssignment::all_plus(3));
    CHECK(all_plus.re == -2);
    CHECK(all_plus.im == 2);

    const svet::FValue flipped = f_function(SignAssignment::parse("++,++,+-"));
    CHECK(flipped.re == 2);
    CHECK(flipped.im == 2);

    for (int n = 3; n <= 6; ++n) {
        const double bound = std::sqrt(std::ldexp(1.0, n + 1));
        for (std::uint32_t mask = 0; mask < (1u << (2 * n)); ++mask) {
            const SignAssignment signs = SignAssignment::from_mask(n, mask);
            const svet::FValue f = f_function(signs);
            CHECK(f.re * f.re + f.im * f.im == (1ll << n));
            CHECK(f.re + f.im == zero_sign_tuple_sum(signs));
            CHECK(static_cast<double>(f.re + f.im) <= bound + 1e-12);
        }
    }
}

TEST_CASE("flipping both signs of one party negates the tuple sum") {
    std::mt19937 rng(7502);
    for (int iter = 0; iter < 100; ++iter) {
        const int n = std::uniform_int_distribution<int>(3, 8)(rng);
        const std::uint32_t mask = std::uniform_int_distribution<std::uint32_t>(
            0, (1u << (2 * n)) - 1)(rng);
        const int party = std::uniform_int_distribution<int>(0, n - 1)(rng);
        const std::uint32_t flipped = mask ^ (3u << (2 * party));
        CHECK(zero_sign_tuple_sum(SignAssignment::from_mask(n, mask)) ==
              -zero_sign_tuple_sum(SignAssignment::from_mask(n, flipped)));
    }
}

TEST_CASE("exhaustive sign search") {
    SUBCASE("reference maxima") {
        CHECK(search_zero_signs(3).best_value == 4);
        CHECK(search_zero_signs(4).best_value == 4);
        CHECK(search_zero_signs(5).best_value == 8);
    }
    SUBCASE("every assignment is evaluated and ties attain the maximum") {
        const auto result = search_zero_signs(4);
        CHECK(result.evaluated_count == 256);
        CHECK_FALSE(result.best_assignments.empty());
        for (const SignAssignment& a : result.best_assignments)
            CHECK(zero_sign_tuple_sum(a) == result.best_value);
        // The reference choice (last party's setting 1 flipped) is among them.
        const SignAssignment reference = SignAssignment::parse("++,++,++,+-");
        CHECK(std::count(result.best_assignments.begin(),
                         result.best_assignments.end(), reference) == 1);
    }
    SUBCASE("deterministic across thread counts") {
        const auto seq = search_zero_signs(5, 1);
        const auto par = search_zero_signs(5, 4);
        CHECK(seq.best_value == par.best_value);
        CHECK(seq.best_assignments == par.best_assignments);
    }
    SUBCASE("guard") {
        CHECK_THROWS_AS(search_zero_signs(15), svet::SearchGuardExceeded);
        CHECK_THROWS_AS(search_zero_signs(2), std::invalid_argument);
    }
    SUBCASE("bound holds up to n = 10, with equality exactly at odd n") {
        for (int n = 3; n <= 10; ++n) {
            const auto result = search_zero_signs(n, 0);
            const long long squared = result.best_value * result.best_value;
            CHECK(static_cast<double>(result.best_value) <=
                  std::sqrt(std::ldexp(1.0, n + 1)) + 1e-12);
            if (n % 2 == 1)
                CHECK(squared == (1ll << (n + 1)));
            else
                CHECK(squared < (1ll << (n + 1)));
        }
    }
}

TEST_CASE("predicted maxima") {
    CHECK(predicted_max(3, SpinJ(1)) ==
          doctest::Approx(4.0 * std::sqrt(2.0)).epsilon(1e-15));
    CHECK(predicted_max(3, SpinJ(2), 4) ==
          doctest::Approx((2.0 / 3.0) * (2.0 + 4.0 * std::sqrt(2.0))).epsilon(1e-12));
    CHECK_THROWS_AS(predicted_max(3, SpinJ(2)), svet::MissingSearchValue);

    SUBCASE("ratio to the quantum bound increases monotonically in j") {
        double previous = 0.0;
        for (int j = 1; j <= 50; ++j) {
            const double ratio = predicted_max(3, SpinJ(2 * j), 4) /
                                 svet::bounds(3).quantum;
            CHECK(ratio > previous);
            previous = ratio;
        }
        CHECK(previous < 1.0);
    }
    SUBCASE("large j approaches the quantum maximum") {
        const double ratio = predicted_max(3, SpinJ(2000000), 4) /
                             svet::bounds(3).quantum;
        CHECK(ratio > 1.0 - 1e-5);
        CHECK(ratio <= 1.0);
    }
}
