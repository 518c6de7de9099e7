#include "svet/svetlichny.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "svet/errors.hpp"
#include "svet/operator.hpp"
#include "svet/tolerances.hpp"

namespace svet {

Scenario::Scenario(SpinJ j, std::vector<PartyTables> parties)
    : j_(j), tables_(std::move(parties)) {
    if (tables_.size() < 3)
        throw std::invalid_argument("a Svetlichny scenario needs at least 3 parties");
    if (tables_.size() > 31)
        throw std::invalid_argument("scenario supports at most 31 parties");
    for (const PartyTables& party : tables_)
        if (party.setting0.spin() != j_ || party.setting1.spin() != j_)
            throw ShapeMismatch("every phase table must share the scenario spin");
}

const PhaseTable& Scenario::table(int party, int setting) const {
    if (party < 0 || party >= parties())
        throw std::invalid_argument("party index out of range");
    if (setting != 0 && setting != 1)
        throw std::invalid_argument("setting must be 0 or 1");
    return tables_[static_cast<std::size_t>(party)][setting];
}

std::vector<OperatorPair> Scenario::build_operators() const {
    std::vector<OperatorPair> ops;
    ops.reserve(tables_.size());
    for (const PartyTables& party : tables_)
        ops.push_back({make_operator(party.setting0), make_operator(party.setting1)});
    return ops;
}

Bounds bounds(int n_parties) {
    if (n_parties < 3)
        throw std::invalid_argument("bounds are defined for n >= 3 parties");
    const double lhv = std::ldexp(1.0, n_parties - 1);
    return {lhv, lhv * std::sqrt(2.0), std::sqrt(std::ldexp(1.0, n_parties + 1))};
}

SvetlichnyReport make_report(int n_parties, SpinJ j, double value) {
    const Bounds b = bounds(n_parties);
    SvetlichnyReport report;
    report.n = n_parties;
    report.twice_j = j.twice();
    report.value = value;
    report.lhv_bound = b.lhv;
    report.quantum_bound = b.quantum;
    report.fixed_sign_bound = b.fixed_sign;
    report.ratio = value / b.lhv;
    report.violated = std::abs(value) > b.lhv + kViolationMargin;
    return report;
}

std::complex<double> correlator(const Scenario& scenario,
                                const SettingsTuple& tuple) {
    const int n = scenario.parties();
    if (tuple.size() != n)
        throw ShapeMismatch("settings tuple length does not match the scenario");
    const int d = scenario.spin().dimension();
    std::complex<double> sum = 0.0;
    for (int idx = 0; idx < d; ++idx) {
        double total = 0.0;
        for (int party = 0; party < n; ++party)
            total += scenario.table(party, tuple.setting(party)).at(idx).radians();
        sum += std::polar(1.0, total);
    }
    return sum / static_cast<double>(d);
}

double expectation_analytic(const Scenario& scenario) {
    const std::uint32_t tuples = 1u << scenario.parties();
    std::complex<double> acc = 0.0;
    for (std::uint32_t bits = 0; bits < tuples; ++bits) {
        const SettingsTuple tuple(scenario.parties(), bits);
        acc += static_cast<double>(sign_v(tuple.k())) * correlator(scenario, tuple);
    }
    if (std::abs(acc.imag()) > kImaginaryResidueTol)
        throw ImaginaryResidue("imaginary residue " + std::to_string(acc.imag()) +
                               " exceeds tolerance; a phase table is not antisymmetric");
    return acc.real();
}

double expectation_oracle(const Scenario& scenario, std::int64_t dimension_guard) {
    const StateVector ghz = make_ghz(scenario.parties(), scenario.spin(),
                                     dimension_guard);
    const std::vector<OperatorPair> ops = scenario.build_operators();
    const std::uint32_t tuples = 1u << scenario.parties();
    std::complex<double> acc = 0.0;
    for (std::uint32_t bits = 0; bits < tuples; ++bits) {
        const SettingsTuple tuple(scenario.parties(), bits);
        const StateVector mapped = apply_setting(ghz, ops, tuple);
        const std::complex<double> element =
            ghz.amplitudes().dot(mapped.amplitudes());
        acc += static_cast<double>(sign_v(tuple.k())) * element;
    }
    if (std::abs(acc.imag()) > kImaginaryResidueTol)
        throw ImaginaryResidue("imaginary residue " + std::to_string(acc.imag()) +
                               " exceeds tolerance; a phase table is not antisymmetric");
    return acc.real();
}

} // namespace svet
