#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "svet/phase_table.hpp"
#include "svet/settings_tuple.hpp"
#include "svet/state.hpp"

namespace svet {

/// The two phase tables of one party.
struct PartyTables {
    PhaseTable setting0;
    PhaseTable setting1;

    const PhaseTable& operator[](int setting) const {
        return setting == 0 ? setting0 : setting1;
    }
};

/// A complete Svetlichny scenario: N >= 3 parties, each with two measurement
/// settings on the same spin-j space.
class Scenario {
public:
    Scenario(SpinJ j, std::vector<PartyTables> parties);

    int parties() const noexcept { return static_cast<int>(tables_.size()); }
    SpinJ spin() const noexcept { return j_; }

    const PhaseTable& table(int party, int setting) const;
    const std::vector<PartyTables>& party_tables() const noexcept { return tables_; }

    /// Materializes the 2N operator matrices.
    std::vector<OperatorPair> build_operators() const;

private:
    SpinJ j_;
    std::vector<PartyTables> tables_;
};

struct Bounds {
    double lhv;        // 2^{N-1}
    double quantum;    // 2^{N-1} sqrt(2)
    double fixed_sign; // sqrt(2^{N+1})
};

/// The three reference bounds for n >= 3 parties.
Bounds bounds(int n_parties);

struct SvetlichnyReport {
    int n = 0;
    int twice_j = 0;
    double value = 0.0;
    double lhv_bound = 0.0;
    double quantum_bound = 0.0;
    double fixed_sign_bound = 0.0;
    double ratio = 0.0;
    bool violated = false;
};

/// Assembles a report for a signed expectation value; the violation flag
/// compares |value| against the LHV bound plus kViolationMargin.
SvetlichnyReport make_report(int n_parties, SpinJ j, double value);

/// The correlator <A^{(1)}_{x_1} ... A^{(N)}_{x_N}> on the GHZ state:
/// (1/(2j+1)) sum_m e^{i sum_i phase_i(x_i, m)}. Real up to ~1e-12 for
/// antisymmetric tables.
std::complex<double> correlator(const Scenario& scenario,
                                const SettingsTuple& tuple);

/// The Svetlichny expectation as the signed sum of correlators over all 2^N
/// settings tuples. Throws ImaginaryResidue if the imaginary part exceeds
/// kImaginaryResidueTol.
double expectation_analytic(const Scenario& scenario);

/// Same quantity evaluated through dense linear algebra: builds the GHZ
/// state and applies each tuple's tensor operator via apply_setting. Serves
/// as the independent cross-check of expectation_analytic.
double expectation_oracle(const Scenario& scenario,
                          std::int64_t dimension_guard = kDefaultDimensionGuard);

} // namespace svet
