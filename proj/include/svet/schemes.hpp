#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "svet/svetlichny.hpp"

namespace svet {

/// Parties whose search space exceeds 2^{2*14} assignments are rejected.
inline constexpr int kMaxSearchParties = 14;

struct SignPair {
    int s0 = +1;
    int s1 = +1;

    friend bool operator==(SignPair, SignPair) = default;
};

/// One +1/-1 sign per party per setting: the values e^{i (alpha_x)_0} a
/// boson scenario assigns at m = 0.
class SignAssignment {
public:
    explicit SignAssignment(std::vector<SignPair> signs);

    static SignAssignment all_plus(int n_parties);
    /// Party i's signs sit at bits 2i (setting 0) and 2i+1 (setting 1);
    /// a set bit means -1.
    static SignAssignment from_mask(int n_parties, std::uint32_t mask);
    /// Parses comma-separated per-party pairs such as "++,++,+-".
    static SignAssignment parse(std::string_view text);

    int parties() const noexcept { return static_cast<int>(signs_.size()); }
    const SignPair& party(int i) const { return signs_.at(i); }
    int sign(int party, int setting) const;

    std::uint32_t mask() const noexcept;
    std::string str() const;

    friend bool operator==(const SignAssignment&, const SignAssignment&) = default;

private:
    std::vector<SignPair> signs_;
};

/// Result of the exhaustive m=0 sign search.
struct SearchResult {
    long long best_value = 0;
    std::vector<SignAssignment> best_assignments; // ascending mask order
    long long evaluated_count = 0;
};

/// The complex product f = prod_i (s0_i + i s1_i), kept in exact integer
/// arithmetic. |f|^2 = 2^N and Re f + Im f equals the signed tuple sum.
struct FValue {
    long long re = 0;
    long long im = 0;

    std::complex<double> to_complex() const {
        return {static_cast<double>(re), static_cast<double>(im)};
    }
};

/// The signed sum over all 2^N settings tuples of v_k times the product of
/// the chosen signs, by direct enumeration. Exact.
long long zero_sign_tuple_sum(const SignAssignment& signs);

/// Evaluates f and verifies its two identities (|f|^2 = 2^N and
/// Re f + Im f = zero_sign_tuple_sum) before returning.
FValue f_function(const SignAssignment& signs);

/// Exhaustively enumerates all 2^{2N} sign assignments and returns the exact
/// integer maximum of the signed tuple sum together with every assignment
/// attaining it. Deterministic for any thread count.
SearchResult search_zero_signs(int n_parties, unsigned threads = 1);

/// The optimal half-integer-spin scenario: party 1 phases (-pi/4, +pi/4) and
/// parties 2..N phases (0, pi/2), identical for every m > 0. Reaches the
/// quantum maximum 2^{N-1} sqrt(2). Throws NotHalfInteger for integer j.
Scenario fermion_scheme(int n_parties, SpinJ j);

/// The integer-spin scenario: m != 0 phases as in fermion_scheme, m = 0
/// phases 0 or pi according to zero_signs. Throws NotInteger for
/// half-integer j.
Scenario boson_scheme(int n_parties, SpinJ j, const SignAssignment& zero_signs);

/// k mod 4 of a settings tuple.
int residue_class(const SettingsTuple& tuple);

/// True iff for every settings tuple the exact phase sum at m equals the
/// residue-class target (-pi/4, pi/4, 3pi/4, 5pi/4 for l = 0..3) modulo 2pi.
/// Throws NonRationalPhase when a participating phase is not exact.
bool verify_condition(const Scenario& scenario, MagneticIndex m);

/// The scheme maximum: 2^{N-1} sqrt(2) for half-integer j, and
/// (2^{N-1} * 2 sqrt(2) j + m_zero_max) / (2j+1) for integer j, where
/// m_zero_max comes from search_zero_signs. Throws MissingSearchValue when
/// integer j is given without m_zero_max.
double predicted_max(int n_parties, SpinJ j,
                     std::optional<long long> m_zero_max = std::nullopt);

} // namespace svet
