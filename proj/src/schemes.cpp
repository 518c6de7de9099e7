#include "svet/schemes.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>
#include <thread>
#include <utility>

#include "svet/errors.hpp"
#include "svet/tolerances.hpp"

namespace svet {

namespace {

// Selection masks over the interleaved sign layout: for tuple x, party i
// picks bit 2i when x_i = 0 and bit 2i+1 when x_i = 1. The product of the
// chosen signs is then (-1)^popcount(assignment_mask & select[x]).
std::vector<std::uint32_t> selection_masks(int n) {
    const std::uint32_t tuples = 1u << n;
    std::vector<std::uint32_t> select(tuples);
    for (std::uint32_t x = 0; x < tuples; ++x) {
        std::uint32_t mask = 0;
        for (int i = 0; i < n; ++i)
            mask |= 1u << (2 * i + ((x >> i) & 1u));
        select[x] = mask;
    }
    return select;
}

std::vector<std::int8_t> tuple_signs(int n) {
    const std::uint32_t tuples = 1u << n;
    std::vector<std::int8_t> v(tuples);
    for (std::uint32_t x = 0; x < tuples; ++x)
        v[x] = static_cast<std::int8_t>(sign_v(std::popcount(x)));
    return v;
}

long long tuple_sum(std::uint32_t assignment_mask,
                    const std::vector<std::int8_t>& v,
                    const std::vector<std::uint32_t>& select) {
    long long sum = 0;
    for (std::uint32_t x = 0; x < select.size(); ++x) {
        const int negatives = std::popcount(assignment_mask & select[x]);
        sum += (negatives & 1) ? -static_cast<long long>(v[x])
                               : static_cast<long long>(v[x]);
    }
    return sum;
}

struct ChunkResult {
    long long best = 0;
    std::vector<std::uint32_t> ties;
};

ChunkResult search_chunk(std::uint64_t begin, std::uint64_t end,
                         const std::vector<std::int8_t>& v,
                         const std::vector<std::uint32_t>& select) {
    ChunkResult result;
    result.best = std::numeric_limits<long long>::min();
    for (std::uint64_t mask = begin; mask < end; ++mask) {
        const long long value =
            tuple_sum(static_cast<std::uint32_t>(mask), v, select);
        if (value > result.best) {
            result.best = value;
            result.ties.clear();
            result.ties.push_back(static_cast<std::uint32_t>(mask));
        } else if (value == result.best) {
            result.ties.push_back(static_cast<std::uint32_t>(mask));
        }
    }
    return result;
}

const RationalAngle kMinusQuarter{-1, 4};
const RationalAngle kPlusQuarter{1, 4};
const RationalAngle kZero{0, 1};
const RationalAngle kHalf{1, 2};

std::vector<Phase> uniform_phases(SpinJ j, const RationalAngle& angle) {
    return std::vector<Phase>(static_cast<std::size_t>(positive_m_count(j)),
                              Phase(angle));
}

// The m != 0 part shared by both schemes: party 1 phases (-pi/4, +pi/4),
// every later party (0, pi/2), identical for all m > 0.
std::vector<PartyTables> scheme_parties(int n, SpinJ j,
                                        const std::optional<SignAssignment>& zero_signs) {
    auto zero_phase = [&](int party, int setting) -> std::optional<Phase> {
        if (!zero_signs)
            return std::nullopt;
        return Phase(zero_signs->sign(party, setting) > 0 ? kZero : RationalAngle::pi());
    };
    std::vector<PartyTables> parties;
    parties.reserve(static_cast<std::size_t>(n));
    parties.push_back({make_phase_table(j, uniform_phases(j, kMinusQuarter),
                                        zero_phase(0, 0)),
                       make_phase_table(j, uniform_phases(j, kPlusQuarter),
                                        zero_phase(0, 1))});
    for (int i = 1; i < n; ++i)
        parties.push_back({make_phase_table(j, uniform_phases(j, kZero),
                                            zero_phase(i, 0)),
                           make_phase_table(j, uniform_phases(j, kHalf),
                                            zero_phase(i, 1))});
    return parties;
}

} // namespace

SignAssignment::SignAssignment(std::vector<SignPair> signs) : signs_(std::move(signs)) {
    if (signs_.size() < 3)
        throw std::invalid_argument("sign assignment needs at least 3 parties");
    // The packed mask layout uses two bits per party.
    if (signs_.size() > 16)
        throw std::invalid_argument("sign assignment supports at most 16 parties");
    for (const SignPair& pair : signs_)
        if ((pair.s0 != 1 && pair.s0 != -1) || (pair.s1 != 1 && pair.s1 != -1))
            throw std::invalid_argument("signs must be +1 or -1");
}

SignAssignment SignAssignment::all_plus(int n_parties) {
    return SignAssignment(std::vector<SignPair>(static_cast<std::size_t>(n_parties)));
}

SignAssignment SignAssignment::from_mask(int n_parties, std::uint32_t mask) {
    std::vector<SignPair> signs(static_cast<std::size_t>(n_parties));
    for (int i = 0; i < n_parties; ++i) {
        signs[static_cast<std::size_t>(i)].s0 = (mask >> (2 * i)) & 1u ? -1 : +1;
        signs[static_cast<std::size_t>(i)].s1 = (mask >> (2 * i + 1)) & 1u ? -1 : +1;
    }
    return SignAssignment(std::move(signs));
}

SignAssignment SignAssignment::parse(std::string_view text) {
    std::vector<SignPair> signs;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string_view token = text.substr(pos, comma - pos);
        if (token.size() != 2 || (token[0] != '+' && token[0] != '-') ||
            (token[1] != '+' && token[1] != '-'))
            throw std::invalid_argument(
                "sign assignment must be comma-separated pairs of +/-, e.g. \"++,++,+-\"");
        signs.push_back({token[0] == '+' ? +1 : -1, token[1] == '+' ? +1 : -1});
        if (comma == text.size())
            break;
        pos = comma + 1;
    }
    return SignAssignment(std::move(signs));
}

int SignAssignment::sign(int party, int setting) const {
    const SignPair& pair = signs_.at(static_cast<std::size_t>(party));
    if (setting != 0 && setting != 1)
        throw std::invalid_argument("setting must be 0 or 1");
    return setting == 0 ? pair.s0 : pair.s1;
}

std::uint32_t SignAssignment::mask() const noexcept {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < signs_.size(); ++i) {
        if (signs_[i].s0 < 0)
            mask |= 1u << (2 * i);
        if (signs_[i].s1 < 0)
            mask |= 1u << (2 * i + 1);
    }
    return mask;
}

std::string SignAssignment::str() const {
    std::string out;
    for (std::size_t i = 0; i < signs_.size(); ++i) {
        if (i > 0)
            out += ',';
        out += signs_[i].s0 > 0 ? '+' : '-';
        out += signs_[i].s1 > 0 ? '+' : '-';
    }
    return out;
}

long long zero_sign_tuple_sum(const SignAssignment& signs) {
    const int n = signs.parties();
    return tuple_sum(signs.mask(), tuple_signs(n), selection_masks(n));
}

FValue f_function(const SignAssignment& signs) {
    FValue f{1, 0};
    for (int i = 0; i < signs.parties(); ++i) {
        const SignPair& pair = signs.party(i);
        const long long re = f.re * pair.s0 - f.im * pair.s1;
        const long long im = f.re * pair.s1 + f.im * pair.s0;
        f = {re, im};
    }
    const long long modulus = f.re * f.re + f.im * f.im;
    if (modulus != (1ll << signs.parties()))
        throw std::logic_error("f modulus identity broken");
    if (f.re + f.im != zero_sign_tuple_sum(signs))
        throw std::logic_error("f decomposition identity broken");
    return f;
}

SearchResult search_zero_signs(int n_parties, unsigned threads) {
    if (n_parties < 3)
        throw std::invalid_argument("sign search needs at least 3 parties");
    if (n_parties > kMaxSearchParties)
        throw SearchGuardExceeded("sign search over 2^" + std::to_string(2 * n_parties) +
                                  " assignments exceeds the guard of n = " +
                                  std::to_string(kMaxSearchParties));

    const std::vector<std::uint32_t> select = selection_masks(n_parties);
    const std::vector<std::int8_t> v = tuple_signs(n_parties);
    const std::uint64_t total = std::uint64_t{1} << (2 * n_parties);

    unsigned workers = threads == 0 ? std::thread::hardware_concurrency() : threads;
    workers = std::clamp<unsigned>(workers, 1, 256);
    const std::uint64_t chunk = (total + workers - 1) / workers;

    std::vector<ChunkResult> results(workers);
    if (workers == 1) {
        results[0] = search_chunk(0, total, v, select);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t begin = std::min<std::uint64_t>(w * chunk, total);
            const std::uint64_t end = std::min<std::uint64_t>(begin + chunk, total);
            pool.emplace_back([&, w, begin, end] {
                results[w] = search_chunk(begin, end, v, select);
            });
        }
        for (std::thread& t : pool)
            t.join();
    }

    SearchResult out;
    out.evaluated_count = static_cast<long long>(total);
    out.best_value = std::numeric_limits<long long>::min();
    for (const ChunkResult& r : results)
        if (!r.ties.empty())
            out.best_value = std::max(out.best_value, r.best);
    // Chunks are in ascending mask order, so concatenation keeps the tie set
    // sorted regardless of the worker count.
    for (const ChunkResult& r : results)
        if (r.best == out.best_value)
            for (std::uint32_t mask : r.ties)
                out.best_assignments.push_back(
                    SignAssignment::from_mask(n_parties, mask));
    return out;
}

Scenario fermion_scheme(int n_parties, SpinJ j) {
    if (!j.is_half_integer())
        throw NotHalfInteger("fermion scheme needs half-integer spin, got 2j = " +
                             std::to_string(j.twice()));
    return Scenario(j, scheme_parties(n_parties, j, std::nullopt));
}

Scenario boson_scheme(int n_parties, SpinJ j, const SignAssignment& zero_signs) {
    if (!j.is_integer())
        throw NotInteger("boson scheme needs integer spin, got 2j = " +
                         std::to_string(j.twice()));
    if (zero_signs.parties() != n_parties)
        throw ShapeMismatch("sign assignment has " + std::to_string(zero_signs.parties()) +
                            " parties, scenario needs " + std::to_string(n_parties));
    return Scenario(j, scheme_parties(n_parties, j, zero_signs));
}

int residue_class(const SettingsTuple& tuple) {
    return tuple.l();
}

bool verify_condition(const Scenario& scenario, MagneticIndex m) {
    if (!m.is_positive())
        throw std::invalid_argument("condition check applies to m > 0");
    static const RationalAngle targets[4] = {
        RationalAngle(-1, 4), RationalAngle(1, 4),
        RationalAngle(3, 4), RationalAngle(5, 4)};
    const int n = scenario.parties();
    const std::uint32_t tuples = 1u << n;
    for (std::uint32_t bits = 0; bits < tuples; ++bits) {
        const SettingsTuple tuple(n, bits);
        RationalAngle sum;
        for (int party = 0; party < n; ++party)
            sum = sum + scenario.table(party, tuple.setting(party)).phase(m).rational();
        if (!(sum == targets[tuple.l()]))
            return false;
    }
    return true;
}

double predicted_max(int n_parties, SpinJ j, std::optional<long long> m_zero_max) {
    if (n_parties < 3)
        throw std::invalid_argument("prediction is defined for n >= 3 parties");
    const double quantum = std::ldexp(1.0, n_parties - 1) * std::sqrt(2.0);
    if (j.is_half_integer())
        return quantum;
    if (!m_zero_max)
        throw MissingSearchValue("integer spin needs the m = 0 search maximum");
    const double jv = j.value();
    return (quantum * 2.0 * jv + static_cast<double>(*m_zero_max)) / (2.0 * jv + 1.0);
}

} // namespace svet
