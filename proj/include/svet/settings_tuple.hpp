#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace svet {

/// One choice of measurement setting (0 or 1) per party: the tuple
/// (x_1, ..., x_N), packed into bits with party i at bit i.
class SettingsTuple {
public:
    SettingsTuple(int n_parties, std::uint32_t bits) : n_(n_parties), bits_(bits) {
        if (n_parties < 1 || n_parties > 31)
            throw std::invalid_argument("settings tuple supports 1..31 parties");
        if (n_parties < 32 && (bits >> n_parties) != 0)
            throw std::invalid_argument("settings bits exceed the party count");
    }

    explicit SettingsTuple(const std::vector<int>& settings)
        : SettingsTuple(static_cast<int>(settings.size()), pack(settings)) {}

    int size() const noexcept { return n_; }
    std::uint32_t bits() const noexcept { return bits_; }

    int setting(int party) const {
        if (party < 0 || party >= n_)
            throw std::invalid_argument("party index out of range");
        return static_cast<int>((bits_ >> party) & 1u);
    }

    /// Number of parties set to 1.
    int k() const noexcept { return std::popcount(bits_); }
    /// Residue k mod 4; decides the sign v_k.
    int l() const noexcept { return k() & 3; }

    friend bool operator==(const SettingsTuple&, const SettingsTuple&) = default;

private:
    static std::uint32_t pack(const std::vector<int>& settings) {
        if (settings.size() > 31)
            throw std::invalid_argument("settings tuple supports 1..31 parties");
        std::uint32_t bits = 0;
        for (std::size_t i = 0; i < settings.size(); ++i) {
            if (settings[i] != 0 && settings[i] != 1)
                throw std::invalid_argument("settings must be 0 or 1");
            bits |= static_cast<std::uint32_t>(settings[i]) << i;
        }
        return bits;
    }

    int n_;
    std::uint32_t bits_;
};

/// Sign of the k-ones settings tuple in the Svetlichny sum:
/// (-1)^{k(k-1)/2}, which is +1 for k mod 4 in {0,1} and -1 for {2,3}.
inline int sign_v(int k) {
    if (k < 0)
        throw std::invalid_argument("sign_v: k must be non-negative");
    return (k & 3) < 2 ? +1 : -1;
}

} // namespace svet
