#pragma once

#include <cstdint>

#include "svet/errors.hpp"

namespace svet {

/// An angle that is an exact rational multiple of pi: value = (num/den)*pi.
/// Always stored reduced (gcd(|num|, den) = 1) and normalized into [0, 2pi),
/// i.e. 0 <= num/den < 2, so equality modulo 2pi is plain field equality.
/// Addition and negation are exact; to_radians() is the only lossy exit.
class RationalAngle {
public:
    RationalAngle() noexcept : num_(0), den_(1) {}
    RationalAngle(std::int64_t numerator, std::int64_t denominator);

    static RationalAngle pi() { return {1, 1}; }

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_ == 0; }

    double radians() const noexcept;

    RationalAngle operator-() const;
    RationalAngle operator+(const RationalAngle& other) const;
    RationalAngle operator-(const RationalAngle& other) const;

    friend bool operator==(const RationalAngle&, const RationalAngle&) = default;

private:
    std::int64_t num_;
    std::int64_t den_;
};

/// A measurement phase. Exact phases carry a RationalAngle and support exact
/// comparison; real-valued phases exist for evaluating arbitrary tables and
/// hold only a double wrapped into [0, 2pi).
class Phase {
public:
    Phase() noexcept : rational_(), radians_(0.0), exact_(true) {}
    Phase(const RationalAngle& angle) // NOLINT(google-explicit-constructor)
        : rational_(angle), radians_(angle.radians()), exact_(true) {}

    static Phase from_radians(double radians);

    bool is_exact() const noexcept { return exact_; }

    /// The exact value; throws NonRationalPhase for real-valued phases.
    const RationalAngle& rational() const;

    double radians() const noexcept { return radians_; }

    Phase negated() const;

    /// True when the phase equals 0 or pi (exactly for rational phases,
    /// bitwise for real ones).
    bool is_zero_or_pi() const noexcept;

    friend bool operator==(const Phase& a, const Phase& b) noexcept;

private:
    RationalAngle rational_;
    double radians_;
    bool exact_;
};

} // namespace svet
