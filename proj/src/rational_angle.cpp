#include "svet/rational_angle.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace svet {

namespace {

using Wide = __int128;

Wide wide_abs(Wide v) { return v < 0 ? -v : v; }

Wide wide_gcd(Wide a, Wide b) {
    a = wide_abs(a);
    b = wide_abs(b);
    while (b != 0) {
        const Wide r = a % b;
        a = b;
        b = r;
    }
    return a;
}

std::int64_t narrow(Wide v, const char* what) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error(std::string("RationalAngle: ") + what);
    return static_cast<std::int64_t>(v);
}

// Reduce and wrap num/den turns of pi into [0, 2).
void canonicalize(Wide& num, Wide& den) {
    const Wide g = wide_gcd(num == 0 ? den : num, den);
    num /= g;
    den /= g;
    const Wide two_den = 2 * den;
    num %= two_den;
    if (num < 0)
        num += two_den;
}

} // namespace

RationalAngle::RationalAngle(std::int64_t numerator, std::int64_t denominator) {
    if (denominator <= 0)
        throw std::invalid_argument("RationalAngle: denominator must be positive");
    Wide num = numerator;
    Wide den = denominator;
    canonicalize(num, den);
    num_ = narrow(num, "numerator overflow");
    den_ = narrow(den, "denominator overflow");
}

double RationalAngle::radians() const noexcept {
    return static_cast<double>(num_) * M_PI / static_cast<double>(den_);
}

RationalAngle RationalAngle::operator-() const {
    RationalAngle out;
    Wide num = -Wide(num_);
    Wide den = den_;
    canonicalize(num, den);
    out.num_ = narrow(num, "numerator overflow");
    out.den_ = narrow(den, "denominator overflow");
    return out;
}

RationalAngle RationalAngle::operator+(const RationalAngle& other) const {
    RationalAngle out;
    Wide num = Wide(num_) * other.den_ + Wide(other.num_) * den_;
    Wide den = Wide(den_) * other.den_;
    canonicalize(num, den);
    out.num_ = narrow(num, "numerator overflow");
    out.den_ = narrow(den, "denominator overflow");
    return out;
}

RationalAngle RationalAngle::operator-(const RationalAngle& other) const {
    return *this + (-other);
}

Phase Phase::from_radians(double radians) {
    if (!std::isfinite(radians))
        throw std::invalid_argument("Phase: radians must be finite");
    double wrapped = std::fmod(radians, 2.0 * M_PI);
    if (wrapped < 0.0)
        wrapped += 2.0 * M_PI;
    if (wrapped >= 2.0 * M_PI)
        wrapped = 0.0;
    Phase p;
    p.exact_ = false;
    p.radians_ = wrapped;
    return p;
}

const RationalAngle& Phase::rational() const {
    if (!exact_)
        throw NonRationalPhase("phase is not an exact rational multiple of pi");
    return rational_;
}

Phase Phase::negated() const {
    if (exact_)
        return Phase(-rational_);
    return from_radians(-radians_);
}

bool Phase::is_zero_or_pi() const noexcept {
    if (exact_)
        return rational_ == RationalAngle() || rational_ == RationalAngle::pi();
    return radians_ == 0.0 || radians_ == M_PI;
}

bool operator==(const Phase& a, const Phase& b) noexcept {
    if (a.exact_ && b.exact_)
        return a.rational_ == b.rational_;
    return a.radians_ == b.radians_;
}

} // namespace svet
