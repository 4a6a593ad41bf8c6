#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>

#include "nct/errors.hpp"

namespace nct {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Rational rat(long long p, long long q = 1) { return Rational(p, q); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(const BigInt& v) { return v.convert_to<double>(); }

// floor(p/q) with exact integer arithmetic (cpp_int division truncates).
inline BigInt floor_div(const BigInt& p, const BigInt& q) {
    BigInt d = p / q, r = p % q;
    if (r != 0 && ((r < 0) != (q < 0))) --d;
    return d;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0) return 0;
    return boost::multiprecision::abs(a / boost::multiprecision::gcd(a, b) * b);
}

// "p/q" or "p"; throws usage_error on garbage.
Rational parse_rational(const std::string& tok);

// canonical "p/q", or "p" when q == 1
std::string format_rational(const Rational& q);

// A rational number taken modulo 1, representing the phase of e(t) = e^{2πi t}.
// Canonical representative in [0,1).
class RationalPhase {
public:
    RationalPhase() = default;
    explicit RationalPhase(Rational v) : value_(normalized(std::move(v))) {}

    const Rational& value() const { return value_; }
    bool is_zero() const { return value_ == 0; }

    RationalPhase operator+(const RationalPhase& o) const { return RationalPhase(value_ + o.value_); }
    RationalPhase operator-(const RationalPhase& o) const { return RationalPhase(value_ - o.value_); }
    RationalPhase operator-() const { return RationalPhase(-value_); }
    RationalPhase times(const BigInt& k) const { return RationalPhase(value_ * Rational(k)); }

    friend bool operator==(const RationalPhase& a, const RationalPhase& b) { return a.value_ == b.value_; }
    friend bool operator!=(const RationalPhase& a, const RationalPhase& b) { return !(a == b); }
    friend bool operator<(const RationalPhase& a, const RationalPhase& b) { return a.value_ < b.value_; }

    // e^{2πi t}
    std::complex<double> to_complex() const {
        double t = to_double(value_);
        return {std::cos(2.0 * std::numbers::pi * t), std::sin(2.0 * std::numbers::pi * t)};
    }

    // denominator of the canonical representative
    BigInt order() const { return den(value_); }

    std::string str() const { return format_rational(value_); }

private:
    static Rational normalized(Rational v) {
        BigInt f = floor_div(num(v), den(v));
        return v - Rational(f);
    }
    Rational value_{0};
};

}  // namespace nct
