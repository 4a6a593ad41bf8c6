#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "nct/rational.hpp"

namespace nct {

// Exact complex numbers of the form  Σ r_k · e(t_k)  with rational r_k and
// rational phases t_k (e(t) = e^{2πi t}), i.e. elements of the group algebra
// Q[Q/Z] mapped into C.  Sums and products stay formal, which keeps the
// arithmetic cheap; zero tests and division reduce into the cyclotomic field
// Q(ζ_m) modulo the m-th cyclotomic polynomial, so equality is exact even
// when two different formal sums denote the same complex number.
class ExactComplex {
public:
    ExactComplex() = default;
    /*implicit*/ ExactComplex(Rational re) { add_term(RationalPhase(), std::move(re)); }
    /*implicit*/ ExactComplex(long long re) : ExactComplex(Rational(re)) {}

    static ExactComplex root_of_unity(const RationalPhase& t) {
        ExactComplex z;
        z.add_term(t, Rational(1));
        return z;
    }
    static ExactComplex gaussian(const Rational& re, const Rational& im) {
        ExactComplex z;
        z.add_term(RationalPhase(), re);
        z.add_term(RationalPhase(Rational(1, 4)), im);
        return z;
    }
    static ExactComplex i() { return gaussian(Rational(0), Rational(1)); }

    const std::map<RationalPhase, Rational>& terms() const { return terms_; }
    void add_term(const RationalPhase& t, Rational r);

    bool formally_zero() const { return terms_.empty(); }
    // exact zero test of the complex value (cyclotomic reduction when needed)
    bool is_zero() const;

    ExactComplex operator+(const ExactComplex& o) const;
    ExactComplex operator-(const ExactComplex& o) const;
    ExactComplex operator-() const;
    ExactComplex operator*(const ExactComplex& o) const;
    ExactComplex& operator+=(const ExactComplex& o);

    ExactComplex conj() const;
    // multiplicative inverse in Q(ζ_m); throws usage_error on zero
    ExactComplex inverse() const;

    std::complex<double> to_complex() const;

    // true when the value lies in Q(i); reports the Gaussian coordinates
    bool as_gaussian(Rational& re, Rational& im) const;

    std::string str() const;

    friend bool operator==(const ExactComplex& a, const ExactComplex& b) { return (a - b).is_zero(); }
    friend bool operator!=(const ExactComplex& a, const ExactComplex& b) { return !(a == b); }

private:
    // lcm of phase denominators
    BigInt common_order() const;
    // coefficient vector in Z[x]/(x^m - 1), phases mapped to powers of ζ_m
    std::vector<Rational> to_power_basis(const BigInt& m) const;

    std::map<RationalPhase, Rational> terms_;
};

namespace poly {
// dense univariate polynomials over Q, coefficient [i] of x^i
using RatPoly = std::vector<Rational>;

void trim(RatPoly& p);
RatPoly mul(const RatPoly& a, const RatPoly& b);
// euclidean division; returns quotient, stores remainder
RatPoly divmod(const RatPoly& a, const RatPoly& b, RatPoly& rem);
// m-th cyclotomic polynomial (memoized)
const RatPoly& cyclotomic(long long m);
}  // namespace poly

}  // namespace nct
