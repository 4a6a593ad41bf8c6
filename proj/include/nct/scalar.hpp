#pragma once

#include <complex>
#include <map>
#include <string>

#include "nct/cyclotomic.hpp"

namespace nct {

// Coefficient ring for exact-mode algebra elements: finite sums
//   Σ_k (2πi)^k · c_k   with c_k an ExactComplex.
// π is transcendental over every cyclotomic field, so the grades never mix
// and the outputs of the canonical derivations δ_X (which carry one factor
// of 2πi per application) stay exactly representable.
class ExactScalar {
public:
    ExactScalar() = default;
    /*implicit*/ ExactScalar(ExactComplex c) { set_grade(0, std::move(c)); }
    /*implicit*/ ExactScalar(const Rational& r) : ExactScalar(ExactComplex(r)) {}
    /*implicit*/ ExactScalar(long long r) : ExactScalar(ExactComplex(r)) {}

    static ExactScalar two_pi_i_times(const ExactComplex& c) {
        ExactScalar s;
        s.set_grade(1, c);
        return s;
    }

    const std::map<int, ExactComplex>& grades() const { return grades_; }
    ExactComplex grade(int k) const {
        auto it = grades_.find(k);
        return it == grades_.end() ? ExactComplex() : it->second;
    }

    bool is_zero() const {
        for (const auto& [k, c] : grades_)
            if (!c.is_zero()) return false;
        return true;
    }

    ExactScalar operator+(const ExactScalar& o) const {
        ExactScalar s = *this;
        for (const auto& [k, c] : o.grades_) s.accumulate(k, c);
        return s;
    }
    ExactScalar operator-() const {
        ExactScalar s;
        for (const auto& [k, c] : grades_) s.grades_.emplace(k, -c);
        return s;
    }
    ExactScalar operator-(const ExactScalar& o) const { return *this + (-o); }
    ExactScalar operator*(const ExactScalar& o) const {
        ExactScalar s;
        for (const auto& [k1, c1] : grades_)
            for (const auto& [k2, c2] : o.grades_) s.accumulate(k1 + k2, c1 * c2);
        return s;
    }
    ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }

    // complex conjugate: conj((2πi)^k c) = (-1)^k (2πi)^k conj(c)
    ExactScalar conj() const {
        ExactScalar s;
        for (const auto& [k, c] : grades_) {
            ExactComplex cc = c.conj();
            s.grades_.emplace(k, (k % 2 == 0) ? cc : -cc);
        }
        return s;
    }

    ExactScalar divided_by_two_pi_i() const {
        ExactScalar s;
        for (const auto& [k, c] : grades_) s.grades_.emplace(k - 1, c);
        return s;
    }

    // divide every grade by a nonzero ExactComplex
    ExactScalar divided_by(const ExactComplex& d) const {
        ExactComplex inv = d.inverse();
        ExactScalar s;
        for (const auto& [k, c] : grades_) s.accumulate(k, c * inv);
        return s;
    }

    std::complex<double> to_complex() const {
        const std::complex<double> u{0.0, 2.0 * std::numbers::pi};
        std::complex<double> z{0.0, 0.0};
        for (const auto& [k, c] : grades_) z += std::pow(u, k) * c.to_complex();
        return z;
    }

    std::string str() const;

    friend bool operator==(const ExactScalar& a, const ExactScalar& b) { return (a - b).is_zero(); }
    friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

private:
    void set_grade(int k, ExactComplex c) {
        if (!c.formally_zero()) grades_.emplace(k, std::move(c));
    }
    void accumulate(int k, const ExactComplex& c) {
        auto it = grades_.find(k);
        if (it == grades_.end()) {
            if (!c.formally_zero()) grades_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.formally_zero()) grades_.erase(it);
        }
    }

    std::map<int, ExactComplex> grades_;
};

// complex numbers with rational real and imaginary parts (used by the
// Heisenberg module, where all products stay in Q(i))
struct GaussianRational {
    Rational re{0}, im{0};

    GaussianRational() = default;
    /*implicit*/ GaussianRational(Rational r) : re(std::move(r)) {}
    /*implicit*/ GaussianRational(long long r) : re(r) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianRational conj() const { return {re, -im}; }
    std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

}  // namespace nct
