#include "nct/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace nct {

namespace poly {

void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly c(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    trim(c);
    return c;
}

RatPoly divmod(const RatPoly& a, const RatPoly& b, RatPoly& rem) {
    if (b.empty()) throw usage_error("polynomial division by zero");
    rem = a;
    trim(rem);
    RatPoly q;
    if (rem.size() >= b.size()) q.assign(rem.size() - b.size() + 1, Rational(0));
    const Rational& lead = b.back();
    while (rem.size() >= b.size()) {
        Rational f = rem.back() / lead;
        size_t shift = rem.size() - b.size();
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= f * b[i];
        trim(rem);
        if (rem.empty()) break;
    }
    trim(q);
    return q;
}

namespace {
const RatPoly& cyclotomic_rec(long long m, std::map<long long, RatPoly>& cache) {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    // phi_m = (x^m - 1) / prod_{d | m, d < m} phi_d
    RatPoly p(static_cast<size_t>(m) + 1, Rational(0));
    p[0] = -1;
    p[static_cast<size_t>(m)] = 1;
    for (long long d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        const RatPoly& cd = cyclotomic_rec(d, cache);
        RatPoly rem;
        p = divmod(p, cd, rem);
        // x^m - 1 is divisible by every phi_d, d | m
        if (!rem.empty()) throw verification_error("cyclotomic polynomial division left a remainder");
    }
    return cache.emplace(m, std::move(p)).first->second;
}
}  // namespace

const RatPoly& cyclotomic(long long m) {
    static std::map<long long, RatPoly> cache;
    static std::mutex mtx;
    if (m < 1) throw usage_error("cyclotomic order must be positive");
    std::lock_guard<std::mutex> lock(mtx);
    return cyclotomic_rec(m, cache);
}

}  // namespace poly

void ExactComplex::add_term(const RationalPhase& t, Rational r) {
    if (r == 0) return;
    auto [it, inserted] = terms_.try_emplace(t, std::move(r));
    if (!inserted) {
        it->second += r;
        if (it->second == 0) terms_.erase(it);
    }
}

BigInt ExactComplex::common_order() const {
    BigInt m = 1;
    for (const auto& [t, r] : terms_) m = lcm(m, t.order());
    return m;
}

std::vector<Rational> ExactComplex::to_power_basis(const BigInt& m) const {
    std::vector<Rational> v(m.convert_to<size_t>(), Rational(0));
    for (const auto& [t, r] : terms_) {
        BigInt k = num(t.value()) * (m / den(t.value()));
        v[k.convert_to<size_t>()] += r;
    }
    return v;
}

bool ExactComplex::is_zero() const {
    if (terms_.empty()) return true;
    BigInt m = common_order();
    if (m == 1) return false;  // single real rational term, nonzero
    poly::RatPoly p = to_power_basis(m);
    poly::trim(p);
    if (p.empty()) return true;
    const poly::RatPoly& phi = poly::cyclotomic(m.convert_to<long long>());
    poly::RatPoly rem;
    poly::divmod(p, phi, rem);
    return rem.empty();
}

ExactComplex ExactComplex::operator+(const ExactComplex& o) const {
    ExactComplex z = *this;
    z += o;
    return z;
}

ExactComplex& ExactComplex::operator+=(const ExactComplex& o) {
    for (const auto& [t, r] : o.terms_) add_term(t, r);
    return *this;
}

ExactComplex ExactComplex::operator-() const {
    ExactComplex z;
    for (const auto& [t, r] : terms_) z.terms_.emplace(t, -r);
    return z;
}

ExactComplex ExactComplex::operator-(const ExactComplex& o) const { return *this + (-o); }

ExactComplex ExactComplex::operator*(const ExactComplex& o) const {
    ExactComplex z;
    for (const auto& [t1, r1] : terms_)
        for (const auto& [t2, r2] : o.terms_) z.add_term(t1 + t2, r1 * r2);
    return z;
}

ExactComplex ExactComplex::conj() const {
    ExactComplex z;
    for (const auto& [t, r] : terms_) z.add_term(-t, r);
    return z;
}

ExactComplex ExactComplex::inverse() const {
    BigInt mb = common_order();
    if (terms_.empty()) throw usage_error("inverse of zero");
    long long m = mb.convert_to<long long>();
    const poly::RatPoly& phi = poly::cyclotomic(m);
    poly::RatPoly a = to_power_basis(mb);
    poly::RatPoly rem;
    poly::divmod(a, phi, rem);
    a = rem;
    if (a.empty()) throw usage_error("inverse of zero");

    // extended euclid in Q[x]: u*a + v*phi = g; phi irreducible, so g is a
    // nonzero constant and u/g is the inverse of a mod phi.
    poly::RatPoly r0 = phi, r1 = a;
    poly::RatPoly u0 = {}, u1 = {Rational(1)};
    while (!r1.empty() && r1.size() > 1) {
        poly::RatPoly r2;
        poly::RatPoly q = poly::divmod(r0, r1, r2);
        poly::RatPoly u2 = u0;
        // u2 = u0 - q*u1
        poly::RatPoly qu = poly::mul(q, u1);
        if (u2.size() < qu.size()) u2.resize(qu.size(), Rational(0));
        for (size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
        poly::trim(u2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r1.empty()) throw verification_error("cyclotomic inverse: gcd degenerated");
    Rational g = r1[0];
    ExactComplex z;
    for (size_t k = 0; k < u1.size(); ++k) {
        if (u1[k] == 0) continue;
        z.add_term(RationalPhase(Rational(BigInt(k), mb)), u1[k] / g);
    }
    return z;
}

std::complex<double> ExactComplex::to_complex() const {
    std::complex<double> z{0.0, 0.0};
    for (const auto& [t, r] : terms_) z += to_double(r) * t.to_complex();
    return z;
}

bool ExactComplex::as_gaussian(Rational& re, Rational& im) const {
    // Reduce into the canonical power basis of Q(zeta_m), then accept only
    // supports on zeta^0 and zeta^{m/4} (= i).  Conservative: may say no for
    // exotic representations of Gaussian values; callers fall back to floats.
    Rational a(0), b(0);
    BigInt mb = common_order();
    if (mb <= 2) {
        for (const auto& [t, r] : terms_) a += t.is_zero() ? r : -r;
        re = a;
        im = 0;
        return true;
    }
    long long m = mb.convert_to<long long>();
    poly::RatPoly p = to_power_basis(mb);
    poly::trim(p);
    poly::RatPoly rem;
    poly::divmod(p, poly::cyclotomic(m), rem);
    for (size_t k = 0; k < rem.size(); ++k) {
        if (rem[k] == 0) continue;
        if (k == 0)
            a = rem[k];
        else if (m % 4 == 0 && k == static_cast<size_t>(m / 4))
            b = rem[k];
        else
            return false;
    }
    re = a;
    im = b;
    return true;
}

std::string ExactComplex::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, r] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << format_rational(r);
        if (!t.is_zero()) os << "*e(" << t.str() << ")";
    }
    return os.str();
}

Rational parse_rational(const std::string& tok) {
    try {
        auto slash = tok.find('/');
        if (slash == std::string::npos) return Rational(BigInt(tok));
        BigInt p(tok.substr(0, slash));
        BigInt q(tok.substr(slash + 1));
        if (q == 0) throw usage_error("rational with zero denominator: " + tok);
        return Rational(p, q);
    } catch (const usage_error&) {
        throw;
    } catch (const std::exception&) {
        throw usage_error("cannot parse rational token: '" + tok + "'");
    }
}

std::string format_rational(const Rational& q) {
    std::string s = num(q).str();
    if (den(q) != 1) s += "/" + den(q).str();
    return s;
}

}  // namespace nct
