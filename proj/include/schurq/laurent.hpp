#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "schurq/rational.hpp"

namespace schurq {

/// Laurent polynomial over Q in the formal variable s, dense storage.
/// Canonical form: no leading/trailing zero coefficients; the zero
/// polynomial has empty storage.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Rational& constant) {  // NOLINT: implicit constant lift
        if (!constant.is_zero()) { lo_ = 0; c_ = {constant}; }
    }
    LaurentPoly(long constant) : LaurentPoly(Rational(constant)) {}

    static LaurentPoly monomial(const Rational& coeff, long exp) {
        LaurentPoly p;
        if (!coeff.is_zero()) { p.lo_ = exp; p.c_ = {coeff}; }
        return p;
    }

    static LaurentPoly from_coeffs(long lo, std::vector<Rational> coeffs) {
        LaurentPoly p;
        p.lo_ = lo;
        p.c_ = std::move(coeffs);
        p.trim_();
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && lo_ == 0 && c_[0].is_one(); }
    bool is_monomial() const { return c_.size() == 1; }
    long lo() const { return c_.empty() ? 0 : lo_; }
    long hi() const { return c_.empty() ? 0 : lo_ + static_cast<long>(c_.size()) - 1; }
    long span() const { return c_.empty() ? 0 : static_cast<long>(c_.size()); }

    Rational coeff(long e) const {
        if (c_.empty() || e < lo_ || e > hi()) return Rational(0L);
        return c_[static_cast<size_t>(e - lo_)];
    }

    const std::vector<Rational>& coeffs() const { return c_; }

    LaurentPoly shifted(long k) const {
        LaurentPoly p(*this);
        if (!p.c_.empty()) p.lo_ += k;
        return p;
    }

    LaurentPoly operator-() const {
        LaurentPoly p(*this);
        for (auto& c : p.c_) c = -c;
        return p;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const long lo = std::min(a.lo_, b.lo_);
        const long hi = std::max(a.hi(), b.hi());
        LaurentPoly out;
        out.lo_ = lo;
        out.c_.assign(static_cast<size_t>(hi - lo + 1), Rational(0L));
        for (size_t i = 0; i < a.c_.size(); ++i) out.c_[static_cast<size_t>(a.lo_ - lo) + i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) out.c_[static_cast<size_t>(b.lo_ - lo) + i] += b.c_[i];
        out.trim_();
        return out;
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return LaurentPoly();
        LaurentPoly out;
        out.lo_ = a.lo_ + b.lo_;
        out.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0L));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j].is_zero()) continue;
                out.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        out.trim_();
        return out;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly scaled(const Rational& c) const {
        if (c.is_zero()) return LaurentPoly();
        LaurentPoly p(*this);
        for (auto& x : p.c_) x *= c;
        return p;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.lo() == b.lo() && a.c_ == b.c_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// Exact evaluation at s = s0. Negative support requires s0 != 0.
    Rational operator()(const Rational& s0) const {
        if (c_.empty()) return Rational(0L);
        if (lo_ < 0 && s0.is_zero()) throw MathError("LaurentPoly: pole at s = 0");
        Rational acc(0L);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * s0 + c_[i];
        return acc * s0.pow(lo_);
    }

    LaurentPoly derivative() const {
        LaurentPoly out;
        for (long e = lo(); e <= hi(); ++e) {
            const Rational c = coeff(e);
            if (!c.is_zero() && e != 0) out += monomial(c * Rational(e), e - 1);
        }
        return out;
    }

    /// Drops all terms of exponent > N.
    LaurentPoly truncated(long N) const {
        LaurentPoly out;
        for (long e = lo(); e <= std::min(hi(), N); ++e) {
            const Rational c = coeff(e);
            if (!c.is_zero()) out += monomial(c, e);
        }
        return out;
    }

    /// Replaces s by s^k (k >= 1): exponents scale by k.
    LaurentPoly stretched(long k) const {
        LaurentPoly out;
        for (long e = lo(); e <= hi(); ++e) {
            const Rational c = coeff(e);
            if (!c.is_zero()) out += monomial(c, e * k);
        }
        return out;
    }

    std::string str(const std::string& var = "s") const {
        if (is_zero()) return "0";
        std::string out;
        for (long e = lo(); e <= hi(); ++e) {
            const Rational c = coeff(e);
            if (c.is_zero()) continue;
            if (!out.empty()) out += c.sign() > 0 ? " + " : " - ";
            else if (c.sign() < 0) out += "-";
            const Rational a = c.sign() < 0 ? -c : c;
            const bool show_coeff = !a.is_one() || e == 0;
            if (show_coeff) out += a.str();
            if (e != 0) {
                if (show_coeff) out += "*";
                out += var;
                if (e != 1) out += "^" + std::to_string(e);
            }
        }
        return out;
    }

private:
    void trim_() {
        size_t lead = 0;
        while (lead < c_.size() && c_[lead].is_zero()) ++lead;
        size_t tail = c_.size();
        while (tail > lead && c_[tail - 1].is_zero()) --tail;
        if (lead > 0 || tail < c_.size()) {
            c_ = std::vector<Rational>(c_.begin() + static_cast<long>(lead),
                                       c_.begin() + static_cast<long>(tail));
            lo_ += static_cast<long>(lead);
        }
        if (c_.empty()) lo_ = 0;
    }

    long lo_ = 0;
    std::vector<Rational> c_;
};

namespace detail {

/// Integer polynomial utilities backing the gcd. Vectors hold coefficients
/// of x^0..x^d; invariant: back() != 0 unless empty (zero polynomial).
inline void int_trim(std::vector<Int>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

inline Int int_content(const std::vector<Int>& v) {
    Int g = 0;
    for (const auto& c : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

inline void int_make_primitive(std::vector<Int>& v) {
    if (v.empty()) return;
    Int g = int_content(v);
    if (sgn(v.back()) < 0) g = -g;
    if (g != 1)
        for (auto& c : v) c /= g;
}

/// Pseudo-remainder of a by b: lc(b)^(da-db+1) * a mod b.
inline std::vector<Int> int_prem(std::vector<Int> a, const std::vector<Int>& b) {
    const long db = static_cast<long>(b.size()) - 1;
    const Int& lb = b.back();
    while (static_cast<long>(a.size()) - 1 >= db) {
        const long da = static_cast<long>(a.size()) - 1;
        const Int top = a.back();
        for (auto& c : a) c *= lb;
        for (long j = 0; j <= db; ++j) a[static_cast<size_t>(da - db + j)] -= top * b[static_cast<size_t>(j)];
        int_trim(a);
        if (a.empty()) break;
    }
    return a;
}

/// Primitive-PRS gcd over Z[x]; inputs nonzero, output primitive.
inline std::vector<Int> int_gcd(std::vector<Int> a, std::vector<Int> b) {
    int_make_primitive(a);
    int_make_primitive(b);
    if (a.size() < b.size()) a.swap(b);
    while (!b.empty()) {
        std::vector<Int> r = int_prem(a, b);
        int_make_primitive(r);
        a.swap(b);
        b.swap(r);
    }
    return a;
}

/// The pure-polynomial part of p (shifted so the lowest exponent is 0),
/// scaled to integer coefficients.
inline std::vector<Int> to_int_poly(const LaurentPoly& p) {
    std::vector<Int> out;
    if (p.is_zero()) return out;
    Int l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(c.num() * (l / c.den()));
    return out;
}

}  // namespace detail

/// Gcd of the polynomial parts of a and b (monomial factors s^k are units of
/// Q[s, 1/s] and are ignored). Result is a primitive integer polynomial with
/// lowest exponent 0; returns 1 when either argument is zero.
inline LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return LaurentPoly(1L);
    std::vector<Int> g = detail::int_gcd(detail::to_int_poly(a), detail::to_int_poly(b));
    std::vector<Rational> c;
    c.reserve(g.size());
    for (auto& x : g) c.emplace_back(Rational(x));
    return LaurentPoly::from_coeffs(0, std::move(c));
}

/// Exact division; throws if b does not divide a.
inline LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw MathError("LaurentPoly: division by zero");
    if (a.is_zero()) return LaurentPoly();
    const long qlo = a.lo() - b.lo();
    const long n = a.span(), m = b.span();
    if (n < m) throw MathError("LaurentPoly: inexact division");
    std::vector<Rational> r(a.coeffs());
    std::vector<Rational> q(static_cast<size_t>(n - m + 1), Rational(0L));
    const Rational lead = b.coeffs().back();
    for (long i = n - m; i >= 0; --i) {
        Rational t = r[static_cast<size_t>(i + m - 1)] / lead;
        q[static_cast<size_t>(i)] = t;
        if (t.is_zero()) continue;
        for (long j = 0; j < m; ++j) r[static_cast<size_t>(i + j)] -= t * b.coeffs()[static_cast<size_t>(j)];
    }
    for (const auto& c : r)
        if (!c.is_zero()) throw MathError("LaurentPoly: inexact division");
    return LaurentPoly::from_coeffs(qlo, std::move(q));
}

}  // namespace schurq
