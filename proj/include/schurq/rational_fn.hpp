#pragma once

#include <string>
#include <utility>

#include "schurq/laurent.hpp"

namespace schurq {

/// Element of Q(s), the field of rational functions in s. Canonical form:
/// num/den coprime as polynomials, den a pure polynomial (lowest exponent 0)
/// with constant coefficient 1. All monomial units s^k live in num.
class RationalFn {
public:
    RationalFn() = default;
    RationalFn(const Rational& c) : num_(c) {}  // NOLINT: implicit constant lift
    RationalFn(long c) : num_(Rational(c)) {}
    RationalFn(const LaurentPoly& p) : num_(p) {}  // NOLINT: polynomials embed
    RationalFn(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
        reduce_();
    }

    static RationalFn s_power(long e) { return RationalFn(LaurentPoly::monomial(Rational(1L), e)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RationalFn operator-() const {
        RationalFn f;
        f.num_ = -num_;
        f.den_ = den_;
        return f;
    }

    friend RationalFn operator+(const RationalFn& a, const RationalFn& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return RationalFn(a.num_ + b.num_, a.den_);
        return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
        if (a.is_zero() || b.is_zero()) return RationalFn();
        return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFn operator/(const RationalFn& a, const RationalFn& b) {
        if (b.is_zero()) throw MathError("RationalFn: division by zero");
        if (a.is_zero()) return RationalFn();
        return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
    }

    RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
    RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
    RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }
    RationalFn& operator/=(const RationalFn& o) { return *this = *this / o; }

    friend bool operator==(const RationalFn& a, const RationalFn& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }

    RationalFn inverse() const {
        if (is_zero()) throw MathError("RationalFn: inverse of zero");
        return RationalFn(den_, num_);
    }

    RationalFn pow(long e) const {
        if (e == 0) return RationalFn(1L);
        RationalFn base = e < 0 ? inverse() : *this;
        long k = e < 0 ? -e : e;
        RationalFn acc(1L);
        while (k > 0) {
            if (k & 1) acc *= base;
            base = (k >>= 1) > 0 ? base * base : base;
        }
        return acc;
    }

    /// Exact value at s = s0; throws MathError on a pole.
    Rational operator()(const Rational& s0) const {
        const Rational d = den_(s0);
        if (d.is_zero()) throw MathError("RationalFn: pole at sample point");
        if (num_.lo() < 0 && s0.is_zero()) throw MathError("RationalFn: pole at s = 0");
        return num_(s0) / d;
    }

    std::string str(const std::string& var = "s") const {
        if (is_polynomial()) return num_.str(var);
        return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
    }

private:
    void reduce_() {
        if (den_.is_zero()) throw MathError("RationalFn: zero denominator");
        if (num_.is_zero()) {
            den_ = LaurentPoly(1L);
            return;
        }
        // Units s^k move to the numerator.
        num_ = num_.shifted(-den_.lo());
        den_ = den_.shifted(-den_.lo());
        if (den_.span() > 1 && num_.span() > 1) {
            const LaurentPoly g = gcd(num_, den_);
            if (g.span() > 1) {
                num_ = div_exact(num_, g);
                den_ = div_exact(den_, g);
                num_ = num_.shifted(-den_.lo());
                den_ = den_.shifted(-den_.lo());
            }
        }
        const Rational c = den_.coeff(0);
        if (!c.is_one()) {
            const Rational inv = c.inverse();
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    LaurentPoly num_;
    LaurentPoly den_ = LaurentPoly(1L);
};

/// rf_arith entry point matching the catalog surface; op in {'+','-','*','/'}.
inline RationalFn rf_arith(const RationalFn& a, const RationalFn& b, char op) {
    switch (op) {
        case '+': return a + b;
        case '-': return a - b;
        case '*': return a * b;
        case '/': return a / b;
        default: throw MathError("rf_arith: unknown operation");
    }
}

inline Rational eval_at(const RationalFn& f, const Rational& s0) { return f(s0); }

/// Power-series expansion of f at s = 0, modulo s^(N+1). Canonical form
/// guarantees den(0) = 1; the expansion exists iff num has no negative
/// support.
inline LaurentPoly truncate_series(const RationalFn& f, long N) {
    if (f.num().lo() < 0)
        throw MathError("truncate_series: no power-series expansion at s = 0");
    std::vector<Rational> out(static_cast<size_t>(N + 1), Rational(0L));
    for (long e = 0; e <= N; ++e) {
        Rational acc = f.num().coeff(e);
        for (long j = 1; j <= e; ++j) {
            const Rational d = f.den().coeff(j);
            if (!d.is_zero()) acc -= d * out[static_cast<size_t>(e - j)];
        }
        out[static_cast<size_t>(e)] = acc;  // den constant coefficient is 1
    }
    return LaurentPoly::from_coeffs(0, std::move(out));
}

/// Per-computation convention q = s^root_order (so q^(1/root_order) = s).
struct QContext {
    int root_order = 4;

    explicit QContext(int r = 4) : root_order(r) {
        if (r != 1 && r != 2 && r != 4)
            throw MathError("QContext: root order must be 1, 2 or 4");
    }

    /// s-exponent of q^(num/den); throws when not an integer power of s.
    long s_exponent(long num, long den = 1) const {
        const long t = root_order * num;
        if (den == 0 || t % den != 0)
            throw MathError("QContext: q^(" + std::to_string(num) + "/" + std::to_string(den) +
                            ") is not representable at root order " + std::to_string(root_order));
        return t / den;
    }
};

/// Value of the reduced rational function at s = 1; realizes q -> 1 limits.
/// A genuine pole after cancellation throws (the chosen formula is singular
/// at q = 1).
inline Rational limit_q_to_one(const RationalFn& f, const QContext& = QContext()) {
    try {
        return f(Rational(1L));
    } catch (const MathError&) {
        throw MathError("limit_q_to_one: singular at q = 1");
    }
}

}  // namespace schurq
