#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

namespace schurq {

using Int = mpz_class;

struct MathError : std::runtime_error {
    explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

/// Arbitrary-precision rational. Invariant: gcd(num, den) = 1 and den >= 1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors int promotion
    explicit Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den) : v_(num, den) {
        if (den == 0) throw MathError("Rational: zero denominator");
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    static Rational from_string(const std::string& text) {
        Rational r;
        if (r.v_.set_str(text, 10) != 0)
            throw MathError("Rational: cannot parse '" + text + "'");
        r.v_.canonicalize();
        return r;
    }

    const Int num() const { return v_.get_num(); }
    const Int den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw MathError("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const {
        if (is_zero()) throw MathError("Rational: inverse of zero");
        return Rational(mpq_class(1 / v_));
    }

    Rational pow(long e) const {
        if (e == 0) return Rational(1L);
        const Rational base = e < 0 ? inverse() : *this;
        const unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
        mpq_class out;
        mpz_pow_ui(out.get_num_mpz_t(), base.v_.get_num_mpz_t(), k);
        mpz_pow_ui(out.get_den_mpz_t(), base.v_.get_den_mpz_t(), k);
        return Rational(out);
    }

    /// Exact square root if this is a square of a rational; throws otherwise.
    Rational sqrt_exact() const {
        if (sign() < 0) throw MathError("Rational: square root of negative value");
        Int n, d;
        if (mpz_perfect_square_p(v_.get_num_mpz_t()) == 0 ||
            mpz_perfect_square_p(v_.get_den_mpz_t()) == 0)
            throw MathError("Rational: not a perfect square");
        mpz_sqrt(n.get_mpz_t(), v_.get_num_mpz_t());
        mpz_sqrt(d.get_mpz_t(), v_.get_den_mpz_t());
        return Rational(n, d);
    }

    std::string str() const { return v_.get_str(); }

    const mpq_class& raw() const { return v_; }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

inline Rational factorial(long n) {
    if (n < 0) throw MathError("factorial: negative argument");
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

inline Rational binomial(long n, long k) {
    if (k < 0) return Rational(0L);
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

/// Classical Pochhammer symbol (a)_k = a (a+1) ... (a+k-1).
inline Rational pochhammer(const Rational& a, long k) {
    if (k < 0) throw MathError("pochhammer: negative length");
    Rational out(1L);
    for (long j = 0; j < k; ++j) out *= a + Rational(j);
    return out;
}

}  // namespace schurq
