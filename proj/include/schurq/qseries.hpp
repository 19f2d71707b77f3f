#pragma once

#include <array>
#include <optional>
#include <vector>

#include "schurq/poly.hpp"
#include "schurq/rational_fn.hpp"

namespace schurq {

/// Binds a scalar field F to the convention q = s^r. Symbolic work uses
/// F = RationalFn with s the formal variable; pointwise work uses
/// F = Rational with s a fixed rational sample.
template <class F>
struct QEval {
    F s;
    int r = 4;

    F spow(long e) const { return pow_i(s, e); }
    F q() const { return spow(r); }

    /// q^(num/den) as a power of s; throws when not representable.
    F qpow(long num, long den = 1) const {
        long t = r * num;
        if (den < 0) { den = -den; t = -t; }
        if (den == 0 || t % den != 0)
            throw MathError("QEval: fractional power of q not representable at root order " +
                            std::to_string(r));
        return spow(t / den);
    }
};

inline QEval<RationalFn> symbolic_q(const QContext& ctx) {
    return {RationalFn::s_power(1), ctx.root_order};
}
inline QEval<RationalFn> symbolic_q(int root_order) { return symbolic_q(QContext(root_order)); }
inline QEval<Rational> numeric_q(const Rational& s0, int root_order) {
    if (s0.is_zero()) throw MathError("numeric_q: s must be nonzero");
    return {s0, root_order};
}

/// q-Pochhammer symbol (a;q)_k, extended to negative k by
/// (a;q)_(-k) = 1 / ((a q^(-k); q)_k).
template <class F>
F qpoch(const F& a, const F& q, long k) {
    F out(1);
    if (k >= 0) {
        F aq = a;
        for (long j = 0; j < k; ++j) {
            out *= F(1) - aq;
            aq *= q;
        }
    } else {
        const F qi = F(1) / q;
        F aq = a * qi;
        for (long j = 0; j < -k; ++j) {
            out /= F(1) - aq;
            aq *= qi;
        }
    }
    return out;
}

template <class F>
F qpoch(std::initializer_list<F> as, const F& q, long k) {
    F out(1);
    for (const F& a : as) out *= qpoch(a, q, k);
    return out;
}

/// Coefficient list of the one-variable polynomial P_n in its argument,
/// built from the terminating well-poised 2phi1 series.
template <class F>
FPoly<F> p1_coeffs(const QEval<F>& E, long n) {
    if (n < 0) throw MathError("p1_coeffs: negative degree");
    const F q = E.q();
    FPoly<F> out;
    F term = qpoch(-q, q, n) / qpoch(q, q, n);
    out += FPoly<F>::monomial(term, 0);
    for (long k = 1; k <= n; ++k) {
        // term ratio of the 2phi1[-q, q^-n; -q^-n; q, x] series
        const F num = (F(1) + E.qpow(k)) * (F(1) - E.qpow(k - 1 - n));
        const F den = (F(1) - E.qpow(k)) * (F(1) + E.qpow(k - 1 - n));
        term *= num / den;
        out += FPoly<F>::monomial(term, k);
    }
    return out;
}

template <class F>
F p1_direct(const QEval<F>& E, const F& x, long n) {
    return p1_coeffs(E, n)(x);
}

/// Exact square root within the field, when one exists.
inline std::optional<Rational> try_sqrt(const Rational& x) {
    if (x.sign() < 0) return std::nullopt;
    if (mpz_perfect_square_p(x.num().get_mpz_t()) == 0 ||
        mpz_perfect_square_p(x.den().get_mpz_t()) == 0)
        return std::nullopt;
    return x.sqrt_exact();
}

inline std::optional<RationalFn> try_sqrt(const RationalFn& x) {
    if (x.is_zero()) return RationalFn();
    if (!x.num().is_monomial() || !x.den().is_monomial()) return std::nullopt;
    const long e = x.num().lo() - x.den().lo();
    if (e % 2 != 0) return std::nullopt;
    const auto c = try_sqrt(x.num().coeff(x.num().lo()) / x.den().coeff(x.den().lo()));
    if (!c) return std::nullopt;
    return RationalFn(LaurentPoly::monomial(*c, e / 2));
}

/// Terminating 4phi3: the first numerator parameter must be q^(-N) so the
/// series stops; all parameters live in F.
template <class F>
F phi43(const std::array<F, 4>& num, const std::array<F, 3>& den, const F& base, const F& z,
        long nmax) {
    F out(0), term(1);
    for (long k = 0; k <= nmax; ++k) {
        out += term;
        F ratio = z;
        const F qk = pow_i(base, k);
        for (const F& a : num) ratio *= F(1) - a * qk;
        ratio /= F(1) - pow_i(base, k + 1);
        for (const F& b : den) ratio /= F(1) - b * qk;
        if (k < nmax) term *= ratio;
    }
    return out;
}

enum class Phi43Form { Eq43, Cidb };

/// One-variable P_n through the balanced 4phi3 representations; needs a
/// square root of x (derived for monomial arguments, or supplied).
template <class F>
F p1_phi43(const QEval<F>& E, const F& x, long n, Phi43Form form,
           std::optional<std::type_identity_t<F>> sqrt_x = std::nullopt) {
    if (!sqrt_x) sqrt_x = try_sqrt(x);
    if (!sqrt_x)
        throw MathError("p1_phi43: sqrt(x) not representable; supply a witness or verify pointwise");
    const F w = *sqrt_x;
    const F q = E.q();
    const F pref = (F(1) - E.qpow(n + 1)) / (F(1) - q) * pow_i(w / E.qpow(1, 2), n);
    if (form == Phi43Form::Eq43) {
        const std::array<F, 4> num{E.qpow(-n), E.qpow(n + 2), E.qpow(1, 2) / w, -E.qpow(1, 2) * w};
        const std::array<F, 3> den{q, E.qpow(3, 2), -E.qpow(3, 2)};
        return pref * phi43(num, den, q, q, n);
    }
    // Base q^(1/2); the two conjugate denominator parameters +-i q^(3/4)
    // pair into the real factor (-q^(3/2); q)_k.
    const F Q = E.qpow(1, 2);
    F out(0), term(1);
    for (long k = 0; k <= 2 * n; ++k) {
        out += term;
        const F Qk = pow_i(Q, k);
        F ratio = Q;
        ratio *= (F(1) - E.qpow(-n, 2) * Qk) * (F(1) + E.qpow(n + 2, 2) * Qk);
        ratio *= (F(1) - E.qpow(1, 2) / w * Qk) * (F(1) + E.qpow(1, 2) * w * Qk);
        ratio /= (F(1) - pow_i(Q, k + 1)) * (F(1) - q * Qk);
        // conjugate pair +-i q^(3/4) at base q^(1/2): one factor 1 + q^(k+3/2)
        ratio /= F(1) + E.qpow(2 * k + 3, 2);
        if (k < 2 * n) term *= ratio;
    }
    return pref * out;
}

/// The eight 4phi3 expressions for P_2h (forms 1-4) and P_(2h+1) (forms 5-8).
template <class F>
F p1_chia(const QEval<F>& E, const F& x, long n, int form) {
    if (form < 1 || form > 8) throw MathError("p1_chia: form must be 1..8");
    const bool odd_form = form >= 5;
    if ((n % 2 == 1) != odd_form)
        throw MathError("p1_chia: parity of n does not match the chosen form");
    const long h = n / 2;
    const F q = E.q();
    const F one(1);
    const auto qp = [&](long a, long b = 1) { return E.qpow(a, b); };
    switch (form) {
        case 1: {
            const F p = (one - qp(2 * h + 1)) / (one - q) * pow_i(qp(-1), h) * pow_i(x, h);
            return p * phi43<F>({qp(-h), -qp(h + 1), q * x, q / x}, {q, qp(3, 2), -qp(3, 2)}, q, q, h);
        }
        case 2: {
            const F p = qpoch({qp(3, 2), -q}, q, h) / qpoch({q, -qp(1, 2)}, q, h) * pow_i(qp(-1, 2), h) *
                        pow_i(x, h);
            return p * phi43<F>({qp(-h), -qp(h + 1), qp(1, 2) * x, qp(1, 2) / x},
                                {qp(1, 2), qp(3, 2), -q}, q, q, h);
        }
        case 3: {
            const F p = (one - qp(2 * h + 1)) / (one - q) * pow_i(qp(-1), h) * pow_i(x, h);
            return p * phi43<F>({qp(-2 * h), qp(2 * h + 2), q * x, q / x}, {q, qp(2), qp(3)}, qp(2),
                                qp(2), h);
        }
        case 4: {
            const F c = (one - qp(2 * h + 1)) / (one - q);
            const F p = c * c * pow_i(qp(-2), h) * pow_i(x, h);
            return p * phi43<F>({qp(-2 * h), qp(2 * h + 2), qp(2) * x, qp(2) / x}, {qp(2), qp(3), qp(3)},
                                qp(2), qp(2), h);
        }
        case 5: {
            const F p = (one - qp(2 * h + 2)) * (one - x) / ((one - q) * (one - q)) * pow_i(qp(-1), h) *
                        pow_i(x, h);
            return p * phi43<F>({qp(-h), -qp(h + 2), q * x, q / x}, {qp(2), qp(3, 2), -qp(3, 2)}, q, q, h);
        }
        case 6: {
            const F p = qpoch(qp(3, 2), q, h) * qpoch(-q, q, h + 1) * (one - x) /
                        ((one - q) * qpoch({q, -qp(3, 2)}, q, h)) * pow_i(qp(-1, 2), h) * pow_i(x, h);
            return p * phi43<F>({qp(-h), -qp(h + 2), qp(1, 2) * x, qp(1, 2) / x},
                                {qp(3, 2), qp(3, 2), -q}, q, q, h);
        }
        case 7: {
            const F p = (one - qp(2 * h + 2)) * (one - x) / ((one - q) * (one - q)) * pow_i(qp(-1), h) *
                        pow_i(x, h);
            return p * phi43<F>({qp(-2 * h), qp(2 * h + 4), q * x, q / x}, {qp(2), qp(3), qp(3)}, qp(2),
                                qp(2), h);
        }
        default: {
            const F c = one - qp(2 * h + 2);
            const F p = c * c * (one - x) / ((one - q) * (one - q) * (one - qp(2))) * pow_i(qp(-2), h) *
                        pow_i(x, h);
            return p * phi43<F>({qp(-2 * h), qp(2 * h + 4), qp(2) * x, qp(2) / x}, {qp(3), qp(3), qp(4)},
                                qp(2), qp(2), h);
        }
    }
}

/// Askey-Wilson parameter set; base is q, q^(1/2) or q^2 expressed in F.
template <class F>
struct AWParams {
    F a, b, c, d;
    F base;
};

/// Askey-Wilson polynomial p_n(cos theta; a, b, c, d | base) with
/// e^(i theta) supplied directly as the unimodular surrogate z (so the
/// polynomial argument is (z + 1/z)/2). Parameters must lie in F.
template <class F>
F askey_wilson(long n, const F& z, const AWParams<F>& p) {
    const F& Q = p.base;
    if (Q == F(0) || Q == F(1) || Q == F(-1)) throw MathError("askey_wilson: invalid base");
    const F ab = p.a * p.b, ac = p.a * p.c, ad = p.a * p.d;
    const F abcd = ab * p.c * p.d;
    F pref = qpoch({ab, ac, ad}, Q, n) * pow_i(p.a, -n);
    F sum(0), term(1);
    const F Qn_inv = pow_i(Q, -n);
    for (long k = 0; k <= n; ++k) {
        sum += term;
        if (k == n) break;
        const F Qk = pow_i(Q, k);
        F ratio = Q;
        ratio *= (F(1) - Qn_inv * Qk) * (F(1) - abcd * pow_i(Q, n - 1) * Qk);
        ratio *= (F(1) - p.a * z * Qk) * (F(1) - p.a / z * Qk);
        ratio /= (F(1) - pow_i(Q, k + 1));
        ratio /= (F(1) - ab * Qk) * (F(1) - ac * Qk) * (F(1) - ad * Qk);
        term *= ratio;
    }
    return pref * sum;
}

/// Gaussian extension F(i), used internally to verify connection formulas
/// whose Askey-Wilson parameters come in conjugate imaginary pairs.
template <class F>
struct GaussF {
    F re{0}, im{0};

    GaussF() = default;
    GaussF(long c) : re(c) {}  // NOLINT
    GaussF(F r) : re(std::move(r)) {}  // NOLINT
    GaussF(F r, F i) : re(std::move(r)), im(std::move(i)) {}

    GaussF operator-() const { return {-re, -im}; }
    friend GaussF operator+(const GaussF& a, const GaussF& b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussF operator-(const GaussF& a, const GaussF& b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussF operator*(const GaussF& a, const GaussF& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussF operator/(const GaussF& a, const GaussF& b) {
        const F n = b.re * b.re + b.im * b.im;
        if (n == F(0)) throw MathError("GaussF: division by zero");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    GaussF& operator+=(const GaussF& o) { return *this = *this + o; }
    GaussF& operator-=(const GaussF& o) { return *this = *this - o; }
    GaussF& operator*=(const GaussF& o) { return *this = *this * o; }
    GaussF& operator/=(const GaussF& o) { return *this = *this / o; }
    friend bool operator==(const GaussF& a, const GaussF& b) { return a.re == b.re && a.im == b.im; }
};

/// Checks P_n(-z^2) * (q, q^(n+2); q)_n / (-q; q)_n = z^n p_n at the
/// imaginary parameter quadruple (i q^(1/2), -i q^(1/2), i q, -i q | q).
template <class F>
bool check_cid(const QEval<F>& E, long n, const F& z) {
    using G = GaussF<F>;
    const F q = E.q();
    const G a(F(0), E.qpow(1, 2)), b(F(0), -E.qpow(1, 2)), c(F(0), q), d(F(0), -q);
    const G aw = askey_wilson<G>(n, G(z), {a, b, c, d, G(q)});
    const G rhs = G(pow_i(z, n)) * aw;
    const F lhs = p1_direct(E, -z * z, n) * qpoch({q, E.qpow(n + 2)}, q, n) / qpoch(-q, q, n);
    return rhs == G(lhs);
}

/// Same for the base-q^(1/2) identification with parameters
/// (i q^(1/2), -i q^(1/2), q^(1/4), -q^(1/4) | q^(1/2)); needs root order 4.
template <class F>
bool check_cidb(const QEval<F>& E, long n, const F& z) {
    using G = GaussF<F>;
    const F q = E.q(), Q = E.qpow(1, 2);
    const G a(F(0), E.qpow(1, 2)), b(F(0), -E.qpow(1, 2));
    const G c(E.qpow(1, 4)), d(-E.qpow(1, 4));
    const G aw = askey_wilson<G>(n, G(z), {a, b, c, d, G(Q)});
    const G rhs = G(pow_i(z, n)) * aw;
    const F lhs = p1_direct(E, -z * z, n) * qpoch(q, q, n) * qpoch(-E.qpow(3, 2), q, n) /
                  qpoch(-q, Q, n);
    return rhs == G(lhs);
}

/// Lifts a rational constant into F.
template <class F>
F scalar_from_rational(const Rational& c);

template <>
inline Rational scalar_from_rational<Rational>(const Rational& c) { return c; }

template <>
inline RationalFn scalar_from_rational<RationalFn>(const Rational& c) { return RationalFn(c); }

/// Norm (squared) of the monic continuous q-ultraspherical polynomial c_k.
template <class F>
F c_norm2(const QEval<F>& E, long k) {
    const F q = E.q();
    return qpoch(q, q, k) * qpoch(q, q, k + 1) / (qpoch(-q, q, k) * qpoch(-q, q, k + 1));
}

/// Monic continuous q-ultraspherical polynomial c_k expressed in the basis
/// of powers of xi = z + 1/z, via c_k(z + 1/z) = (q;q)_k/(-q;q)_k z^-k P_k(-z^2).
template <class F>
FPoly<F> c_monic(const QEval<F>& E, long k) {
    const F q = E.q();
    FPoly<F> in_z = p1_coeffs(E, k).composed_monomial(F(-1), 2).shifted(-k);
    in_z = in_z.scaled(qpoch(q, q, k) / qpoch(-q, q, k));
    // Rewrite the symmetric Laurent polynomial in z in powers of z + 1/z.
    FPoly<F> out;
    while (!in_z.is_zero()) {
        const long d = in_z.hi();
        const F a = in_z.coeff(d);
        if (d == 0 && in_z.lo() == 0) {
            out += FPoly<F>(a);
            break;
        }
        if (d <= 0) throw MathError("c_monic: asymmetric Laurent remainder");
        out += FPoly<F>::monomial(a, d);
        FPoly<F> xi_d;
        for (long j = 0; j <= d; ++j)
            xi_d += FPoly<F>::monomial(scalar_from_rational<F>(binomial(d, j)), d - 2 * j);
        in_z -= xi_d.scaled(a);
    }
    return out;
}

/// Monic polynomial family f_k(x) = (k+1)!/2^k 2F1[-k, 1-x; 2; 2].
inline FPoly<Rational> f_poly(long k) {
    if (k < 0) throw MathError("f_poly: negative index");
    FPoly<Rational> sum;
    FPoly<Rational> rising(Rational(1L));  // (1-x)_j
    Rational coef(1L);
    for (long j = 0; j <= k; ++j) {
        sum += rising.scaled(coef);
        // next term: (-k)_j 2^j / ((2)_j j!)
        coef *= Rational(-(k - j)) * Rational(2L) / (Rational(2 + j) * Rational(j + 1));
        rising *= FPoly<Rational>(Rational(1 + j)) - FPoly<Rational>::variable();
    }
    return sum.scaled(factorial(k + 1) / Rational(2L).pow(k));
}

/// Monic continuous dual Hahn polynomial (-1)^k S_k(y; a, b, c), written in
/// the rational variable y through (a+i sqrt(y))_j (a-i sqrt(y))_j =
/// prod_{i<j} ((a+i)^2 + y).
inline FPoly<Rational> cdh_monic(long k, const Rational& a, const Rational& b, const Rational& c) {
    FPoly<Rational> sum;
    FPoly<Rational> rho(Rational(1L));
    Rational coef = pochhammer(a + b, k) * pochhammer(a + c, k);
    if (k % 2 != 0) coef = -coef;
    Rational term(1L);
    for (long j = 0; j <= k; ++j) {
        sum += rho.scaled(term);
        term *= Rational(-(k - j)) / (Rational(j + 1) * (a + b + Rational(j)) * (a + c + Rational(j)));
        const Rational aj = a + Rational(j);
        rho *= FPoly<Rational>(aj * aj) + FPoly<Rational>::variable();
    }
    return sum.scaled(coef);
}

/// Monic orthogonal families p_k^(0), p_k^(1) for the q -> 1 kernels.
inline FPoly<Rational> classical_pk(long k, int eps) {
    if (eps == 0) return cdh_monic(k, Rational(0L), Rational(1, 2), Rational(1L));
    if (eps == 1) return cdh_monic(k, Rational(1, 2), Rational(1L), Rational(1L));
    throw MathError("classical_pk: eps must be 0 or 1");
}

inline Rational classical_pk_norm2(long k, int eps) {
    if (eps == 0) return factorial(2 * k) * factorial(2 * k + 1) / Rational(2L).pow(4 * k + 1);
    if (eps == 1) return factorial(2 * k + 1) * factorial(2 * k + 2) / Rational(2L).pow(4 * k + 3);
    throw MathError("classical_pk_norm2: eps must be 0 or 1");
}

/// The monic q -> 1 limit family p_k, assembled from its even/odd split.
inline FPoly<Rational> mp_poly(long k) {
    if (k % 2 == 0) return classical_pk(k / 2, 0).composed_monomial(Rational(1L), 2);
    return classical_pk((k - 1) / 2, 1).composed_monomial(Rational(1L), 2).shifted(1);
}

inline Rational mp_norm2(long k) {
    return factorial(k) * factorial(k + 1) / Rational(2L).pow(2 * k + 1);
}

namespace detail {

inline RationalFn rf_derivative(const RationalFn& f) {
    const LaurentPoly num = f.num().derivative() * f.den() - f.num() * f.den().derivative();
    return RationalFn(num, f.den() * f.den());
}

}  // namespace detail

/// Abel-summed discrete orthogonality of the f_k family:
/// lim_{t->1-} sum_{k>=1} (-1)^(k+1) t^k k f_m(k) f_n(k). The weighted sum
/// is a rational function of t with its only pole at t = -1, so evaluation
/// at t = 1 is exact.
inline Rational abel_orthogonality(long m, long n) {
    const FPoly<Rational> poly = (f_poly(m) * f_poly(n)).shifted(1);  // k f_m(k) f_n(k)
    // A_d(t) = sum_{k>=1} (-1)^(k+1) t^k k^d = (t d/dt)^d [t/(1+t)]
    RationalFn A(LaurentPoly::monomial(Rational(1L), 1),
                 LaurentPoly(1L) + LaurentPoly::monomial(Rational(1L), 1));
    Rational out(0L);
    const Rational one(1L);
    for (long d = 0; d <= poly.degree(); ++d) {
        if (d > 0) A = RationalFn::s_power(1) * detail::rf_derivative(A);
        const Rational c = poly.coeff(d);
        if (!c.is_zero()) out += c * A(one);
    }
    return out;
}

/// Terminating classical hypergeometric sums (first parameter a nonpositive
/// integer).
inline Rational hyp_2f1(const Rational& a, const Rational& b, const Rational& c,
                        const Rational& z) {
    if (!a.is_integer() || a.sign() > 0) throw MathError("hyp_2f1: series must terminate");
    const long n = -static_cast<long>(mpz_get_si(a.num().get_mpz_t()));
    Rational sum(0L), term(1L);
    for (long k = 0; k <= n; ++k) {
        sum += term;
        term *= (a + Rational(k)) * (b + Rational(k)) * z /
                ((c + Rational(k)) * Rational(k + 1));
    }
    return sum;
}

inline Rational hyp_3f2(const Rational& a1, const Rational& a2, const Rational& a3,
                        const Rational& b1, const Rational& b2, const Rational& z) {
    if (!a1.is_integer() || a1.sign() > 0) throw MathError("hyp_3f2: series must terminate");
    const long n = -static_cast<long>(mpz_get_si(a1.num().get_mpz_t()));
    Rational sum(0L), term(1L);
    for (long k = 0; k <= n; ++k) {
        sum += term;
        term *= (a1 + Rational(k)) * (a2 + Rational(k)) * (a3 + Rational(k)) * z /
                ((b1 + Rational(k)) * (b2 + Rational(k)) * Rational(k + 1));
    }
    return sum;
}

}  // namespace schurq
