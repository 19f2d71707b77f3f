#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schurq/qseries.hpp"

using namespace schurq;

namespace {

RationalFn S(long e) { return RationalFn::s_power(e); }

const QEval<RationalFn> E2 = symbolic_q(2);
const QEval<RationalFn> E4 = symbolic_q(4);

}  // namespace

TEST_CASE("q-pochhammer") {
    const RationalFn q = E2.q();
    CHECK(qpoch(q, q, 0).is_one());
    CHECK(qpoch(q, q, 2) == (RationalFn(1) - q) * (RationalFn(1) - q * q));
    CHECK(qpoch(-q, q, 2) / qpoch(q, q, 2) ==
          (RationalFn(1) + q) * (RationalFn(1) + q * q) /
              ((RationalFn(1) - q) * (RationalFn(1) - q * q)));
    // splitting law across negative lengths: (a;q)_(k+l) = (a;q)_k (a q^k;q)_l
    const RationalFn a = RationalFn(3) * S(1);
    for (long k : {-3L, -1L, 0L, 2L})
        for (long l : {-2L, 1L, 3L})
            CHECK(qpoch(a, q, k + l) == qpoch(a, q, k) * qpoch(a * pow_i(q, k), q, l));
}

TEST_CASE("one-variable P_n: direct series") {
    const RationalFn q = E2.q(), one(1);
    CHECK(p1_direct(E2, S(3), 0).is_one());
    const RationalFn x = S(6);
    CHECK(p1_direct(E2, x, 1) == (one + q) * (one - x) / (one - q));
    // value at x = 0 collapses to the k = 0 term
    CHECK(p1_direct(E2, RationalFn(), 4) == qpoch(-q, q, 4) / qpoch(q, q, 4));
    // symbolic-in-x coefficients are reproduced at sampled points
    const FPoly<RationalFn> p3 = p1_coeffs(E2, 3);
    CHECK(p3.degree() == 3);
    CHECK(p3(x) == p1_direct(E2, x, 3));
}

TEST_CASE("one-variable P_n: balanced 4phi3 forms") {
    CHECK(p1_phi43(E2, S(2), 0, Phi43Form::Eq43).is_one());
    CHECK(p1_phi43(E4, S(4), 0, Phi43Form::Cidb).is_one());

    const RationalFn q = E2.q(), one(1);
    CHECK(p1_phi43(E2, q * q, 1, Phi43Form::Eq43) == (one + q) * (one - q * q) / (one - q));
    CHECK(p1_phi43(E2, pow_i(q, 4), 3, Phi43Form::Eq43) == p1_direct(E2, pow_i(q, 4), 3));

    // identical elements of Q(s) for n <= 6 at square monomial arguments
    for (long n = 0; n <= 6; ++n) {
        const RationalFn x2 = S(2 * n + 2);
        CHECK(p1_phi43(E2, x2, n, Phi43Form::Eq43) == p1_direct(E2, x2, n));
        const RationalFn x4 = RationalFn(Rational(9, 4)) * S(4);
        CHECK(p1_phi43(E4, x4, n, Phi43Form::Cidb) == p1_direct(E4, x4, n));
    }
    CHECK_THROWS_AS(p1_phi43(E2, RationalFn(2) * S(1), 2, Phi43Form::Eq43), MathError);
    // explicit witness unlocks non-square arguments: x = w^2 with w = 3s
    const RationalFn w = RationalFn(3) * S(1);
    CHECK(p1_phi43(E2, w * w, 2, Phi43Form::Eq43, w) == p1_direct(E2, w * w, 2));
}

TEST_CASE("one-variable P_n: the eight chia forms") {
    CHECK(p1_chia(E2, S(2), 0, 1).is_one());
    CHECK_THROWS_AS(p1_chia(E2, S(2), 1, 1), MathError);
    CHECK_THROWS_AS(p1_chia(E2, S(2), 2, 5), MathError);
    for (long n = 0; n <= 6; ++n) {
        // degree in x is n, so n + 2 distinct sample points prove equality
        for (long j = 1; j <= n + 2; ++j) {
            const RationalFn x = RationalFn(Rational(j)) * S(2);
            const RationalFn ref = p1_direct(E2, x, n);
            const int base_form = n % 2 == 0 ? 1 : 5;
            for (int f = base_form; f < base_form + 4; ++f)
                CHECK(p1_chia(E2, x, n, f) == ref);
        }
    }
}

TEST_CASE("askey-wilson basics") {
    const RationalFn z = S(1);
    const AWParams<RationalFn> P{RationalFn(2) * S(1), RationalFn(3) * S(2), RationalFn(5) * S(1),
                                 RationalFn(7) * S(3), E2.q()};
    CHECK(askey_wilson(0, z, P).is_one());
    for (long n = 1; n <= 4; ++n) {
        const AWParams<RationalFn> swapped{P.b, P.a, P.c, P.d, P.base};
        CHECK(askey_wilson(n, z, P) == askey_wilson(n, z, swapped));
        const AWParams<RationalFn> cd_swapped{P.a, P.b, P.d, P.c, P.base};
        CHECK(askey_wilson(n, z, P) == askey_wilson(n, z, cd_swapped));
        // reflection p_n(-x; a,b,c,d) = (-1)^n p_n(x; -a,-b,-c,-d)
        const AWParams<RationalFn> neg{-P.a, -P.b, -P.c, -P.d, P.base};
        const RationalFn sign{n % 2 == 0 ? 1 : -1};
        CHECK(askey_wilson(n, -z, P) == sign * askey_wilson(n, z, neg));
    }
}

TEST_CASE("connection to continuous q-Jacobi: real parameter sets") {
    // P_2h(x) and P_(2h+1)(x) against Askey-Wilson evaluations at z = x
    const RationalFn q = E2.q(), one(1);
    for (long h = 0; h <= 2; ++h) {
        for (long j = 1; j <= 2 * h + 3; ++j) {
            const RationalFn x = RationalFn(Rational(j, 1)) * S(2);
            const RationalFn xh = pow_i(x, h);
            const AWParams<RationalFn> pa{one, q, E2.qpow(1, 2), -E2.qpow(1, 2), q};
            CHECK(p1_direct(E2, x, 2 * h) ==
                  qpoch(-q, q, h) / qpoch(q, q, 2 * h) * xh * askey_wilson(h, x, pa));
            const AWParams<RationalFn> pb{one, q, q, q * q, q * q};
            CHECK(p1_direct(E2, x, 2 * h) == qpoch(q * q, q * q, h) /
                                                 (qpoch(q, q, 2 * h) * qpoch(q, q, 2 * h)) * xh *
                                                 askey_wilson(h, x, pb));
            const AWParams<RationalFn> pc{q, q, E2.qpow(1, 2), -E2.qpow(1, 2), q};
            CHECK(p1_direct(E2, x, 2 * h + 1) == qpoch(-q, q, h + 1) / qpoch(q, q, 2 * h + 1) * xh *
                                                     (one - x) * askey_wilson(h, x, pc));
            const AWParams<RationalFn> pd{q, q, q * q, q * q, q * q};
            CHECK(p1_direct(E2, x, 2 * h + 1) ==
                  qpoch(q * q, q * q, h + 1) /
                      (qpoch(q, q, 2 * h + 1) * qpoch(q, q, 2 * h + 1)) * xh * (one - x) *
                      askey_wilson(h, x, pd));
        }
    }
}

TEST_CASE("connection identities with imaginary parameter pairs") {
    for (long n = 0; n <= 5; ++n) {
        CHECK(check_cid(E2, n, S(1)));
        CHECK(check_cid(E2, n, RationalFn(2) * S(3)));
        CHECK(check_cidb(E4, n, S(1)));
        CHECK(check_cidb(E4, n, RationalFn(Rational(3, 2)) * S(2)));
    }
}

TEST_CASE("monic q-ultraspherical family") {
    CHECK(c_monic(E2, 0) == FPoly<RationalFn>(RationalFn(1)));
    CHECK(c_monic(E2, 1) == FPoly<RationalFn>::variable());
    const RationalFn q = E2.q();
    CHECK(c_norm2(E2, 1) == qpoch(q, q, 1) * qpoch(q, q, 2) / (qpoch(-q, q, 1) * qpoch(-q, q, 2)));
    for (long k = 0; k <= 8; ++k) {
        const FPoly<RationalFn> ck = c_monic(E2, k);
        CHECK(ck.degree() == k);
        CHECK(ck.coeff(k).is_one());
        // parity: only every other coefficient is populated
        for (long j = (k % 2 == 0 ? 1 : 0); j <= k; j += 2) CHECK(ck.coeff(j).is_zero());
    }
    // defining relation at sample z: c_k(z + 1/z) = (q;q)_k/(-q;q)_k z^-k P_k(-z^2)
    const RationalFn z = RationalFn(2) * S(1);
    for (long k = 1; k <= 5; ++k) {
        const RationalFn xi = z + RationalFn(1) / z;
        CHECK(c_monic(E2, k)(xi) ==
              qpoch(q, q, k) / qpoch(-q, q, k) * pow_i(z, -k) * p1_direct(E2, -z * z, k));
    }
}

TEST_CASE("classical families f_k and p_k^(eps)") {
    CHECK(f_poly(0) == FPoly<Rational>(Rational(1L)));
    CHECK(f_poly(1) == FPoly<Rational>::variable());
    for (long k = 0; k <= 8; ++k) {
        const FPoly<Rational> f = f_poly(k);
        CHECK(f.degree() == k);
        CHECK(f.coeff(k).is_one());
        // against the raw terminating 2F1 at integer samples
        for (long x0 = 1; x0 <= 3; ++x0) {
            const Rational expect = factorial(k + 1) / Rational(2L).pow(k) *
                                    hyp_2f1(Rational(-k), Rational(1 - x0), Rational(2L), Rational(2L));
            CHECK(f(Rational(x0)) == expect);
        }
    }
    CHECK(classical_pk(1, 0) == FPoly<Rational>::variable() - FPoly<Rational>(Rational(1, 2)));
    for (long k = 0; k <= 6; ++k)
        for (int eps : {0, 1}) {
            const FPoly<Rational> p = classical_pk(k, eps);
            CHECK(p.degree() == k);
            CHECK(p.coeff(k).is_one());
        }
    // parity split ties f_k to the dual Hahn families:
    // f_2k(x) = (-1)^k p_k^(0)(-x^2), f_(2k+1)(x) = (-1)^k x p_k^(1)(-x^2)
    for (long k = 0; k <= 4; ++k) {
        const Rational sign(k % 2 == 0 ? 1L : -1L);
        CHECK(f_poly(2 * k) ==
              classical_pk(k, 0).composed_monomial(Rational(-1L), 2).scaled(sign));
        CHECK(f_poly(2 * k + 1) ==
              classical_pk(k, 1).composed_monomial(Rational(-1L), 2).shifted(1).scaled(sign));
    }
    // mp_poly stitches the split back together
    for (long k = 0; k <= 6; ++k) CHECK(mp_poly(k).degree() == k);
}

TEST_CASE("abel orthogonality of f_k") {
    CHECK(abel_orthogonality(0, 1) == Rational(0L));
    CHECK(abel_orthogonality(0, 0) == Rational(1, 4));
    CHECK(abel_orthogonality(1, 1) == Rational(-1, 8));
    for (long m = 0; m <= 5; ++m)
        for (long n = 0; n <= 5; ++n) {
            const Rational expect =
                m == n ? Rational(n % 2 == 0 ? 1L : -1L) * factorial(n + 1) * factorial(n) /
                             Rational(4L).pow(n + 1)
                       : Rational(0L);
            CHECK(abel_orthogonality(m, n) == expect);
        }
}
