#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schurq/cd_kernels.hpp"

using namespace schurq;

namespace {

const QEval<RationalFn> E2 = symbolic_q(2);

RationalFn C(long n, long d = 1) { return RationalFn(Rational(n, d)); }

std::vector<Rational> lambda_points(const StrictPartition& lambda) {
    std::vector<Rational> x;
    for (long p : lambda.parts) x.push_back(-Rational(p) * Rational(p));
    return x;
}

}  // namespace

TEST_CASE("christoffel-darboux kernel: sum and quotient forms") {
    const auto sys = ultraspherical_system(E2, 7);
    CHECK(kernel_K_sum(sys, 1, C(2), C(3)) == RationalFn(1) / sys.norm2[0]);
    for (long n = 1; n <= 5; ++n) {
        for (int a = 0; a < 3; ++a) {
            const RationalFn x = C(2 + a, 1 + a), y = C(7 + a, 2);
            CHECK(kernel_K_sum(sys, n, x, y) == kernel_K_quot(sys, n, x, y));
            CHECK(kernel_K_sum(sys, n, x, y) == kernel_K_sum(sys, n, y, x));
        }
    }
    CHECK_THROWS_AS(kernel_K_quot(sys, 2, C(2), C(2)), MathError);
}

TEST_CASE("parity-restricted kernel: three forms") {
    const auto sys = ultraspherical_system(E2, 7);
    // n = 1: single term p_0(x) p_0(y) / ||p_0||^2
    CHECK(kernel_Ktilde_sum(sys, 1, C(2), C(3)) == RationalFn(1) / sys.norm2[0]);
    for (long n = 1; n <= 5; ++n) {
        const RationalFn x = C(5, 2), y = C(7, 3);
        const RationalFn ref = kernel_Ktilde_sum(sys, n, x, y);
        CHECK(ref == kernel_Ktilde_quot(sys, n, x, y));
        CHECK(ref == kernel_Ktilde_alt(sys, n, x, y));
    }
    // two-term recursion at n = 2
    const RationalFn x = C(3), y = C(4);
    CHECK(kernel_Ktilde_sum(sys, 2, x, y) ==
          kernel_K_sum(sys, 2, x, y) - kernel_Ktilde_sum(sys, 1, x, y));
}

TEST_CASE("moment functional of the ultraspherical system") {
    const RationalFn q = E2.q();
    CHECK(mu_moment(E2, 0) == (RationalFn(1) - q) / (RationalFn(1) + q));
    CHECK(mu_moment(E2, 1).is_zero());
    CHECK(mu_moment(E2, 3).is_zero());
    const auto sys = ultraspherical_system(E2, 6);
    // int c_1^2 dmu = ||c_1||^2
    CHECK(mu_apply(E2, sys.p[1] * sys.p[1]) == sys.norm2[1]);
    for (long i = 0; i <= 5; ++i)
        for (long j = 0; j <= 5; ++j) {
            const RationalFn val = mu_apply(E2, sys.p[static_cast<size_t>(i)] *
                                                    sys.p[static_cast<size_t>(j)]);
            if (i == j)
                CHECK(val == sys.norm2[static_cast<size_t>(i)]);
            else
                CHECK(val.is_zero());
        }
}

TEST_CASE("antisymmetrized t-functional") {
    using FP = FPoly<RationalFn>;
    const RationalFn q = E2.q();
    CHECK(lambda_apply(E2, FP(RationalFn(1))).is_zero());
    CHECK(lambda_apply(E2, FP::variable()) == (RationalFn(1) - q) / (RationalFn(1) + q));
    CHECK(lambda_apply(E2, FP::monomial(RationalFn(1), -1)) ==
          -(RationalFn(1) - q) / (RationalFn(1) + q));
    // antisymmetry under t -> 1/t on a generic Laurent polynomial
    FP f = FP::monomial(C(3), 2) + FP::monomial(C(5, 2), -1) + FP(RationalFn(7));
    FP frev = FP::monomial(C(3), -2) + FP::monomial(C(5, 2), 1) + FP(RationalFn(7));
    CHECK(lambda_apply(E2, f) == -lambda_apply(E2, frev));
}

TEST_CASE("multivariable kernel forms agree") {
    const auto sys = ultraspherical_system(E2, 9);
    // 2m = 2: pfaffian forms cancel down to K^n
    const auto p0 = make_cdl_point(C(1));
    const auto p1 = make_cdl_point(C(1, 2));
    const auto p2 = make_cdl_point(C(2, 3));
    const auto p3 = make_cdl_point(C(1, 3));
    for (long n = 1; n <= 4; ++n) {
        const std::vector<RationalFn> x{p0.x, p1.x};
        const RationalFn ref = kernel_K_sum(sys, n, p0.x, p1.x);
        CHECK(multikernel_det(sys, n, x) == ref);
        CHECK(multikernel_pfaff_sqrt(sys, n, x, {p0.sqrt_x, p1.sqrt_x}) == ref);
        CHECK(multikernel_pfaff_xi(sys, n, x, {p0.xi, p1.xi}) == ref);
    }
    // 2m = 4: determinant, both pfaffians, and the split forms
    const std::vector<RationalFn> x4{p0.x, p1.x, p2.x, p3.x};
    for (long n = 2; n <= 4; ++n) {
        const RationalFn ref = multikernel_det(sys, n, x4);
        CHECK(multikernel_pfaff_sqrt(sys, n, x4, {p0.sqrt_x, p1.sqrt_x, p2.sqrt_x, p3.sqrt_x}) ==
              ref);
        CHECK(multikernel_pfaff_xi(sys, n, x4, {p0.xi, p1.xi, p2.xi, p3.xi}) == ref);
        CHECK(multikernel_mk_det(sys, n, {p0.x, p1.x}, {p2.x, p3.x}) == ref);
        CHECK(multikernel_mk_sum(sys, n, {p0.x, p1.x}, {p2.x, p3.x}) == ref);
    }
    // m = 1 structure: the split determinant IS the kernel
    CHECK(multikernel_mk_det(sys, 3, {p0.x}, {p1.x}) == kernel_K_sum(sys, 3, p0.x, p1.x));
}

TEST_CASE("parity-restricted multivariable kernel forms agree") {
    const auto sys = ultraspherical_system(E2, 9);
    const auto a = make_cdc_point(C(2));
    const auto b = make_cdc_point(C(3), true);  // flipped witness sign
    const auto c = make_cdc_point(C(3, 2));
    const auto d = make_cdc_point(C(5, 3));
    // 2m = 2 reduces to Ktilde
    for (long n = 1; n <= 4; ++n) {
        const std::vector<RationalFn> x{a.x, b.x};
        const RationalFn ref = kernel_Ktilde_sum(sys, n, a.x, b.x);
        CHECK(multikernel_tilde_pfaff_w(sys, n, x, {a.u, b.u}) == ref);
        CHECK(multikernel_tilde_pfaff_xi(sys, n, x, {a.xi, b.xi}) == ref);
        if (n >= 1) CHECK(multikernel_tilde_det(sys, n == 1 ? 1 : n, {a.x, b.x}) ==
                          kernel_Ktilde_sum(sys, n == 1 ? 1 : n, a.x, b.x));
    }
    // 2m = 4 at admissible points, mixed witness signs
    const std::vector<RationalFn> x4{a.x, b.x, c.x, d.x};
    for (long n = 3; n <= 5; ++n) {
        const RationalFn ref = multikernel_tilde_det(sys, n, x4);
        CHECK(multikernel_tilde_pfaff_w(sys, n, x4, {a.u, b.u, c.u, d.u}) == ref);
        CHECK(multikernel_tilde_pfaff_xi(sys, n, x4, {a.xi, b.xi, c.xi, d.xi}) == ref);
    }
    CHECK_THROWS_AS(multikernel_tilde_pfaff_xi(sys, 3, {a.x, b.x}, {C(2), b.xi}), MathError);
}

TEST_CASE("generalized rectangular schur polynomials") {
    const auto sys = ultraspherical_system(E2, 8);
    CHECK(gen_schur(sys, 0, std::vector<RationalFn>{C(2), C(3), C(5)}).is_one());
    CHECK(gen_schur_tilde(sys, 0, std::vector<RationalFn>{C(2), C(3)}).is_one());
    for (long n = 0; n <= 4; ++n)
        CHECK(gen_schur(sys, n, std::vector<RationalFn>{C(7, 2)}) == sys.p[static_cast<size_t>(n)](C(7, 2)));
    // limit reduction dropping the auxiliary point
    for (long n = 0; n <= 3; ++n) {
        CHECK(sfl_check(sys, n, std::vector<RationalFn>{C(2), C(3)}));
        CHECK(sfl_check(sys, n, std::vector<RationalFn>{C(5, 2)}));
    }
}

TEST_CASE("kernel expression of P_n at rational witnesses") {
    // m = 1 symbolic in z: P_n(-z^2) = (-q;q)_n/(q;q)_n z^n c_n(z + 1/z)
    const RationalFn q = E2.q();
    for (long n = 0; n <= 4; ++n) {
        const RationalFn z = C(3) * RationalFn::s_power(1);
        const RationalFn xi = z + RationalFn(1) / z;
        CHECK(p1_direct(E2, -z * z, n) ==
              qpoch(-q, q, n) / qpoch(q, q, n) * pow_i(z, n) * c_monic(E2, n)(xi));
    }
    CHECK(theorem_pkt_check({Rational(2L), Rational(3L)}, 3, Rational(1, 2), 2));
    CHECK(theorem_pkt_check({Rational(2L), Rational(5, 2), Rational(3L)}, 4, Rational(1, 2), 2));
    CHECK(theorem_pkt_check({Rational(3, 2)}, 2, Rational(2, 3), 1));
}

TEST_CASE("appendix route to P_n") {
    const QEval<RationalFn> E1 = symbolic_q(1);
    for (long n = 0; n <= 5; ++n) {
        const std::vector<RationalFn> x1{E1.qpow(2)};
        if (n >= 0) CHECK(appendix_p(E1, x1, n) == p1_direct(E1, E1.qpow(2), n));
    }
    for (long n = 1; n <= 5; ++n) {
        const std::vector<RationalFn> x2{E1.qpow(1), E1.qpow(3)};
        CHECK(appendix_p(E1, x2, n) == p_multisum(E1, x2, n));
    }
    // cost guard
    CHECK_THROWS_AS(appendix_p(E1, std::vector<RationalFn>{E1.qpow(1)}, 9), MathError);
}

TEST_CASE("christoffel integral formula for the tilde polynomials") {
    // l = 0: both sides are 1
    CHECK(kif_check(E2, std::vector<RationalFn>{C(2), C(3)}, 0, false));
    CHECK(kif_check(E2, std::vector<RationalFn>{C(2), C(3)}, 0, true));
    for (bool odd : {false, true}) {
        CHECK(kif_check(E2, std::vector<RationalFn>{C(5, 2)}, 1, odd));
        CHECK(kif_check(E2, std::vector<RationalFn>{C(2), C(3, 2)}, 1, odd));
    }
    CHECK_THROWS_AS(kif_check(E2, std::vector<RationalFn>{C(2), C(3), C(4)}, 1, false), MathError);
}

TEST_CASE("vandermonde splitting lemma") {
    for (long m = 1; m <= 3; ++m)
        for (long l = 0; l <= 3; ++l)
            for (bool with_one : {false, true}) CHECK(vandermonde_split_check(m, l, with_one));
}

TEST_CASE("q=1 kernel corollary at small shapes") {
    // Q_(l1..l_2m)(1^(2n)) = 4^m prod (l_i - l_j) K_m^(n,0)(-l^2...)
    const StrictPartition lam31({3, 1});
    const auto pts = lambda_points(lam31);
    for (long nn = 2; nn <= 3; ++nn) {
        const auto sys0 = classical_system(0, nn + 2);
        const Rational count{count_marked(lam31, 2 * nn)};
        Rational viaK = Rational(4L) * Rational(3 - 1) * kernel_K_sum(sys0, nn, pts[0], pts[1]);
        CHECK(viaK == count);
        // pfaffian form with conjugate witnesses u_i = lambda_i
        const Rational viaPf =
            Rational(4L) * Rational(3 - 1) *
            multikernel_pfaff_sqrt(sys0, nn, pts, std::vector<Rational>{Rational(3L), Rational(1L)});
        CHECK(viaPf == count);
        // odd letter counts use the eps = 1 system
        const auto sys1 = classical_system(1, nn + 2);
        const Rational count_odd{count_marked(lam31, 2 * nn + 1)};
        const Rational viaK1 = Rational(4L) * Rational(3L) * Rational(1L) * Rational(3 - 1) *
                               kernel_K_sum(sys1, nn, pts[0], pts[1]);
        CHECK(viaK1 == count_odd);
    }
    // 2m = 4
    const StrictPartition lam4({4, 3, 2, 1});
    const auto pts4 = lambda_points(lam4);
    const auto sys0 = classical_system(0, 6);
    Rational pref = Rational(4L).pow(2);
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j)
            pref *= Rational(lam4.parts[i] - lam4.parts[j]);
    const Rational viaK = pref * multikernel_det(sys0, 2, pts4);
    CHECK(viaK == Rational(count_marked(lam4, 4)));
    const Rational viaPf = pref * multikernel_pfaff_sqrt(
                                      sys0, 2, pts4,
                                      std::vector<Rational>{Rational(4L), Rational(3L),
                                                            Rational(2L), Rational(1L)});
    CHECK(viaPf == Rational(count_marked(lam4, 4)));
}
