#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schurq/linalg.hpp"

using namespace schurq;

namespace {

Rational sample_point(int i) {
    long a = 1, b = 2;
    for (int k = 0; k < i; ++k) {
        const long t = a + b;
        a = b;
        b = t;
    }
    return Rational(b, a);
}

Rational mix(int i) {  // deterministic small rationals, including negatives
    static const long nums[] = {3, -2, 5, 7, -1, 4, -5, 9, 2, -7, 11, 6};
    static const long dens[] = {1, 3, 2, 5, 4, 7, 3, 2, 9, 5, 4, 11};
    return Rational(nums[i % 12], dens[(i / 12 + i) % 12]);
}

}  // namespace

TEST_CASE("determinant basics") {
    MatX<Rational> id(3, 3);
    for (long i = 0; i < 3; ++i)
        for (long j = 0; j < 3; ++j) id(i, j) = Rational(i == j ? 1L : 0L);
    CHECK(det(id) == Rational(1L));

    MatX<Rational> vmd(3, 3);
    const Rational pts[] = {Rational(1L), Rational(2L), Rational(3L)};
    for (long i = 0; i < 3; ++i)
        for (long j = 0; j < 3; ++j) vmd(i, j) = pts[i].pow(j);
    CHECK(det(vmd) == Rational(2L));

    MatX<Rational> singular(2, 2);
    singular(0, 0) = Rational(1L);
    singular(0, 1) = Rational(2L);
    singular(1, 0) = Rational(2L);
    singular(1, 1) = Rational(4L);
    CHECK(det(singular) == Rational(0L));
}

TEST_CASE("pfaffian basics") {
    const auto s2 = SkewMatrix<Rational>::from_upper(2, [](long, long) { return Rational(7, 3); });
    CHECK(pfaffian(s2) == Rational(7, 3));

    // 4x4 generic: a12 a34 - a13 a24 + a14 a23
    const auto entry = [](long i, long j) { return mix(static_cast<int>(4 * i + j)); };
    const auto s4 = SkewMatrix<Rational>::from_upper(4, entry);
    const Rational expect = entry(0, 1) * entry(2, 3) - entry(0, 2) * entry(1, 3) +
                            entry(0, 3) * entry(1, 2);
    CHECK(pfaffian(s4) == expect);
    CHECK(pfaffian_expansion(s4) == expect);

    CHECK_THROWS_AS(pfaffian(SkewMatrix<Rational>::from_upper(3, entry)), MathError);
    MatX<Rational> bad(2, 2);
    bad(0, 0) = Rational(1L);
    bad(0, 1) = Rational(2L);
    bad(1, 0) = Rational(-2L);
    bad(1, 1) = Rational(0L);
    CHECK_THROWS_AS((void)SkewMatrix<Rational>(bad), MathError);
}

TEST_CASE("schur pfaffian value at 1,2,3,4") {
    std::vector<Rational> x{Rational(1L), Rational(2L), Rational(3L), Rational(4L)};
    const auto skew = SkewMatrix<Rational>::from_upper(4, [&](long i, long j) {
        return (x[static_cast<size_t>(j)] - x[static_cast<size_t>(i)]) /
               (x[static_cast<size_t>(j)] + x[static_cast<size_t>(i)]);
    });
    CHECK(pfaffian(skew) == Rational(1, 1050));
    CHECK(check_spa(x));
}

TEST_CASE("pfaffian squared equals determinant, condensation matches expansion") {
    for (long n = 2; n <= 8; n += 2) {
        const auto skew = SkewMatrix<Rational>::from_upper(n, [&](long i, long j) {
            return mix(static_cast<int>(n * 13 + 8 * i + j));
        });
        const Rational pf = pfaffian(skew);
        CHECK(pf * pf == det(skew.mat()));
        CHECK(pf == pfaffian_expansion(skew));
    }
    // and over Q(s)
    const auto skew_fn = SkewMatrix<RationalFn>::from_upper(6, [](long i, long j) {
        return RationalFn(mix(static_cast<int>(6 * i + j))) * RationalFn::s_power(i + j) +
               RationalFn(1);
    });
    const RationalFn pf = pfaffian(skew_fn);
    CHECK(pf * pf == det(skew_fn.mat()));
    CHECK(pf == pfaffian_expansion(skew_fn));
}

TEST_CASE("pfaffian sign under simultaneous row/column swap") {
    const auto entry = [](long i, long j) { return mix(static_cast<int>(17 + 6 * i + j)); };
    const auto skew = SkewMatrix<Rational>::from_upper(6, entry);
    // swap indices 1 <-> 4
    const auto swapped = SkewMatrix<Rational>::from_upper(6, [&](long i, long j) {
        const auto map = [](long k) { return k == 1 ? 4L : (k == 4 ? 1L : k); };
        const long a = map(i),ize = map(j);
        return a < ize ? entry(a, ize) : -entry(ize, a);
    });
    CHECK(pfaffian(swapped) == -pfaffian(skew));
}

TEST_CASE("schur pfaffian evaluations at 25 deterministic configurations") {
    for (int t = 0; t < 25; ++t) {
        std::vector<Rational> x;
        for (int i = 0; i < 4; ++i) x.push_back(sample_point(t % 7 + i) + Rational(t, 7));
        CHECK(check_spa(x));
        CHECK(check_spb(x, Rational(1, 2)));
        CHECK(check_spb(x, Rational(-2, 3)));
    }
    // 2m = 2 single-factor forms
    std::vector<Rational> two{Rational(1, 2), Rational(5, 3)};
    CHECK(check_spa(two));
    CHECK(check_spb(two, Rational(1, 2)));
    CHECK_THROWS_AS(check_spa(std::vector<Rational>{Rational(1L), Rational(-1L)}), MathError);
}

TEST_CASE("minor summation formula") {
    // n = 2m, A identity: both sides reduce to pfaff(B)
    const auto b4 = SkewMatrix<Rational>::from_upper(4, [](long i, long j) {
        return mix(static_cast<int>(31 + 5 * i + j));
    });
    MatX<Rational> id(4, 4);
    for (long i = 0; i < 4; ++i)
        for (long j = 0; j < 4; ++j) id(i, j) = Rational(i == j ? 1L : 0L);
    CHECK(minor_summation_check(id, b4));

    // m = 1, n = 3
    MatX<Rational> a13(2, 3);
    for (long i = 0; i < 2; ++i)
        for (long j = 0; j < 3; ++j) a13(i, j) = mix(static_cast<int>(41 + 3 * i + j));
    const auto b3 = SkewMatrix<Rational>::from_upper(3, [](long i, long j) {
        return mix(static_cast<int>(53 + 4 * i + j));
    });
    CHECK(minor_summation_check(a13, b3));

    // m = 2, n = 4 and a rectangular n = 5 case
    MatX<Rational> a45(4, 5);
    for (long i = 0; i < 4; ++i)
        for (long j = 0; j < 5; ++j) a45(i, j) = mix(static_cast<int>(61 + 5 * i + j));
    const auto b5 = SkewMatrix<Rational>::from_upper(5, [](long i, long j) {
        return mix(static_cast<int>(71 + 6 * i + j));
    });
    CHECK(minor_summation_check(a45, b5));
}

TEST_CASE("schlosser determinant evaluations") {
    const QEval<Rational> Q = numeric_q(Rational(2, 3), 1);
    const Rational q = Q.q();

    {  // m = 1: both sides are empty products / a 1x1 of an empty ratio
        const auto [lhs, rhs] = schlosser_det(SchlosserKind::Full, q, Rational(2L), Rational(3, 2),
                                              Rational(5L), std::vector<Rational>{Rational(1, 7)});
        CHECK(lhs == Rational(1L));
        CHECK(rhs == Rational(1L));
    }

    for (int t = 0; t < 25; ++t) {
        const Rational A = mix(t), B = mix(t + 3) + Rational(3L), C = mix(t + 5) + Rational(2L);
        std::vector<Rational> X;
        for (int i = 0; i < 2 + t % 2; ++i) X.push_back(sample_point(t % 6 + i));
        const auto [lhs, rhs] = schlosser_det(SchlosserKind::Full, q, A, B, C, X);
        CHECK(lhs == rhs);
        const auto [lhs2, rhs2] = schlosser_det(SchlosserKind::Degenerate, q, A, B, C, X);
        CHECK(lhs2 == rhs2);
    }

    // and in Q(s): m = 3 with monomial parameters
    const QEval<RationalFn> E = symbolic_q(1);
    std::vector<RationalFn> X{RationalFn::s_power(1), RationalFn(2) * RationalFn::s_power(2),
                              RationalFn(Rational(1, 3)) * RationalFn::s_power(4)};
    const auto [l3, r3] = schlosser_det(SchlosserKind::Full, E.q(), RationalFn(3),
                                        RationalFn(5) * RationalFn::s_power(1), RationalFn(7), X);
    CHECK(l3 == r3);
    const auto [l4, r4] = schlosser_det(SchlosserKind::Degenerate, E.q(), RationalFn(3),
                                        RationalFn(5) * RationalFn::s_power(1), RationalFn(7), X);
    CHECK(l4 == r4);
}
