#pragma once

#include <utility>
#include <vector>

#include "schurq/schur_q.hpp"

namespace schurq {

/// Monic orthogonal system: coefficient tables p_0..p_kmax plus squared
/// norms. Built once, shared read-only.
template <class F>
struct OrthoSystem {
    std::vector<FPoly<F>> p;
    std::vector<F> norm2;

    long kmax() const { return static_cast<long>(p.size()) - 1; }
};

/// The continuous q-ultraspherical system c_k with its closed norms.
template <class F>
OrthoSystem<F> ultraspherical_system(const QEval<F>& E, long kmax) {
    OrthoSystem<F> sys;
    for (long k = 0; k <= kmax; ++k) {
        sys.p.push_back(c_monic(E, k));
        sys.norm2.push_back(c_norm2(E, k));
    }
    return sys;
}

/// The q -> 1 continuous dual Hahn systems p_k^(eps).
inline OrthoSystem<Rational> classical_system(int eps, long kmax) {
    OrthoSystem<Rational> sys;
    for (long k = 0; k <= kmax; ++k) {
        sys.p.push_back(classical_pk(k, eps));
        sys.norm2.push_back(classical_pk_norm2(k, eps));
    }
    return sys;
}

template <class F>
F kernel_K_sum(const OrthoSystem<F>& sys, long n, const F& x, const F& y) {
    F out(0);
    for (long k = 0; k < n; ++k)
        out += sys.p[static_cast<size_t>(k)](x) * sys.p[static_cast<size_t>(k)](y) /
               sys.norm2[static_cast<size_t>(k)];
    return out;
}

template <class F>
F kernel_K_quot(const OrthoSystem<F>& sys, long n, const F& x, const F& y) {
    if (x == y) throw MathError("kernel_K_quot: x = y needs the sum form");
    const F num = sys.p[static_cast<size_t>(n)](x) * sys.p[static_cast<size_t>(n - 1)](y) -
                  sys.p[static_cast<size_t>(n - 1)](x) * sys.p[static_cast<size_t>(n)](y);
    return num / ((x - y) * sys.norm2[static_cast<size_t>(n - 1)]);
}

/// Parity-restricted kernel: only degrees congruent to n - 1 mod 2.
template <class F>
F kernel_Ktilde_sum(const OrthoSystem<F>& sys, long n, const F& x, const F& y) {
    F out(0);
    for (long k = (n - 1) % 2; k < n; k += 2)
        out += sys.p[static_cast<size_t>(k)](x) * sys.p[static_cast<size_t>(k)](y) /
               sys.norm2[static_cast<size_t>(k)];
    return out;
}

/// Quotient form of the parity-restricted kernel (valid when the system has
/// vanishing odd moments).
template <class F>
F kernel_Ktilde_quot(const OrthoSystem<F>& sys, long n, const F& x, const F& y) {
    if (x * x == y * y) throw MathError("kernel_Ktilde_quot: x^2 = y^2 needs the sum form");
    const F num = sys.p[static_cast<size_t>(n + 1)](x) * sys.p[static_cast<size_t>(n - 1)](y) -
                  sys.p[static_cast<size_t>(n - 1)](x) * sys.p[static_cast<size_t>(n + 1)](y);
    return num / ((x * x - y * y) * sys.norm2[static_cast<size_t>(n - 1)]);
}

/// Alternating-sum form, from iterating Ktilde^n = K^n - Ktilde^(n-1).
template <class F>
F kernel_Ktilde_alt(const OrthoSystem<F>& sys, long n, const F& x, const F& y) {
    F out(0);
    for (long j = 0; j <= n - 1; ++j) {
        const F k = kernel_K_sum(sys, j + 1, x, y);
        out += (n + j + 1) % 2 == 0 ? k : -k;
    }
    return out;
}

/// Multivariable kernel, determinant form: 2m points.
template <class F>
F multikernel_det(const OrthoSystem<F>& sys, long n, const std::vector<F>& x) {
    const long two_m = static_cast<long>(x.size());
    if (two_m % 2 != 0) throw MathError("multikernel_det: even point count required");
    const long m = two_m / 2;
    if (n < m) throw MathError("multikernel_det: needs n >= m");
    MatX<F> mat(two_m, two_m);
    for (long i = 0; i < two_m; ++i)
        for (long j = 1; j <= two_m; ++j)
            mat(i, j - 1) = sys.p[static_cast<size_t>(n - m + j - 1)](x[static_cast<size_t>(i)]);
    F denom(1);
    for (long i = 0; i < two_m; ++i)
        for (long j = i + 1; j < two_m; ++j)
            denom *= x[static_cast<size_t>(j)] - x[static_cast<size_t>(i)];
    for (long i = 1; i <= m; ++i) denom *= sys.norm2[static_cast<size_t>(n - i)];
    return det(mat) / denom;
}

/// Pfaffian form with square-root witnesses. Witnesses must satisfy
/// u_i^2 = x_i uniformly, or u_i^2 = -x_i uniformly: in the latter case the
/// imaginary units of w_i = i u_i cancel between the pfaffian and the
/// Vandermonde prefactor.
template <class F>
F multikernel_pfaff_sqrt(const OrthoSystem<F>& sys, long n, const std::vector<F>& x,
                         const std::vector<F>& u) {
    const long two_m = static_cast<long>(x.size());
    if (u.size() != x.size()) throw MathError("multikernel_pfaff_sqrt: one witness per point");
    bool direct = true, conjugate = true;
    for (size_t i = 0; i < x.size(); ++i) {
        direct = direct && u[i] * u[i] == x[i];
        conjugate = conjugate && u[i] * u[i] == -x[i];
    }
    if (!direct && !conjugate)
        throw MathError("multikernel_pfaff_sqrt: witnesses must satisfy u^2 = x or u^2 = -x uniformly");
    const auto skew = SkewMatrix<F>::from_upper(two_m, [&](long i, long j) {
        return (u[static_cast<size_t>(j)] - u[static_cast<size_t>(i)]) *
               kernel_K_sum(sys, n, x[static_cast<size_t>(i)], x[static_cast<size_t>(j)]);
    });
    F denom(1);
    for (long i = 0; i < two_m; ++i)
        for (long j = i + 1; j < two_m; ++j)
            denom *= u[static_cast<size_t>(j)] - u[static_cast<size_t>(i)];
    return pfaffian(skew) / denom;
}

/// Pfaffian form with xi-witnesses: xi_i + 1/xi_i = x_i + 2.
template <class F>
F multikernel_pfaff_xi(const OrthoSystem<F>& sys, long n, const std::vector<F>& x,
                       const std::vector<F>& xi) {
    const long two_m = static_cast<long>(x.size());
    if (two_m % 2 != 0) throw MathError("multikernel_pfaff_xi: even point count required");
    const long m = two_m / 2;
    if (xi.size() != x.size()) throw MathError("multikernel_pfaff_xi: one witness per point");
    for (size_t i = 0; i < x.size(); ++i)
        if (!(xi[i] + F(1) / xi[i] == x[i] + F(2)))
            throw MathError("multikernel_pfaff_xi: witness " + std::to_string(i) +
                            " fails xi + 1/xi = x + 2");
    const auto skew = SkewMatrix<F>::from_upper(two_m, [&](long i, long j) {
        return (xi[static_cast<size_t>(j)] - xi[static_cast<size_t>(i)]) *
               kernel_K_sum(sys, n, x[static_cast<size_t>(i)], x[static_cast<size_t>(j)]);
    });
    F pref(1);
    for (long i = 0; i < two_m; ++i) pref *= pow_i(xi[static_cast<size_t>(i)], m - 1);
    F denom(1);
    for (long i = 0; i < two_m; ++i)
        for (long j = i + 1; j < two_m; ++j)
            denom *= xi[static_cast<size_t>(j)] - xi[static_cast<size_t>(i)];
    return pref * pfaffian(skew) / denom;
}

/// Admissible point for the xi-witnessed kernel forms: x = w^2 with
/// w = (4 - d^2)/(2d), so that x (x + 4) is a square and xi is rational.
template <class F>
struct CdlPoint {
    F x, sqrt_x, xi;
};

template <class F>
CdlPoint<F> make_cdl_point(const F& d) {
    const F w = (F(4) - d * d) / (F(2) * d);
    const F v = (F(4) + d * d) / (F(2) * d);  // v^2 = w^2 + 4
    const F x = w * w;
    const F xi = (x + F(2) + w * v) / F(2);
    return {x, w, xi};
}

/// Less symmetric split form: det(K^n(x_i, y_j)) over the two Vandermondes.
template <class F>
F multikernel_mk_det(const OrthoSystem<F>& sys, long n, const std::vector<F>& x,
                     const std::vector<F>& y) {
    const long m = static_cast<long>(x.size());
    if (y.size() != x.size()) throw MathError("multikernel_mk_det: point lists must match");
    MatX<F> mat(m, m);
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j)
            mat(i, j) = kernel_K_sum(sys, n, x[static_cast<size_t>(i)], y[static_cast<size_t>(j)]);
    F denom(1);
    for (long i = 0; i < m; ++i)
        for (long j = i + 1; j < m; ++j)
            denom *= (x[static_cast<size_t>(j)] - x[static_cast<size_t>(i)]) *
                     (y[static_cast<size_t>(j)] - y[static_cast<size_t>(i)]);
    return det(mat) / denom;
}

/// Same kernel as the strictly-decreasing double-determinant sum.
template <class F>
F multikernel_mk_sum(const OrthoSystem<F>& sys, long n, const std::vector<F>& x,
                     const std::vector<F>& y) {
    const long m = static_cast<long>(x.size());
    if (y.size() != x.size()) throw MathError("multikernel_mk_sum: point lists must match");
    F sum(0);
    std::vector<long> ks(static_cast<size_t>(m));
    std::function<void(long, long)> rec = [&](long pos, long hi) {
        if (pos == m) {
            F term(1);
            MatX<F> dx(m, m), dy(m, m);
            for (long i = 0; i < m; ++i) {
                term /= sys.norm2[static_cast<size_t>(ks[static_cast<size_t>(i)])];
                for (long j = 0; j < m; ++j) {
                    dx(i, j) = sys.p[static_cast<size_t>(ks[static_cast<size_t>(i)])](
                        x[static_cast<size_t>(j)]);
                    dy(i, j) = sys.p[static_cast<size_t>(ks[static_cast<size_t>(i)])](
                        y[static_cast<size_t>(j)]);
                }
            }
            sum += term * det(dx) * det(dy);
            return;
        }
        for (long k = hi; k >= m - 1 - pos; --k) {
            ks[static_cast<size_t>(pos)] = k;
            rec(pos + 1, k - 1);
        }
    };
    rec(0, n - 1);
    F denom(1);
    for (long i = 0; i < m; ++i)
        for (long j = i + 1; j < m; ++j)
            denom *= (x[static_cast<size_t>(j)] - x[static_cast<size_t>(i)]) *
                     (y[static_cast<size_t>(j)] - y[static_cast<size_t>(i)]);
    return sum / denom;
}

/// Parity-restricted multivariable kernel, determinant form (vanishing odd
/// moments assumed).
template <class F>
F multikernel_tilde_det(const OrthoSystem<F>& sys, long n, const std::vector<F>& x) {
    const long two_m = static_cast<long>(x.size());
    if (two_m % 2 != 0) throw MathError("multikernel_tilde_det: even point count required");
    const long m = two_m / 2;
    if (n + 1 < 2 * m) throw MathError("multikernel_tilde_det: needs n >= 2m - 1");
    MatX<F> mat(two_m, two_m);
    for (long i = 0; i < two_m; ++i)
        for (long j = 1; j <= two_m; ++j)
            mat(i, j - 1) = sys.p[static_cast<size_t>(n - 2 * m + 2 * j - 1)](x[static_cast<size_t>(i)]);
    F denom(1);
    for (long i = 0; i < two_m; ++i)
        for (long j = i + 1; j < two_m; ++j) {
            const F& xi = x[static_cast<size_t>(i)];
            const F& xj = x[static_cast<size_t>(j)];
            denom *= xj * xj - xi * xi;
        }
    for (long i = 1; i <= m; ++i) denom *= sys.norm2[static_cast<size_t>(n + 1 - 2 * i)];
    return det(mat) / denom;
}

/// Pfaffian form of the tilde kernel with witnesses u_i = +-x_i (realizing
/// w_i = i u_i, w_i^2 = -x_i^2; the imaginary units cancel).
template <class F>
F multikernel_tilde_pfaff_w(const OrthoSystem<F>& sys, long n, const std::vector<F>& x,
                            const std::vector<F>& u) {
    const long two_m = static_cast<long>(x.size());
    if (u.size() != x.size()) throw MathError("multikernel_tilde_pfaff_w: one witness per point");
    for (size_t i = 0; i < x.size(); ++i)
        if (!(u[i] * u[i] == x[i] * x[i]))
            throw MathError("multikernel_tilde_pfaff_w: witness " + std::to_string(i) +
                            " fails u^2 = x^2");
    const auto skew = SkewMatrix<F>::from_upper(two_m, [&](long i, long j) {
        return (u[static_cast<size_t>(j)] - u[static_cast<size_t>(i)]) *
               kernel_Ktilde_sum(sys, n, x[static_cast<size_t>(i)], x[static_cast<size_t>(j)]);
    });
    F denom(1);
    for (long i = 0; i < two_m; ++i)
        for (long j = i + 1; j < two_m; ++j)
            denom *= u[static_cast<size_t>(j)] - u[static_cast<size_t>(i)];
    return pfaffian(skew) / denom;
}

/// Pfaffian form with xi-witnesses: xi_i + 1/xi_i = 2 - x_i^2.
template <class F>
F multikernel_tilde_pfaff_xi(const OrthoSystem<F>& sys, long n, const std::vector<F>& x,
                             const std::vector<F>& xi) {
    const long two_m = static_cast<long>(x.size());
    if (two_m % 2 != 0) throw MathError("multikernel_tilde_pfaff_xi: even point count required");
    const long m = two_m / 2;
    if (xi.size() != x.size()) throw MathError("multikernel_tilde_pfaff_xi: one witness per point");
    for (size_t i = 0; i < x.size(); ++i)
        if (!(xi[i] + F(1) / xi[i] == F(2) - x[i] * x[i]))
            throw MathError("multikernel_tilde_pfaff_xi: point " + std::to_string(i) +
                            " not admissible (xi + 1/xi = 2 - x^2 unsolvable witness)");
    const auto skew = SkewMatrix<F>::from_upper(two_m, [&](long i, long j) {
        return (xi[static_cast<size_t>(j)] - xi[static_cast<size_t>(i)]) *
               kernel_Ktilde_sum(sys, n, x[static_cast<size_t>(i)], x[static_cast<size_t>(j)]);
    });
    F pref(1);
    for (long i = 0; i < two_m; ++i) pref *= pow_i(xi[static_cast<size_t>(i)], m - 1);
    F denom(1);
    for (long i = 0; i < two_m; ++i)
        for (long j = i + 1; j < two_m; ++j)
            denom *= xi[static_cast<size_t>(j)] - xi[static_cast<size_t>(i)];
    return pref * pfaffian(skew) / denom;
}

/// Admissible point for the tilde pfaffian forms: x = t + 1/t gives the
/// rational witness xi = -t^2.
template <class F>
struct CdcPoint {
    F x, u, xi;
};

template <class F>
CdcPoint<F> make_cdc_point(const F& t, bool flip_u = false) {
    const F x = t + F(1) / t;
    return {x, flip_u ? -x : x, -t * t};
}

/// Generalized rectangular Schur polynomial of the system.
template <class F>
F gen_schur(const OrthoSystem<F>& sys, long n, const std::vector<F>& x) {
    const long m = static_cast<long>(x.size());
    if (m == 0) return F(1);
    MatX<F> mat(m, m);
    for (long i = 0; i < m; ++i)
        for (long j = 1; j <= m; ++j)
            mat(i, j - 1) = sys.p[static_cast<size_t>(n + j - 1)](x[static_cast<size_t>(i)]);
    F denom(1);
    for (long i = 0; i < m; ++i)
        for (long j = i + 1; j < m; ++j)
            denom *= x[static_cast<size_t>(j)] - x[static_cast<size_t>(i)];
    return det(mat) / denom;
}

/// Parity-split variant (vanishing odd moments): columns step by two.
template <class F>
F gen_schur_tilde(const OrthoSystem<F>& sys, long n, const std::vector<F>& x) {
    const long m = static_cast<long>(x.size());
    if (m == 0) return F(1);
    MatX<F> mat(m, m);
    for (long i = 0; i < m; ++i)
        for (long j = 1; j <= m; ++j)
            mat(i, j - 1) = sys.p[static_cast<size_t>(n + 2 * j - 2)](x[static_cast<size_t>(i)]);
    F denom(1);
    for (long i = 0; i < m; ++i)
        for (long j = i + 1; j < m; ++j) {
            const F& xi = x[static_cast<size_t>(i)];
            const F& xj = x[static_cast<size_t>(j)];
            denom *= xj * xj - xi * xi;
        }
    return det(mat) / denom;
}

/// The t -> infinity reduction of the tilde polynomial: extracting the
/// t^(n+2m) coefficient of the numerator determinant drops one point.
template <class F>
bool sfl_check(const OrthoSystem<F>& sys, long n, const std::vector<F>& x) {
    const long m = static_cast<long>(x.size());
    // determinant over (x_1..x_m, t) expanded along the t row
    FPoly<F> num_t;
    for (long j = 1; j <= m + 1; ++j) {
        MatX<F> minor(m, m);
        for (long i = 0; i < m; ++i) {
            long col = 0;
            for (long jj = 1; jj <= m + 1; ++jj) {
                if (jj == j) continue;
                minor(i, col++) = sys.p[static_cast<size_t>(n + 2 * jj - 2)](x[static_cast<size_t>(i)]);
            }
        }
        const F sign((m + 1 + j) % 2 == 0 ? 1 : -1);
        num_t += sys.p[static_cast<size_t>(n + 2 * j - 2)].scaled(sign * det(minor));
    }
    const F lead = num_t.coeff(n + 2 * m);
    F denom(1);
    for (long i = 0; i < m; ++i)
        for (long j = i + 1; j < m; ++j) {
            const F& xi = x[static_cast<size_t>(i)];
            const F& xj = x[static_cast<size_t>(j)];
            denom *= xj * xj - xi * xi;
        }
    return lead / denom == gen_schur_tilde(sys, n, x);
}

/// Moments of the orthogonality functional of the c_k system: odd moments
/// vanish; even moments come from the telescoped Fourier coefficients
/// G_l = 2 (-1)^l (a_(l-1) - a_(l+1)) with a_l = q^l/(1 + q^l).
template <class F>
F mu_moment(const QEval<F>& E, long k) {
    if (k % 2 != 0) return F(0);
    const auto a = [&](long l) { return E.qpow(l) / (F(1) + E.qpow(l)); };
    const auto G = [&](long l) {
        const F g = F(2) * (a(l - 1) - a(l + 1));
        return l % 2 == 0 ? g : -g;
    };
    F out(0);
    for (long j = 0; j <= k; ++j)
        out += scalar_from_rational<F>(binomial(k, j)) * G(k / 2 - j);
    return out / F(2);
}

/// Integral of a polynomial against the c_k moment functional.
template <class F>
F mu_apply(const QEval<F>& E, const FPoly<F>& poly) {
    if (poly.lo() < 0) throw MathError("mu_apply: Laurent input not allowed");
    F out(0);
    for (long e = 0; e <= poly.hi(); ++e) {
        const F c = poly.coeff(e);
        if (!(c == F(0))) out += c * mu_moment(E, e);
    }
    return out;
}

/// The antisymmetrized functional on Laurent polynomials in t:
/// t^k -> (1 - q^k)/(1 + q^k).
template <class F>
F lambda_apply(const QEval<F>& E, const FPoly<F>& laurent_t) {
    F out(0);
    for (long e = laurent_t.lo(); e <= laurent_t.hi(); ++e) {
        const F c = laurent_t.coeff(e);
        if (c == F(0)) continue;
        out += c * (F(1) - E.qpow(e)) / (F(1) + E.qpow(e));
    }
    return out;
}

/// P_n by the lambda-functional applied to a split Vandermonde: the
/// appendix route. Cost guard: at most three auxiliary t-variables.
template <class F>
F appendix_p(const QEval<F>& E, const std::vector<F>& x, long n) {
    const long m = static_cast<long>(x.size());
    if (n < m - 1) throw MathError("appendix_p: needs n >= m - 1");
    const long d = n - m;
    const bool odd = ((d % 2) + 2) % 2 == 1;  // n - m = 2l - 1 or 2l
    const long l = odd ? (d + 1) / 2 : d / 2;
    if (l > 3) throw MathError("appendix_p: cost guard l <= 3 exceeded");
    // Vandermonde over (x_1..x_m, t_1^-1, t_1, ..., t_l^-1, t_l[, 1])
    struct Slot {
        bool formal;
        long var;    // t-variable index
        long expo;   // +1 or -1
        F value;     // when not formal
    };
    std::vector<Slot> slots;
    for (const F& xi : x) slots.push_back({false, 0, 0, xi});
    for (long j = 0; j < l; ++j) {
        slots.push_back({true, j, -1, F(0)});
        slots.push_back({true, j, +1, F(0)});
    }
    if (!odd) slots.push_back({false, 0, 0, F(1)});

    using ML = MultiLaurent<F>;
    ML acc = ML::one(static_cast<int>(l));
    const long N = static_cast<long>(slots.size());
    for (long a = 0; a < N; ++a)
        for (long b = a + 1; b < N; ++b) {
            // factor (v_b - v_a)
            std::vector<std::pair<std::vector<int>, F>> factor;
            std::vector<int> e0(static_cast<size_t>(l), 0);
            const Slot& A = slots[static_cast<size_t>(a)];
            const Slot& B = slots[static_cast<size_t>(b)];
            if (B.formal) {
                std::vector<int> e = e0;
                e[static_cast<size_t>(B.var)] = static_cast<int>(B.expo);
                factor.emplace_back(e, F(1));
            } else {
                factor.emplace_back(e0, B.value);
            }
            if (A.formal) {
                std::vector<int> e = e0;
                e[static_cast<size_t>(A.var)] = static_cast<int>(A.expo);
                factor.emplace_back(e, F(-1));
            } else {
                factor.emplace_back(e0, -A.value);
            }
            acc = acc.multiplied(factor);
        }
    F total(0);
    for (const auto& [e, c] : acc.terms()) {
        F term = c;
        for (long j = 0; j < l; ++j) {
            const long k = e[static_cast<size_t>(j)];
            term *= (F(1) - E.qpow(k)) / (F(1) + E.qpow(k));
        }
        total += term;
    }
    F pref = scalar_from_rational<F>(Rational(1L) / (Rational(2L).pow(l) * factorial(l)));
    const F q = E.q();
    for (long j = 1; j <= n; ++j) pref *= qpoch(-q, q, j) / qpoch(q, q, j);
    return pref * total;
}

/// Christoffel's integral formula for the tilde polynomials, realized as an
/// l-fold moment application against the c_k functional.
template <class F>
bool kif_check(const QEval<F>& E, const std::vector<F>& x, long l, bool odd_column) {
    const long m = static_cast<long>(x.size());
    if (l > 2 || m > 2) throw MathError("kif_check: cost guard l <= 2, m <= 2 exceeded");
    const OrthoSystem<F> sys = ultraspherical_system(E, 2 * l + 2 * m + 2);
    const long target = odd_column ? 2 * l + 1 : 2 * l;
    const F lhs = gen_schur_tilde(sys, target, x);

    using ML = MultiLaurent<F>;
    ML acc = ML::one(static_cast<int>(l));
    const auto mono = [&](long var, int e, const F& c) {
        std::vector<int> ev(static_cast<size_t>(l), 0);
        if (var >= 0) ev[static_cast<size_t>(var)] = e;
        return std::make_pair(ev, c);
    };
    for (long j = 0; j < m; ++j)
        for (long k = 0; k < l; ++k) {
            // (x_j^2 - y_k^2)
            acc = acc.multiplied({mono(-1, 0, x[static_cast<size_t>(j)] * x[static_cast<size_t>(j)]),
                                  mono(k, 2, F(-1))});
        }
    for (long i = 0; i < l; ++i)
        for (long j = i + 1; j < l; ++j) {
            const auto f = std::vector<std::pair<std::vector<int>, F>>{
                mono(j, 2, F(1)), mono(i, 2, F(-1))};
            acc = acc.multiplied(f);
            acc = acc.multiplied(f);
        }
    if (odd_column)
        for (long k = 0; k < l; ++k) acc = acc.multiplied({mono(k, 2, F(1))});

    F integral(0);
    for (const auto& [e, c] : acc.terms()) {
        F term = c;
        for (long j = 0; j < l; ++j) term *= mu_moment(E, e[static_cast<size_t>(j)]);
        integral += term;
    }
    F pref = scalar_from_rational<F>(Rational(1L) / factorial(l));
    for (long i = 1; i <= l; ++i)
        pref /= sys.norm2[static_cast<size_t>(odd_column ? 2 * i - 1 : 2 * i - 2)];
    if (odd_column)
        for (long j = 0; j < m; ++j) pref *= x[static_cast<size_t>(j)];
    return lhs == pref * integral;
}

/// The split of a Vandermonde in (x, t^-1, t, ..., [1]) into xi/tau data;
/// the elementary lemma behind the appendix integrals.
inline bool vandermonde_split_check(long m, long l, bool with_one) {
    std::vector<Rational> x, t;
    for (long i = 0; i < m; ++i) x.push_back(Rational(2 * i + 2) / Rational(2 * i + 1));
    for (long j = 0; j < l; ++j) t.push_back(Rational(3 * j + 5) / Rational(j + 2));
    std::vector<Rational> v;
    for (const auto& xi : x) v.push_back(xi);
    for (const auto& tj : t) {
        v.push_back(tj.inverse());
        v.push_back(tj);
    }
    if (with_one) v.push_back(Rational(1L));
    Rational lhs(1L);
    for (size_t a = 0; a < v.size(); ++a)
        for (size_t b = a + 1; b < v.size(); ++b) lhs *= v[b] - v[a];

    Rational rhs(1L);
    for (const auto& xi : x) rhs *= xi.pow(l);
    for (const auto& tj : t) rhs *= tj - tj.inverse();
    for (size_t a = 0; a < x.size(); ++a)
        for (size_t b = a + 1; b < x.size(); ++b) rhs *= x[b] - x[a];
    std::vector<Rational> tau;
    for (const auto& tj : t) tau.push_back(tj + tj.inverse());
    for (size_t a = 0; a < tau.size(); ++a)
        for (size_t b = a + 1; b < tau.size(); ++b) {
            const Rational d = tau[b] - tau[a];
            rhs *= d * d;
        }
    for (const auto& xi : x)
        for (const auto& tk : tau) rhs *= xi + xi.inverse() - tk;
    if (with_one) {
        for (const auto& xi : x) rhs *= Rational(1L) - xi;
        for (const auto& tk : tau) rhs *= Rational(2L) - tk;
    }
    return lhs == rhs;
}

/// Numerical check of the kernel expression of P_n: rational z-witnesses
/// give x_i = -z_i^2, xi_i = z_i + 1/z_i, and the tilde polynomial of the
/// ultraspherical system reproduces the defining sum.
inline bool theorem_pkt_check(const std::vector<Rational>& z, long n, const Rational& s0, int r) {
    const QEval<Rational> E = numeric_q(s0, r);
    const long m = static_cast<long>(z.size());
    if (n + 1 - m < 0) throw MathError("theorem_pkt_check: needs n >= m - 1");
    std::vector<Rational> x, xi;
    for (const Rational& zi : z) {
        x.push_back(-zi * zi);
        xi.push_back(zi + zi.inverse());
    }
    const Rational lhs = p_multisum(E, x, n);
    const OrthoSystem<Rational> sys = ultraspherical_system(E, n + m + 1);
    Rational rhs = gen_schur_tilde(sys, n + 1 - m, xi);
    const Rational q = E.q();
    for (long i = 1; i <= m; ++i) rhs *= qpoch(-q, q, n + 1 - i) / qpoch(q, q, n + 1 - i);
    for (long i = 0; i < m; ++i) rhs *= z[static_cast<size_t>(i)].pow(n + 1 - m);
    for (long i = 0; i < m; ++i)
        for (long j = i + 1; j < m; ++j)
            rhs *= x[static_cast<size_t>(j)] - x[static_cast<size_t>(i)];
    return lhs == rhs;
}

}  // namespace schurq
