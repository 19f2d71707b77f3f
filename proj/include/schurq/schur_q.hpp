#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "schurq/linalg.hpp"
#include "schurq/tableaux.hpp"

namespace schurq {

namespace detail {

/// Odometer over {0..bound}^m; visit receives the tuple.
inline void for_each_tuple(long m, long bound,
                           const std::function<void(const std::vector<long>&)>& visit) {
    std::vector<long> k(static_cast<size_t>(m), 0);
    while (true) {
        visit(k);
        long pos = 0;
        while (pos < m && ++k[static_cast<size_t>(pos)] > bound) k[static_cast<size_t>(pos++)] = 0;
        if (pos == m) break;
    }
    if (m == 0) return;
}

}  // namespace detail

/// Schur Q-polynomial at generic points by the alternating multiple sum;
/// the generic-point oracle. Points must be pairwise distinct with no
/// opposite pairs.
template <class F>
F q_direct(const StrictPartition& lambda, const std::vector<F>& x) {
    const long m = lambda.length();
    const long n = static_cast<long>(x.size());
    if (m > n) throw MathError("q_direct: partition longer than point list");
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = i + 1; j < x.size(); ++j) {
            if (x[i] == x[j])
                throw MathError("q_direct: coincident points at positions " + std::to_string(i) +
                                "," + std::to_string(j));
            if (x[i] + x[j] == F(0))
                throw MathError("q_direct: opposite points at positions " + std::to_string(i) + "," +
                                std::to_string(j));
        }
    if (m == 0) return F(1);
    F total(0);
    detail::for_each_tuple(m, n - 1, [&](const std::vector<long>& k) {
        for (size_t i = 0; i < k.size(); ++i)
            for (size_t j = i + 1; j < k.size(); ++j)
                if (k[i] == k[j]) return;
        F term(1);
        for (long i = 0; i < m; ++i)
            term *= pow_i(x[static_cast<size_t>(k[static_cast<size_t>(i)])],
                          lambda.parts[static_cast<size_t>(i)]);
        for (long i = 0; i < m; ++i)
            for (long j = i + 1; j < m; ++j) {
                const F& xi = x[static_cast<size_t>(k[static_cast<size_t>(i)])];
                const F& xj = x[static_cast<size_t>(k[static_cast<size_t>(j)])];
                term *= (xj - xi) / (xj + xi);
            }
        for (long i = 0; i < m; ++i) {
            const F& xi = x[static_cast<size_t>(k[static_cast<size_t>(i)])];
            for (long j = 0; j < n; ++j) {
                if (j == k[static_cast<size_t>(i)]) continue;
                term *= (xi + x[static_cast<size_t>(j)]) / (xi - x[static_cast<size_t>(j)]);
            }
        }
        total += term;
    });
    return scalar_from_rational<F>(Rational(2L).pow(m)) * total;
}

/// P_n(x_1..x_m): the defining multiple basic hypergeometric sum. Singular
/// at q = 1 by construction.
template <class F>
F p_multisum(const QEval<F>& E, const std::vector<F>& x, long n) {
    const long m = static_cast<long>(x.size());
    if (n < 0) throw MathError("p_multisum: negative n");
    if (m == 0) return F(1);
    const F q = E.q();
    // per-exponent weights (-q, q^-n; q)_k / (q, -q^-n; q)_k
    std::vector<F> w(static_cast<size_t>(n + 1), F(1));
    for (long k = 1; k <= n; ++k)
        w[static_cast<size_t>(k)] = w[static_cast<size_t>(k - 1)] * (F(1) + E.qpow(k)) *
                                    (F(1) - E.qpow(k - 1 - n)) /
                                    ((F(1) - E.qpow(k)) * (F(1) + E.qpow(k - 1 - n)));
    std::vector<F> qk(static_cast<size_t>(n + 1));
    for (long k = 0; k <= n; ++k) qk[static_cast<size_t>(k)] = E.qpow(k);
    std::vector<std::vector<F>> xp(static_cast<size_t>(m));
    for (long i = 0; i < m; ++i) {
        xp[static_cast<size_t>(i)].resize(static_cast<size_t>(n + 1));
        xp[static_cast<size_t>(i)][0] = F(1);
        for (long k = 1; k <= n; ++k)
            xp[static_cast<size_t>(i)][static_cast<size_t>(k)] =
                xp[static_cast<size_t>(i)][static_cast<size_t>(k - 1)] * x[static_cast<size_t>(i)];
    }
    F total(0);
    detail::for_each_tuple(m, n, [&](const std::vector<long>& k) {
        for (size_t i = 0; i < k.size(); ++i)
            for (size_t j = i + 1; j < k.size(); ++j)
                if (k[i] == k[j]) return;
        F term(1);
        for (long i = 0; i < m; ++i) {
            const long ki = k[static_cast<size_t>(i)];
            term *= w[static_cast<size_t>(ki)] * xp[static_cast<size_t>(i)][static_cast<size_t>(ki)];
        }
        for (long i = 0; i < m; ++i)
            for (long j = i + 1; j < m; ++j) {
                const F& qi = qk[static_cast<size_t>(k[static_cast<size_t>(i)])];
                const F& qj = qk[static_cast<size_t>(k[static_cast<size_t>(j)])];
                term *= (qj - qi) / (qj + qi);
            }
        total += term;
    });
    const F pref = qpoch(-q, q, n) / qpoch(q, q, n);
    return pow_i(pref, m) * total;
}

/// P_n with one variable specialized to zero, reduced by one degree.
template <class F>
F peo_reduction(const QEval<F>& E, const std::vector<F>& x, long n) {
    const F q = E.q();
    F prod(1);
    for (const F& xi : x) prod *= xi;
    const long m = static_cast<long>(x.size());
    return scalar_from_rational<F>(Rational(m % 2 == 0 ? 1L : -1L)) * qpoch(-q, q, n) /
           qpoch(q, q, n) * prod * p_multisum(E, x, n - 1);
}

/// P_n via Schur's pfaffian of two-row values; odd variable counts adjoin a
/// zero point one level up.
template <class F>
F p_pfaffian(const QEval<F>& E, const std::vector<F>& x, long n) {
    const long m = static_cast<long>(x.size());
    if (m == 0) return F(1);
    if (m % 2 == 0) {
        const auto skew = SkewMatrix<F>::from_upper(m, [&](long i, long j) {
            return p_multisum(E, {x[static_cast<size_t>(i)], x[static_cast<size_t>(j)]}, n);
        });
        return pfaffian(skew);
    }
    // odd m: P_n(x) = (q;q)_(n+1)/(-q;q)_(n+1) (-1)^m / (x_1...x_m)
    //                  * P_(n+1)(x_1,...,x_m, 0)
    std::vector<F> padded = x;
    padded.push_back(F(0));
    const F q = E.q();
    F prod(1);
    for (const F& xi : x) {
        if (xi == F(0)) throw MathError("p_pfaffian: zero point in odd reduction");
        prod *= xi;
    }
    const F value = p_pfaffian(E, padded, n + 1);
    return -qpoch(q, q, n + 1) / qpoch(-q, q, n + 1) * value / prod;
}

/// Two-row P_n as a Christoffel-Darboux quotient of one-variable values.
template <class F>
F p_two_row_cd(const QEval<F>& E, const F& x, const F& y, long n) {
    if (n < 1) throw MathError("p_two_row_cd: needs n >= 1");
    if (x * y == F(1))
        throw MathError("p_two_row_cd: removable singularity at xy = 1; use the symbolic route");
    const F q = E.q();
    const F num = y * p1_direct(E, x, n + 1) * p1_direct(E, y, n - 1) -
                  x * p1_direct(E, x, n - 1) * p1_direct(E, y, n + 1);
    return (F(1) - E.qpow(n + 1)) / (F(1) + E.qpow(n + 1)) * num / (F(1) - x * y);
    (void)q;
}

/// Two-row P_n as the square-root-weighted sum of one-variable products.
template <class F>
F p_rce(const QEval<F>& E, const F& x, const F& y, long n, const F& sqrt_x, const F& sqrt_y) {
    if (!(sqrt_x * sqrt_x == x) || !(sqrt_y * sqrt_y == y))
        throw MathError("p_rce: square-root witnesses do not match the points");
    std::vector<F> px, py;
    for (long j = 0; j <= n; ++j) {
        px.push_back(p1_direct(E, x, j));
        py.push_back(p1_direct(E, y, j));
    }
    const F sxy = sqrt_x * sqrt_y;
    F sum(0);
    for (long j = 0; j <= n - 1; ++j)
        sum += pow_i(sxy, n - 1 - j) *
               (sqrt_y * px[static_cast<size_t>(j + 1)] * py[static_cast<size_t>(j)] -
                sqrt_x * px[static_cast<size_t>(j)] * py[static_cast<size_t>(j + 1)]);
    return (sqrt_x + sqrt_y) / (F(1) + sxy) * sum;
}

/// P_n as an m x m determinant of shifted one-variable values.
template <class F>
F p_determinant(const QEval<F>& E, const std::vector<F>& x, long n) {
    const long m = static_cast<long>(x.size());
    if (m == 0) return F(1);
    if (n + 1 - m < 0) throw MathError("p_determinant: needs n >= m - 1");
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = i + 1; j < x.size(); ++j)
            if (x[i] * x[j] == F(1))
                throw MathError("p_determinant: singular pair x_i x_j = 1 at positions " +
                                std::to_string(i) + "," + std::to_string(j));
    const F q = E.q();
    std::vector<FPoly<F>> rows;  // P_(n+m+1-2j) coefficient tables, j = 1..m
    for (long j = 1; j <= m; ++j) rows.push_back(p1_coeffs(E, n + m + 1 - 2 * j));
    MatX<F> mat(m, m);
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j)
            mat(i, j) = pow_i(x[static_cast<size_t>(i)], j) *
                        rows[static_cast<size_t>(j)](x[static_cast<size_t>(i)]);
    F pref(1);
    for (long i = 1; i <= m; ++i)
        pref *= qpoch(E.qpow(n + 1 - m + i), q, i - 1) / qpoch(-E.qpow(n + 1 - m + i), q, i - 1);
    F denom(1);
    for (long i = 0; i < m; ++i)
        for (long j = i + 1; j < m; ++j)
            denom *= F(1) - x[static_cast<size_t>(i)] * x[static_cast<size_t>(j)];
    return pref * det(mat) / denom;
}

/// Q_lambda(1, q, ..., q^n) by the determinant of one-row Q-polynomials.
template <class F>
F q_det_formula(const QEval<F>& E, const StrictPartition& lambda, long n) {
    const long m = lambda.length();
    if (m == 0) return F(1);
    const F q = E.q();
    MatX<F> mat(m, m);
    for (long j = 1; j <= m; ++j) {
        const FPoly<F> pnj = p1_coeffs(E, n + m + 1 - 2 * j);
        for (long i = 0; i < m; ++i) {
            const long li = lambda.parts[static_cast<size_t>(i)];
            mat(i, j - 1) = E.qpow((j - 1) * li) * F(2) * pnj(E.qpow(li));
        }
    }
    F pref(1);
    for (long i = 1; i <= m; ++i)
        pref *= qpoch(E.qpow(n + 1 - m + i), q, i - 1) / qpoch(-E.qpow(n + 1 - m + i), q, i - 1);
    for (long i = 0; i < m; ++i)
        for (long j = i + 1; j < m; ++j)
            pref /= F(1) - E.qpow(lambda.parts[static_cast<size_t>(i)] +
                                  lambda.parts[static_cast<size_t>(j)]);
    return pref * det(mat);
}

/// The hyperoctahedrally symmetric multiple sum for P_n; needs square-root
/// witnesses for every point.
template <class F>
F p_theorem_th(const QEval<F>& E, const std::vector<F>& x, const std::vector<F>& sqrt_x, long n) {
    const long m = static_cast<long>(x.size());
    if (sqrt_x.size() != x.size()) throw MathError("p_theorem_th: one witness per point required");
    for (size_t i = 0; i < x.size(); ++i)
        if (!(sqrt_x[i] * sqrt_x[i] == x[i]))
            throw MathError("p_theorem_th: witness mismatch at position " + std::to_string(i));
    if (m == 0) return F(1);
    const F q = E.q();
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = i + 1; j < x.size(); ++j)
            if (F(1) + sqrt_x[i] * sqrt_x[j] == F(0))
                throw MathError("p_theorem_th: singular witness pair");
    F pref = E.qpow(m * (m - 1 - 2 * n), 4) * pow_i((F(1) - E.qpow(n + 1)) / (F(1) - q), m);
    for (long i = 0; i < m; ++i) pref *= pow_i(sqrt_x[static_cast<size_t>(i)], n);
    for (long i = 0; i < m; ++i)
        for (long j = i + 1; j < m; ++j)
            pref *= (sqrt_x[static_cast<size_t>(i)] + sqrt_x[static_cast<size_t>(j)]) /
                    (F(1) + sqrt_x[static_cast<size_t>(i)] * sqrt_x[static_cast<size_t>(j)]);
    // weight chains per variable
    std::vector<std::vector<F>> w(static_cast<size_t>(m));
    for (long i = 0; i < m; ++i) {
        auto& wi = w[static_cast<size_t>(i)];
        wi.assign(static_cast<size_t>(n + 1), F(1));
        const F rootq = E.qpow(1, 2);
        for (long k = 1; k <= n; ++k) {
            const F qk = E.qpow(k - 1);
            F ratio = q;
            ratio *= (F(1) - E.qpow(k - 1 - n)) * (F(1) - E.qpow(n + 1 + k));
            ratio *= (F(1) - rootq / sqrt_x[static_cast<size_t>(i)] * qk) *
                     (F(1) + rootq * sqrt_x[static_cast<size_t>(i)] * qk);
            const F qq = F(1) - E.qpow(k);
            ratio /= qq * qq * (F(1) - E.qpow(2 * k + 1, 2)) * (F(1) + E.qpow(2 * k + 1, 2));
            wi[static_cast<size_t>(k)] = wi[static_cast<size_t>(k - 1)] * ratio;
        }
    }
    std::vector<F> qk(static_cast<size_t>(n + 1));
    for (long k = 0; k <= n; ++k) qk[static_cast<size_t>(k)] = E.qpow(k);
    F total(0);
    detail::for_each_tuple(m, n, [&](const std::vector<long>& k) {
        for (size_t i = 0; i < k.size(); ++i)
            for (size_t j = i + 1; j < k.size(); ++j)
                if (k[i] == k[j]) return;
        F term(1);
        for (long i = 0; i < m; ++i) term *= w[static_cast<size_t>(i)][static_cast<size_t>(k[static_cast<size_t>(i)])];
        for (long i = 0; i < m; ++i)
            for (long j = i + 1; j < m; ++j) {
                const long ki = k[static_cast<size_t>(i)], kj = k[static_cast<size_t>(j)];
                term *= (qk[static_cast<size_t>(kj)] - qk[static_cast<size_t>(ki)]) /
                        (F(1) - E.qpow(ki + kj + 1));
            }
        total += term;
    });
    return pref * total;
}

/// The Schlosser-type multiple sum for P_n; stays singular at q = 1.
template <class F>
F p_theorem_ot(const QEval<F>& E, const std::vector<F>& x, long n) {
    const long m = static_cast<long>(x.size());
    if (m == 0) return F(1);
    const F q = E.q();
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = i + 1; j < x.size(); ++j)
            if (x[i] * x[j] == F(1)) throw MathError("p_theorem_ot: singular pair x_i x_j = 1");
    const long K = n + m - 1;
    F pref = scalar_from_rational<F>(Rational((m * (m - 1) / 2) % 2 == 0 ? 1L : -1L));
    pref *= E.qpow((n + 1) * (m * (m - 1) / 2) + 2 * (m * (m - 1) * (m - 2) / 6));
    pref *= pow_i(qpoch(-q, q, n), m) / pow_i(qpoch(q, q, m + n - 1), m);
    for (long i = 1; i <= m; ++i)
        pref *= qpoch(E.qpow(n + 1 - m + i), q, i - 1) / qpoch(-E.qpow(2 - m), q, i - 1);
    // weights (q^(1-m-n), -q^(2-m); q)_k / (q, -q^(-n); q)_k
    std::vector<F> w(static_cast<size_t>(K + 1), F(1));
    for (long k = 1; k <= K; ++k)
        w[static_cast<size_t>(k)] =
            w[static_cast<size_t>(k - 1)] * (F(1) - E.qpow(k - m - n)) * (F(1) + E.qpow(k + 1 - m)) /
            ((F(1) - E.qpow(k)) * (F(1) + E.qpow(k - 1 - n)));
    std::vector<std::vector<F>> xp(static_cast<size_t>(m));
    for (long i = 0; i < m; ++i) {
        auto& v = xp[static_cast<size_t>(i)];
        v.assign(static_cast<size_t>(K + 1), F(1));
        for (long k = 1; k <= K; ++k)
            v[static_cast<size_t>(k)] = v[static_cast<size_t>(k - 1)] * x[static_cast<size_t>(i)];
    }
    std::vector<F> qk(static_cast<size_t>(K + 1));
    for (long k = 0; k <= K; ++k) qk[static_cast<size_t>(k)] = E.qpow(k);
    F total(0);
    detail::for_each_tuple(m, K, [&](const std::vector<long>& k) {
        for (size_t i = 0; i < k.size(); ++i)
            for (size_t j = i + 1; j < k.size(); ++j)
                if (k[i] == k[j]) return;
        F term(1);
        for (long i = 0; i < m; ++i) {
            const long ki = k[static_cast<size_t>(i)];
            term *= w[static_cast<size_t>(ki)] * xp[static_cast<size_t>(i)][static_cast<size_t>(ki)];
        }
        for (long i = 0; i < m; ++i)
            for (long j = i + 1; j < m; ++j) {
                const long ki = k[static_cast<size_t>(i)], kj = k[static_cast<size_t>(j)];
                term *= (qk[static_cast<size_t>(kj)] - qk[static_cast<size_t>(ki)]) *
                        (F(1) - E.qpow(ki + kj + 1 - m - n));
            }
        total += term;
    });
    F denom(1);
    for (long i = 0; i < m; ++i)
        for (long j = i + 1; j < m; ++j)
            denom *= F(1) - x[static_cast<size_t>(i)] * x[static_cast<size_t>(j)];
    return pref * total / denom;
}

enum class DftForm { Ea, Eb, Ec, Ed, Oa, Ob, Oc, Od };

inline std::string dft_form_name(DftForm f) {
    switch (f) {
        case DftForm::Ea: return "ea";
        case DftForm::Eb: return "eb";
        case DftForm::Ec: return "ec";
        case DftForm::Ed: return "ed";
        case DftForm::Oa: return "oa";
        case DftForm::Ob: return "ob";
        case DftForm::Oc: return "oc";
        default: return "od";
    }
}

inline bool dft_needs_odd_sum(DftForm f) {
    return f == DftForm::Ea || f == DftForm::Eb || f == DftForm::Ec || f == DftForm::Ed;
}

/// The eight determinantal multiple sums for P_n. Forms ea..ed require
/// n + m odd, oa..od require n + m even; forms eb/ob use half-integral
/// q-powers.
template <class F>
F p_theorem_dft(const QEval<F>& E, const std::vector<F>& x, long n, DftForm form) {
    const long m = static_cast<long>(x.size());
    if (m == 0) return F(1);
    const bool odd = (n + m) % 2 == 1;
    if (odd != dft_needs_odd_sum(form))
        throw MathError("p_theorem_dft: form " + dft_form_name(form) +
                        " requires n + m to be " + (dft_needs_odd_sum(form) ? "odd" : "even"));
    const F q = E.q();
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = i + 1; j < x.size(); ++j)
            if (x[i] * x[j] == F(1)) throw MathError("p_theorem_dft: singular pair x_i x_j = 1");
    const long K = odd ? (n + m - 1) / 2 : (n + m - 2) / 2;
    const long binom2 = m * (m + 1) / 2, binom3 = (m + 1) * m * (m - 1) / 6;

    F pref(1);
    std::array<F, 4> num{F(0), F(0), F(0), F(0)};
    std::array<std::vector<F>, 4> num_per_var;  // variable-dependent parameters
    std::array<F, 4> den{F(0), F(0), F(0), F(0)};
    F base = q, zstep = q;
    bool doubled_pairs = false;

    const auto xnum = [&](const F& c) {
        std::vector<F> v;
        for (const F& xi : x) v.push_back(c * xi);
        return v;
    };
    const auto xden = [&](const F& c) {
        std::vector<F> v;
        for (const F& xi : x) v.push_back(c / xi);
        return v;
    };

    switch (form) {
        case DftForm::Ea:
            pref = scalar_from_rational<F>(Rational((m * (m - 1) / 2) % 2 ? -1L : 1L)) *
                   E.qpow(-(binom3 + n * binom2), 2) / pow_i(F(1) - q, m);
            for (long i = 1; i <= m; ++i)
                pref *= qpoch(E.qpow(n + 1 - m + i), q, i) /
                        qpoch({E.qpow(1 - n - m, 2), -E.qpow(3 + n - m, 2)}, q, i - 1);
            num = {E.qpow(1 - n - m, 2), -E.qpow(3 + n - m, 2), F(0), F(0)};
            num_per_var = {std::vector<F>{}, {}, xnum(q), xden(q)};
            den = {q, q, E.qpow(3, 2), -E.qpow(3, 2)};
            break;
        case DftForm::Eb:
            pref = E.qpow(-n * m, 4) * pow_i(qpoch(-q, q, (n + 1 - m) / 2), m) /
                   pow_i(qpoch(q, q, (n + m - 1) / 2), m);
            for (long i = 1; i <= m; ++i)
                pref *= qpoch(E.qpow(n + 1 - m + i), q, i - 1) *
                        qpoch(E.qpow(3, 2), q, (n + m + 1 - 2 * i) / 2) /
                        qpoch(-E.qpow(1, 2), q, (n + m + 1 - 2 * i) / 2);
            num = {E.qpow(1 - n - m, 2), -E.qpow(3 + n - m, 2), F(0), F(0)};
            num_per_var = {std::vector<F>{}, {}, xnum(E.qpow(1, 2)), xden(E.qpow(1, 2))};
            den = {q, E.qpow(1, 2), E.qpow(3, 2), -q};
            break;
        case DftForm::Ec:
            pref = E.qpow(-n * m, 2) / (pow_i(F(1) - q, m) *
                                        pow_i(qpoch(E.qpow(3 + n - m), q * q, m - 1), m));
            for (long i = 1; i <= m; ++i) pref *= qpoch(E.qpow(n + 1 - m + i), q, m);
            num = {E.qpow(1 - n - m), E.qpow(3 + n - m), F(0), F(0)};
            num_per_var = {std::vector<F>{}, {}, xnum(q), xden(q)};
            den = {q, q * q, q * q, E.qpow(3)};
            base = q * q;
            zstep = q * q;
            doubled_pairs = true;
            break;
        case DftForm::Ed:
            pref = E.qpow(-n * m) / (pow_i(F(1) - q, 2 * m) *
                                     pow_i(qpoch(E.qpow(3 + n - m), q * q, m - 1), m));
            for (long i = 1; i <= m; ++i) {
                const F p = qpoch(E.qpow(n + 1 - m + i), q, i);
                pref *= p * p;
            }
            num = {E.qpow(1 - n - m), E.qpow(3 + n - m), F(0), F(0)};
            num_per_var = {std::vector<F>{}, {}, xnum(q * q), xden(q * q)};
            den = {q * q, q * q, E.qpow(3), E.qpow(3)};
            base = q * q;
            zstep = q * q;
            doubled_pairs = true;
            break;
        case DftForm::Oa:
            pref = scalar_from_rational<F>(Rational((m * (m - 1) / 2) % 2 ? -1L : 1L)) *
                   E.qpow(-(binom3 + (n - 1) * binom2), 2) / pow_i(F(1) - q, 2 * m);
            for (long i = 1; i <= m; ++i)
                pref *= qpoch(E.qpow(n + 1 - m + i), q, i) /
                        qpoch({E.qpow(2 - n - m, 2), -E.qpow(4 + n - m, 2)}, q, i - 1);
            num = {E.qpow(2 - n - m, 2), -E.qpow(4 + n - m, 2), F(0), F(0)};
            num_per_var = {std::vector<F>{}, {}, xnum(q), xden(q)};
            den = {q, q * q, E.qpow(3, 2), -E.qpow(3, 2)};
            break;
        case DftForm::Ob:
            pref = E.qpow(-(n - 1) * m, 4) * pow_i(qpoch(-q, q, (n + 2 - m) / 2), m) /
                   (pow_i(F(1) - q, m) * pow_i(qpoch(q, q, (n + m - 2) / 2), m));
            for (long i = 1; i <= m; ++i)
                pref *= qpoch(E.qpow(n + 1 - m + i), q, i - 1) *
                        qpoch(E.qpow(3, 2), q, (n + m - 2 * i) / 2) /
                        qpoch(-E.qpow(3, 2), q, (n + m - 2 * i) / 2);
            num = {E.qpow(2 - n - m, 2), -E.qpow(4 + n - m, 2), F(0), F(0)};
            num_per_var = {std::vector<F>{}, {}, xnum(E.qpow(1, 2)), xden(E.qpow(1, 2))};
            den = {q, E.qpow(3, 2), E.qpow(3, 2), -q};
            break;
        case DftForm::Oc:
            pref = E.qpow(-(n - 1) * m, 2) / (pow_i(F(1) - q, 2 * m) *
                                              pow_i(qpoch(E.qpow(4 + n - m), q * q, m - 2), m));
            for (long i = 1; i <= m; ++i) {
                const F p = qpoch(E.qpow(n + 1 - m + i), q, i - 1);
                pref *= p * p;
            }
            num = {E.qpow(2 - n - m), E.qpow(4 + n - m), F(0), F(0)};
            num_per_var = {std::vector<F>{}, {}, xnum(q), xden(q)};
            den = {q * q, q * q, E.qpow(3), E.qpow(3)};
            base = q * q;
            zstep = q * q;
            doubled_pairs = true;
            break;
        case DftForm::Od:
            pref = E.qpow(-(n - 1) * m) /
                   (pow_i(F(1) - q, 2 * m) * pow_i(F(1) - q * q, m) *
                    pow_i(qpoch(E.qpow(4 + n - m), q * q, m - 2), m));
            for (long i = 1; i <= m; ++i) pref *= qpoch(E.qpow(n + 1 - m + i), q, m);
            num = {E.qpow(2 - n - m), E.qpow(4 + n - m), F(0), F(0)};
            num_per_var = {std::vector<F>{}, {}, xnum(q * q), xden(q * q)};
            den = {q * q, E.qpow(3), E.qpow(3), E.qpow(4)};
            base = q * q;
            zstep = q * q;
            doubled_pairs = true;
            break;
    }

    // x-dependent prefactor
    for (long i = 0; i < m; ++i) {
        const F& xi = x[static_cast<size_t>(i)];
        if (odd) {
            pref *= pow_i(xi, (n + m - 1) / 2);
        } else {
            pref *= (F(1) - xi) * pow_i(xi, (n + m - 2) / 2);
        }
    }

    // weight chains per variable: two shared numerator parameters, two
    // variable-bound ones, four denominator parameters, step factor
    std::vector<std::vector<F>> w(static_cast<size_t>(m));
    for (long i = 0; i < m; ++i) {
        auto& wi = w[static_cast<size_t>(i)];
        wi.assign(static_cast<size_t>(K + 1), F(1));
        F bk(1);  // base^k
        for (long k = 1; k <= K; ++k) {
            F ratio = zstep;
            ratio *= (F(1) - num[0] * bk) * (F(1) - num[1] * bk);
            ratio *= (F(1) - num_per_var[2][static_cast<size_t>(i)] * bk) *
                     (F(1) - num_per_var[3][static_cast<size_t>(i)] * bk);
            for (const F& b : den) ratio /= F(1) - b * bk;
            wi[static_cast<size_t>(k)] = wi[static_cast<size_t>(k - 1)] * ratio;
            bk *= base;
        }
    }
    std::vector<F> qk(static_cast<size_t>(K + 1));
    for (long k = 0; k <= K; ++k) qk[static_cast<size_t>(k)] = E.qpow(doubled_pairs ? 2 * k : k);
    F total(0);
    detail::for_each_tuple(m, K, [&](const std::vector<long>& k) {
        for (size_t i = 0; i < k.size(); ++i)
            for (size_t j = i + 1; j < k.size(); ++j)
                if (k[i] == k[j]) return;
        F term(1);
        for (long i = 0; i < m; ++i) term *= w[static_cast<size_t>(i)][static_cast<size_t>(k[static_cast<size_t>(i)])];
        for (long i = 0; i < m; ++i)
            for (long j = i + 1; j < m; ++j)
                term *= qk[static_cast<size_t>(k[static_cast<size_t>(j)])] -
                        qk[static_cast<size_t>(k[static_cast<size_t>(i)])];
        total += term;
    });
    F denom(1);
    for (long i = 0; i < m; ++i)
        for (long j = i + 1; j < m; ++j)
            denom *= F(1) - x[static_cast<size_t>(i)] * x[static_cast<size_t>(j)];
    return pref * total / denom;
}

/// Polynomial restatement of the hyperoctahedral symmetry: inverting one
/// variable only rescales P_n.
template <class F>
bool hyperoctahedral_check(const QEval<F>& E, const std::vector<F>& x, long n) {
    if (x.empty() || x[0] == F(0)) throw MathError("hyperoctahedral_check: x_1 must be nonzero");
    std::vector<F> inv = x;
    inv[0] = F(1) / x[0];
    F lhs = p_multisum(E, x, n);
    F rhs = pow_i(-x[0], n) * p_multisum(E, inv, n);
    for (size_t i = 1; i < x.size(); ++i) {
        lhs *= F(1) - x[0] * x[i];
        rhs *= x[i] - x[0];
    }
    return lhs == rhs;
}

/// Transformed pfaffian (the basis for the hyperoctahedral multiple sum);
/// even variable count, square-root witnesses required.
template <class F>
F p_api_pfaffian(const QEval<F>& E, const std::vector<F>& x, const std::vector<F>& sqrt_x, long n) {
    const long m = static_cast<long>(x.size());
    if (m % 2 != 0) throw MathError("p_api_pfaffian: even variable count required");
    if (sqrt_x.size() != x.size()) throw MathError("p_api_pfaffian: one witness per point");
    for (size_t i = 0; i < x.size(); ++i)
        if (!(sqrt_x[i] * sqrt_x[i] == x[i]))
            throw MathError("p_api_pfaffian: witness mismatch at position " + std::to_string(i));
    if (m == 0) return F(1);
    const auto skew = SkewMatrix<F>::from_upper(m, [&](long i, long j) {
        const F wi = sqrt_x[static_cast<size_t>(i)], wj = sqrt_x[static_cast<size_t>(j)];
        return (F(1) + wi * wj) / (wi + wj) *
               p_multisum(E, {x[static_cast<size_t>(i)], x[static_cast<size_t>(j)]}, n);
    });
    F pref(1);
    for (long i = 0; i < m; ++i)
        for (long j = i + 1; j < m; ++j) {
            const F wi = sqrt_x[static_cast<size_t>(i)], wj = sqrt_x[static_cast<size_t>(j)];
            pref *= (wi + wj) / (F(1) + wi * wj);
        }
    return pref * pfaffian(skew);
}

/// Both expressions of the two-determinant corollary for
/// P_n(x_1..x_m, y_1..y_m): determinant of two-row kernels, and the
/// parity-restricted double-determinant sum.
template <class F>
std::pair<F, F> p_two_det_forms(const QEval<F>& E, const std::vector<F>& x,
                                const std::vector<F>& y, long n) {
    const long m = static_cast<long>(x.size());
    if (y.size() != x.size()) throw MathError("p_two_det_forms: point lists must match");
    F pref(1);
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j)
            pref *= y[static_cast<size_t>(j)] - x[static_cast<size_t>(i)];
    for (long i = 0; i < m; ++i)
        for (long j = i + 1; j < m; ++j)
            pref /= (F(1) - x[static_cast<size_t>(i)] * x[static_cast<size_t>(j)]) *
                    (F(1) - y[static_cast<size_t>(i)] * y[static_cast<size_t>(j)]);
    MatX<F> kern(m, m);
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j)
            kern(i, j) = p_multisum(E, {x[static_cast<size_t>(i)], y[static_cast<size_t>(j)]}, n) /
                         (y[static_cast<size_t>(j)] - x[static_cast<size_t>(i)]);
    const F first = pref * det(kern);

    // second form: sum over strictly decreasing tuples of parity n-1 mod 2
    std::vector<FPoly<F>> ptab;
    for (long k = 0; k <= n - 1; ++k) ptab.push_back(p1_coeffs(E, k));
    F sum(0);
    std::vector<long> ks(static_cast<size_t>(m));
    std::function<void(long, long)> rec = [&](long pos, long hi) {
        if (pos == m) {
            F term(1);
            for (long i = 0; i < m; ++i)
                term *= (F(1) + E.qpow(ks[static_cast<size_t>(i)] + 1)) /
                        (F(1) - E.qpow(ks[static_cast<size_t>(i)] + 1));
            MatX<F> dx(m, m), dy(m, m);
            for (long i = 0; i < m; ++i)
                for (long j = 0; j < m; ++j) {
                    const long ki = ks[static_cast<size_t>(i)];
                    dx(i, j) = pow_i(x[static_cast<size_t>(j)], (n - 1 - ki) / 2) *
                               ptab[static_cast<size_t>(ki)](x[static_cast<size_t>(j)]);
                    dy(i, j) = pow_i(y[static_cast<size_t>(j)], (n - 1 - ki) / 2) *
                               ptab[static_cast<size_t>(ki)](y[static_cast<size_t>(j)]);
                }
            sum += term * det(dx) * det(dy);
            return;
        }
        for (long k = hi; k >= 0; --k) {
            if ((k - (n - 1)) % 2 != 0) continue;
            ks[static_cast<size_t>(pos)] = k;
            rec(pos + 1, k - 1);
        }
    };
    rec(0, n - 1);
    const F second = pref * sum;
    return {first, second};
}

enum class QOneMethod { Qc, Fdc, Kernel, Row3f2, Row2f1 };

inline std::string q_one_method_name(QOneMethod m) {
    switch (m) {
        case QOneMethod::Qc: return "qc";
        case QOneMethod::Fdc: return "fdc";
        case QOneMethod::Kernel: return "kernel";
        case QOneMethod::Row3f2: return "3f2";
        default: return "2f1";
    }
}

/// Q_lambda(1^n) by the q -> 1 regular multiple classical sum.
inline Rational q_one_qc(const StrictPartition& lambda, long n) {
    const long m = lambda.length();
    if (n < m) throw MathError("q_one: need at least as many letters as rows");
    if (m == 0) return Rational(1L);
    const long N = n - 1;  // Q(1^(N+1))
    Rational total(0L);
    detail::for_each_tuple(m, N, [&](const std::vector<long>& k) {
        for (size_t i = 0; i < k.size(); ++i)
            for (size_t j = i + 1; j < k.size(); ++j)
                if (k[i] == k[j]) return;
        Rational term(1L);
        for (long i = 0; i < m; ++i) {
            const long ki = k[static_cast<size_t>(i)];
            const Rational li(lambda.parts[static_cast<size_t>(i)]);
            term *= pochhammer(Rational(-N), ki) * pochhammer(Rational(N + 2), ki) *
                    pochhammer((Rational(1L) - li) / Rational(2L), ki);
            term /= pochhammer(Rational(1L), ki) * pochhammer(Rational(1L), ki) *
                    pochhammer(Rational(3, 2), ki);
        }
        for (long i = 0; i < m; ++i)
            for (long j = i + 1; j < m; ++j) {
                const long ki = k[static_cast<size_t>(i)], kj = k[static_cast<size_t>(j)];
                term *= Rational(ki - kj) / Rational(ki + kj + 1);
            }
        total += term;
    });
    return Rational(2 * N + 2).pow(m) * total;
}

/// Q_lambda(1^n) by the determinant of f_k values.
inline Rational q_one_fdc(const StrictPartition& lambda, long n) {
    const long m = lambda.length();
    if (n < m) throw MathError("q_one: need at least as many letters as rows");
    if (m == 0) return Rational(1L);
    MatX<Rational> mat(m, m);
    for (long j = 1; j <= m; ++j) {
        const FPoly<Rational> f = f_poly(n + m - 2 * j);
        for (long i = 0; i < m; ++i)
            mat(i, j - 1) = f(Rational(lambda.parts[static_cast<size_t>(i)]));
    }
    Rational pref = Rational(2L).pow(m * (2 * n + 1 - m) / 2);
    for (long i = 1; i <= m; ++i) pref /= factorial(n - m + i - 1);
    for (long i = 0; i < m; ++i)
        for (long j = i + 1; j < m; ++j)
            pref /= Rational(lambda.parts[static_cast<size_t>(i)] +
                             lambda.parts[static_cast<size_t>(j)]);
    return pref * det(mat);
}

/// Q_lambda(1^n) through the generalized rectangular Schur polynomial of the
/// continuous dual Hahn systems.
inline Rational q_one_kernel(const StrictPartition& lambda, long n) {
    const long m = lambda.length();
    if (n < m) throw MathError("q_one: need at least as many letters as rows");
    if (m == 0) return Rational(1L);
    const long d = n - m;
    const int eps = static_cast<int>(d % 2);
    const long k = (d - eps) / 2;
    MatX<Rational> mat(m, m);
    for (long j = 0; j < m; ++j) {
        const FPoly<Rational> p = classical_pk(k + j, eps);
        for (long i = 0; i < m; ++i) {
            const Rational li(lambda.parts[static_cast<size_t>(i)]);
            mat(i, j) = p(-li * li);
        }
    }
    Rational denom(1L);
    for (long i = 0; i < m; ++i)
        for (long j = i + 1; j < m; ++j) {
            const Rational xi = -Rational(lambda.parts[static_cast<size_t>(i)]).pow(2);
            const Rational xj = -Rational(lambda.parts[static_cast<size_t>(j)]).pow(2);
            denom *= xj - xi;
        }
    const Rational gen_schur = det(mat) / denom;
    Rational pref = Rational(2L).pow(m * (2 * n + 1 - m) / 2);
    if ((k * m) % 2 != 0) pref = -pref;
    for (long i = 1; i <= m; ++i) pref /= factorial(n - i);
    for (long i = 0; i < m; ++i)
        if (eps == 1) pref *= Rational(lambda.parts[static_cast<size_t>(i)]);
    for (long i = 0; i < m; ++i)
        for (long j = i + 1; j < m; ++j)
            pref *= Rational(lambda.parts[static_cast<size_t>(i)] -
                             lambda.parts[static_cast<size_t>(j)]);
    return pref * gen_schur;
}

/// One-row counts via the terminating 3F2 / 2F1 limits.
inline Rational q_one_row(const StrictPartition& lambda, long n, bool use_3f2) {
    if (lambda.length() != 1) throw MathError("q_one: row methods require a one-row shape");
    if (n < 1) throw MathError("q_one: need at least one letter");
    const Rational l(lambda.parts[0]);
    const long N = n - 1;
    const Rational count =
        use_3f2 ? Rational(2 * N + 2) * hyp_3f2(Rational(-N), Rational(N + 2),
                                               (Rational(1L) - l) / Rational(2L), Rational(1L),
                                               Rational(3, 2), Rational(1L))
                : Rational(2 * N + 2) * hyp_2f1(Rational(-N), Rational(1L) - l, Rational(2L),
                                               Rational(2L));
    return count;
}

/// Q_lambda(1^n), dispatching only to the formulas that stay regular at
/// q = 1. The result must be a nonnegative integer.
inline Rational q_one(const StrictPartition& lambda, long n, QOneMethod method) {
    Rational value;
    switch (method) {
        case QOneMethod::Qc: value = q_one_qc(lambda, n); break;
        case QOneMethod::Fdc: value = q_one_fdc(lambda, n); break;
        case QOneMethod::Kernel: value = q_one_kernel(lambda, n); break;
        case QOneMethod::Row3f2: value = q_one_row(lambda, n, true); break;
        case QOneMethod::Row2f1: value = q_one_row(lambda, n, false); break;
    }
    if (!value.is_integer() || value.sign() < 0)
        throw MathError("q_one: non-integer result; formula transcription broken");
    return value;
}

enum class StaircaseKind { Plain, Odd, Even, Half };

/// Closed product forms at staircase-type specializations. Plain/odd/even
/// return Q_lambda(1, q, ..., q^n); half returns
/// P_n(q^(1/2), q^(3/2), ..., q^(m-1/2)).
template <class F>
F q_staircase(const QEval<F>& E, StaircaseKind kind, long m, long n) {
    if (m < 1) throw MathError("q_staircase: m >= 1 required");
    const F q = E.q();
    switch (kind) {
        case StaircaseKind::Plain: {
            F out = scalar_from_rational<F>(Rational(2L).pow(m)) *
                    E.qpow((m + 1) * m * (m - 1) / 6);
            for (long i = 1; i <= m; ++i)
                out *= qpoch(E.qpow(n + 1 - m + i), q, i) / qpoch(q, q * q, i);
            return out;
        }
        case StaircaseKind::Odd: {
            F out = scalar_from_rational<F>(Rational(2L).pow(m)) *
                    E.qpow(2 * m * (2 * m - 1) * (2 * m - 2) / 6, 4);
            for (long i = 1; i <= m; ++i)
                out *= qpoch(E.qpow(n + 1 - m + i), q, m) /
                       (qpoch(q, q * q, i - 1) * qpoch(q, q * q, i));
            return out;
        }
        case StaircaseKind::Even: {
            F out = scalar_from_rational<F>(Rational(2L).pow(m)) *
                    E.qpow(2 * (m + 1) * m * (m - 1) / 6);
            for (long i = 1; i <= m; ++i) {
                const F num = qpoch(E.qpow(n + 1 - m + i), q, i);
                const F den = qpoch(q, q * q, i);
                out *= num * num / (den * den);
            }
            return out;
        }
        case StaircaseKind::Half: {
            F out = scalar_from_rational<F>(Rational((m * (m - 1) / 2) % 2 ? -1L : 1L)) *
                    E.qpow(2 * m * (2 * m - 1) * (2 * m - 2) / 6, 8);
            if ((n + m) % 2 == 1) {
                for (long i = 1; i <= m; ++i) {
                    out *= qpoch({q, E.qpow(n + 1 - m + i)}, q, i - 1) *
                           qpoch({E.qpow(3, 2), -q}, q, (n + m + 1 - 2 * i) / 2);
                    out /= qpoch({-q, E.qpow(1, 2), E.qpow(3, 2)}, q, i - 1) *
                           qpoch({q, -E.qpow(1, 2)}, q, (n + m + 1 - 2 * i) / 2);
                }
            } else {
                out *= qpoch(E.qpow(1, 2), q, m) / pow_i(F(1) - q, m);
                for (long i = 1; i <= m; ++i) {
                    out *= qpoch({q, E.qpow(n + 1 - m + i)}, q, i - 1) *
                           qpoch(E.qpow(3, 2), q, (n + m - 2 * i) / 2) *
                           qpoch(-q, q, (n + m + 2 - 2 * i) / 2);
                    out /= qpoch({-q, E.qpow(3, 2), E.qpow(3, 2)}, q, i - 1) *
                           qpoch({-E.qpow(3, 2), q}, q, (n + m - 2 * i) / 2);
                }
            }
            return out;
        }
    }
    throw MathError("q_staircase: unknown kind");
}

/// Infinite-alphabet product for the marked-tableau generating function.
template <class F>
F kawanaka_product(const QEval<F>& E, const StrictPartition& lambda) {
    const F q = E.q();
    F out(1);
    const long m = lambda.length();
    for (long i = 0; i < m; ++i)
        out *= qpoch(F(-1), q, lambda.parts[static_cast<size_t>(i)]) /
               qpoch(q, q, lambda.parts[static_cast<size_t>(i)]);
    for (long i = 0; i < m; ++i)
        for (long j = i + 1; j < m; ++j) {
            const long li = lambda.parts[static_cast<size_t>(i)];
            const long lj = lambda.parts[static_cast<size_t>(j)];
            out *= (E.qpow(lj) - E.qpow(li)) / (F(1) - E.qpow(li + lj));
        }
    return out;
}

/// Finite alphabets agree with the infinite product below degree n.
inline bool kawanaka_truncation_check(const StrictPartition& lambda, long n) {
    const QEval<RationalFn> E1 = symbolic_q(1);
    const RationalFn product = kawanaka_product(E1, lambda);
    const LaurentPoly series = truncate_series(product, n - 1);
    const LaurentPoly gf = gf_marked(lambda, n).truncated(n - 1);
    return series == gf;
}

/// Kawanaka's hook identity as a truncated series in x_1..x_m (coefficients
/// in Q(s)): the hook-weighted Schur sum against the product side.
inline bool kbf_check(long m, long N, int root_order = 1) {
    const QEval<RationalFn> E = symbolic_q(root_order);
    const RationalFn q = E.q();
    using ML = MultiLaurent<RationalFn>;
    const auto keep = [N](const std::vector<int>& e) {
        int total = 0;
        for (int v : e) {
            if (v < 0) return false;
            total += v;
        }
        return total <= N;
    };

    ML lhs(static_cast<int>(m));
    std::function<void(std::vector<long>&, long, long)> loop = [&](std::vector<long>& mu, long pos,
                                                                   long maxpart) {
        if (pos == m) {
            std::vector<long> trimmed = mu;
            const Partition part(std::move(trimmed));
            if (part.weight() > N) return;
            RationalFn coeff(1);
            for (long h : hook_lengths(part)) coeff *= (RationalFn(1) + E.qpow(h)) / (RationalFn(1) - E.qpow(h));
            for (const auto& [expo, count] : schur_monomials(part, static_cast<int>(m))) {
                std::vector<int> e(expo.begin(), expo.end());
                lhs.add_term(e, coeff * RationalFn(Rational(count)));
            }
            return;
        }
        for (long p = 0; p <= maxpart; ++p) {
            mu[static_cast<size_t>(pos)] = p;
            loop(mu, pos + 1, p);
        }
        mu[static_cast<size_t>(pos)] = 0;
    };
    std::vector<long> mu(static_cast<size_t>(m), 0);
    loop(mu, 0, N);

    ML rhs = ML::one(static_cast<int>(m));
    for (long i = 0; i < m; ++i) {
        // (-x q; q)_inf / (x; q)_inf = sum_k (-q;q)_k/(q;q)_k x^k
        std::vector<std::pair<std::vector<int>, RationalFn>> factor;
        RationalFn coef(1);
        for (long k = 0; k <= N; ++k) {
            std::vector<int> e(static_cast<size_t>(m), 0);
            e[static_cast<size_t>(i)] = static_cast<int>(k);
            factor.emplace_back(e, coef);
            coef *= (RationalFn(1) + E.qpow(k + 1)) / (RationalFn(1) - E.qpow(k + 1));
        }
        rhs = rhs.multiplied(factor, keep);
    }
    for (long i = 0; i < m; ++i)
        for (long j = i + 1; j < m; ++j) {
            std::vector<std::pair<std::vector<int>, RationalFn>> factor;
            for (long d = 0; 2 * d <= N; ++d) {
                std::vector<int> e(static_cast<size_t>(m), 0);
                e[static_cast<size_t>(i)] = static_cast<int>(d);
                e[static_cast<size_t>(j)] = static_cast<int>(d);
                factor.emplace_back(e, RationalFn(1));
            }
            rhs = rhs.multiplied(factor, keep);
        }
    return lhs == rhs;
}

/// Both sides of the multiple q-Chu-Vandermonde summation.
template <class F>
std::pair<F, F> krattenthaler_sides(const QEval<F>& E, const F& x, const F& y, long n, long m) {
    const F q = E.q();
    // lhs: sum over 0 <= k_m < ... < k_1 <= n
    F lhs(0);
    std::vector<long> ks(static_cast<size_t>(m));
    // chains over k of (x;q)_k (y;q)_(n-k) / ((q;q)_k (q;q)_(n-k)) y^k
    std::vector<F> w(static_cast<size_t>(n + 1));
    for (long k = 0; k <= n; ++k)
        w[static_cast<size_t>(k)] = qpoch(x, q, k) * qpoch(y, q, n - k) /
                                    (qpoch(q, q, k) * qpoch(q, q, n - k)) * pow_i(y, k);
    std::function<void(long, long)> rec = [&](long pos, long hi) {
        if (pos == m) {
            F term(1);
            for (long i = 0; i < m; ++i) term *= w[static_cast<size_t>(ks[static_cast<size_t>(i)])];
            for (long i = 0; i < m; ++i)
                for (long j = i + 1; j < m; ++j) {
                    const F d = E.qpow(ks[static_cast<size_t>(j)]) - E.qpow(ks[static_cast<size_t>(i)]);
                    term *= d * d;
                }
            lhs += term;
            return;
        }
        for (long k = hi; k >= m - 1 - pos; --k) {
            ks[static_cast<size_t>(pos)] = k;
            rec(pos + 1, k - 1);
        }
    };
    if (m == 0)
        lhs = F(1);
    else
        rec(0, n);

    F rhs = E.qpow(2 * (m * (m - 1) * (m - 2) / 6)) * pow_i(y, m * (m - 1) / 2);
    for (long i = 1; i <= m; ++i) {
        rhs *= qpoch({x, y, q}, q, i - 1) * qpoch(x * y * E.qpow(i + m - 2), q, n + 1 - m) /
               qpoch(q, q, n + i - m);
    }
    return {lhs, rhs};
}

/// Elementary Pochhammer rearrangement used to put the odd-staircase product
/// into closed form.
template <class F>
bool epi_check(const QEval<F>& E, const F& a, long m) {
    const F q = E.q();
    F lhs(1), rhs(1);
    for (long i = 1; i <= m; ++i) {
        lhs *= qpoch(a * E.qpow(i), q, m);
        rhs *= qpoch(a * E.qpow(i), q, i) * qpoch(a * E.qpow(i), q, i - 1);
    }
    return lhs == rhs;
}

/// Signed-permutation representations. The general form takes explicit
/// points for Q_lambda; the specialized form gives P_n directly.
template <class F>
F nimmo_general(const StrictPartition& lambda, const std::vector<F>& x) {
    const long n = static_cast<long>(x.size());
    const long m = lambda.length();
    if (m > n) throw MathError("nimmo_general: partition longer than point list");
    if (n > 8) throw MathError("nimmo_general: permutation sum guarded to n <= 8");
    const long l = (n - m) / 2;
    F pref = scalar_from_rational<F>(Rational(2L).pow(m - l) / factorial(l));
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j)
            pref *= (x[static_cast<size_t>(i)] + x[static_cast<size_t>(j)]) /
                    (x[static_cast<size_t>(i)] - x[static_cast<size_t>(j)]);
    std::vector<long> perm(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    F sum(0);
    do {
        long inversions = 0;
        for (size_t a = 0; a < perm.size(); ++a)
            for (size_t b = a + 1; b < perm.size(); ++b)
                if (perm[a] > perm[b]) ++inversions;
        F term = scalar_from_rational<F>(Rational(inversions % 2 ? -1L : 1L));
        for (long i = 0; i < m; ++i)
            term *= pow_i(x[static_cast<size_t>(perm[static_cast<size_t>(i)])],
                          lambda.parts[static_cast<size_t>(i)]);
        for (long i = 0; i < l; ++i) {
            const F& a = x[static_cast<size_t>(perm[static_cast<size_t>(m + 2 * i)])];
            const F& b = x[static_cast<size_t>(perm[static_cast<size_t>(m + 2 * i + 1)])];
            term *= (a - b) / (a + b);
        }
        sum += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return pref * sum;
}

template <class F>
F nimmo_np(const QEval<F>& E, const std::vector<F>& x, long n) {
    const long m = static_cast<long>(x.size());
    if (n + 1 > 8) throw MathError("nimmo_np: permutation sum guarded to n <= 7");
    const long l = (n + 1 - m) / 2;
    const F q = E.q();
    F pref = scalar_from_rational<F>(Rational(1L) / (Rational(2L).pow(l) * factorial(l)));
    for (long j = 1; j <= n; ++j) pref *= qpoch(-q, q, j) / qpoch(q, q, j);
    std::vector<long> perm(static_cast<size_t>(n + 1));
    for (long i = 0; i <= n; ++i) perm[static_cast<size_t>(i)] = i;
    F sum(0);
    do {
        long inversions = 0;
        for (size_t a = 0; a < perm.size(); ++a)
            for (size_t b = a + 1; b < perm.size(); ++b)
                if (perm[a] > perm[b]) ++inversions;
        F term = scalar_from_rational<F>(Rational(inversions % 2 ? -1L : 1L));
        for (long i = 0; i < m; ++i)
            term *= pow_i(x[static_cast<size_t>(i)], perm[static_cast<size_t>(i)]);
        for (long i = 0; i < l; ++i) {
            const long delta = perm[static_cast<size_t>(m + 2 * i + 1)] -
                               perm[static_cast<size_t>(m + 2 * i)];
            term *= (F(1) - E.qpow(delta)) / (F(1) + E.qpow(delta));
        }
        sum += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return pref * sum;
}

}  // namespace schurq
