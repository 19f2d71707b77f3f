#pragma once

#include <Eigen/Core>

#include <functional>
#include <utility>
#include <vector>

#include "schurq/qseries.hpp"

namespace Eigen {

template <>
struct NumTraits<schurq::Rational> : GenericNumTraits<schurq::Rational> {
    using Real = schurq::Rational;
    using NonInteger = schurq::Rational;
    using Nested = schurq::Rational;
    using Literal = long;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 60,
        MulCost = 60
    };
    static inline Real epsilon() { return Real(0L); }
    static inline Real dummy_precision() { return Real(0L); }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<schurq::RationalFn> : GenericNumTraits<schurq::RationalFn> {
    using Real = schurq::RationalFn;
    using NonInteger = schurq::RationalFn;
    using Nested = schurq::RationalFn;
    using Literal = long;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 200,
        MulCost = 200
    };
    static inline Real epsilon() { return Real(0L); }
    static inline Real dummy_precision() { return Real(0L); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace schurq {

template <class F>
using MatX = Eigen::Matrix<F, Eigen::Dynamic, Eigen::Dynamic>;

/// Exact determinant by Gaussian elimination over the coefficient field,
/// pivoting on the first nonzero entry.
template <class F>
F det(MatX<F> a) {
    const long n = a.rows();
    if (a.cols() != n) throw MathError("det: matrix must be square");
    F out(1);
    for (long k = 0; k < n; ++k) {
        long piv = -1;
        for (long i = k; i < n; ++i)
            if (!(a(i, k) == F(0))) { piv = i; break; }
        if (piv < 0) return F(0);
        if (piv != k) {
            a.row(piv).swap(a.row(k));
            out = -out;
        }
        out *= a(k, k);
        const F inv = F(1) / a(k, k);
        for (long i = k + 1; i < n; ++i) {
            if (a(i, k) == F(0)) continue;
            const F f = a(i, k) * inv;
            for (long j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
            a(i, k) = F(0);
        }
    }
    return out;
}

/// Skew-symmetric matrix; skewness (including zero diagonal) is enforced on
/// construction.
template <class F>
class SkewMatrix {
public:
    explicit SkewMatrix(MatX<F> a) : a_(std::move(a)) {
        if (a_.rows() != a_.cols()) throw MathError("SkewMatrix: must be square");
        for (long i = 0; i < a_.rows(); ++i) {
            if (!(a_(i, i) == F(0))) throw MathError("SkewMatrix: nonzero diagonal");
            for (long j = i + 1; j < a_.cols(); ++j)
                if (!(a_(i, j) == -a_(j, i))) throw MathError("SkewMatrix: not skew-symmetric");
        }
    }

    /// Builds from the strict upper triangle: entry(i, j) for i < j.
    static SkewMatrix from_upper(long n, const std::function<F(long, long)>& entry) {
        MatX<F> a(n, n);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j)
                a(i, j) = i < j ? entry(i, j) : (i == j ? F(0) : -entry(j, i));
        return SkewMatrix(a);
    }

    const MatX<F>& mat() const { return a_; }
    long dim() const { return a_.rows(); }

private:
    MatX<F> a_;
};

/// Exact pfaffian by skew-symmetric condensation, O(n^3) field operations.
/// Odd dimensions are rejected; zero-padding is the caller's business.
template <class F>
F pfaffian(const SkewMatrix<F>& s) {
    if (s.dim() % 2 != 0) throw MathError("pfaffian: odd dimension");
    MatX<F> a = s.mat();
    F out(1);
    long n = a.rows();
    while (n > 0) {
        long piv = -1;
        for (long i = 1; i < n; ++i)
            if (!(a(0, i) == F(0))) { piv = i; break; }
        if (piv < 0) return F(0);
        if (piv != 1) {
            a.row(piv).swap(a.row(1));
            a.col(piv).swap(a.col(1));
            out = -out;
        }
        const F p = a(0, 1);
        out *= p;
        if (n == 2) break;
        MatX<F> b(n - 2, n - 2);
        for (long i = 2; i < n; ++i)
            for (long j = 2; j < n; ++j)
                b(i - 2, j - 2) = a(i, j) - (a(0, i) * a(1, j) - a(0, j) * a(1, i)) / p;
        a = std::move(b);
        n -= 2;
    }
    return out;
}

/// Independent pfaffian oracle: signed perfect-matching expansion, cheap for
/// dimension <= 8.
template <class F>
F pfaffian_expansion(const SkewMatrix<F>& s) {
    const long n = s.dim();
    if (n % 2 != 0) throw MathError("pfaffian: odd dimension");
    if (n == 0) return F(1);
    const MatX<F>& a = s.mat();
    F out(0);
    std::vector<long> avail;
    for (long i = 0; i < n; ++i) avail.push_back(i);
    std::function<void(std::vector<long>&, int, F)> rec = [&](std::vector<long>& rest, int sign,
                                                              F acc) {
        if (rest.empty()) {
            out += sign > 0 ? acc : -acc;
            return;
        }
        const long i = rest[0];
        for (size_t t = 1; t < rest.size(); ++t) {
            const long j = rest[t];
            std::vector<long> next;
            for (size_t u = 1; u < rest.size(); ++u)
                if (u != t) next.push_back(rest[u]);
            // pairing (i, j) contributes sign (-1)^(t-1)
            rec(next, t % 2 == 1 ? sign : -sign, acc * a(i, j));
        }
    };
    rec(avail, 1, F(1));
    return out;
}

/// Schur's pfaffian evaluation: pfaff((x_j - x_i)/(x_j + x_i)) against the
/// product side, both computed independently.
template <class F>
bool check_spa(const std::vector<F>& x) {
    const long n = static_cast<long>(x.size());
    if (n % 2 != 0) throw MathError("check_spa: even point count required");
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = i + 1; j < x.size(); ++j) {
            if (x[i] == x[j]) throw MathError("check_spa: coincident points");
            if (x[i] + x[j] == F(0)) throw MathError("check_spa: opposite pair");
        }
    const auto skew = SkewMatrix<F>::from_upper(
        n, [&](long i, long j) { return (x[static_cast<size_t>(j)] - x[static_cast<size_t>(i)]) /
                                        (x[static_cast<size_t>(j)] + x[static_cast<size_t>(i)]); });
    F prod(1);
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j)
            prod *= (x[static_cast<size_t>(j)] - x[static_cast<size_t>(i)]) /
                    (x[static_cast<size_t>(j)] + x[static_cast<size_t>(i)]);
    return pfaffian(skew) == prod;
}

/// Companion evaluation pfaff((x_j - x_i)/(1 - t x_i x_j)) =
/// t^(m(m-1)) prod (x_j - x_i)/(1 - t x_i x_j).
template <class F>
bool check_spb(const std::vector<F>& x, const F& t) {
    const long n = static_cast<long>(x.size());
    if (n % 2 != 0) throw MathError("check_spb: even point count required");
    const long m = n / 2;
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = i + 1; j < x.size(); ++j)
            if (F(1) - t * x[i] * x[j] == F(0)) throw MathError("check_spb: singular pair");
    const auto skew = SkewMatrix<F>::from_upper(
        n, [&](long i, long j) { return (x[static_cast<size_t>(j)] - x[static_cast<size_t>(i)]) /
                                        (F(1) - t * x[static_cast<size_t>(i)] * x[static_cast<size_t>(j)]); });
    F prod = pow_i(t, m * (m - 1));
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j)
            prod *= (x[static_cast<size_t>(j)] - x[static_cast<size_t>(i)]) /
                    (F(1) - t * x[static_cast<size_t>(i)] * x[static_cast<size_t>(j)]);
    return pfaffian(skew) == prod;
}

/// Minor summation: pfaff(A B A^t) equals the sum over decreasing index
/// tuples of det(A columns) * pfaff(B minor); both sides exact.
template <class F>
bool minor_summation_check(const MatX<F>& a, const SkewMatrix<F>& b) {
    const long two_m = a.rows();
    const long n = a.cols();
    if (b.dim() != n) throw MathError("minor_summation_check: dimension mismatch");
    if (two_m % 2 != 0) throw MathError("minor_summation_check: A must have even row count");
    const MatX<F> lhs_mat = a * b.mat() * a.transpose();
    // products of exact scalars stay exact but symmetrize roundoff-free;
    // rebuild as skew to reuse the pfaffian
    const F lhs = pfaffian(SkewMatrix<F>(lhs_mat));

    F rhs(0);
    std::vector<long> idx(static_cast<size_t>(two_m));
    std::function<void(long, long)> rec = [&](long pos, long next) {
        if (pos == two_m) {
            MatX<F> sub(two_m, two_m);
            for (long i = 0; i < two_m; ++i)
                for (long j = 0; j < two_m; ++j)
                    sub(i, j) = a(i, idx[static_cast<size_t>(j)]);
            const auto bsub = SkewMatrix<F>::from_upper(two_m, [&](long i, long j) {
                return b.mat()(idx[static_cast<size_t>(i)], idx[static_cast<size_t>(j)]);
            });
            rhs += det(sub) * pfaffian(bsub);
            return;
        }
        for (long k = next; k < n; ++k) {
            idx[static_cast<size_t>(pos)] = k;
            rec(pos + 1, k + 1);
        }
    };
    // increasing tuples k_1 < ... < k_2m; the paper's decreasing convention
    // differs by a simultaneous row/column reversal of both factors, which
    // leaves det * pfaff unchanged.
    rec(0, 0);
    return lhs == rhs;
}

enum class SchlosserKind { Full, Degenerate };

/// Both sides of the Schlosser determinant evaluations: the full alternative
/// (AX_i, AC/X_i; q)/(BX_i, BC/X_i; q) form and its degenerate companion.
template <class F>
std::pair<F, F> schlosser_det(SchlosserKind kind, const F& q, const F& A, const F& B, const F& C,
                              const std::vector<F>& X) {
    const long m = static_cast<long>(X.size());
    if (kind == SchlosserKind::Full) {
        MatX<F> mat(m, m);
        for (long i = 0; i < m; ++i)
            for (long j = 0; j < m; ++j) {
                const F& xi = X[static_cast<size_t>(i)];
                mat(i, j) = qpoch({A * xi, A * C / xi}, q, j) / qpoch({B * xi, B * C / xi}, q, j);
            }
        const F lhs = det(std::move(mat));
        F rhs = pow_i(q, m * (m - 1) * (m - 2) / 6) * pow_i(A * C, m * (m - 1) / 2);
        for (long i = 0; i < m; ++i)
            for (long j = i + 1; j < m; ++j)
                rhs *= (X[static_cast<size_t>(j)] - X[static_cast<size_t>(i)]) *
                       (F(1) - X[static_cast<size_t>(i)] * X[static_cast<size_t>(j)] / C);
        for (long i = 1; i <= m; ++i) {
            const F& xi = X[static_cast<size_t>(i - 1)];
            rhs *= qpoch(B / A, q, i - 1) * qpoch(A * B * C * pow_i(q, 2 * m - 2 * i), q, i - 1);
            rhs /= pow_i(xi, m - 1) * qpoch({B * xi, B * C / xi}, q, m - 1);
        }
        return {lhs, rhs};
    }
    MatX<F> mat(m, m);
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j) {
            const F& xi = X[static_cast<size_t>(i)];
            mat(i, j) = qpoch(A * xi, q, j) * qpoch(B * xi, q, m - 1 - j);
        }
    const F lhs = det(std::move(mat));
    F rhs = pow_i(q, m * (m - 1) * (m - 2) / 6) * pow_i(A, m * (m - 1) / 2);
    for (long i = 0; i < m; ++i)
        for (long j = i + 1; j < m; ++j)
            rhs *= X[static_cast<size_t>(i)] - X[static_cast<size_t>(j)];
    for (long i = 1; i <= m; ++i) rhs *= qpoch(pow_i(q, i - m) * B / A, q, i - 1);
    return {lhs, rhs};
}

}  // namespace schurq
