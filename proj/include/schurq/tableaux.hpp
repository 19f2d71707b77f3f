#pragma once

#include <algorithm>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "schurq/qseries.hpp"

namespace schurq {

/// Strictly decreasing positive parts; empty partition allowed.
struct StrictPartition {
    std::vector<long> parts;

    StrictPartition() = default;
    explicit StrictPartition(std::vector<long> p) : parts(std::move(p)) {
        for (size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] <= 0) throw MathError("StrictPartition: parts must be positive");
            if (i > 0 && parts[i] >= parts[i - 1])
                throw MathError("StrictPartition: parts must be strictly decreasing");
        }
    }

    static StrictPartition parse(const std::string& text) {
        std::vector<long> p;
        std::stringstream in(text);
        std::string tok;
        while (std::getline(in, tok, ','))
            if (!tok.empty()) p.push_back(std::stol(tok));
        return StrictPartition(std::move(p));
    }

    long length() const { return static_cast<long>(parts.size()); }
    long weight() const {
        long w = 0;
        for (long p : parts) w += p;
        return w;
    }
    std::string str() const {
        std::string out;
        for (size_t i = 0; i < parts.size(); ++i)
            out += (i ? "," : "") + std::to_string(parts[i]);
        return out.empty() ? "-" : out;
    }
};

/// Ordinary partition: weakly decreasing nonnegative parts.
struct Partition {
    std::vector<long> parts;

    Partition() = default;
    explicit Partition(std::vector<long> p) : parts(std::move(p)) {
        for (size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 0) throw MathError("Partition: negative part");
            if (i > 0 && parts[i] > parts[i - 1])
                throw MathError("Partition: parts must be weakly decreasing");
        }
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
    }

    long length() const { return static_cast<long>(parts.size()); }
    long weight() const {
        long w = 0;
        for (long p : parts) w += p;
        return w;
    }
    long part(long i) const {
        return i < length() ? parts[static_cast<size_t>(i)] : 0;
    }
};

struct Box {
    long row, col;  // 0-based; shifted diagrams have col >= row
};

/// Boxes of the shifted diagram S(lambda), row i occupying columns
/// i .. i + lambda_i - 1, listed row-major.
inline std::vector<Box> shifted_diagram(const StrictPartition& lambda) {
    std::vector<Box> boxes;
    for (long i = 0; i < lambda.length(); ++i)
        for (long j = i; j < i + lambda.parts[static_cast<size_t>(i)]; ++j)
            boxes.push_back({i, j});
    return boxes;
}

struct MarkedEntry {
    long row, col;
    long symbol;  // the value k of k or k'
    bool marked;
};

using MarkedTableau = std::vector<MarkedEntry>;

/// statistic |T| = sum over boxes of (symbol - 1)
inline long tableau_statistic(const MarkedTableau& t) {
    long s = 0;
    for (const auto& e : t) s += e.symbol - 1;
    return s;
}

namespace detail {

/// Symbol codes: k' -> 2k-1 (marked), k -> 2k (unmarked); the total order of
/// codes is the alphabet order 1' < 1 < 2' < 2 < ...
struct ShiftedShape {
    std::vector<Box> boxes;
    std::vector<long> left;   // index of the left neighbour or -1
    std::vector<long> above;  // index of the neighbour above or -1

    explicit ShiftedShape(const StrictPartition& lambda) : boxes(shifted_diagram(lambda)) {
        left.assign(boxes.size(), -1);
        above.assign(boxes.size(), -1);
        for (size_t b = 0; b < boxes.size(); ++b) {
            for (size_t a = 0; a < b; ++a) {
                if (boxes[a].row == boxes[b].row && boxes[a].col == boxes[b].col - 1)
                    left[b] = static_cast<long>(a);
                if (boxes[a].row == boxes[b].row - 1 && boxes[a].col == boxes[b].col)
                    above[b] = static_cast<long>(a);
            }
        }
    }
};

}  // namespace detail

/// Enumerates every marked shifted tableau of shape S(lambda) over the
/// alphabet 1' < 1 < ... < n' < n exactly once, in row-major lexicographic
/// order on symbol codes. The visitor receives the code assignment.
inline void enumerate_marked_codes(const StrictPartition& lambda, long n,
                                   const std::function<void(const std::vector<long>&)>& visit) {
    if (n < 0) throw MathError("enumerate_marked: negative alphabet bound");
    const detail::ShiftedShape shape(lambda);
    const size_t nb = shape.boxes.size();
    std::vector<long> code(nb, 0);
    const long cmax = 2 * n;

    std::function<void(size_t)> rec = [&](size_t b) {
        if (b == nb) {
            visit(code);
            return;
        }
        const long cl = shape.left[b] >= 0 ? code[static_cast<size_t>(shape.left[b])] : 0;
        const long ca = shape.above[b] >= 0 ? code[static_cast<size_t>(shape.above[b])] : 0;
        for (long c = std::max({cl, ca, 1L}); c <= cmax; ++c) {
            const bool marked = (c % 2 == 1);
            if (marked && c == cl) continue;   // marked at most once per row
            if (!marked && c == ca) continue;  // unmarked at most once per column
            code[b] = c;
            rec(b + 1);
        }
        code[b] = 0;
    };
    rec(0);
}

inline std::vector<MarkedTableau> enumerate_marked(const StrictPartition& lambda, long n) {
    const auto boxes = shifted_diagram(lambda);
    std::vector<MarkedTableau> out;
    enumerate_marked_codes(lambda, n, [&](const std::vector<long>& code) {
        MarkedTableau t;
        t.reserve(boxes.size());
        for (size_t b = 0; b < boxes.size(); ++b)
            t.push_back({boxes[b].row, boxes[b].col, (code[b] + 1) / 2, code[b] % 2 == 1});
        out.push_back(std::move(t));
    });
    return out;
}

/// Generating function sum_T q^|T| over marked shifted tableaux of shape
/// S(lambda) with alphabet 1' < 1 < ... < n' < n. Exponents are q-exponents.
inline LaurentPoly gf_marked(const StrictPartition& lambda, long n) {
    std::vector<Int> counts;
    enumerate_marked_codes(lambda, n, [&](const std::vector<long>& code) {
        long stat = 0;
        for (long c : code) stat += (c + 1) / 2 - 1;
        if (static_cast<size_t>(stat) >= counts.size()) counts.resize(static_cast<size_t>(stat) + 1);
        counts[static_cast<size_t>(stat)] += 1;
    });
    std::vector<Rational> coeffs;
    coeffs.reserve(counts.size());
    for (const auto& c : counts) coeffs.emplace_back(Rational(c));
    if (coeffs.empty()) coeffs.emplace_back(0L);
    if (lambda.length() == 0) return LaurentPoly(1L);
    return LaurentPoly::from_coeffs(0, std::move(coeffs));
}

inline Int count_marked(const StrictPartition& lambda, long n) {
    Int total = 0;
    enumerate_marked_codes(lambda, n, [&](const std::vector<long>&) { total += 1; });
    return total;
}

/// Column-strict shifted tableaux: unmarked labels 1..bound, weakly
/// increasing along rows and strictly increasing down columns.
inline void enumerate_column_strict_codes(const StrictPartition& lambda, long bound,
                                          const std::function<void(const std::vector<long>&)>& visit) {
    const detail::ShiftedShape shape(lambda);
    const size_t nb = shape.boxes.size();
    std::vector<long> val(nb, 0);
    std::function<void(size_t)> rec = [&](size_t b) {
        if (b == nb) {
            visit(val);
            return;
        }
        const long cl = shape.left[b] >= 0 ? val[static_cast<size_t>(shape.left[b])] : 1;
        const long ca = shape.above[b] >= 0 ? val[static_cast<size_t>(shape.above[b])] + 1 : 1;
        for (long c = std::max(cl, ca); c <= bound; ++c) {
            val[b] = c;
            rec(b + 1);
        }
        val[b] = 0;
    };
    rec(0);
}

inline LaurentPoly gf_column_strict(const StrictPartition& lambda, long bound) {
    std::vector<Int> counts;
    enumerate_column_strict_codes(lambda, bound, [&](const std::vector<long>& val) {
        long stat = 0;
        for (long v : val) stat += v - 1;
        if (static_cast<size_t>(stat) >= counts.size()) counts.resize(static_cast<size_t>(stat) + 1);
        counts[static_cast<size_t>(stat)] += 1;
    });
    std::vector<Rational> coeffs;
    coeffs.reserve(counts.size());
    for (const auto& c : counts) coeffs.emplace_back(Rational(c));
    if (coeffs.empty()) coeffs.emplace_back(0L);
    if (lambda.length() == 0) return LaurentPoly(1L);
    return LaurentPoly::from_coeffs(0, std::move(coeffs));
}

/// Hook lengths of an ordinary partition, box by box.
inline std::vector<long> hook_lengths(const Partition& mu) {
    std::vector<long> conj;
    for (long j = 0; j < mu.part(0); ++j) {
        long h = 0;
        for (long i = 0; i < mu.length(); ++i)
            if (mu.part(i) > j) ++h;
        conj.push_back(h);
    }
    std::vector<long> hooks;
    for (long i = 0; i < mu.length(); ++i)
        for (long j = 0; j < mu.part(i); ++j)
            hooks.push_back(mu.part(i) - j + conj[static_cast<size_t>(j)] - i - 1);
    return hooks;
}

/// The two box products attached to the Schur expansion of P_n:
/// prod (1+q^h)/(1-q^h) over hooks, and
/// prod (1-q^(c+m-n-1))/(1+q^(c+m-n-1)) over contents.
template <class F>
std::pair<F, F> hook_content_products(const QEval<F>& E, const Partition& mu, long n, long m) {
    F hooks(1), contents(1);
    for (long h : hook_lengths(mu)) {
        hooks *= (F(1) + E.qpow(h)) / (F(1) - E.qpow(h));
    }
    for (long i = 0; i < mu.length(); ++i)
        for (long j = 0; j < mu.part(i); ++j) {
            const long c = j - i;
            const F w = E.qpow(c + m - n - 1);
            contents *= (F(1) - w) / (F(1) + w);
        }
    return {hooks, contents};
}

/// Monomial expansion of the Schur polynomial s_mu(x_1..x_nvars) by
/// semistandard tableau enumeration; returns (exponent vector, multiplicity).
inline std::vector<std::pair<std::vector<int>, Int>> schur_monomials(const Partition& mu, int nvars) {
    std::vector<std::pair<std::vector<int>, Int>> out;
    if (mu.length() > nvars) return out;
    std::vector<std::vector<long>> rows(static_cast<size_t>(mu.length()));
    for (long i = 0; i < mu.length(); ++i) rows[static_cast<size_t>(i)].assign(static_cast<size_t>(mu.part(i)), 0);
    std::map<std::vector<int>, Int> acc;
    std::function<void(long, long)> rec = [&](long i, long j) {
        if (i == mu.length()) {
            std::vector<int> expo(static_cast<size_t>(nvars), 0);
            for (const auto& row : rows)
                for (long v : row) expo[static_cast<size_t>(v - 1)] += 1;
            acc[expo] += 1;
            return;
        }
        if (j == mu.part(i)) {
            rec(i + 1, 0);
            return;
        }
        const long lo_row = j > 0 ? rows[static_cast<size_t>(i)][static_cast<size_t>(j - 1)] : 1;
        const long lo_col = (i > 0 && mu.part(i - 1) > j) ? rows[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] + 1 : 1;
        for (long v = std::max(lo_row, lo_col); v <= nvars; ++v) {
            rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
            rec(i, j + 1);
        }
    };
    rec(0, 0);
    for (auto& [e, c] : acc) out.emplace_back(e, c);
    return out;
}

/// Schur polynomial s_mu at given points: bialternant ratio for pairwise
/// distinct points, combinatorial expansion otherwise.
template <class F>
F schur_poly(const Partition& mu, const std::vector<F>& x) {
    const long N = static_cast<long>(x.size());
    if (mu.length() > N) return F(0);
    bool distinct = true;
    for (size_t i = 0; i < x.size() && distinct; ++i)
        for (size_t j = i + 1; j < x.size(); ++j)
            if (x[i] == x[j]) { distinct = false; break; }
    if (!distinct) {
        F out(0);
        for (const auto& [expo, count] : schur_monomials(mu, static_cast<int>(N))) {
            F term = scalar_from_rational<F>(Rational(count));
            for (long i = 0; i < N; ++i) term *= pow_i(x[static_cast<size_t>(i)], expo[static_cast<size_t>(i)]);
            out += term;
        }
        return out;
    }
    // det(x_i^(mu_j + N - j)) / det(x_i^(N - j)), both alternants expanded
    // over permutations (N stays small here).
    std::vector<long> expo_num, expo_den;
    for (long j = 1; j <= N; ++j) {
        expo_num.push_back(mu.part(j - 1) + N - j);
        expo_den.push_back(N - j);
    }
    const auto alternant = [&](const std::vector<long>& expo) {
        std::vector<long> p(static_cast<size_t>(N));
        for (long i = 0; i < N; ++i) p[static_cast<size_t>(i)] = i;
        F det(0);
        do {
            long inversions = 0;
            for (size_t a = 0; a < p.size(); ++a)
                for (size_t b = a + 1; b < p.size(); ++b)
                    if (p[a] > p[b]) ++inversions;
            F term = scalar_from_rational<F>(Rational(inversions % 2 == 0 ? 1L : -1L));
            for (long i = 0; i < N; ++i)
                term *= pow_i(x[static_cast<size_t>(i)], expo[static_cast<size_t>(p[static_cast<size_t>(i)])]);
            det += term;
        } while (std::next_permutation(p.begin(), p.end()));
        return det;
    };
    return alternant(expo_num) / alternant(expo_den);
}

/// Principal specialization s_lambda(1, q, ..., q^(n-1)) through the
/// Vandermonde evaluation.
template <class F>
F schur_principal(const QEval<F>& E, const Partition& lambda, long n) {
    if (lambda.length() > n) return F(0);
    F num(1), den(1);
    for (long i = 1; i <= n; ++i)
        for (long j = i + 1; j <= n; ++j) {
            num *= E.qpow(lambda.part(j - 1) + n - j) - E.qpow(lambda.part(i - 1) + n - i);
            den *= E.qpow(n - j) - E.qpow(n - i);
        }
    return num / den;
}

}  // namespace schurq
