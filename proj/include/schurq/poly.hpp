#pragma once

#include <functional>
#include <map>
#include <vector>

#include "schurq/rational.hpp"

namespace schurq {

/// Dense Laurent polynomial in one formal variable with coefficients in an
/// arbitrary field F. Used for auxiliary variables (x, z, xi, t) whose
/// coefficients are themselves exact scalars.
template <class F>
class FPoly {
public:
    FPoly() = default;
    FPoly(const F& constant) {  // NOLINT: implicit constant lift
        if (!(constant == F(0))) { lo_ = 0; c_ = {constant}; }
    }

    static FPoly monomial(const F& coeff, long exp) {
        FPoly p;
        if (!(coeff == F(0))) { p.lo_ = exp; p.c_ = {coeff}; }
        return p;
    }

    static FPoly variable() { return monomial(F(1), 1); }

    bool is_zero() const { return c_.empty(); }
    long lo() const { return c_.empty() ? 0 : lo_; }
    long hi() const { return c_.empty() ? 0 : lo_ + static_cast<long>(c_.size()) - 1; }
    long degree() const { return hi(); }

    F coeff(long e) const {
        if (c_.empty() || e < lo_ || e > hi()) return F(0);
        return c_[static_cast<size_t>(e - lo_)];
    }

    FPoly shifted(long k) const {
        FPoly p(*this);
        if (!p.c_.empty()) p.lo_ += k;
        return p;
    }

    FPoly operator-() const {
        FPoly p(*this);
        for (auto& c : p.c_) c = -c;
        return p;
    }

    friend FPoly operator+(const FPoly& a, const FPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const long lo = std::min(a.lo_, b.lo_);
        const long hi = std::max(a.hi(), b.hi());
        FPoly out;
        out.lo_ = lo;
        out.c_.assign(static_cast<size_t>(hi - lo + 1), F(0));
        for (size_t i = 0; i < a.c_.size(); ++i) out.c_[static_cast<size_t>(a.lo_ - lo) + i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) out.c_[static_cast<size_t>(b.lo_ - lo) + i] += b.c_[i];
        out.trim_();
        return out;
    }

    friend FPoly operator-(const FPoly& a, const FPoly& b) { return a + (-b); }

    friend FPoly operator*(const FPoly& a, const FPoly& b) {
        if (a.is_zero() || b.is_zero()) return FPoly();
        FPoly out;
        out.lo_ = a.lo_ + b.lo_;
        out.c_.assign(a.c_.size() + b.c_.size() - 1, F(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == F(0)) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
        }
        out.trim_();
        return out;
    }

    FPoly& operator+=(const FPoly& o) { return *this = *this + o; }
    FPoly& operator-=(const FPoly& o) { return *this = *this - o; }
    FPoly& operator*=(const FPoly& o) { return *this = *this * o; }

    FPoly scaled(const F& c) const {
        if (c == F(0)) return FPoly();
        FPoly p(*this);
        for (auto& x : p.c_) x *= c;
        return p;
    }

    friend bool operator==(const FPoly& a, const FPoly& b) { return a.lo() == b.lo() && a.c_ == b.c_; }
    friend bool operator!=(const FPoly& a, const FPoly& b) { return !(a == b); }

    /// Evaluation; negative support requires invertible x.
    F operator()(const F& x) const {
        if (c_.empty()) return F(0);
        F acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        if (lo_ > 0)
            for (long j = 0; j < lo_; ++j) acc *= x;
        else if (lo_ < 0) {
            const F inv = F(1) / x;
            for (long j = 0; j < -lo_; ++j) acc *= inv;
        }
        return acc;
    }

    /// Substitutes x -> c * x^k (k nonzero integer).
    FPoly composed_monomial(const F& c, long k) const {
        FPoly out;
        for (long e = lo(); e <= hi(); ++e) {
            const F a = coeff(e);
            if (a == F(0)) continue;
            F scale = a;
            const long n = e < 0 ? -e : e;
            for (long j = 0; j < n; ++j) scale = e < 0 ? scale / c : scale * c;
            out += monomial(scale, e * k);
        }
        return out;
    }

private:
    void trim_() {
        size_t lead = 0;
        while (lead < c_.size() && c_[lead] == F(0)) ++lead;
        size_t tail = c_.size();
        while (tail > lead && c_[tail - 1] == F(0)) --tail;
        if (lead > 0 || tail < c_.size()) {
            c_ = std::vector<F>(c_.begin() + static_cast<long>(lead), c_.begin() + static_cast<long>(tail));
            lo_ += static_cast<long>(lead);
        }
        if (c_.empty()) lo_ = 0;
    }

    long lo_ = 0;
    std::vector<F> c_;
};

/// Sparse Laurent polynomial in several formal variables over F. Small-scale
/// workhorse for Vandermonde expansions and truncated series checks.
template <class F>
class MultiLaurent {
public:
    using Expo = std::vector<int>;

    explicit MultiLaurent(int nvars) : nvars_(nvars) {}

    static MultiLaurent one(int nvars) {
        MultiLaurent p(nvars);
        p.terms_[Expo(static_cast<size_t>(nvars), 0)] = F(1);
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Expo, F>& terms() const { return terms_; }

    void add_term(const Expo& e, const F& c) {
        if (c == F(0)) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == F(0)) terms_.erase(it);
        }
    }

    F coeff(const Expo& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? F(0) : it->second;
    }

    friend MultiLaurent operator+(const MultiLaurent& a, const MultiLaurent& b) {
        MultiLaurent out(a);
        for (const auto& [e, c] : b.terms_) out.add_term(e, c);
        return out;
    }

    friend MultiLaurent operator-(const MultiLaurent& a, const MultiLaurent& b) {
        MultiLaurent out(a);
        for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
        return out;
    }

    MultiLaurent scaled(const F& c) const {
        MultiLaurent out(nvars_);
        if (c == F(0)) return out;
        for (const auto& [e, x] : terms_) out.terms_[e] = x * c;
        return out;
    }

    /// Multiplies by a sparse polynomial given as (exponent vector, coeff)
    /// pairs; keep_term filters the product (for truncated series work).
    MultiLaurent multiplied(const std::vector<std::pair<Expo, F>>& factor,
                            const std::function<bool(const Expo&)>& keep_term = nullptr) const {
        MultiLaurent out(nvars_);
        for (const auto& [e, c] : terms_) {
            for (const auto& [fe, fc] : factor) {
                Expo sum = e;
                for (int i = 0; i < nvars_; ++i) sum[static_cast<size_t>(i)] += fe[static_cast<size_t>(i)];
                if (keep_term && !keep_term(sum)) continue;
                out.add_term(sum, c * fc);
            }
        }
        return out;
    }

    friend bool operator==(const MultiLaurent& a, const MultiLaurent& b) { return a.terms_ == b.terms_; }

private:
    int nvars_;
    std::map<Expo, F> terms_;
};

/// Binary power over any field-like type.
template <class F>
F pow_i(F base, long e) {
    if (e == 0) return F(1);
    if (e < 0) {
        base = F(1) / base;
        e = -e;
    }
    F acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return acc;
}

}  // namespace schurq
