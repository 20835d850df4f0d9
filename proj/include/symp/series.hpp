// symp: exact arithmetic for symplectic power series and Hilbert series.
//
// Truncated formal power series over Q. A TruncatedSeries stores gamma_0..gamma_N
// exactly; N is the truncation. Every operation computes the truncation its
// result is guaranteed exact to (the minimum of its inputs, or tighter for
// composition) — precision is never silently inflated.

#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <utility>
#include <vector>

#include "symp/polynomial.hpp"

namespace symp {

class TruncatedSeries {
public:
    /// Zero series through x^truncation.
    explicit TruncatedSeries(long truncation)
        : coeffs_(static_cast<size_t>(truncation) + 1, Rational(0)), trunc_(truncation) {
        assert(truncation >= 0);
    }

    /// Takes exactly truncation+1 coefficients.
    TruncatedSeries(std::vector<Rational> coeffs, long truncation)
        : coeffs_(std::move(coeffs)), trunc_(truncation) {
        assert(coeffs_.size() == static_cast<size_t>(trunc_) + 1);
    }

    static TruncatedSeries from_polynomial(const Polynomial& p, long truncation) {
        TruncatedSeries s(truncation);
        for (long i = 0; i <= truncation; ++i) s.coeffs_[static_cast<size_t>(i)] = p.coeff(i);
        return s;
    }

    long truncation() const { return trunc_; }

    const Rational& coeff(long i) const {
        assert(i >= 0 && i <= trunc_);
        return coeffs_[static_cast<size_t>(i)];
    }

    void set_coeff(long i, Rational v) {
        assert(i >= 0 && i <= trunc_);
        coeffs_[static_cast<size_t>(i)] = std::move(v);
    }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    /// Index of the first nonzero stored coefficient; nullopt means the series
    /// vanishes through the truncation ("unknown beyond N").
    std::optional<long> valuation() const {
        for (long i = 0; i <= trunc_; ++i)
            if (coeff(i) != 0) return i;
        return std::nullopt;
    }

    TruncatedSeries restrict(long new_truncation) const {
        assert(new_truncation <= trunc_);
        return TruncatedSeries(
            std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_truncation + 1),
            new_truncation);
    }

    friend TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) {
        long n = std::min(f.trunc_, g.trunc_);
        TruncatedSeries r(n);
        for (long i = 0; i <= n; ++i) r.coeffs_[i] = f.coeff(i) + g.coeff(i);
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g) {
        long n = std::min(f.trunc_, g.trunc_);
        TruncatedSeries r(n);
        for (long i = 0; i <= n; ++i) r.coeffs_[i] = f.coeff(i) - g.coeff(i);
        return r;
    }

    TruncatedSeries operator-() const {
        TruncatedSeries r(trunc_);
        for (long i = 0; i <= trunc_; ++i) r.coeffs_[i] = -coeff(i);
        return r;
    }

    /// Cauchy product through the minimal truncation.
    friend TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) {
        long n = std::min(f.trunc_, g.trunc_);
        TruncatedSeries r(n);
        for (long i = 0; i <= n; ++i) {
            if (f.coeff(i) == 0) continue;
            for (long j = 0; i + j <= n; ++j)
                if (g.coeff(j) != 0) r.coeffs_[i + j] += f.coeff(i) * g.coeff(j);
        }
        return r;
    }

    friend TruncatedSeries operator*(const Rational& s, const TruncatedSeries& f) {
        TruncatedSeries r(f.trunc_);
        for (long i = 0; i <= f.trunc_; ++i) r.coeffs_[i] = s * f.coeff(i);
        return r;
    }

    /// Multiplication by an exact polynomial does not lose precision.
    friend TruncatedSeries operator*(const Polynomial& p, const TruncatedSeries& f) {
        TruncatedSeries r(f.trunc_);
        if (p.is_zero()) return r;
        for (long i = 0; i <= *p.degree(); ++i) {
            if (p.coeff(i) == 0) continue;
            for (long j = 0; i + j <= f.trunc_; ++j)
                if (f.coeff(j) != 0) r.coeffs_[i + j] += p.coeff(i) * f.coeff(j);
        }
        return r;
    }

    /// 1/this; requires a nonzero constant term.
    TruncatedSeries reciprocal() const {
        if (coeff(0) == 0) throw NonpositiveValuation("reciprocal of a series with zero constant term");
        TruncatedSeries r(trunc_);
        r.coeffs_[0] = Rational(1) / coeff(0);
        for (long i = 1; i <= trunc_; ++i) {
            Rational s = 0;
            for (long j = 1; j <= i; ++j) s += coeff(j) * r.coeffs_[i - j];
            r.coeffs_[i] = -s / coeff(0);
        }
        return r;
    }

    friend bool operator==(const TruncatedSeries& f, const TruncatedSeries& g) {
        return f.trunc_ == g.trunc_ && f.coeffs_ == g.coeffs_;
    }

    /// Coefficientwise equality through x^m (both series must carry that much).
    static bool equal_through(const TruncatedSeries& f, const TruncatedSeries& g, long m) {
        assert(m <= f.trunc_ && m <= g.trunc_);
        for (long i = 0; i <= m; ++i)
            if (f.coeff(i) != g.coeff(i)) return false;
        return true;
    }

private:
    std::vector<Rational> coeffs_;
    long trunc_;
};

/// outer(inner(x)). Requires inner constant term zero. With inner valuation v,
/// the unknown outer tail first contributes at x^{v*(K+1)} (K = outer
/// truncation), so the result is exact through
///     min(inner truncation, v*K + v - 1).
/// If inner vanishes through its truncation, every non-constant outer term
/// contributes beyond it and the result is the constant outer(0).
inline TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    if (inner.coeff(0) != 0)
        throw NonpositiveValuation("composition requires inner valuation >= 1");
    long n_in = inner.truncation();
    auto val = inner.valuation();
    long v = val ? *val : n_in + 1;
    long safe = std::min(n_in, v * outer.truncation() + (v - 1));
    TruncatedSeries inner_cut = inner.truncation() == safe ? inner : inner.restrict(safe);
    TruncatedSeries r(safe);
    for (long k = outer.truncation(); k >= 0; --k) {
        r = r * inner_cut;
        r.set_coeff(0, r.coeff(0) + outer.coeff(k));
    }
    return r;
}

}  // namespace symp
