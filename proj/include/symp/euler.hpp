// symp: exact arithmetic for symplectic power series and Hilbert series.
//
// Euler polynomials, Genocchi and Bernoulli numbers, and the bracket
// coefficient triangle [n i] defined by x(x^{2n} - E_{2n}(x)) = sum_i [n i] x^{2i}.
// Triangle indexing starts at n = 1, i = 1; entries vanish for i <= 0 or i > n.
//
// Everything is exact. The bracket table is built from the Euler-polynomial
// definition; the Genocchi/Bernoulli closed forms are provided as independent
// cross-check routes.

#pragma once

#include <utility>
#include <vector>

#include "symp/series.hpp"

namespace symp {

/// E_0..E_n via the recursion E_n(x) + sum_{i=0}^{n} C(n,i) E_i(x) = 2x^n.
inline std::vector<Polynomial> euler_polynomials(long n) {
    std::vector<Polynomial> table;
    table.reserve(static_cast<size_t>(n) + 1);
    table.emplace_back(Rational(1));
    for (long m = 1; m <= n; ++m) {
        Polynomial s;
        for (long i = 0; i < m; ++i) s = s + Rational(binomial(m, i)) * table[static_cast<size_t>(i)];
        table.push_back(Polynomial::monomial(m) - Rational(1, 2) * s);
    }
    return table;
}

inline Polynomial euler_polynomial(long n) {
    return euler_polynomials(n).back();
}

struct GenocchiSequence {
    std::vector<Integer> values;  // G_0..G_N

    const Integer& operator[](size_t n) const { return values[n]; }
    size_t size() const { return values.size(); }
};

/// G_0..G_N from the exponential generating function 2z/(e^z + 1).
inline GenocchiSequence genocchi(long n) {
    // (e^z+1)/2 has unit constant term; invert and multiply by z, then scale by n!.
    TruncatedSeries half(n);
    Rational fact = 1;
    half.set_coeff(0, Rational(1));
    for (long i = 1; i <= n; ++i) {
        fact *= i;
        half.set_coeff(i, Rational(1, 2) / fact);
    }
    TruncatedSeries inv = half.reciprocal();
    GenocchiSequence g;
    g.values.assign(static_cast<size_t>(n) + 1, Integer(0));
    Rational f = 1;
    for (long i = 1; i <= n; ++i) {
        f *= i;
        Rational v = f * inv.coeff(i - 1);  // G_i/i! = coeff of z^i in z*inv
        if (denominator(v) != 1) throw VerdictMismatch("Genocchi number not an integer");
        g.values[static_cast<size_t>(i)] = numerator(v);
    }
    // sanity asserted by the defining expansion: odd entries >= 3 vanish,
    // even entries >= 2 alternate in sign
    for (long i = 3; i <= n; i += 2)
        if (g.values[static_cast<size_t>(i)] != 0) throw VerdictMismatch("odd Genocchi number nonzero");
    for (long i = 2; i + 2 <= n; i += 2)
        if (g.values[static_cast<size_t>(i)] * g.values[static_cast<size_t>(i) + 2] >= 0)
            throw VerdictMismatch("Genocchi signs fail to alternate");
    return g;
}

struct BernoulliSequence {
    std::vector<Rational> values;  // B_0..B_N

    const Rational& operator[](size_t n) const { return values[n]; }
    size_t size() const { return values.size(); }
};

/// B_0..B_N with the B_1 = -1/2 convention (the one pinned by G_n = 2(1-2^n)B_n).
inline BernoulliSequence bernoulli(long n) {
    BernoulliSequence b;
    b.values.reserve(static_cast<size_t>(n) + 1);
    b.values.emplace_back(1);
    for (long m = 1; m <= n; ++m) {
        Rational s = 0;
        for (long j = 0; j < m; ++j) s += Rational(binomial(m + 1, j)) * b.values[static_cast<size_t>(j)];
        b.values.push_back(-s / Rational(m + 1));
    }
    return b;
}

/// The integer triangle [n i], rows 1..n_max.
class BracketTable {
public:
    explicit BracketTable(long n_max) : n_max_(n_max) {
        auto eulers = euler_polynomials(2 * n_max);
        rows_.reserve(static_cast<size_t>(n_max));
        for (long n = 1; n <= n_max; ++n) {
            // x(x^{2n} - E_{2n}) = -x * (odd part of E_{2n}); entry (n,i) is
            // minus the coefficient of x^{2i-1} in E_{2n}.
            const Polynomial& e = eulers[static_cast<size_t>(2 * n)];
            std::vector<Integer> row;
            row.reserve(static_cast<size_t>(n));
            for (long i = 1; i <= n; ++i) {
                Rational v = -e.coeff(2 * i - 1);
                if (denominator(v) != 1) throw VerdictMismatch("bracket entry not an integer");
                row.push_back(numerator(v));
            }
            if (row.back() != n) throw VerdictMismatch("bracket diagonal [n n] != n");
            rows_.push_back(std::move(row));
        }
    }

    long max_row() const { return n_max_; }

    /// [n i]; zero outside 1 <= i <= n (and for n < 1).
    Integer entry(long n, long i) const {
        if (n < 1 || i < 1 || i > n) return 0;
        assert(n <= n_max_);
        return rows_[static_cast<size_t>(n - 1)][static_cast<size_t>(i - 1)];
    }

    const std::vector<Integer>& row(long n) const { return rows_[static_cast<size_t>(n - 1)]; }

private:
    long n_max_;
    std::vector<std::vector<Integer>> rows_;
};

inline Integer bracket(long n, long i) {
    if (n < 1 || i < 1 || i > n) return 0;
    return BracketTable(n).entry(n, i);
}

/// Closed form [n i] = -G_{2(n-i+1)}/(2(n-i+1)) * C(2n, 2i-1).
inline Rational bracket_via_genocchi(long n, long i, const GenocchiSequence& g) {
    if (n < 1 || i < 1 || i > n) return 0;
    long k = n - i + 1;
    return Rational(-g[static_cast<size_t>(2 * k)], 2 * k) * Rational(binomial(2 * n, 2 * i - 1));
}

/// Closed form [n i] = (4^{n-i+1}-1)/(n-i+1) * B_{2(n-i+1)} * C(2n, 2i-1).
inline Rational bracket_via_bernoulli(long n, long i, const BernoulliSequence& b) {
    if (n < 1 || i < 1 || i > n) return 0;
    long k = n - i + 1;
    Integer p4 = 1;
    for (long j = 0; j < k; ++j) p4 *= 4;
    return Rational(p4 - 1, k) * b[static_cast<size_t>(2 * k)] * Rational(binomial(2 * n, 2 * i - 1));
}

/// Left minus right of the cubic identity
///   [n-k l] + [n-l k] = [n k+l] + sum_i sum_r [n i][r-1 k][i-r l];
/// zero certifies the identity at (n, k, l). Brackets vanish outside range,
/// so any integer triple is meaningful.
inline Rational cubic_identity_defect(long n, long k, long l, const BracketTable& table) {
    Rational lhs = Rational(table.entry(n - k, l)) + Rational(table.entry(n - l, k));
    Rational rhs = Rational(table.entry(n, k + l));
    for (long i = 1; i <= n; ++i) {
        Integer ni = table.entry(n, i);
        if (ni == 0) continue;
        for (long r = 1; r <= i; ++r) {
            Integer a = table.entry(r - 1, k);
            if (a == 0) continue;
            Integer b = table.entry(i - r, l);
            if (b == 0) continue;
            rhs += Rational(ni * a * b);
        }
    }
    return lhs - rhs;
}

/// The series sum_i (-1)^{i-1} (E_{i-1}(lambda) - E_{i-1}(-lambda)) x^i with
/// E_{-1} := 0, truncated at N. Symplectic for every lambda.
inline TruncatedSeries lambda_series(const Rational& lambda, long n) {
    auto eulers = euler_polynomials(n >= 1 ? n - 1 : 0);
    TruncatedSeries r(n);
    long sign = 1;  // (-1)^{i-1} for i = 1
    for (long i = 1; i <= n; ++i) {
        const Polynomial& e = eulers[static_cast<size_t>(i - 1)];
        r.set_coeff(i, Rational(sign) * (e.evaluate(lambda) - e.evaluate(-lambda)));
        sign = -sign;
    }
    return r;
}

}  // namespace symp
