// symp: exact arithmetic for symplectic power series and Hilbert series.
//
// Rational functions P/Q in canonical form: gcd(P,Q) = 1 and Q monic, so
// equality is decidable by coefficient comparison. Expansions at a point a
// are always in powers of (a - t), realized by the substitution t = a - x.

#pragma once

#include <optional>
#include <string>
#include <utility>

#include "symp/series.hpp"

namespace symp {

class RationalFunction {
public:
    /// Zero function 0/1.
    RationalFunction() : den_{Rational(1)} {}

    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw ParseError("rational function with zero denominator");
        canonicalize();
    }

    explicit RationalFunction(const Polynomial& p) : num_(p), den_{Rational(1)} {}
    explicit RationalFunction(const Rational& c) : num_{Rational(c)}, den_{Rational(1)} {}

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw ParseError("division by the zero rational function");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;  // canonical forms
    }

    /// Integer power; negative exponents invert (nonzero function required).
    RationalFunction pow(long e) const {
        if (e >= 0) return RationalFunction(num_.pow(e), den_.pow(e));
        if (is_zero()) throw ParseError("negative power of the zero function");
        return RationalFunction(den_.pow(-e), num_.pow(-e));
    }

    std::optional<Rational> evaluate(const Rational& t) const {
        Rational d = den_.evaluate(t);
        if (d == 0) return std::nullopt;
        return num_.evaluate(t) / d;
    }

    /// psi(u/v) for polynomials u, v: denominators cleared exactly.
    /// Throws DegenerateSubstitution when u/v is constant.
    RationalFunction substitute(const Polynomial& u, const Polynomial& v) const {
        if (v.is_zero()) throw DegenerateSubstitution("substitution with zero denominator");
        RationalFunction target(u, v);
        bool target_constant = *target.den().degree() == 0 &&
                               (target.num().is_zero() || *target.num().degree() == 0);
        if (target_constant) throw DegenerateSubstitution("substitution target is constant");
        long dn = num_.degree().value_or(0);
        long dd = *den_.degree();
        long d = std::max(dn, dd);
        Polynomial pn, pd;
        // sum_k c_k u^k v^{d-k}, with the same clearing power d for num and den
        std::vector<Polynomial> upow(static_cast<size_t>(d) + 1), vpow(static_cast<size_t>(d) + 1);
        upow[0] = Polynomial(Rational(1));
        vpow[0] = Polynomial(Rational(1));
        for (long k = 1; k <= d; ++k) {
            upow[k] = upow[k - 1] * u;
            vpow[k] = vpow[k - 1] * v;
        }
        for (long k = 0; k <= d; ++k) {
            if (num_.coeff(k) != 0) pn = pn + num_.coeff(k) * (upow[k] * vpow[d - k]);
            if (den_.coeff(k) != 0) pd = pd + den_.coeff(k) * (upow[k] * vpow[d - k]);
        }
        return RationalFunction(std::move(pn), std::move(pd));
    }

    /// Taylor coefficients at t = 0 through t^N. Throws PoleOrderExceeded when
    /// the function has a pole at 0.
    TruncatedSeries taylor(long n) const {
        return expand_shifted(num_, den_, 0, n);
    }

    std::string str(const std::string& var = "t") const {
        if (den_ == Polynomial(Rational(1))) return num_.str(var);
        return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
    }

    /// Shared expansion kernel: coefficients of x^d * (pn/pd)(x) through x^N,
    /// where pn/pd may have a pole of order <= d at x = 0.
    static TruncatedSeries expand_shifted(const Polynomial& pn, const Polynomial& pd, long d, long n) {
        if (pn.is_zero()) return TruncatedSeries(n);
        long vn = *pn.valuation();
        long vd = *pd.valuation();
        long shift = d + vn - vd;
        if (shift < 0) throw PoleOrderExceeded(vd - vn, d);
        // strip x^vn, x^vd and series-divide the unit parts
        std::vector<Rational> nu(pn.coeffs().begin() + vn, pn.coeffs().end());
        std::vector<Rational> du(pd.coeffs().begin() + vd, pd.coeffs().end());
        TruncatedSeries r(n);
        std::vector<Rational> c(static_cast<size_t>(n) + 1, Rational(0));
        for (long i = 0; i + shift <= n; ++i) {
            Rational s = static_cast<size_t>(i) < nu.size() ? nu[static_cast<size_t>(i)] : Rational(0);
            for (long j = 1; j <= i && static_cast<size_t>(j) < du.size(); ++j) s -= du[static_cast<size_t>(j)] * c[static_cast<size_t>(i - j)];
            c[static_cast<size_t>(i)] = s / du[0];
            r.set_coeff(i + shift, c[static_cast<size_t>(i)]);
        }
        return r;
    }

private:
    void canonicalize() {
        if (num_.is_zero()) {
            den_ = Polynomial(Rational(1));
            return;
        }
        Polynomial g = Polynomial::gcd(num_, den_);
        if (g.degree() > std::optional<long>(0L)) {
            num_ = Polynomial::divmod(num_, g).first;
            den_ = Polynomial::divmod(den_, g).first;
        }
        Rational lead = den_.leading();
        if (lead != 1) {
            Rational inv = Rational(1) / lead;
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }

    Polynomial num_;
    Polynomial den_;
};

/// Laurent-type expansion data of psi at t = a: the coefficients of the formal
/// power series x^d psi(a - x) through x^N. When a = 1 these are the gamma_i of
/// Hilb(t) = sum_i gamma_i / (1-t)^{d-i}.
struct LaurentExpansion {
    Rational point;
    long pole_order;
    TruncatedSeries coeffs;

    /// Requested order minus the expansion valuation; equals the actual pole
    /// order at the point. nullopt when the function vanishes through N.
    std::optional<long> minimal_order() const {
        auto v = coeffs.valuation();
        if (!v) return std::nullopt;
        return pole_order - *v;
    }
};

/// Coefficients of x^d psi(a-x) through x^N.
/// Requires the pole order of psi at t=a to be at most d.
inline LaurentExpansion ratfun_expand_at(const RationalFunction& psi, const Rational& a, long d,
                                         long n) {
    Polynomial pn = psi.num().shift_reflect(a);
    Polynomial pd = psi.den().shift_reflect(a);
    return LaurentExpansion{a, d, RationalFunction::expand_shifted(pn, pd, d, n)};
}

}  // namespace symp
