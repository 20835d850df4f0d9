// symp: exact arithmetic for symplectic power series and Hilbert series.
//
// Dense univariate polynomials over Q, ascending coefficient order,
// trailing zeros stripped. The zero polynomial has no stored coefficients
// and its degree is a distinguished "minus infinity" (std::nullopt), which
// keeps degree bookkeeping like q = deg Q - deg P honest.

#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symp/rational.hpp"

namespace symp {

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Rational constant) {
        if (constant != 0) coeffs_.push_back(std::move(constant));
    }
    explicit Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) {
        normalize();
    }
    Polynomial(std::initializer_list<Rational> ascending) : coeffs_(ascending) { normalize(); }

    static Polynomial monomial(long degree, Rational coeff = Rational(1)) {
        if (coeff == 0) return {};
        std::vector<Rational> c(static_cast<size_t>(degree) + 1, Rational(0));
        c.back() = std::move(coeff);
        return Polynomial(std::move(c));
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// nullopt encodes the degree of the zero polynomial.
    std::optional<long> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return static_cast<long>(coeffs_.size()) - 1;
    }

    const Rational& coeff(long i) const {
        static const Rational zero(0);
        if (i < 0 || static_cast<size_t>(i) >= coeffs_.size()) return zero;
        return coeffs_[static_cast<size_t>(i)];
    }

    const Rational& leading() const {
        assert(!coeffs_.empty());
        return coeffs_.back();
    }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    /// Index of the lowest nonzero coefficient; nullopt for the zero polynomial.
    std::optional<long> valuation() const {
        for (size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return static_cast<long>(i);
        return std::nullopt;
    }

    Rational evaluate(const Rational& x) const {
        Rational r = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
        return Polynomial(std::move(c));
    }

    Polynomial operator-() const {
        std::vector<Rational> c(coeffs_);
        for (auto& v : c) v = -v;
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                if (b.coeffs_[j] != 0) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Rational& s, const Polynomial& p) {
        if (s == 0) return {};
        std::vector<Rational> c(p.coeffs_);
        for (auto& v : c) v *= s;
        return Polynomial(std::move(c));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    Polynomial pow(long e) const {
        assert(e >= 0);
        Polynomial r{Rational(1)}, b = *this;
        for (long k = e; k > 0; k >>= 1) {
            if (k & 1) r = r * b;
            if (k > 1) b = b * b;
        }
        return r;
    }

    /// Euclidean division: returns (quotient, remainder) with deg r < deg b.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        assert(!b.is_zero());
        Polynomial r = a;
        std::vector<Rational> q;
        long db = *b.degree();
        while (!r.is_zero() && *r.degree() >= db) {
            long shift = *r.degree() - db;
            Rational f = r.leading() / b.leading();
            if (static_cast<size_t>(shift) >= q.size()) q.resize(static_cast<size_t>(shift) + 1, Rational(0));
            q[static_cast<size_t>(shift)] += f;
            std::vector<Rational> rc(r.coeffs_);
            for (size_t i = 0; i < b.coeffs_.size(); ++i)
                rc[static_cast<size_t>(shift) + i] -= f * b.coeffs_[i];
            r = Polynomial(std::move(rc));
        }
        return {Polynomial(std::move(q)), std::move(r)};
    }

    /// Monic gcd (Euclid); gcd(0,0) = 0.
    static Polynomial gcd(Polynomial a, Polynomial b) {
        while (!b.is_zero()) {
            Polynomial r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        if (!a.is_zero() && a.leading() != 1) a = (Rational(1) / a.leading()) * a;
        return a;
    }

    /// this(inner) by Horner.
    Polynomial compose(const Polynomial& inner) const {
        Polynomial r;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            r = r * inner + Polynomial(*it);
        return r;
    }

    /// p(a - x), the reflection used for expansions at a.
    Polynomial shift_reflect(const Rational& a) const {
        return compose(Polynomial({a, Rational(-1)}));
    }

    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string s;
        for (long i = *degree(); i >= 0; --i) {
            const Rational& c = coeff(i);
            if (c == 0) continue;
            if (!s.empty()) s += c > 0 ? " + " : " - ";
            else if (c < 0) s += "-";
            Rational ac = abs(c);
            bool unit = (ac == 1 && i != 0);
            if (!unit) s += to_string(ac);
            if (i > 0) {
                if (!unit) s += "*";
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

}  // namespace symp
