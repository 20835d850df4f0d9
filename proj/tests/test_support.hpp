// Shared test helpers: deterministic random generators and independent
// brute-force oracles. Everything here stays independent of the library code
// paths it is used to check.

#pragma once

#include <random>
#include <vector>

#include "symp/symplectic.hpp"

namespace symp::test {

class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen_);
    }

    Rational rational(long max_num = 9, long max_den = 9) {
        long num = integer(-max_num, max_num);
        long den = integer(1, max_den);
        return Rational(num) / Rational(den);
    }

    Rational nonzero_rational(long max_num = 9, long max_den = 9) {
        while (true) {
            Rational r = rational(max_num, max_den);
            if (r != 0) return r;
        }
    }

    TruncatedSeries series(long truncation, long max_num = 9, long max_den = 9) {
        TruncatedSeries s(truncation);
        for (long i = 0; i <= truncation; ++i) s.set_coeff(i, rational(max_num, max_den));
        return s;
    }

    Polynomial polynomial(long max_degree, long max_num = 9, long max_den = 9) {
        std::vector<Rational> c;
        long deg = integer(0, max_degree);
        for (long i = 0; i <= deg; ++i) c.push_back(rational(max_num, max_den));
        return Polynomial(std::move(c));
    }

    std::mt19937_64& raw() { return gen_; }

private:
    std::mt19937_64 gen_;
};

/// Composition oracle: treat both series as plain polynomials, substitute by
/// Horner with full polynomial arithmetic, and read the coefficients back.
/// Valid through the same guaranteed range as series_compose.
inline TruncatedSeries brute_compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    Polynomial inner_poly{std::vector<Rational>(inner.coeffs())};
    Polynomial acc;
    for (long k = outer.truncation(); k >= 0; --k)
        acc = acc * inner_poly + Polynomial(outer.coeff(k));
    auto val = inner.valuation();
    long v = val ? *val : inner.truncation() + 1;
    long safe = std::min(inner.truncation(), v * outer.truncation() + (v - 1));
    return TruncatedSeries::from_polynomial(acc, safe);
}

/// First violated constraint by direct S_m scan; nullopt when all supported
/// constraints hold.
inline std::optional<std::pair<long, Rational>> first_violation(const TruncatedSeries& f) {
    for (long m = 1; m <= max_constraint(f.truncation()); ++m) {
        Rational v = sm_value(f, m);
        if (v != 0) return std::make_pair(m, v);
    }
    return std::nullopt;
}

/// Random symplectic series of truncation 2K+1 via random even data.
inline TruncatedSeries random_symplectic(Rng& rng, long k, const BracketTable& table) {
    std::vector<Rational> evens;
    for (long i = 0; i <= k; ++i) evens.push_back(rng.rational());
    return complete_even(evens, k, table);
}

}  // namespace symp::test
