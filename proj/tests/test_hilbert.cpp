// Hilbert-series module: weight validation, the monomial-counting oracle,
// Molien series, rational reconstruction with guard validation, Gorenstein
// checks, and the full certification pipeline.

#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "symp/hilbert.hpp"
#include "test_support.hpp"

using namespace symp;
using symp::test::Rng;

namespace {

RationalFunction hilb_123() {
    std::vector<Rational> num(11, Rational(0));
    num[0] = 1;
    num[2] = 1;
    num[3] = 3;
    num[4] = 4;
    num[5] = 4;
    num[6] = 4;
    num[7] = 3;
    num[8] = 1;
    num[10] = 1;
    Polynomial den(Rational(1));
    for (long k = 2; k <= 5; ++k) {
        std::vector<Rational> f(static_cast<size_t>(k) + 1, Rational(0));
        f[0] = 1;
        f.back() = -1;
        den = den * Polynomial(std::move(f));
    }
    return RationalFunction(Polynomial(std::move(num)), std::move(den));
}

RationalFunction rho_123() {
    Polynomial num({Rational(22), Rational(50), Rational(59), Rational(36), Rational(10),
                    Rational(1)});
    Polynomial den = Polynomial{Rational(2), Rational(1)} * Polynomial{Rational(3), Rational(1)} *
                     Polynomial{Rational(4), Rational(1)} *
                     Polynomial{Rational(5), Rational(5), Rational(1)};
    return RationalFunction(num, den);
}

long euler_phi(long m) {
    long result = m, n = m;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

long moebius_mu(long m) {
    long mu = 1;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return 0;
            mu = -mu;
        }
    }
    if (m > 1) mu = -mu;
    return mu;
}

/// Ramanujan sum c_M(s) = mu(M/g) phi(M)/phi(M/g), g = gcd(s, M).
long ramanujan(long m, long s) {
    long g = std::gcd(((s % m) + m) % m, m);
    if (g == 0) g = m;
    long q = m / g;
    return moebius_mu(q) * (euler_phi(m) / euler_phi(q));
}

/// Independent Molien-average oracle: for each group element, the Molien term
/// 1/prod (1 - z^{e_j} t)(1 - z^{-e_j} t) is expanded as a product of
/// geometric series with coefficients tracked in the cyclic group ring
/// Z[u]/(u^M - 1); the group sum is then evaluated exactly via Ramanujan sums
/// (the sum over the group makes the class counts Galois-invariant).
std::vector<Integer> molien_average_oracle(const WeightMatrix& a, long n_trunc) {
    REQUIRE(a.finite());
    long ell = a.ell(), n = a.cols();
    const auto& moduli = *a.moduli;
    long big_m = 1;
    for (long long m : moduli) big_m = std::lcm(big_m, static_cast<long>(m));
    long order = 1;
    for (long long m : moduli) order *= static_cast<long>(m);

    // total[d][s]: number of (group element, monomial) pairs of degree d in class s
    std::vector<std::vector<Integer>> total(static_cast<size_t>(n_trunc) + 1,
                                            std::vector<Integer>(static_cast<size_t>(big_m), Integer(0)));
    std::vector<long> g(static_cast<size_t>(ell), 0);
    auto advance = [&]() {
        for (long r = 0; r < ell; ++r) {
            if (++g[static_cast<size_t>(r)] < moduli[static_cast<size_t>(r)]) return true;
            g[static_cast<size_t>(r)] = 0;
        }
        return false;
    };
    do {
        std::vector<std::vector<Integer>> term(static_cast<size_t>(n_trunc) + 1,
                                               std::vector<Integer>(static_cast<size_t>(big_m), Integer(0)));
        term[0][0] = 1;
        for (long j = 0; j < n; ++j) {
            long e = 0;
            for (long r = 0; r < ell; ++r)
                e += static_cast<long>(g[static_cast<size_t>(r)] * a.rows[static_cast<size_t>(r)][static_cast<size_t>(j)] %
                                       big_m * (big_m / moduli[static_cast<size_t>(r)]) % big_m);
            e = ((e % big_m) + big_m) % big_m;
            for (long exp : {e, (big_m - e) % big_m}) {
                // multiply by the geometric series sum_k u^{exp*k} t^k
                std::vector<std::vector<Integer>> next(
                    static_cast<size_t>(n_trunc) + 1,
                    std::vector<Integer>(static_cast<size_t>(big_m), Integer(0)));
                for (long d = 0; d <= n_trunc; ++d) {
                    long shift = 0;
                    for (long k = 0; k <= d; ++k) {
                        const auto& src = term[static_cast<size_t>(d - k)];
                        auto& dst = next[static_cast<size_t>(d)];
                        for (long s = 0; s < big_m; ++s) {
                            if (src[static_cast<size_t>(s)] != 0)
                                dst[static_cast<size_t>((s + shift) % big_m)] += src[static_cast<size_t>(s)];
                        }
                        shift = (shift + exp) % big_m;
                    }
                }
                term = std::move(next);
            }
        }
        for (long d = 0; d <= n_trunc; ++d)
            for (long s = 0; s < big_m; ++s)
                total[static_cast<size_t>(d)][static_cast<size_t>(s)] += term[static_cast<size_t>(d)][static_cast<size_t>(s)];
    } while (advance());

    std::vector<Integer> coeffs;
    long phi = euler_phi(big_m);
    for (long d = 0; d <= n_trunc; ++d) {
        Rational h = 0;
        for (long s = 0; s < big_m; ++s)
            h += Rational(total[static_cast<size_t>(d)][static_cast<size_t>(s)]) * Rational(ramanujan(big_m, s));
        h /= Rational(order) * Rational(phi);
        REQUIRE(denominator(h) == 1);
        coeffs.push_back(numerator(h));
    }
    return coeffs;
}

}  // namespace

TEST_CASE("validate_weights") {
    CHECK_NOTHROW(validate_weights(WeightMatrix::torus({{1, -1}})));
    CHECK_NOTHROW(validate_weights(WeightMatrix::torus({{1, -2, 3}})));
    CHECK_THROWS_AS(validate_weights(WeightMatrix::torus({{1, 2, 3}})), OriginNotInHull);
    CHECK_THROWS_AS(validate_weights(WeightMatrix::torus({{-1, -4}})), OriginNotInHull);
    CHECK_THROWS_AS(validate_weights(WeightMatrix::torus({{1, -1}, {0, 0}})), ZeroRow);
    CHECK_THROWS_AS(validate_weights(WeightMatrix::torus({{1, -1}, {2, -2}})), RankDeficient);
    CHECK_NOTHROW(validate_weights(WeightMatrix::torus({{1, 0, -1}, {0, 1, -1}})));
    WeightValidation v = validate_weights(WeightMatrix::torus({{1, -2, 3}}));
    CHECK(v.rank == 1);
    Rational sum = 0, dot = 0;
    std::vector<long long> w{1, -2, 3};
    for (const auto& [col, c] : v.hull_certificate) {
        CHECK(c >= 0);
        sum += c;
        dot += c * Rational(w[static_cast<size_t>(col)]);
    }
    CHECK(sum == 1);
    CHECK(dot == 0);
}

TEST_CASE("weight grammar") {
    WeightMatrix a = parse_weights("1,0,-1;0,1,-1");
    CHECK(a.ell() == 2);
    CHECK(a.cols() == 3);
    CHECK(!a.finite());
    WeightMatrix b = parse_weights("1,1", std::string("2"));
    CHECK(b.finite());
    CHECK_THROWS_AS(parse_weights("1,x"), ParseError);
    CHECK_THROWS_AS(parse_weights(""), ParseError);
    CHECK_THROWS_AS(parse_weights("1,2;3"), ParseError);
    CHECK_THROWS_AS(parse_weights("1,2", std::string("2,3")), ParseError);
    CHECK_THROWS_AS(parse_weights("1,2", std::string("0")), ParseError);
}

TEST_CASE("invariant_dimension examples") {
    WeightMatrix a = WeightMatrix::torus({{1, -1}});
    CHECK(invariant_dimension(a, 0) == 1);
    CHECK(invariant_dimension(a, 1) == 0);
    CHECK(invariant_dimension(a, 2) == 4);  // z1 zb1, z2 zb2, z1 z2, zb1 zb2
    WeightMatrix t = WeightMatrix::trivial(1);
    for (long d = 0; d <= 3; ++d) CHECK(invariant_dimension(t, d) == d + 1);
}

TEST_CASE("counting oracle matches naive exhaustive enumeration") {
    // walk all (alpha, beta) pairs outright; exponential, so kept tiny
    auto naive_count = [](const WeightMatrix& a, long degree) {
        long n = a.cols(), ell = a.ell();
        long total_slots = 2 * n;
        Integer count = 0;
        std::vector<long> e(static_cast<size_t>(total_slots), 0);
        std::function<void(long, long)> walk = [&](long slot, long rem) {
            if (slot == total_slots) {
                if (rem != 0) return;
                for (long r = 0; r < ell; ++r) {
                    long long w = 0;
                    for (long j = 0; j < n; ++j)
                        w += a.rows[static_cast<size_t>(r)][static_cast<size_t>(j)] *
                             (e[static_cast<size_t>(j)] - e[static_cast<size_t>(n + j)]);
                    if (a.finite()) {
                        if (w % (*a.moduli)[static_cast<size_t>(r)] != 0) return;
                    } else if (w != 0) {
                        return;
                    }
                }
                ++count;
                return;
            }
            for (long v = 0; v <= rem; ++v) {
                e[static_cast<size_t>(slot)] = v;
                walk(slot + 1, rem - v);
            }
            e[static_cast<size_t>(slot)] = 0;
        };
        walk(0, degree);
        return count;
    };
    std::vector<WeightMatrix> cases;
    cases.push_back(WeightMatrix::torus({{1, -1}}));
    cases.push_back(WeightMatrix::torus({{1, -2, 3}}));
    cases.push_back(WeightMatrix::torus({{2, -3}}));
    cases.push_back(WeightMatrix::torus({{1, 0, -1}, {0, 1, -1}}));
    cases.push_back(WeightMatrix::finite_abelian({{1, 2}}, {4}));
    for (const WeightMatrix& a : cases) {
        MonomialCounter counter(a);
        for (long d = 0; d <= 6; ++d) CHECK(counter.count(d) == naive_count(a, d));
    }
}

TEST_CASE("oracle symmetry under column negation and permutation") {
    Rng rng(101);
    for (int trial = 0; trial < 10; ++trial) {
        long n = rng.integer(2, 3);
        std::vector<std::vector<long long>> rows(1, std::vector<long long>(static_cast<size_t>(n)));
        for (long j = 0; j < n; ++j) rows[0][static_cast<size_t>(j)] = rng.integer(-3, 3);
        WeightMatrix a = WeightMatrix::torus(rows);
        auto negated_rows = rows;
        long flip = rng.integer(0, n - 1);
        negated_rows[0][static_cast<size_t>(flip)] = -negated_rows[0][static_cast<size_t>(flip)];
        WeightMatrix neg = WeightMatrix::torus(negated_rows);
        auto permuted_rows = rows;
        std::reverse(permuted_rows[0].begin(), permuted_rows[0].end());
        WeightMatrix perm = WeightMatrix::torus(permuted_rows);
        for (long d = 0; d <= 8; ++d) {
            Integer base = invariant_dimension(a, d);
            CHECK(base == invariant_dimension(neg, d));
            CHECK(base == invariant_dimension(perm, d));
        }
    }
}

TEST_CASE("hilbert_data examples") {
    HilbertData circle = hilbert_data(WeightMatrix::torus({{1, -1}}), 6);
    std::vector<long> expected = {1, 0, 3, 0, 5, 0, 7};
    for (long d = 0; d <= 6; ++d) CHECK(circle.quotient.coeff(d) == expected[static_cast<size_t>(d)]);
    CHECK(circle.quotient_dim == 2);

    HilbertData h123 = hilbert_data(WeightMatrix::torus({{1, -2, 3}}), 10);
    TruncatedSeries closed_form = hilb_123().taylor(10);
    CHECK(h123.quotient == closed_form);
    CHECK(h123.quotient_dim == 4);

    HilbertData trivial = hilbert_data(WeightMatrix::trivial(1), 3);
    for (long d = 0; d <= 3; ++d) {
        CHECK(trivial.invariant.coeff(d) == d + 1);
        CHECK(trivial.quotient.coeff(d) == d + 1);
    }
}

TEST_CASE("molien_finite examples") {
    WeightMatrix trivial = WeightMatrix::finite_abelian({{0}}, {1});
    TruncatedSeries ts = molien_finite(trivial, 5);
    for (long d = 0; d <= 5; ++d) CHECK(ts.coeff(d) == d + 1);

    WeightMatrix z2 = WeightMatrix::finite_abelian({{1}}, {2});
    TruncatedSeries s2 = molien_finite(z2, 6);
    std::vector<long> expected = {1, 0, 3, 0, 5, 0, 7};
    for (long d = 0; d <= 6; ++d) CHECK(s2.coeff(d) == expected[static_cast<size_t>(d)]);

    WeightMatrix z3 = WeightMatrix::finite_abelian({{1}}, {3});
    CHECK(molien_finite(z3, 2).coeff(2) == 1);  // only z zbar

    CHECK_THROWS_AS(molien_finite(WeightMatrix::finite_abelian({{1}}, {100}), 2, 50),
                    GroupTooLarge);
    CHECK_THROWS_AS(molien_finite(WeightMatrix::torus({{1, -1}}), 4), Error);
}

TEST_CASE("counting equals the Molien average (finite abelian, |G| <= 60)") {
    std::vector<WeightMatrix> cases;
    cases.push_back(WeightMatrix::finite_abelian({{1}}, {2}));
    cases.push_back(WeightMatrix::finite_abelian({{1}}, {3}));
    cases.push_back(WeightMatrix::finite_abelian({{1, 2}}, {4}));
    cases.push_back(WeightMatrix::finite_abelian({{1, 5}}, {6}));
    cases.push_back(WeightMatrix::finite_abelian({{1, 2, 3}}, {5}));
    cases.push_back(WeightMatrix::finite_abelian({{1, 1}, {0, 2}}, {2, 3}));
    cases.push_back(WeightMatrix::finite_abelian({{3, 7}}, {12}));
    cases.push_back(WeightMatrix::finite_abelian({{1, 0}, {1, 1}, {0, 1}}, {2, 2, 3}));
    cases.push_back(WeightMatrix::finite_abelian({{1, 9, 4}}, {60}));
    for (const WeightMatrix& a : cases) {
        long n_trunc = 7;
        TruncatedSeries counted = molien_finite(a, n_trunc);
        std::vector<Integer> averaged = molien_average_oracle(a, n_trunc);
        for (long d = 0; d <= n_trunc; ++d) CHECK(counted.coeff(d) == Rational(averaged[static_cast<size_t>(d)]));
    }
}

TEST_CASE("reconstruct_rational examples") {
    // odd numbers: (1+t^2)/(1-t^2)^2
    TruncatedSeries odds(18);
    for (long d = 0; d <= 18; d += 2) odds.set_coeff(d, Rational(d + 1));
    ReconstructionResult r = reconstruct_rational(odds, 2, 4);
    RationalFunction expected(Polynomial{Rational(1), Rational(0), Rational(1)},
                              Polynomial{Rational(1), Rational(0), Rational(-1)}.pow(2));
    CHECK(r.function == expected);
    CHECK(r.validated_through == 18);

    TruncatedSeries geometric(15);
    for (long d = 0; d <= 15; ++d) geometric.set_coeff(d, Rational(1));
    ReconstructionResult g = reconstruct_rational(geometric, 2, 2);
    CHECK(g.function ==
          RationalFunction(Polynomial(Rational(1)), Polynomial{Rational(1), Rational(-1)}));

    // the (+-1,+-2,+-3) quotient series from 41 oracle coefficients
    HilbertData data = hilbert_data(WeightMatrix::torus({{1, -2, 3}}), 40);
    ReconstructionResult h = reconstruct_rational(data.quotient, 14, 14);
    CHECK(h.function == hilb_123());
    CHECK(h.num_degree == 10);
    CHECK(h.den_degree == 14);

    CHECK_THROWS_AS(reconstruct_rational(odds, 8, 8), InsufficientTruncation);
}

TEST_CASE("reconstruction guard catches a perturbed oracle") {
    TruncatedSeries odds(20);
    for (long d = 0; d <= 20; d += 2) odds.set_coeff(d, Rational(d + 1));
    odds.set_coeff(19, odds.coeff(19) + 1);  // corrupt one guard coefficient
    CHECK_THROWS_AS(reconstruct_rational(odds, 3, 4), NoRationalFit);
}

TEST_CASE("gorenstein_checks examples") {
    // quotient of weights (1,-1): psi = (1+t^2)/(1-t^2)^2, d=2 -> a=-2, gamma1=0
    RationalFunction psi(Polynomial{Rational(1), Rational(0), Rational(1)},
                         Polynomial{Rational(1), Rational(0), Rational(-1)}.pow(2));
    GorensteinReport rep = gorenstein_checks(psi, 2);
    CHECK(rep.a_invariant == -2);
    CHECK(rep.gamma0 == Rational(1) / Rational(2));
    CHECK(rep.gamma1 == 0);
    REQUIRE(rep.a_from_gamma.has_value());
    CHECK(*rep.a_from_gamma == -2);
    CHECK(rep.symplectic_order_compatible);

    for (long d = 1; d <= 4; ++d) {
        RationalFunction geo(Polynomial(Rational(1)),
                             Polynomial{Rational(1), Rational(-1)}.pow(d));
        CHECK(gorenstein_checks(geo, d).a_invariant == -d);
    }

    // Gorenstein boundary: 1/((1-t)(1-t^2)) has a = -3 != -d for d = 2,
    // and fails symplectic certification
    RationalFunction boundary(
        Polynomial(Rational(1)),
        Polynomial{Rational(1), Rational(-1)} * Polynomial{Rational(1), Rational(0), Rational(-1)});
    GorensteinReport b = gorenstein_checks(boundary, 2);
    CHECK(b.a_invariant == -3);
    CHECK(!b.symplectic_order_compatible);
    REQUIRE(b.a_from_gamma.has_value());
    CHECK(*b.a_from_gamma == -3);
    CHECK_THROWS_AS(certify_at(boundary, Rational(1), 2, 10), NotSymplectic);

    // no functional equation at all: 1/(1-t) + t (not a Hilbert-type symmetry)
    RationalFunction skew =
        RationalFunction(Polynomial(Rational(1)), Polynomial{Rational(1), Rational(-1)}) +
        RationalFunction(Polynomial::monomial(3));
    CHECK_THROWS_AS(gorenstein_checks(skew, 1), NoFunctionalEquation);

    // pole order at 1 strictly below d: the gamma route is unavailable but the
    // functional equation still pins a = -2 (f_lambda satisfies
    // psi(1/t) = t^2 psi(t))
    Polynomial fden = Polynomial{Rational(1), Rational(-2)} *
                      Polynomial{Rational(1), Rational(-1) / Rational(2)};
    RationalFunction flam(Polynomial(Rational(1)), fden);
    GorensteinReport fl = gorenstein_checks(flam, 2);
    CHECK(fl.a_invariant == -2);
    CHECK(fl.gamma0 == 0);
    CHECK(!fl.a_from_gamma.has_value());
    CHECK(fl.symplectic_order_compatible);

    // wrong parity: d = 3 requires the ratio sign (-1)^3
    CHECK_THROWS_AS(gorenstein_checks(flam, 3), NoFunctionalEquation);
}

TEST_CASE("certify_conjecture on known closed-form examples") {
    ConjectureReport report = certify_conjecture(WeightMatrix::torus({{1, -2, 3}}), 40);
    CHECK(report.certified);
    CHECK(report.reconstruction.function == hilb_123());
    CHECK(report.gorenstein.a_invariant == -4);
    CHECK(report.certificate.order == 4);
    TruncatedSeries rho_expect = rho_123().taylor(report.certificate.rho.truncation());
    CHECK(report.certificate.rho == rho_expect);

    ConjectureReport circle = certify_conjecture(WeightMatrix::torus({{1, -1}}), 30);
    CHECK(circle.certified);
    CHECK(circle.gorenstein.a_invariant == -2);
    CHECK(circle.data.quotient_dim == 2);

    CHECK_THROWS_AS(certify_conjecture(WeightMatrix::torus({{1, 1}}), 30), OriginNotInHull);
}

TEST_CASE("all mixed-sign (1,2,3) patterns share one Hilbert series") {
    std::optional<TruncatedSeries> reference;
    for (int mask = 0; mask < 8; ++mask) {
        std::vector<long long> row = {1, 2, 3};
        for (int j = 0; j < 3; ++j)
            if (mask & (1 << j)) row[static_cast<size_t>(j)] = -row[static_cast<size_t>(j)];
        WeightMatrix a = WeightMatrix::torus({row});
        bool mixed = (mask != 0 && mask != 7);
        if (!mixed) {
            CHECK_THROWS_AS(validate_weights(a), OriginNotInHull);
            continue;
        }
        CHECK_NOTHROW(validate_weights(a));
        HilbertData data = hilbert_data(a, 16);
        if (!reference)
            reference = data.quotient;
        else
            CHECK(data.quotient == *reference);
    }
}

TEST_CASE("rank-2 torus: functional equation and certification") {
    WeightMatrix a = parse_weights("1,0,-1;0,1,-1");
    ConjectureReport report = certify_conjecture(a, 36);
    CHECK(report.certified);
    CHECK(report.data.quotient_dim == 2);
    CHECK(report.gorenstein.a_invariant == -2);
    // frozen from the oracle run: Hilb = (1 - t + t^2)/((1-t)(1-t^3)),
    // rho = (1+y)/(3+y)
    RationalFunction expected(
        Polynomial{Rational(1), Rational(-1), Rational(1)},
        Polynomial{Rational(1), Rational(-1)} *
            Polynomial{Rational(1), Rational(0), Rational(0), Rational(-1)});
    CHECK(report.reconstruction.function == expected);
    RationalFunction rho(Polynomial{Rational(1), Rational(1)}, Polynomial{Rational(3), Rational(1)});
    CHECK(report.certificate.rho == rho.taylor(report.certificate.rho.truncation()));
}

TEST_CASE("finite abelian route through the pipeline") {
    // Z_2 acting by -1 on C: quotient = invariant ring series, d = 2n = 2
    ConjectureReport report = certify_conjecture(WeightMatrix::finite_abelian({{1}}, {2}), 30);
    CHECK(report.certified);
    CHECK(report.data.quotient_dim == 2);
    RationalFunction expected(Polynomial{Rational(1), Rational(0), Rational(1)},
                              Polynomial{Rational(1), Rational(0), Rational(-1)}.pow(2));
    CHECK(report.reconstruction.function == expected);

    // Z_3 weight 1: invariants C[z zbar, z^3, zbar^3], one relation in degree 6
    ConjectureReport z3 = certify_conjecture(WeightMatrix::finite_abelian({{1}}, {3}), 30);
    CHECK(z3.certified);
    CHECK(z3.gorenstein.a_invariant == -2);
    Polynomial num{Rational(1), Rational(0), Rational(0), Rational(1)};  // 1 + t^3
    Polynomial den = Polynomial{Rational(1), Rational(0), Rational(-1)} *
                     Polynomial{Rational(1), Rational(0), Rational(0), Rational(-1)};
    CHECK(z3.reconstruction.function == RationalFunction(num, den));
}
