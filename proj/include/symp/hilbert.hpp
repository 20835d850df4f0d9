// symp: exact arithmetic for symplectic power series and Hilbert series.
//
// Hilbert series of invariant rings and symplectic quotients for diagonal
// torus and finite abelian weight actions. The coefficient oracle counts
// invariant monomials by a pruned, memoized lattice recursion; rational
// functions are recovered from the oracle by exact linear fitting with guard
// validation, then pushed through the Gorenstein functional equation and the
// symplectic certification pipeline.

#pragma once

#include <algorithm>
#include <cctype>
#include <cstring>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "symp/symplectic.hpp"

namespace symp {

/// An l x n integer weight matrix; moduli (one per row, all present or none)
/// turn rows into finite cyclic factors Z_m instead of circle factors.
struct WeightMatrix {
    std::vector<std::vector<long long>> rows;
    std::optional<std::vector<long long>> moduli;
    long n_cols = 0;

    long ell() const { return static_cast<long>(rows.size()); }
    long cols() const { return n_cols; }
    bool finite() const { return moduli.has_value(); }

    static WeightMatrix torus(std::vector<std::vector<long long>> rows) {
        WeightMatrix a;
        a.n_cols = rows.empty() ? 0 : static_cast<long>(rows.front().size());
        for (const auto& r : rows)
            if (static_cast<long>(r.size()) != a.n_cols) throw ParseError("ragged weight matrix");
        a.rows = std::move(rows);
        return a;
    }

    static WeightMatrix finite_abelian(std::vector<std::vector<long long>> rows,
                                       std::vector<long long> moduli) {
        WeightMatrix a = torus(std::move(rows));
        if (moduli.size() != a.rows.size())
            throw ParseError("moduli count must match weight rows");
        for (long long m : moduli)
            if (m < 1) throw ParseError("moduli must be positive");
        a.moduli = std::move(moduli);
        return a;
    }

    /// Trivial group acting on C^n (no constraints at all).
    static WeightMatrix trivial(long n) {
        WeightMatrix a;
        a.n_cols = n;
        return a;
    }
};

/// Weight grammar: rows separated by ';', entries by ','  (e.g. "1,0,-1;0,1,-1").
inline WeightMatrix parse_weights(const std::string& text,
                                  const std::optional<std::string>& moduli_text = std::nullopt) {
    auto parse_ints = [](const std::string& s) {
        std::vector<long long> out;
        std::string item;
        std::istringstream in(s);
        while (std::getline(in, item, ',')) {
            size_t pos = 0;
            long long v = 0;
            try {
                v = std::stoll(item, &pos);
            } catch (const std::exception&) {
                throw ParseError("bad integer \"" + item + "\" in weight input");
            }
            while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
            if (pos != item.size()) throw ParseError("bad integer \"" + item + "\" in weight input");
            out.push_back(v);
        }
        if (out.empty()) throw ParseError("empty weight row");
        return out;
    };
    std::vector<std::vector<long long>> rows;
    std::string row;
    std::istringstream in(text);
    while (std::getline(in, row, ';')) rows.push_back(parse_ints(row));
    if (rows.empty()) throw ParseError("empty weight matrix");
    if (!moduli_text) return WeightMatrix::torus(std::move(rows));
    return WeightMatrix::finite_abelian(std::move(rows), parse_ints(*moduli_text));
}

namespace detail {

/// Gaussian elimination over Q on the augmented system (matrix | rhs).
/// Returns a particular solution (free variables zero), or nullopt when the
/// system is inconsistent.
inline std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> m,
                                                         std::vector<Rational> rhs) {
    size_t n_rows = m.size();
    size_t n_cols = n_rows == 0 ? 0 : m.front().size();
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < n_cols && r < n_rows; ++c) {
        size_t pr = r;
        while (pr < n_rows && m[pr][c] == 0) ++pr;
        if (pr == n_rows) continue;
        std::swap(m[pr], m[r]);
        std::swap(rhs[pr], rhs[r]);
        Rational inv = Rational(1) / m[r][c];
        for (size_t j = c; j < n_cols; ++j) m[r][j] *= inv;
        rhs[r] *= inv;
        for (size_t i = 0; i < n_rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (size_t j = c; j < n_cols; ++j) m[i][j] -= f * m[r][j];
            rhs[i] -= f * rhs[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (size_t i = r; i < n_rows; ++i)
        if (rhs[i] != 0) return std::nullopt;
    std::vector<Rational> x(n_cols, Rational(0));
    for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = rhs[i];
    return x;
}

inline long rational_rank(std::vector<std::vector<Rational>> m) {
    long rank = 0;
    size_t n_rows = m.size();
    size_t n_cols = n_rows == 0 ? 0 : m.front().size();
    size_t r = 0;
    for (size_t c = 0; c < n_cols && r < n_rows; ++c) {
        size_t pr = r;
        while (pr < n_rows && m[pr][c] == 0) ++pr;
        if (pr == n_rows) continue;
        std::swap(m[pr], m[r]);
        for (size_t i = r + 1; i < n_rows; ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] / m[r][c];
            for (size_t j = c; j < n_cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
        ++rank;
    }
    return rank;
}

}  // namespace detail

struct WeightValidation {
    long rank = 0;
    /// Columns and convex coefficients witnessing 0 in the hull (torus case).
    std::vector<std::pair<long, Rational>> hull_certificate;
};

/// Torus case: every row nonzero, rank = l (exact elimination), and 0 in the
/// convex hull of the columns (Caratheodory enumeration over subsets of at
/// most l+1 affinely independent columns, each solved exactly).
/// Finite case: moduli are validated by construction; nothing further.
inline WeightValidation validate_weights(const WeightMatrix& a) {
    WeightValidation result;
    if (a.finite()) return result;
    long ell = a.ell(), n = a.cols();
    for (long r = 0; r < ell; ++r) {
        bool nonzero = false;
        for (long j = 0; j < n; ++j) nonzero |= a.rows[static_cast<size_t>(r)][static_cast<size_t>(j)] != 0;
        if (!nonzero) throw ZeroRow("weight row " + std::to_string(r + 1) + " is zero");
    }
    if (ell == 0) return result;

    std::vector<std::vector<Rational>> m(static_cast<size_t>(ell),
                                         std::vector<Rational>(static_cast<size_t>(n)));
    for (long r = 0; r < ell; ++r)
        for (long j = 0; j < n; ++j) m[static_cast<size_t>(r)][static_cast<size_t>(j)] = a.rows[static_cast<size_t>(r)][static_cast<size_t>(j)];
    result.rank = detail::rational_rank(m);
    if (result.rank != ell)
        throw RankDeficient("weight matrix rank " + std::to_string(result.rank) +
                            " < " + std::to_string(ell));

    // enumerate column subsets of size <= ell+1
    long max_size = std::min<long>(ell + 1, n);
    std::vector<long> subset;
    auto try_subset = [&](const std::vector<long>& cols) -> bool {
        size_t k = cols.size();
        // affine system: rows of A over the subset, plus the all-ones row
        std::vector<std::vector<Rational>> sys(static_cast<size_t>(ell) + 1,
                                               std::vector<Rational>(k));
        std::vector<Rational> rhs(static_cast<size_t>(ell) + 1, Rational(0));
        for (long r = 0; r < ell; ++r)
            for (size_t j = 0; j < k; ++j)
                sys[static_cast<size_t>(r)][j] = a.rows[static_cast<size_t>(r)][static_cast<size_t>(cols[j])];
        for (size_t j = 0; j < k; ++j) sys[static_cast<size_t>(ell)][j] = 1;
        rhs[static_cast<size_t>(ell)] = 1;
        if (detail::rational_rank(sys) != static_cast<long>(k)) return false;  // affinely dependent
        auto sol = detail::solve_linear(sys, rhs);
        if (!sol) return false;
        for (const Rational& c : *sol)
            if (c < 0) return false;
        for (size_t j = 0; j < k; ++j) result.hull_certificate.emplace_back(cols[j], (*sol)[j]);
        return true;
    };
    std::vector<long> cols;
    std::function<bool(long, long)> enumerate = [&](long start, long remaining) -> bool {
        if (remaining == 0) return try_subset(cols);
        for (long j = start; j <= n - remaining; ++j) {
            cols.push_back(j);
            if (enumerate(j + 1, remaining - 1)) return true;
            cols.pop_back();
        }
        return false;
    };
    for (long size = 1; size <= max_size; ++size)
        if (enumerate(0, size)) return result;
    throw OriginNotInHull("0 is not in the convex hull of the weight columns");
}

/// Exact count of invariant monomials of the given total degree: pairs
/// (alpha, beta) in N^n x N^n with |alpha| + |beta| = degree and
/// A(alpha - beta) = 0 (== 0 mod moduli for finite rows).
///
/// Depth-first over the 2n exponent slots with memoization keyed on
/// (slot, remaining degree, residual weight vector); torus branches are
/// pruned when the residual weight cannot be cancelled by the remaining
/// slots. The memo is reusable across degrees, so batch callers should hold
/// one counter.
class MonomialCounter {
public:
    explicit MonomialCounter(const WeightMatrix& a)
        : ell_(a.ell()), moduli_(a.moduli) {
        long n = a.cols();
        slots_.reserve(static_cast<size_t>(2 * n));
        for (long j = 0; j < n; ++j) {
            std::vector<long long> w(static_cast<size_t>(ell_));
            for (long r = 0; r < ell_; ++r) w[static_cast<size_t>(r)] = a.rows[static_cast<size_t>(r)][static_cast<size_t>(j)];
            slots_.push_back(w);
        }
        for (long j = 0; j < n; ++j) {
            std::vector<long long> w = slots_[static_cast<size_t>(j)];
            for (auto& v : w) v = -v;
            slots_.push_back(std::move(w));
        }
        if (moduli_)
            for (auto& slot : slots_)
                for (long r = 0; r < ell_; ++r)
                    slot[static_cast<size_t>(r)] = normalize_mod(slot[static_cast<size_t>(r)], (*moduli_)[static_cast<size_t>(r)]);
        // max |weight| over the tail of slots, per row; used for pruning
        tail_max_.assign(slots_.size() + 1, std::vector<long long>(static_cast<size_t>(ell_), 0));
        for (size_t s = slots_.size(); s-- > 0;) {
            for (long r = 0; r < ell_; ++r)
                tail_max_[s][static_cast<size_t>(r)] =
                    std::max(tail_max_[s + 1][static_cast<size_t>(r)], std::abs(slots_[s][static_cast<size_t>(r)]));
        }
    }

    Integer count(long degree) {
        std::vector<long long> w(static_cast<size_t>(ell_), 0);
        return rec(0, degree, w);
    }

private:
    static long long normalize_mod(long long v, long long m) {
        long long r = v % m;
        return r < 0 ? r + m : r;
    }

    Integer rec(size_t slot, long rem, std::vector<long long>& w) {
        if (slot == slots_.size()) {
            if (rem != 0) return 0;
            for (long long v : w)
                if (v != 0) return 0;
            return 1;
        }
        if (!moduli_) {
            for (long r = 0; r < ell_; ++r)
                if (std::abs(w[static_cast<size_t>(r)]) > rem * tail_max_[slot][static_cast<size_t>(r)]) return 0;
        }
        std::string key = pack_key(slot, rem, w);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        Integer total = 0;
        std::vector<long long> w2 = w;
        for (long e = 0; e <= rem; ++e) {
            if (e > 0) {
                for (long r = 0; r < ell_; ++r) {
                    w2[static_cast<size_t>(r)] += slots_[slot][static_cast<size_t>(r)];
                    if (moduli_) w2[static_cast<size_t>(r)] = normalize_mod(w2[static_cast<size_t>(r)], (*moduli_)[static_cast<size_t>(r)]);
                }
            }
            total += rec(slot + 1, rem - e, w2);
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

    std::string pack_key(size_t slot, long rem, const std::vector<long long>& w) const {
        std::string key(sizeof(long long) * (w.size() + 2), '\0');
        long long header[2] = {static_cast<long long>(slot), rem};
        std::memcpy(key.data(), header, sizeof(header));
        if (!w.empty())
            std::memcpy(key.data() + sizeof(header), w.data(), sizeof(long long) * w.size());
        return key;
    }

    long ell_;
    std::optional<std::vector<long long>> moduli_;
    std::vector<std::vector<long long>> slots_;
    std::vector<std::vector<long long>> tail_max_;
    std::unordered_map<std::string, Integer> memo_;
};

inline Integer invariant_dimension(const WeightMatrix& a, long degree) {
    return MonomialCounter(a).count(degree);
}

struct HilbertData {
    TruncatedSeries invariant;  // Hilb of R[V]^G
    TruncatedSeries quotient;   // Hilb of R[M_0]
    long ell = 0;
    long n = 0;
    long quotient_dim = 0;  // 2(n - l) for a torus; 2n for a finite group (Z = V)
};

/// Both Hilbert series through t^N. The quotient series is
/// (1 - t^2)^l * invariant for a torus (the moment map components form a
/// regular sequence), and equals the invariant series for a finite group.
inline HilbertData hilbert_data(const WeightMatrix& a, long n_trunc) {
    MonomialCounter counter(a);
    TruncatedSeries invariant(n_trunc);
    for (long d = 0; d <= n_trunc; ++d) invariant.set_coeff(d, Rational(counter.count(d)));
    TruncatedSeries quotient = invariant;
    if (!a.finite()) {
        Polynomial one_minus_t2({Rational(1), Rational(0), Rational(-1)});
        for (long r = 0; r < a.ell(); ++r) quotient = one_minus_t2 * quotient;
    }
    for (long d = 0; d <= n_trunc; ++d) {
        const Rational& c = quotient.coeff(d);
        if (c < 0 || denominator(c) != 1)
            throw NegativeCoefficient("quotient coefficient at degree " + std::to_string(d) +
                                      " is " + to_string(c));
    }
    long dim = a.finite() ? 2 * a.cols() : 2 * (a.cols() - a.ell());
    return HilbertData{std::move(invariant), std::move(quotient), a.ell(), a.cols(), dim};
}

/// Molien Hilbert series of a finite abelian group given by weights mod
/// moduli, through t^N. Computed by monomial counting with modular weight
/// conditions (equal to the Molien average by character orthogonality; the
/// test suite checks that equality against an independent group-sum route).
inline TruncatedSeries molien_finite(const WeightMatrix& a, long n_trunc,
                                     long long group_bound = 1000000) {
    if (!a.finite()) throw Error("molien_finite requires moduli");
    long long order = 1;
    for (long long m : *a.moduli) {
        order *= m;
        if (order > group_bound)
            throw GroupTooLarge("group order exceeds bound " + std::to_string(group_bound));
    }
    MonomialCounter counter(a);
    TruncatedSeries s(n_trunc);
    for (long d = 0; d <= n_trunc; ++d) s.set_coeff(d, Rational(counter.count(d)));
    return s;
}

struct ReconstructionResult {
    RationalFunction function;
    long num_degree = 0;  // actual canonical degrees of the reconstructed function
    long den_degree = 0;
    long validated_through = 0;
};

namespace detail {

/// One Pade-style fit: find Q (deg <= q, Q(0) = 1) and P (deg <= p) with
/// Q * S = P mod t^{p+q+1}; returns the canonical P/Q or nullopt.
inline std::optional<RationalFunction> pade_fit(const TruncatedSeries& oracle, long p, long q) {
    auto s_at = [&](long i) { return i < 0 ? Rational(0) : oracle.coeff(i); };
    std::vector<std::vector<Rational>> m;
    std::vector<Rational> rhs;
    for (long row = p + 1; row <= p + q; ++row) {
        std::vector<Rational> eq(static_cast<size_t>(q));
        for (long j = 1; j <= q; ++j) eq[static_cast<size_t>(j - 1)] = s_at(row - j);
        m.push_back(std::move(eq));
        rhs.push_back(-s_at(row));
    }
    auto sol = solve_linear(std::move(m), std::move(rhs));
    if (!sol) return std::nullopt;
    std::vector<Rational> qc(static_cast<size_t>(q) + 1, Rational(0));
    qc[0] = 1;
    for (long j = 1; j <= q; ++j) qc[static_cast<size_t>(j)] = (*sol)[static_cast<size_t>(j - 1)];
    Polynomial qpoly(std::move(qc));
    // P = (Q*S) truncated to degree p
    std::vector<Rational> pc(static_cast<size_t>(p) + 1, Rational(0));
    for (long i = 0; i <= p; ++i) {
        Rational acc = 0;
        for (long j = 0; j <= std::min(i, q); ++j) acc += qpoly.coeff(j) * s_at(i - j);
        pc[static_cast<size_t>(i)] = std::move(acc);
    }
    return RationalFunction(Polynomial(std::move(pc)), std::move(qpoly));
}

}  // namespace detail

/// Recover a rational function from oracle Taylor coefficients. Degree pairs
/// start at (4,4) and double (clamped to the given maxima) until the
/// reconstruction reproduces every oracle coefficient; the coefficients beyond
/// the fitting window act as guard digits (at least `guard` of them, enforced
/// as a precondition on the oracle truncation).
inline ReconstructionResult reconstruct_rational(const TruncatedSeries& oracle, long max_num_deg,
                                                 long max_den_deg, long guard = 10) {
    long n = oracle.truncation();
    if (n < max_num_deg + max_den_deg + 1 + guard)
        throw InsufficientTruncation(max_num_deg + max_den_deg + 1 + guard, n);
    long p = std::min<long>(4, max_num_deg), q = std::min<long>(4, max_den_deg);
    while (true) {
        if (auto fit = detail::pade_fit(oracle, p, q)) {
            TruncatedSeries check = fit->taylor(n);
            if (check.coeffs() == oracle.coeffs()) {
                long dp = fit->num().degree().value_or(0);
                long dq = fit->den().degree().value_or(0);
                return ReconstructionResult{std::move(*fit), dp, dq, n};
            }
        }
        if (p == max_num_deg && q == max_den_deg) break;
        p = std::min(2 * p, max_num_deg);
        q = std::min(2 * q, max_den_deg);
    }
    throw NoRationalFit(max_num_deg + max_den_deg);
}

struct GorensteinReport {
    long a_invariant = 0;
    long dim = 0;
    Rational gamma0;
    Rational gamma1;
    std::optional<Rational> a_from_gamma;  // -2 gamma1/gamma0 - d when gamma0 != 0
    bool symplectic_order_compatible = false;  // a(R) == -d
};

/// Stanley's functional equation: finds the unique integer a with
/// psi(1/t) = (-1)^d t^{-a} psi(t) (throws NoFunctionalEquation otherwise),
/// and cross-checks it against a = -2 gamma1/gamma0 - d from the expansion at
/// t = 1 whenever the pole order there is exactly d.
inline GorensteinReport gorenstein_checks(const RationalFunction& psi, long d) {
    if (psi.is_zero()) throw Error("gorenstein_checks requires a nonzero function");
    RationalFunction inverted =
        psi.substitute(Polynomial(Rational(1)), Polynomial::monomial(1));
    RationalFunction ratio = inverted / psi;
    auto monomial_degree = [](const Polynomial& poly) -> std::optional<long> {
        auto deg = poly.degree();
        if (!deg) return std::nullopt;
        if (poly.valuation() != deg) return std::nullopt;
        return deg;
    };
    auto jn = monomial_degree(ratio.num());
    auto jd = monomial_degree(ratio.den());
    if (!jn || !jd)
        throw NoFunctionalEquation("psi(1/t)/psi(t) is not a monomial");
    Rational c = ratio.num().leading();  // den is monic
    Rational expected_sign = d % 2 == 0 ? Rational(1) : Rational(-1);
    if (c != expected_sign)
        throw NoFunctionalEquation("sign of psi(1/t)/psi(t) is not (-1)^d");
    GorensteinReport report;
    report.dim = d;
    report.a_invariant = static_cast<long>(*jd - *jn);

    LaurentExpansion expansion = ratfun_expand_at(psi, Rational(1), d, 4);
    report.gamma0 = expansion.coeffs.coeff(0);
    report.gamma1 = expansion.coeffs.coeff(1);
    if (report.gamma0 != 0) {
        report.a_from_gamma = Rational(-2) * report.gamma1 / report.gamma0 - d;
        if (*report.a_from_gamma != report.a_invariant)
            throw VerdictMismatch("a-invariant routes disagree");
    }
    report.symplectic_order_compatible = report.a_invariant == -d;
    return report;
}

struct ConjectureReport {
    HilbertData data;
    ReconstructionResult reconstruction;
    GorensteinReport gorenstein;
    SymplecticCertificate certificate;
    bool certified = false;
};

struct CertifyOptions {
    long budget = 64;      // total degree budget for reconstruction
    long constraints = 20; // S_m range for certify_at
    long guard = 10;       // reconstruction guard coefficients
};

/// Full pipeline: validate weights, count the quotient Hilbert series,
/// reconstruct its rational function, check Stanley's equation, and certify
/// symplecticity at t = 1 of order d = dim M_0 = 2(n - l). Finite abelian
/// input is certified at order 2n (the whole space is the zero fibre for a
/// finite group).
inline ConjectureReport certify_conjecture(const WeightMatrix& a, long n_trunc,
                                           const CertifyOptions& options = {}) {
    validate_weights(a);
    HilbertData data = hilbert_data(a, n_trunc);
    long max_total = std::min(options.budget, n_trunc - options.guard - 1);
    if (max_total < 2) throw InsufficientTruncation(options.guard + 3, n_trunc);
    ReconstructionResult recon =
        reconstruct_rational(data.quotient, max_total / 2, max_total / 2, options.guard);
    long d = data.quotient_dim;
    GorensteinReport gorenstein = gorenstein_checks(recon.function, d);
    SymplecticCertificate certificate =
        certify_at(recon.function, Rational(1), d, options.constraints);
    if (!gorenstein.symplectic_order_compatible)
        throw VerdictMismatch("certified symplectic but a(R) != -d");
    return ConjectureReport{std::move(data), std::move(recon), std::move(gorenstein),
                            std::move(certificate), true};
}

}  // namespace symp
