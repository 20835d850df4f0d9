// symp: exact arithmetic for symplectic power series and Hilbert series.
//
// Rational/Integer helpers. Rational is boost::multiprecision::cpp_rational,
// which already guarantees lowest terms and a positive denominator. All
// arithmetic in the library is exact; nothing here ever rounds.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "symp/errors.hpp"

namespace symp {

/// Parse "p/q" or "p" (optional leading '-' or '+'). Throws ParseError on
/// malformed text or a zero denominator.
inline Rational parse_rational(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string_view num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!is_int(num) || !is_int(den))
        throw ParseError("malformed rational \"" + std::string(text) + "\"");
    Integer p{std::string(num)};
    Integer q{std::string(den)};
    if (q == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    return Rational(p) / Rational(q);  // division canonicalizes sign and terms
}

/// Lowest-terms encoding: "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline Integer factorial(long n) {
    Integer f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Integer binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    Integer b = 1;
    for (long i = 0; i < k; ++i) {
        b *= (n - i);
        b /= (i + 1);  // exact: product of j consecutive integers is divisible by j!
    }
    return b;
}

/// Integer power with a nonnegative exponent.
inline Rational pow_rational(const Rational& base, long e) {
    Rational r = 1, b = base;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1) r *= b;
        if (k > 1) b *= b;
    }
    return r;
}

}  // namespace symp
