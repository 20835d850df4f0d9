// symp: exact arithmetic for symplectic power series and Hilbert series.
//
// Exception hierarchy. Every failure mode of the library is a subclass of
// symp::Error; payload fields carry the exact offending data so callers
// (and the CLI) can report precise diagnostics.

#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace symp {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed external input (bad rational string, bad JSON shape, bad weight grammar).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Series composition with an inner series whose constant term is nonzero.
class NonpositiveValuation : public Error {
public:
    using Error::Error;
};

/// An operation needed more exact coefficients than the series carries.
class InsufficientTruncation : public Error {
public:
    InsufficientTruncation(long needed, long have)
        : Error("insufficient truncation: need " + std::to_string(needed) +
                ", have " + std::to_string(have)),
          needed(needed), have(have) {}
    long needed;
    long have;
};

/// Actual pole order at the expansion point exceeds the requested order d.
class PoleOrderExceeded : public Error {
public:
    PoleOrderExceeded(long actual, long requested)
        : Error("pole order " + std::to_string(actual) + " exceeds requested order " +
                std::to_string(requested)),
          actual(actual), requested(requested) {}
    long actual;
    long requested;
};

/// Substitution target num/den is a constant rational function.
class DegenerateSubstitution : public Error {
public:
    using Error::Error;
};

/// Input failed a symplectic constraint; carries the first violated m and the S_m value.
class NotSymplectic : public Error {
public:
    NotSymplectic(long first_m, Rational value);
    long first_m;
    Rational value;
};

/// Redundant certification routes disagreed. Indicates a library bug.
class VerdictMismatch : public Error {
public:
    using Error::Error;
};

class RankDeficient : public Error {
public:
    using Error::Error;
};

class OriginNotInHull : public Error {
public:
    using Error::Error;
};

class ZeroRow : public Error {
public:
    using Error::Error;
};

/// Internal consistency failure: a quotient Hilbert coefficient came out negative.
class NegativeCoefficient : public Error {
public:
    using Error::Error;
};

class GroupTooLarge : public Error {
public:
    using Error::Error;
};

/// No rational function within the degree budget matches the oracle coefficients.
class NoRationalFit : public Error {
public:
    explicit NoRationalFit(long budget)
        : Error("no rational fit within total degree budget " + std::to_string(budget)),
          budget(budget) {}
    long budget;
};

/// No integer a satisfies Hilb(1/t) = (-1)^d t^-a Hilb(t).
class NoFunctionalEquation : public Error {
public:
    using Error::Error;
};

inline NotSymplectic::NotSymplectic(long first_m, Rational value)
    : Error("not symplectic: S_" + std::to_string(first_m) + " = " + value.str()),
      first_m(first_m), value(std::move(value)) {}

}  // namespace symp
