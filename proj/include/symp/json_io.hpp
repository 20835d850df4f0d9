// symp: exact arithmetic for symplectic power series and Hilbert series.
//
// JSON encodings shared by the CLI and golden-file tests. Rationals travel as
// lowest-terms strings "p/q" ("p" when q = 1); series as
// {"coeffs": [...], "truncation": N}; polynomials as ascending coefficient
// arrays; rational functions as {"num": [...], "den": [...]}.
//
// All decoding errors surface as ParseError so the CLI can map them to its
// input-error exit code.

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "symp/hilbert.hpp"

namespace symp {

using Json = nlohmann::ordered_json;

inline Json rational_to_json(const Rational& r) { return to_string(r); }

inline Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw ParseError("expected a rational string, got " + j.dump());
    return parse_rational(j.get<std::string>());
}

inline Json polynomial_to_json(const Polynomial& p) {
    Json arr = Json::array();
    long deg = p.degree().value_or(-1);
    for (long i = 0; i <= deg; ++i) arr.push_back(rational_to_json(p.coeff(i)));
    return arr;
}

inline Polynomial polynomial_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected a coefficient array, got " + j.dump());
    std::vector<Rational> c;
    c.reserve(j.size());
    for (const auto& v : j) c.push_back(rational_from_json(v));
    return Polynomial(std::move(c));
}

inline Json series_to_json(const TruncatedSeries& s) {
    Json j;
    Json arr = Json::array();
    for (const Rational& c : s.coeffs()) arr.push_back(rational_to_json(c));
    j["coeffs"] = std::move(arr);
    j["truncation"] = s.truncation();
    return j;
}

inline TruncatedSeries series_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j.contains("truncation"))
        throw ParseError("series JSON needs {\"coeffs\": [...], \"truncation\": N}");
    if (!j["truncation"].is_number_integer()) throw ParseError("truncation must be an integer");
    long n = j["truncation"].get<long>();
    if (n < 0) throw ParseError("truncation must be nonnegative");
    const Json& arr = j["coeffs"];
    if (!arr.is_array() || static_cast<long>(arr.size()) != n + 1)
        throw ParseError("series must carry exactly truncation+1 coefficients");
    std::vector<Rational> c;
    c.reserve(arr.size());
    for (const auto& v : arr) c.push_back(rational_from_json(v));
    return TruncatedSeries(std::move(c), n);
}

inline Json ratfun_to_json(const RationalFunction& f) {
    Json j;
    j["num"] = polynomial_to_json(f.num());
    j["den"] = polynomial_to_json(f.den());
    return j;
}

inline RationalFunction ratfun_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw ParseError("rational function JSON needs {\"num\": [...], \"den\": [...]}");
    Polynomial num = polynomial_from_json(j["num"]);
    Polynomial den = polynomial_from_json(j["den"]);
    if (den.is_zero()) throw ParseError("rational function with zero denominator");
    return RationalFunction(std::move(num), std::move(den));
}

inline Json constraint_report_to_json(const ConstraintReport& r) {
    Json j;
    j["checked_up_to"] = r.checked_up_to;
    Json arr = Json::array();
    for (const auto& [m, value] : r.violations) {
        Json v;
        v["m"] = m;
        v["value"] = rational_to_json(value);
        arr.push_back(std::move(v));
    }
    j["violations"] = std::move(arr);
    j["symplectic"] = r.ok();
    return j;
}

inline Json certificate_to_json(const SymplecticCertificate& c) {
    Json j;
    j["rho"] = series_to_json(c.rho);
    j["point"] = rational_to_json(c.point);
    j["order"] = c.order;
    j["verified_constraints"] = c.verified_constraints;
    j["minimal_order"] = c.minimal_order;
    return j;
}

inline Json decomposition_to_json(const Decomposition& d) {
    Json j;
    j["rho"] = series_to_json(d.rho);
    j["verified_constraints"] = d.verified_constraints;
    return j;
}

inline Json gorenstein_to_json(const GorensteinReport& g) {
    Json j;
    j["a_invariant"] = g.a_invariant;
    j["dimension"] = g.dim;
    j["gamma0"] = rational_to_json(g.gamma0);
    j["gamma1"] = rational_to_json(g.gamma1);
    if (g.a_from_gamma)
        j["a_from_gamma"] = rational_to_json(*g.a_from_gamma);
    else
        j["a_from_gamma"] = nullptr;
    j["symplectic_order_compatible"] = g.symplectic_order_compatible;
    return j;
}

inline Json hilbert_data_to_json(const HilbertData& h) {
    Json j;
    j["invariant"] = series_to_json(h.invariant);
    j["quotient"] = series_to_json(h.quotient);
    j["ell"] = h.ell;
    j["n"] = h.n;
    j["quotient_dim"] = h.quotient_dim;
    return j;
}

inline Json conjecture_report_to_json(const ConjectureReport& r) {
    Json j;
    j["hilbert"] = hilbert_data_to_json(r.data);
    j["function"] = ratfun_to_json(r.reconstruction.function);
    j["num_degree"] = r.reconstruction.num_degree;
    j["den_degree"] = r.reconstruction.den_degree;
    j["validated_through"] = r.reconstruction.validated_through;
    j["gorenstein"] = gorenstein_to_json(r.gorenstein);
    j["certificate"] = certificate_to_json(r.certificate);
    j["certified"] = r.certified;
    return j;
}

}  // namespace symp
