// symp command-line front end.
//
// Subcommands: check, decompose, tables, torus, molien, gorenstein.
// Exit codes: 0 = certified/true, 1 = mathematically refuted, 2 = input error,
// 3 = internal consistency failure (never expected). Output is deterministic:
// identical inputs produce byte-identical output.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "symp/json_io.hpp"

namespace {

using namespace symp;

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open \"" + path + "\"");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("bad JSON in \"" + path + "\": " + e.what());
    }
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int run_check(const std::string& path, long max_m, bool json) {
    TruncatedSeries s = series_from_json(load_json(path));
    ConstraintReport report = check_symplectic(s);
    if (max_m > 0 && report.checked_up_to > max_m) {
        report.checked_up_to = max_m;
        std::erase_if(report.violations, [&](const auto& v) { return v.first > max_m; });
    }
    if (json) {
        emit(constraint_report_to_json(report));
    } else {
        std::cout << "checked S_m for m = 1.." << report.checked_up_to
                  << " (truncation " << s.truncation() << ")\n";
        if (report.ok()) {
            std::cout << "symplectic through the supported range\n";
        } else {
            for (const auto& [m, value] : report.violations)
                std::cout << "violated S_" << m << " = " << to_string(value) << "\n";
        }
    }
    return report.ok() ? kExitOk : kExitRefuted;
}

void print_series_text(const TruncatedSeries& s, const std::string& name) {
    std::cout << name << " (truncation " << s.truncation() << "):";
    for (const Rational& c : s.coeffs()) std::cout << " " << to_string(c);
    std::cout << "\n";
}

int run_decompose(const std::optional<std::string>& series_path,
                  const std::optional<std::string>& ratfun_path,
                  const std::optional<std::string>& point, long order, long constraints,
                  bool json) {
    if (series_path && ratfun_path)
        throw ParseError("give either a series file or --ratfun, not both");
    if (series_path) {
        TruncatedSeries s = series_from_json(load_json(*series_path));
        Decomposition dec = decompose(s);
        if (json) {
            emit(decomposition_to_json(dec));
        } else {
            print_series_text(dec.rho, "rho");
            std::cout << "verified constraints: S_1..S_" << dec.verified_constraints << "\n";
        }
        return kExitOk;
    }
    if (!ratfun_path) throw ParseError("decompose needs a series file or --ratfun");
    if (!point) throw ParseError("--ratfun needs --point");
    RationalFunction psi = ratfun_from_json(load_json(*ratfun_path));
    Rational a = parse_rational(*point);
    SymplecticCertificate cert = certify_at(psi, a, order, constraints);
    if (json) {
        emit(certificate_to_json(cert));
    } else {
        std::cout << "symplectic at " << to_string(cert.point) << " of order " << cert.order
                  << " (minimal order " << cert.minimal_order << ", S_1..S_"
                  << cert.verified_constraints << " verified)\n";
        print_series_text(cert.rho, "rho");
    }
    return kExitOk;
}

int run_tables(std::optional<long> euler_n, std::optional<long> genocchi_n,
               std::optional<long> brackets_n, std::optional<long> identity_n, bool json) {
    int selected = static_cast<int>(euler_n.has_value()) + genocchi_n.has_value() +
                   brackets_n.has_value() + identity_n.has_value();
    if (selected != 1)
        throw ParseError("tables needs exactly one of --euler/--genocchi/--brackets/--identity");
    if (euler_n) {
        if (*euler_n < 0) throw ParseError("--euler needs n >= 0");
        auto table = euler_polynomials(*euler_n);
        if (json) {
            Json arr = Json::array();
            for (const auto& e : table) arr.push_back(polynomial_to_json(e));
            emit(arr);
        } else {
            for (size_t n = 0; n < table.size(); ++n)
                std::cout << "E_" << n << "(x) = " << table[n].str("x") << "\n";
        }
        return kExitOk;
    }
    if (genocchi_n) {
        if (*genocchi_n < 0) throw ParseError("--genocchi needs n >= 0");
        GenocchiSequence g = genocchi(*genocchi_n);
        if (json) {
            Json arr = Json::array();
            for (const Integer& v : g.values) arr.push_back(v.str());
            emit(arr);
        } else {
            for (size_t n = 0; n < g.values.size(); ++n)
                std::cout << "G_" << n << " = " << g.values[n].str() << "\n";
        }
        return kExitOk;
    }
    if (brackets_n) {
        if (*brackets_n < 1) throw ParseError("--brackets needs n >= 1");
        BracketTable table(*brackets_n);
        if (json) {
            Json rows = Json::array();
            for (long n = 1; n <= table.max_row(); ++n) {
                Json row = Json::array();
                for (const Integer& v : table.row(n)) row.push_back(v.str());
                rows.push_back(std::move(row));
            }
            emit(rows);
        } else {
            for (long n = 1; n <= table.max_row(); ++n) {
                std::cout << "n=" << n << ":";
                for (const Integer& v : table.row(n)) std::cout << " " << v.str();
                std::cout << "\n";
            }
        }
        return kExitOk;
    }
    long box = *identity_n;
    if (box < 0) throw ParseError("--identity needs n >= 0");
    BracketTable table(box >= 1 ? box : 1);
    long failures = 0;
    for (long n = -box; n <= box; ++n)
        for (long k = 0; k <= box; ++k)
            for (long l = 0; l <= box; ++l)
                if (cubic_identity_defect(n, k, l, table) != 0) ++failures;
    if (json) {
        Json j;
        j["box"] = box;
        j["failures"] = failures;
        emit(j);
    } else {
        std::cout << "cubic identity on |n| <= " << box << ", 0 <= k,l <= " << box << ": "
                  << (failures == 0 ? "verified" : std::to_string(failures) + " failures")
                  << "\n";
    }
    return failures == 0 ? kExitOk : kExitRefuted;
}

long env_budget(long fallback) {
    if (const char* env = std::getenv("SYMP_BUDGET")) {
        try {
            return std::stol(env);
        } catch (const std::exception&) {
            throw ParseError("SYMP_BUDGET must be an integer");
        }
    }
    return fallback;
}

int run_torus(const std::string& weights, const std::optional<std::string>& moduli, long trunc,
              long constraints, long budget, bool json) {
    WeightMatrix a = parse_weights(weights, moduli);
    CertifyOptions options;
    options.budget = budget;
    options.constraints = constraints;
    ConjectureReport report = certify_conjecture(a, trunc, options);
    if (json) {
        emit(conjecture_report_to_json(report));
    } else {
        std::cout << "weights: " << weights;
        if (moduli) std::cout << " (moduli " << *moduli << ")";
        std::cout << "\nquotient dimension d = " << report.data.quotient_dim << "\n";
        std::cout << "Hilb = " << report.reconstruction.function.str() << "\n";
        std::cout << "a-invariant = " << report.gorenstein.a_invariant
                  << " (a == -d: " << (report.gorenstein.symplectic_order_compatible ? "yes" : "no")
                  << ")\n";
        print_series_text(report.certificate.rho, "rho");
        std::cout << "certified symplectic at t=1 of order " << report.certificate.order << "\n";
    }
    return report.certified ? kExitOk : kExitRefuted;
}

int run_molien(const std::string& weights, const std::string& moduli, long trunc, bool json) {
    WeightMatrix a = parse_weights(weights, moduli);
    TruncatedSeries s = molien_finite(a, trunc);
    if (json) {
        emit(series_to_json(s));
    } else {
        print_series_text(s, "Hilb coefficients");
    }
    return kExitOk;
}

int run_gorenstein(const std::string& ratfun_path, long dim, bool json) {
    RationalFunction psi = ratfun_from_json(load_json(ratfun_path));
    GorensteinReport report = gorenstein_checks(psi, dim);
    if (json) {
        emit(gorenstein_to_json(report));
    } else {
        std::cout << "Hilb(1/t) = (-1)^" << dim << " t^-a Hilb(t) with a = "
                  << report.a_invariant << "\n";
        std::cout << "gamma0 = " << to_string(report.gamma0)
                  << ", gamma1 = " << to_string(report.gamma1) << "\n";
        if (report.a_from_gamma)
            std::cout << "a from -2*gamma1/gamma0 - d = " << to_string(*report.a_from_gamma)
                      << "\n";
        std::cout << "a == -d: " << (report.symplectic_order_compatible ? "yes" : "no") << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symplectic power series and Hilbert series toolkit"};
    app.require_subcommand(1);

    bool json = false;
    auto add_json_flag = [&json](CLI::App* sub) {
        sub->add_flag("--json", json, "emit JSON instead of text");
    };

    auto* check = app.add_subcommand("check", "evaluate the S_m constraints of a series");
    std::string check_path;
    long check_max_m = 0;
    check->add_option("series", check_path, "series JSON file")->required();
    check->add_option("--max-m", check_max_m, "limit the constraint range");

    auto* dec = app.add_subcommand("decompose", "m-adic decomposition / certification");
    std::optional<std::string> dec_series, dec_ratfun, dec_point;
    long dec_order = 0, dec_constraints = 20;
    dec->add_option("series", dec_series, "series JSON file");
    dec->add_option("--ratfun", dec_ratfun, "rational function JSON file");
    dec->add_option("--point", dec_point, "expansion point a (rational)");
    dec->add_option("--order", dec_order, "pole order d");
    dec->add_option("--constraints", dec_constraints, "S_m range for certification");

    auto* tables = app.add_subcommand("tables", "Euler/Genocchi/bracket tables and identities");
    std::optional<long> t_euler, t_genocchi, t_brackets, t_identity;
    tables->add_option("--euler", t_euler, "print E_0..E_n");
    tables->add_option("--genocchi", t_genocchi, "print G_0..G_n");
    tables->add_option("--brackets", t_brackets, "print bracket triangle rows 1..n");
    tables->add_option("--identity", t_identity, "verify the cubic identity on a box");

    auto* torus = app.add_subcommand("torus", "certify the Hilbert series of a weight action");
    std::string torus_weights;
    std::optional<std::string> torus_moduli;
    long torus_trunc = 40, torus_constraints = 20, torus_budget = 64;
    torus->add_option("--weights", torus_weights, "rows ';'-separated, entries ','-separated")
        ->required();
    torus->add_option("--moduli", torus_moduli, "finite abelian orders, one per row");
    torus->add_option("--truncation", torus_trunc, "oracle truncation N");
    torus->add_option("--constraints", torus_constraints, "S_m range for certification");
    torus->add_option("--budget", torus_budget, "reconstruction degree budget");

    auto* molien = app.add_subcommand("molien", "Hilbert series of a finite abelian group");
    std::string molien_weights, molien_moduli;
    long molien_trunc = 20;
    molien->add_option("--weights", molien_weights, "weight rows")->required();
    molien->add_option("--moduli", molien_moduli, "orders, one per row")->required();
    molien->add_option("--truncation", molien_trunc, "series truncation N");

    auto* gorenstein = app.add_subcommand("gorenstein", "Stanley functional-equation report");
    std::string gor_path;
    long gor_dim = 0;
    gorenstein->add_option("--ratfun", gor_path, "rational function JSON file")->required();
    gorenstein->add_option("--dim", gor_dim, "Krull dimension d")->required();

    add_json_flag(check);
    add_json_flag(dec);
    add_json_flag(tables);
    add_json_flag(torus);
    add_json_flag(molien);
    add_json_flag(gorenstein);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*check) return run_check(check_path, check_max_m, json);
        if (*dec)
            return run_decompose(dec_series, dec_ratfun, dec_point, dec_order, dec_constraints,
                                 json);
        if (*tables) return run_tables(t_euler, t_genocchi, t_brackets, t_identity, json);
        if (*torus)
            return run_torus(torus_weights, torus_moduli, torus_trunc, torus_constraints,
                             env_budget(torus_budget), json);
        if (*molien) return run_molien(molien_weights, molien_moduli, molien_trunc, json);
        if (*gorenstein) return run_gorenstein(gor_path, gor_dim, json);
    } catch (const NotSymplectic& e) {
        std::cerr << "refuted: " << e.what() << "\n";
        return kExitRefuted;
    } catch (const PoleOrderExceeded& e) {
        std::cerr << "refuted: " << e.what() << "\n";
        return kExitRefuted;
    } catch (const NoFunctionalEquation& e) {
        std::cerr << "refuted: " << e.what() << "\n";
        return kExitRefuted;
    } catch (const NoRationalFit& e) {
        std::cerr << "refuted: " << e.what() << "\n";
        return kExitRefuted;
    } catch (const VerdictMismatch& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const NegativeCoefficient& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
