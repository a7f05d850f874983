#pragma once

// Command surface of the mtp tool. Kept in a header so the test suite can
// drive it in-process; tools/mtp.cpp is a thin main().

#include "mtp/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cfloat>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace mtp::cli {

using nlohmann::ordered_json;
using json = ordered_json;

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

// thrown for inputs that parse but violate a documented precondition
struct PreconditionError : std::domain_error {
    using std::domain_error::domain_error;
};

inline json cplx_json(std::complex<double> z) { return {{"re", z.real()}, {"im", z.imag()}}; }

// Exact coefficients as decimal strings, plus a long-double approximation whose
// absolute error is bounded by "precision".
inline json cyc_json(const CycElem& v0) {
    CycElem v = v0.compact();
    json coeffs = json::object();
    long double mass = 0;
    for (auto& [j, c] : v.coeffs()) {
        coeffs[std::to_string(j)] = c.str();
        mass += std::abs(c.to_long_double());
    }
    auto z = v.to_complex();
    long double prec = std::max<long double>(mass * 64 * LDBL_EPSILON, LDBL_MIN);
    return {{"order", v.order()},
            {"coeffs", coeffs},
            {"approx", {{"re", static_cast<double>(z.real())}, {"im", static_cast<double>(z.imag())}, {"precision", static_cast<double>(prec)}}}};
}

inline json int_or_null(const CycElem& v) {
    BigInt n;
    if (as_integer(v, n)) return n.str();
    return nullptr;
}

inline json plucker_json(const GammaPlucker& p) { return {p.A1.str(), p.B1.str(), p.C1.str(), p.A2.str(), p.B2.str(), p.C2.str()}; }

inline json matrix_json(const Mat3& m) {
    json rows = json::array();
    for (int i = 0; i < 3; ++i) rows.push_back({m(i, 0).get_str(), m(i, 1).get_str(), m(i, 2).get_str()});
    return rows;
}

// A = p^k, B = mu p^l for a single prime p (A = |B| = 1 gives p = 0)
struct PrimePowerPair {
    int64_t p = 0;
    int k = 0, l = 0, mu = 1;
};

inline std::optional<PrimePowerPair> prime_power_pair(int64_t A1, int64_t A2) {
    if (A1 <= 0 || A2 == 0) return std::nullopt;
    PrimePowerPair r;
    r.mu = A2 > 0 ? 1 : -1;
    auto f1 = factorize(A1), f2 = factorize(A2 < 0 ? -A2 : A2);
    if (f1.factors.size() > 1 || f2.factors.size() > 1) return std::nullopt;
    if (!f1.factors.empty()) std::tie(r.p, r.k) = f1.factors[0];
    if (!f2.factors.empty()) {
        if (r.p && r.p != f2.factors[0].first) return std::nullopt;
        std::tie(r.p, r.l) = f2.factors[0];
    }
    return r;
}

inline std::vector<std::string> split_commas(const std::vector<std::string>& in) {
    std::vector<std::string> out;
    for (auto& s : in) {
        std::string cur;
        for (char c : s) {
            if (c == ',') {
                if (!cur.empty()) out.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        if (!cur.empty()) out.push_back(cur);
    }
    return out;
}

inline Mat3 parse_matrix(const std::vector<std::string>& tokens, const char* flag) {
    auto t = split_commas(tokens);
    if (t.size() != 9) throw CLI::ValidationError(std::string(flag) + " needs 9 rationals, got " + std::to_string(t.size()));
    Mat3 m;
    for (size_t i = 0; i < 9; ++i) {
        Rational q;
        if (q.set_str(t[i], 10) != 0 || q.get_den() == 0) throw CLI::ValidationError(std::string(flag) + ": bad rational '" + t[i] + "'");
        q.canonicalize();
        m.a[i] = q;
    }
    return m;
}

// --- commands --------------------------------------------------------------

inline json cmd_sigma(int64_t A1, int64_t A2, int64_t m1, int64_t m2, const std::string& method) {
    CycElem v;
    if (method == "brute") {
        v = sigma_bruteforce({A1, A2, m1, m2});
    } else if (method == "general") {
        v = sigma_general({A1, A2, m1, m2});
    } else {
        auto pp = prime_power_pair(A1, A2);
        if (!pp || pp->k < pp->l) throw PreconditionError("sigma --method closed: requires A1 = p^k, A2 = +-p^l with k >= l");
        if (mod64(A1 + A2, 4) != 0) {
            v = CycElem(1);  // S(A1,A2) is empty
        } else if (pp->p == 0) {
            v = CycElem::integer(A2 < 0 ? 1 : 0);
        } else if (pp->p == 2) {
            v = sigma_closed_two(pp->k, pp->l, pp->mu, m1, m2);
        } else {
            v = sigma_closed_odd(pp->p, pp->k, pp->l, pp->mu, m1, m2);
        }
    }
    return {{"A1", std::to_string(A1)}, {"A2", std::to_string(A2)}, {"m1", std::to_string(m1)}, {"m2", std::to_string(m2)},
            {"method", method}, {"value_int", int_or_null(v)}, {"value", cyc_json(v)}};
}

inline json cmd_cosets(int64_t A1, int64_t A2, bool closed) {
    CosetSet s;
    if (closed) {
        auto pp = prime_power_pair(A1, A2);
        if (!pp || pp->p == 0 || pp->k < pp->l) throw PreconditionError("cosets --closed: requires A1 = p^k, A2 = +-p^l with p prime, k >= l");
        s = enumerate_closed(pp->p, pp->k, pp->l, pp->mu);
    } else {
        s = enumerate_bruteforce(A1, A2);
    }
    json el = json::array();
    for (auto& p : s.elements) el.push_back({{"plucker", plucker_json(p)}, {"cell", cell_name(classify_cell(p))}, {"s", s_any(p)}});
    return {{"A1", std::to_string(A1)}, {"A2", std::to_string(A2)}, {"method", closed ? "closed" : "brute"}, {"count", s.elements.size()}, {"elements", el}};
}

inline json cmd_splitting(const std::vector<std::string>& v) {
    GammaPlucker p{BigInt(v[0]), BigInt(v[1]), BigInt(v[2]), BigInt(v[3]), BigInt(v[4]), BigInt(v[5])};
    if (!p.relation_holds()) throw PreconditionError("splitting: requires A1*C2 + 4*B1*B2 + C1*A2 = 0");
    if (!p.valid()) throw PreconditionError("splitting: requires primitive rows and C1 = C2 = -1 (mod 4)");
    return {{"plucker", plucker_json(p)}, {"cell", cell_name(classify_cell(p))}, {"s", s_any(p)}};
}

inline json cmd_cocycle(const Mat3& g1, const Mat3& g2) {
    if (g1.det() != 1 || g2.det() != 1) throw PreconditionError("cocycle: requires det g1 = det g2 = 1");
    return {{"g1", matrix_json(g1)}, {"g2", matrix_json(g2)}, {"g1g2", matrix_json(g1 * g2)}, {"sigma", sigma(g1, g2)}};
}

inline json cmd_constant_term(const std::vector<double>& lam4, int64_t cutoff) {
    if (lam4.size() != 4) throw CLI::ValidationError("--lambda needs RE1,IM1,RE2,IM2");
    if (cutoff < 1) throw PreconditionError("constant-term: requires cutoff >= 1");
    Lambda lam = Lambda::from_two({lam4[0], lam4[1]}, {lam4[2], lam4[3]});
    json out;
    out["lambda"] = {cplx_json(lam.l1), cplx_json(lam.l2), cplx_json(lam.l3)};
    json coeffs = json::array();
    auto succ = constant_term_coefficients(lam);
    auto lng = constant_term_long_form(lam);
    for (size_t w = 0; w < succ.size(); ++w) {
        json roots = json::array();
        for (auto [i, j] : succ[w].roots) roots.push_back("e" + std::to_string(i + 1) + "-e" + std::to_string(j + 1));
        coeffs.push_back({{"cell", succ[w].cell},
                          {"roots", roots},
                          {"succinct", {cplx_json(succ[w].coefficient * succ[w].v[0]), cplx_json(succ[w].coefficient * succ[w].v[1])}},
                          {"long_form", {cplx_json(lng[w][0]), cplx_json(lng[w][1])}}});
    }
    out["coefficients"] = coeffs;
    out["coefficient_agreement"] = compare_coefficient_forms(lam).max_error;
    json ef = json::array();
    for (int64_t p : {2, 3, 5, 7, 11, 13}) {
        cplx closed = euler_factor(p, lam), series = euler_factor_series(p, lam, 24);
        ef.push_back({{"p", p}, {"closed", cplx_json(closed)}, {"series", cplx_json(series)}, {"error", std::abs(closed - series)}});
    }
    out["euler_factors"] = ef;
    auto bc = bigcell_series_check(lam, cutoff);
    out["bigcell"] = {{"cutoff", cutoff}, {"series", cplx_json(bc.series)}, {"closed", cplx_json(bc.closed)}, {"relative_error", bc.error}};
    return out;
}

inline json suite_json(const SuiteResult& r) {
    json fails = json::array(), notes = json::array();
    for (auto& m : r.messages) {
        if (m.rfind("note: ", 0) == 0)
            notes.push_back(m.substr(6));
        else
            fails.push_back(m);
    }
    return {{"suite", r.name}, {"passed", r.passed}, {"checked", r.checked}, {"failures", r.failures},
            {"seconds", r.seconds}, {"failure_samples", fails}, {"notes", notes}};
}

// --- driver ----------------------------------------------------------------

inline json error_json(const std::string& kind, const std::string& message) {
    json e = {{"kind", kind}, {"message", message}};
    if (kind == "precondition") {
        auto pos = message.find(": ");
        e["operation"] = message.substr(0, pos);
        e["precondition"] = pos == std::string::npos ? message : message.substr(pos + 2);
    }
    return {{"error", e}};
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact arithmetic for metaplectic SL(3) exponential sums", "mtp"};
    app.require_subcommand(1);
    unsigned threads = 0;
    app.add_option("--threads", threads, "cap on worker threads (0 = all cores)");

    std::vector<int64_t> ints;
    std::vector<std::string> strs;
    std::string method = "general";
    bool closed = false;
    std::vector<std::string> g1, g2;
    std::vector<double> lam;
    int64_t cutoff = 10000;
    std::string suite;
    SuiteOptions so;

    auto* kr = app.add_subcommand("kronecker", "Kronecker symbol (K/N)");
    kr->add_option("args", ints, "K N")->expected(2)->required();
    auto* ga = app.add_subcommand("gauss", "Gauss sum g(D,M,N)");
    ga->add_option("args", ints, "D M N")->expected(3)->required();
    auto* g2s = app.add_subcommand("gauss2", "dyadic Gauss sum g_EPS(2^I, M, 2^K)");
    g2s->add_option("args", ints, "EPS I M K")->expected(4)->required();
    auto* kl = app.add_subcommand("kloosterman", "K_KAPPA(N; 4C)");
    kl->add_option("args", ints, "KAPPA N C")->expected(3)->required();
    auto* co = app.add_subcommand("cosets", "list S(A1,A2)");
    co->add_option("args", ints, "A1 A2")->expected(2)->required();
    co->add_flag("--closed", closed, "use the prime-power closed families");
    auto* si = app.add_subcommand("sigma", "Sigma(A1,A2;M1,M2)");
    si->add_option("args", ints, "A1 A2 M1 M2")->expected(4)->required();
    si->add_option("--method", method)->check(CLI::IsMember({"brute", "closed", "general"}));
    auto* sp = app.add_subcommand("splitting", "s(gamma) from scaled Plucker coordinates");
    sp->add_option("args", strs, "A1 B1 C1 A2 B2 C2")->expected(6)->required();
    auto* cc = app.add_subcommand("cocycle", "sigma(g1, g2) for rational g1, g2 in SL(3)");
    cc->add_option("--g1", g1, "9 rationals, row-major (space or comma separated)")->expected(1, 9)->required();
    cc->add_option("--g2", g2, "9 rationals, row-major (space or comma separated)")->expected(1, 9)->required();
    auto* ct = app.add_subcommand("constant-term", "constant-term coefficients, Euler factors and series checks");
    ct->add_option("--lambda", lam, "RE1,IM1,RE2,IM2 (lambda3 = -lambda1 - lambda2)")->delimiter(',')->expected(4)->required();
    ct->add_option("--cutoff", cutoff, "big-cell series cutoff");
    auto* ve = app.add_subcommand("verify", "run a named invariant suite ('list' to enumerate)");
    ve->add_option("suite", suite)->required();
    ve->add_option("--seed", so.seed);
    ve->add_option("--max", so.max, "suite-specific size bound");
    ve->add_option("--threads", so.threads, "cap on worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        out << error_json("usage", e.what()).dump(2) << "\n";
        err << app.help();
        return kUsage;
    }

    try {
        json r;
        if (*kr) {
            r = {{"K", std::to_string(ints[0])}, {"N", std::to_string(ints[1])}, {"value", kronecker(ints[0], ints[1])}};
        } else if (*ga) {
            CycElem v = gauss_g(ints[0], mod64(ints[1], ints[2] > 0 ? ints[2] : 1), ints[2]);
            r = {{"value", cyc_json(v)}, {"value_int", int_or_null(v)}};
        } else if (*g2s) {
            if (ints[1] > 62 || ints[3] > 30) throw PreconditionError("gauss2: requires I <= 62 and K <= 30");
            CycElem v = gauss_g_even(static_cast<int>(ints[0]), static_cast<int>(ints[1]), ints[2], static_cast<int>(ints[3]));
            r = {{"value", cyc_json(v)}, {"value_int", int_or_null(v)}};
        } else if (*kl) {
            CycElem v = kloosterman_K(ints[0], ints[1], ints[2]);
            r = {{"value", cyc_json(v)}, {"value_int", int_or_null(v)}};
            if (ints[1] == 0) r["closed"] = cyc_json(kloosterman_zero_closed(ints[0], ints[2]));
        } else if (*co) {
            r = cmd_cosets(ints[0], ints[1], closed);
        } else if (*si) {
            r = cmd_sigma(ints[0], ints[1], ints[2], ints[3], method);
        } else if (*sp) {
            r = cmd_splitting(strs);
        } else if (*cc) {
            r = cmd_cocycle(parse_matrix(g1, "--g1"), parse_matrix(g2, "--g2"));
        } else if (*ct) {
            r = cmd_constant_term(lam, cutoff);
        } else if (*ve) {
            if (!so.threads) so.threads = threads;
            if (suite == "list") {
                json l = json::array();
                for (auto& s : suites()) l.push_back({{"name", s.name}, {"criterion", s.criterion}, {"description", s.description}});
                out << json{{"suites", l}}.dump(2) << "\n";
                return kOk;
            }
            const SuiteInfo* info = find_suite(suite);
            if (!info) throw CLI::ValidationError("unknown suite '" + suite + "' (try 'verify list')");
            err << "running " << info->name << " (" << info->description << ")\n";
            SuiteResult res = info->run(so);
            err << (res.passed ? "PASS " : "FAIL ") << res.name << ": " << res.checked << " checks, " << res.failures << " failures, "
                << res.seconds << " s\n";
            out << suite_json(res).dump(2) << "\n";
            return res.passed ? kOk : kVerifyFailed;
        }
        out << r.dump(2) << "\n";
        return kOk;
    } catch (const CLI::ValidationError& e) {
        out << error_json("usage", e.what()).dump(2) << "\n";
    } catch (const std::domain_error& e) {
        out << error_json("precondition", e.what()).dump(2) << "\n";
    } catch (const std::overflow_error& e) {
        out << error_json("overflow", e.what()).dump(2) << "\n";
    } catch (const std::invalid_argument& e) {
        out << error_json("usage", e.what()).dump(2) << "\n";
    }
    return kUsage;
}

}  // namespace mtp::cli
