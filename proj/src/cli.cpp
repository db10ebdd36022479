#include "prozeta/cli.hpp"

#include "prozeta/analysis.hpp"
#include "prozeta/cone.hpp"
#include "prozeta/zeta.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>

namespace prozeta {

namespace {

using nlohmann::json;

json int_json(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return json(static_cast<std::int64_t>(v));
    return json(v.str());
}

json rat_json(const Rat& v) {
    return json{{"num", int_json(boost::multiprecision::numerator(v))},
                {"den", int_json(boost::multiprecision::denominator(v))},
                {"decimal", decimal_string(v)}};
}

std::string rat_text(const Rat& v) {
    std::string s = boost::multiprecision::numerator(v).str();
    if (boost::multiprecision::denominator(v) != 1)
        s += "/" + boost::multiprecision::denominator(v).str();
    return s + " (" + decimal_string(v) + ")";
}

struct Options {
    int m = 1, n = 2;
    int m_max = 0, n_max = 0;
    int depth = 10;
    std::string prime = "symbolic";
    std::string format = "text";
    std::string out_path;
    std::string window = "0:80";
};

std::string zeta_payload(const RationalFnQT& f, const Options& opt, json& result) {
    if (opt.prime != "symbolic") {
        long p = std::stol(opt.prime);
        PrimeSpecialized sp = specialize_prime(f, p);
        result["prime"] = p;
        result["specialized"] = sp.to_text();
        return sp.to_text();
    }
    result["zeta"] = json::parse(f.to_json());
    if (opt.format == "latex") return f.to_latex();
    return f.to_text();
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

struct CheckLine {
    std::string name;
    bool pass;
    std::string detail;
};

class Reporter {
  public:
    explicit Reporter(std::ostream& os, bool as_json) : os_(os), json_(as_json) {}

    void line(const std::string& name, bool pass, const std::string& detail = "") {
        all_ &= pass;
        checks_.push_back({name, pass, detail});
        if (!json_) {
            os_ << (pass ? "[pass] " : "[FAIL] ") << name;
            if (!detail.empty()) os_ << ": " << detail;
            os_ << "\n";
        }
    }

    int finish(const json& query) {
        if (json_) {
            json arr = json::array();
            for (const auto& c : checks_) {
                json j{{"name", c.name}, {"pass", c.pass}};
                if (!c.detail.empty()) j["detail"] = c.detail;
                arr.push_back(j);
            }
            os_ << json{{"query", query}, {"result", arr}, {"pass", all_}}.dump(2) << "\n";
        } else {
            os_ << (all_ ? "all checks passed\n" : "some checks FAILED\n");
        }
        return all_ ? 0 : 1;
    }

    bool all() const { return all_; }

  private:
    std::ostream& os_;
    bool json_;
    bool all_ = true;
    std::vector<CheckLine> checks_;
};

void verify_dstar(Reporter& rep, int m_lo, int m_hi) {
    for (int m = m_lo; m <= m_hi; ++m)
        rep.line("dstar m=" + std::to_string(m),
                 rational_equal(local_zeta(m, 2), dstar_zeta(m)));
}

void verify_grenham(Reporter& rep, int n_lo, int n_hi) {
    for (int n = n_lo; n <= n_hi; ++n)
        rep.line("grenham n=" + std::to_string(n), grenham_identity_check(n));
}

void verify_fn_eq(Reporter& rep, int m, int n) {
    FnEqResult r = functional_equation_check(m, n);
    std::ostringstream det;
    det << "sign=" << (r.sign > 0 ? "+1" : "-1") << " a=" << r.a << " b=" << r.b;
    rep.line("fn-eq m=" + std::to_string(m) + " n=" + std::to_string(n), r.holds, det.str());
}

void verify_oracle(Reporter& rep, int m, int n, int depth) {
    rep.line("oracle m=" + std::to_string(m) + " n=" + std::to_string(n) +
                 " depth=" + std::to_string(depth),
             oracle_compare(m, n, depth));
}

void verify_relations(Reporter& rep, int m_max, int n_max) {
    bool ok = true;
    for (int m = 1; m <= m_max && ok; ++m)
        for (int n = 2; n <= n_max && ok; ++n) {
            ZetaParameters P = zeta_parameters(m, n);  // asserts internally as well
            ok = (m - 1) * P.Atilde0 == P.A[0] && (m - 1) * P.Btilde0 == P.B[0] &&
                 m * P.Atilden == P.A[static_cast<size_t>(n)] &&
                 m * P.Btilden == P.B[static_cast<size_t>(n)];
        }
    rep.line("relations grid m<=" + std::to_string(m_max) + " n<=" + std::to_string(n_max), ok);
}

void verify_convexity(Reporter& rep, int m_max, int n_max) {
    bool ok = true;
    for (int m = 2; m <= m_max && ok; ++m)
        for (int n = 2; n <= n_max && ok; ++n) ok = convexity_check(m, n);
    rep.line("convexity grid m<=" + std::to_string(m_max) + " n<=" + std::to_string(n_max), ok);
}

void verify_fm(Reporter& rep, int m_max, int n_max) {
    for (int m = 2; m <= m_max; ++m) {
        rep.line("fm consistency m=" + std::to_string(m), fm_consistency(m, n_max));
        rep.line("gm/hm identity m=" + std::to_string(m), gm_hm_check(m));
    }
}

void verify_limits(Reporter& rep, int n_max, int m_max) {
    for (int n = 2; n <= n_max; ++n) {
        LimitReport r = limit_check(n, m_max);
        std::ostringstream det;
        det << "limit=" << r.limit
            << " |error|@" << m_max << "=" << decimal_string(r.max_abs_error_at_m_max);
        rep.line("limits n=" + std::to_string(n), r.errors_decreasing, det.str());
    }
}

void verify_c_set(Reporter& rep, int m_max, int n_max) {
    bool ok = true;
    for (int m = 2; m <= m_max && ok; ++m)
        for (int n = 2; n <= n_max && ok; ++n) {
            ZetaParameters P = zeta_parameters(m, n);
            Rat r0(P.Atilde0 + 1, P.Btilde0), rn(P.Atilden + 1, P.Btilden);
            if (r0 == rn) ok = false;
            else ok = (r0 > rn) == in_exceptional_set_explicit(m, n);
        }
    rep.line("c-set grid m<=" + std::to_string(m_max) + " n<=" + std::to_string(n_max), ok);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact local pro-isomorphic zeta functions of the lattices L(m,n)"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd, bool with_mn) {
        if (with_mn) {
            cmd->add_option("--m", opt.m, "first parameter (m >= 1)");
            cmd->add_option("--n", opt.n, "second parameter (n >= 2)");
        }
        cmd->add_option("--depth", opt.depth, "series truncation depth");
        cmd->add_option("--prime", opt.prime, "specialise q at a prime, or 'symbolic'");
        cmd->add_option("--format", opt.format, "text|latex|json|csv")
            ->check(CLI::IsMember({"text", "latex", "json", "csv"}));
        cmd->add_option("--out", opt.out_path, "write output to a file");
    };

    auto* zeta_cmd = app.add_subcommand("zeta", "closed-form local zeta function");
    add_common(zeta_cmd, true);
    auto* dstar_cmd = app.add_subcommand("dstar", "Hirsch-length 2m+3 closed form (n = 2)");
    add_common(dstar_cmd, true);
    auto* params_cmd = app.add_subcommand("params", "exponent data A_i, B_i and tilde values");
    add_common(params_cmd, true);
    auto* absc_cmd = app.add_subcommand("abscissa", "abscissa of convergence and continuation bound");
    add_common(absc_cmd, true);
    auto* fm_cmd = app.add_subcommand("fm", "appendix polynomial f_m");
    add_common(fm_cmd, true);
    auto* oracle_cmd = app.add_subcommand("oracle", "cone-sum series against the closed form");
    add_common(oracle_cmd, true);
    auto* scan_cmd = app.add_subcommand("scan", "abscissa scan over a parameter grid");
    add_common(scan_cmd, false);
    scan_cmd->add_option("--m-max", opt.m_max, "largest m (default 500)");
    scan_cmd->add_option("--n-max", opt.n_max, "largest n (default 20)");
    scan_cmd->add_option("--window", opt.window, "alpha window lo:hi (default 0:80)");

    auto* verify_cmd = app.add_subcommand("verify", "verify the library's identities");
    std::string claim;
    verify_cmd
        ->add_option("claim", claim,
                     "fn-eq|dstar|grenham|oracle|relations|convexity|fm|limits|c-set|all")
        ->required()
        ->check(CLI::IsMember({"fn-eq", "dstar", "grenham", "oracle", "relations", "convexity",
                               "fm", "limits", "c-set", "all"}));
    add_common(verify_cmd, true);
    verify_cmd->add_option("--m-max", opt.m_max, "grid bound for m");
    verify_cmd->add_option("--n-max", opt.n_max, "grid bound for n");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 2;
    }

    std::ostringstream buffer;
    const bool as_json = opt.format == "json";
    int code = 0;

    try {
        if (*zeta_cmd || *dstar_cmd) {
            RationalFnQT f = (*zeta_cmd) ? local_zeta(opt.m, opt.n) : dstar_zeta(opt.m);
            json query{{"command", (*zeta_cmd) ? "zeta" : "dstar"}, {"m", opt.m}};
            if (*zeta_cmd) query["n"] = opt.n;
            json result;
            std::string text = zeta_payload(f, opt, result);
            if (as_json) buffer << json{{"query", query}, {"result", result}}.dump(2) << "\n";
            else buffer << text << "\n";
        } else if (*params_cmd) {
            ZetaParameters P = zeta_parameters(opt.m, opt.n);
            if (as_json) {
                json A = json::array(), B = json::array();
                for (const auto& a : P.A) A.push_back(int_json(a));
                for (const auto& b : P.B) B.push_back(int_json(b));
                json result{{"A", A},
                            {"B", B},
                            {"Atilde0", int_json(P.Atilde0)},
                            {"Btilde0", int_json(P.Btilde0)},
                            {"Atilden", int_json(P.Atilden)},
                            {"Btilden", int_json(P.Btilden)},
                            {"fe_a", int_json(P.fe_a)},
                            {"fe_b", int_json(P.fe_b)}};
                buffer << json{{"query", {{"command", "params"}, {"m", opt.m}, {"n", opt.n}}},
                               {"result", result}}
                              .dump(2)
                       << "\n";
            } else {
                for (int i = 0; i <= P.n; ++i)
                    buffer << "A_" << i << " = " << P.A[static_cast<size_t>(i)]
                           << "  B_" << i << " = " << P.B[static_cast<size_t>(i)] << "\n";
                buffer << "Atilde_0 = " << P.Atilde0 << "  Btilde_0 = " << P.Btilde0 << "\n";
                buffer << "Atilde_n = " << P.Atilden << "  Btilde_n = " << P.Btilden << "\n";
                buffer << "fe_a = " << P.fe_a << "  fe_b = " << P.fe_b << "\n";
            }
        } else if (*absc_cmd) {
            AbscissaReport rep = abscissa(opt.m, opt.n);
            if (as_json) {
                json result{{"alpha", rat_json(rep.alpha)},
                            {"beta", rat_json(rep.beta)},
                            {"regime", regime_name(rep.regime)},
                            {"in_exceptional_set", rep.in_exceptional_set}};
                buffer << json{{"query", {{"command", "abscissa"}, {"m", opt.m}, {"n", opt.n}}},
                               {"result", result}}
                              .dump(2)
                       << "\n";
            } else {
                buffer << "alpha = " << rat_text(rep.alpha) << "\n"
                       << "beta  = " << rat_text(rep.beta) << "\n"
                       << "regime = " << regime_name(rep.regime)
                       << "  exceptional = " << (rep.in_exceptional_set ? "yes" : "no") << "\n";
            }
        } else if (*fm_cmd) {
            IntPolynomial f = f_m_polynomial(opt.m);
            if (as_json) {
                json coeffs = json::array();
                for (const auto& c : f.coeffs) coeffs.push_back(int_json(c));
                buffer << json{{"query", {{"command", "fm"}, {"m", opt.m}}},
                               {"result", {{"coefficients_ascending", coeffs}}}}
                              .dump(2)
                       << "\n";
            } else {
                buffer << "f_" << opt.m << " = " << f.to_text() << "\n";
            }
        } else if (*oracle_cmd) {
            TruncatedSeries direct = cone_series(opt.m, opt.n, opt.depth);
            TruncatedSeries closed = local_zeta(opt.m, opt.n).series_expand(opt.depth);
            const bool match = direct == closed;
            if (as_json) {
                json coeffs = json::array();
                for (int k = 0; k <= opt.depth; ++k) coeffs.push_back(direct.coefficient_text(k));
                buffer << json{{"query",
                                {{"command", "oracle"}, {"m", opt.m}, {"n", opt.n}, {"depth", opt.depth}}},
                               {"result", {{"coefficients", coeffs}}},
                               {"pass", match}}
                              .dump(2)
                       << "\n";
            } else {
                for (int k = 0; k <= opt.depth; ++k)
                    buffer << "a[p^" << k << "] = " << direct.coefficient_text(k) << "\n";
                buffer << (match ? "cone sum matches closed form\n"
                                 : "MISMATCH between cone sum and closed form\n");
            }
            code = match ? 0 : 1;
        } else if (*scan_cmd) {
            int m_max = opt.m_max > 0 ? opt.m_max : 500;
            int n_max = opt.n_max > 0 ? opt.n_max : 20;
            auto colon = opt.window.find(':');
            if (colon == std::string::npos) throw CLI::ValidationError("--window expects lo:hi");
            Rat lo = parse_rat(opt.window.substr(0, colon));
            Rat hi = parse_rat(opt.window.substr(colon + 1));
            auto rows = scan_abscissae(m_max, n_max, lo, hi);
            if (as_json) {
                json arr = json::array();
                for (const auto& r : rows)
                    arr.push_back(json{{"m", r.m},
                                       {"n", r.n},
                                       {"alpha", rat_json(r.alpha)},
                                       {"regime", regime_name(r.regime)}});
                buffer << json{{"query",
                                {{"command", "scan"}, {"m_max", m_max}, {"n_max", n_max},
                                 {"window", opt.window}}},
                               {"result", arr}}
                              .dump(2)
                       << "\n";
            } else {
                buffer << scan_to_csv(rows);
            }
        } else if (*verify_cmd) {
            Reporter rep(buffer, as_json);
            const bool has_m = verify_cmd->count("--m") > 0;
            const bool has_n = verify_cmd->count("--n") > 0;
            const int m_max = opt.m_max > 0 ? opt.m_max : 0;
            const int n_max = opt.n_max > 0 ? opt.n_max : 0;
            if (claim == "dstar") {
                verify_dstar(rep, has_m ? opt.m : 1, has_m ? opt.m : (m_max ? m_max : 6));
            } else if (claim == "grenham") {
                verify_grenham(rep, has_n ? opt.n : 2, has_n ? opt.n : (n_max ? n_max : 6));
            } else if (claim == "fn-eq") {
                verify_fn_eq(rep, opt.m, opt.n);
            } else if (claim == "oracle") {
                verify_oracle(rep, opt.m, opt.n, opt.depth);
            } else if (claim == "relations") {
                verify_relations(rep, m_max ? m_max : 60, n_max ? n_max : 20);
            } else if (claim == "convexity") {
                verify_convexity(rep, m_max ? m_max : 30, n_max ? n_max : 20);
            } else if (claim == "fm") {
                verify_fm(rep, has_m ? opt.m : (m_max ? m_max : 6), n_max ? n_max : 40);
            } else if (claim == "limits") {
                verify_limits(rep, has_n ? opt.n : (n_max ? n_max : 7), m_max ? m_max : 500);
            } else if (claim == "c-set") {
                verify_c_set(rep, m_max ? m_max : 40, n_max ? n_max : 60);
            } else if (claim == "all") {
                const int mm = m_max ? m_max : 3;
                const int nn = n_max ? n_max : 4;
                verify_dstar(rep, 1, 6);
                verify_grenham(rep, 2, std::min(6, std::max(2, nn)));
                for (int m = 1; m <= mm; ++m)
                    for (int n = 2; n <= nn; ++n) verify_oracle(rep, m, n, opt.depth);
                verify_relations(rep, 60, 20);
                verify_convexity(rep, 30, 20);
            }
            json query{{"command", "verify"}, {"claim", claim}};
            code = rep.finish(query);
        }
    } catch (const CLI::Error& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "invalid arguments: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    if (!opt.out_path.empty()) {
        std::ofstream f(opt.out_path);
        if (!f) {
            err << "cannot open output file: " << opt.out_path << "\n";
            return 1;
        }
        f << buffer.str();
    } else {
        out << buffer.str();
    }
    return code;
}

}  // namespace prozeta
