#include "iwasawa/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "iwasawa/growth.hpp"
#include "iwasawa/parser.hpp"
#include "iwasawa/scenario.hpp"

namespace iwasawa {

using ojson = nlohmann::ordered_json;

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::PrecisionInconclusive:
        case ErrorCode::BudgetExceeded:
        case ErrorCode::NotStabilized:
        case ErrorCode::DegreeOverflow: return 3;
        default: return 2;
    }
}

void RunConfig::validate() const {
    if (precision && *precision < 1) fail(ErrorCode::ValidationError, "precision must be at least 1");
    if (degree_bound && *degree_bound < 1) fail(ErrorCode::ValidationError, "degree bound must be at least 1");
    if (budget < 1) fail(ErrorCode::ValidationError, "budget must be at least 1");
    if (n_min > n_max) fail(ErrorCode::ValidationError, "--n-min exceeds --n-max");
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::ValidationError, "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RingSpec spec_of(const RunConfig& c) {
    if (!c.p) fail(ErrorCode::ValidationError, "--p is required");
    RingSpec s{*c.p, c.precision.value_or(8), c.d.value_or(1), c.degree_bound.value_or(8)};
    if (s.p < 2) fail(ErrorCode::ValidationError, "p must be a prime");
    for (u64 q = 2; q * q <= s.p; ++q)
        if (s.p % q == 0) fail(ErrorCode::ValidationError, std::to_string(s.p) + " is not prime");
    s.validate();
    return s;
}

EnumerationOptions enum_opts(const RunConfig& c) { return EnumerationOptions{c.budget, c.threads}; }

std::vector<IwasawaElement> parse_gens(const RunConfig& c, const RingSpec& s) {
    std::vector<IwasawaElement> out;
    for (const auto& g : c.gens)
        for (const auto& piece : split(g, ',')) out.push_back(parse_and_elaborate(piece, s));
    if (out.empty()) fail(ErrorCode::ValidationError, "--gens is required");
    return out;
}

RootOfUnity root_of_order(u64 p, u64 order, u64 exp) {
    unsigned m = 0;
    u64 o = order;
    while (o > 1 && o % p == 0) {
        o /= p;
        ++m;
    }
    if (order == 0 || o != 1) fail(ErrorCode::ValidationError, "root of unity order must be a power of p");
    if (m > 0 && exp % p == 0) fail(ErrorCode::ValidationError, "root of unity exponent must be prime to p");
    return RootOfUnity(p, m, exp);
}

/// "WORD:ORDER[:EXP]"
FlatConstraint parse_flat(const std::string& src, u64 p, unsigned nvars) {
    auto parts = split(src, ':');
    if (parts.size() < 2 || parts.size() > 3) {
        fail(ErrorCode::ValidationError, "flat constraint '" + src + "' is not WORD:ORDER[:EXP]");
    }
    auto num = [&](const std::string& t) {
        try {
            std::size_t used = 0;
            unsigned long long v = std::stoull(t, &used);
            if (used != t.size()) throw std::invalid_argument(t);
            return static_cast<u64>(v);
        } catch (const std::exception&) {
            fail(ErrorCode::ValidationError, "bad number '" + t + "' in flat constraint");
        }
    };
    GroupWord w = parse_group_word(parts[0], nvars);
    return FlatConstraint{w, root_of_order(p, num(parts[1]), parts.size() == 3 ? num(parts[2]) : 1)};
}

std::string text(const CycloInt& c) {
    std::ostringstream ss;
    ss << c;
    return ss.str();
}

std::string ideal_text(const CharIdeal& c) { return c.is_zero_ideal() ? "ZeroIdeal" : c.generator().to_string(); }

/// Elementary data from --summand flags or {summands, presentation} in the input file.
struct ModuleInput {
    std::optional<ElementaryModule> elementary;
    std::optional<PresentedModule> presented;
};

ModuleInput module_input(const RunConfig& c, const RingSpec& s) {
    ModuleInput m;
    if (!c.inputs.empty()) {
        ojson doc;
        try {
            doc = ojson::parse(read_file(c.inputs[0]));
        } catch (const ojson::parse_error& e) {
            throw SyntaxError(e.byte ? e.byte - 1 : 0, std::string("module file is not valid JSON: ") + e.what());
        }
        const bool has_s = doc.contains("summands") && !doc["summands"].is_null();
        const bool has_p = doc.contains("presentation") && !doc["presentation"].is_null();
        if (has_s == has_p) fail(ErrorCode::ValidationError, "exactly one of summands and presentation must be set");
        if (has_s) {
            ElementaryModule w{s, {}};
            for (const auto& e : doc["summands"]) {
                Summand su{parse_and_elaborate(e.at("xi").get<std::string>(), s), e.value("r", 1u), e.value("a", 1u)};
                w.summands.push_back(std::move(su));
            }
            m.elementary = std::move(w);
        } else {
            PresentedModule w{s, {}};
            for (const auto& row : doc["presentation"]) {
                std::vector<IwasawaElement> r;
                for (const auto& e : row) r.push_back(parse_and_elaborate(e.get<std::string>(), s));
                w.matrix.push_back(std::move(r));
            }
            m.presented = std::move(w);
        }
        return m;
    }
    if (!c.matrix.empty()) {
        PresentedModule w{s, {}};
        for (const auto& row : split(c.matrix, ';')) {
            std::vector<IwasawaElement> r;
            for (const auto& e : split(row, ',')) r.push_back(parse_and_elaborate(e, s));
            w.matrix.push_back(std::move(r));
        }
        m.presented = std::move(w);
        return m;
    }
    if (c.summands.empty()) fail(ErrorCode::ValidationError, "give --summand, --matrix or a module file");
    ElementaryModule w{s, {}};
    for (const auto& spec : c.summands) {
        auto parts = split(spec, ':');
        if (parts.size() > 3) fail(ErrorCode::ValidationError, "summand '" + spec + "' is not XI[:R[:A]]");
        auto num = [&](std::size_t i) -> unsigned {
            if (i >= parts.size()) return 1;
            try {
                return static_cast<unsigned>(std::stoul(parts[i]));
            } catch (const std::exception&) {
                fail(ErrorCode::ValidationError, "bad multiplicity '" + parts[i] + "'");
            }
        };
        w.summands.push_back(Summand{parse_and_elaborate(parts[0], s), num(1), num(2)});
    }
    m.elementary = std::move(w);
    return m;
}

Scenario scenario_input(const RunConfig& c) {
    if (c.inputs.empty()) fail(ErrorCode::ValidationError, "a scenario file is required");
    const std::string raw = read_file(c.inputs[0]);
    if (!c.p && !c.d && !c.precision && !c.degree_bound) return parse_scenario(raw);
    ojson doc;
    try {
        doc = ojson::parse(raw);
    } catch (const ojson::parse_error&) {
        return parse_scenario(raw);
    }
    if (c.p) doc["p"] = *c.p;
    if (c.d) doc["d"] = *c.d;
    if (c.precision) doc["precision"] = *c.precision;
    if (c.degree_bound) doc["degree_bound"] = *c.degree_bound;
    return parse_scenario(doc.dump());
}

// ---------------------------------------------------------------------------
// output

std::string scalar_text(const ojson& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    return v.dump();
}

void print_table(const ojson& doc, std::ostream& out) {
    for (const auto& [key, v] : doc.items()) {
        if (key == "format" || key == "command") continue;
        if (v.is_array() && !v.empty() && v.front().is_object()) {
            out << key << ":\n";
            std::vector<std::string> cols;
            for (const auto& [k, _] : v.front().items()) cols.push_back(k);
            std::vector<std::vector<std::string>> cells{cols};
            for (const auto& row : v) {
                std::vector<std::string> r;
                for (const auto& k : cols) r.push_back(row.contains(k) ? scalar_text(row[k]) : "-");
                cells.push_back(std::move(r));
            }
            std::vector<std::size_t> width(cols.size(), 0);
            for (const auto& r : cells)
                for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
            for (const auto& r : cells) {
                out << "  ";
                for (std::size_t i = 0; i < r.size(); ++i) {
                    out << r[i];
                    if (i + 1 < r.size()) out << std::string(width[i] - r[i].size() + 2, ' ');
                }
                out << '\n';
            }
        } else if (v.is_array()) {
            out << key << ": ";
            for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar_text(v[i]);
            out << '\n';
        } else {
            out << key << ": " << scalar_text(v) << '\n';
        }
    }
}

ojson header(const RunConfig& c) {
    ojson doc;
    doc["format"] = kReportVersion;
    doc["command"] = c.command;
    return doc;
}

void emit(const RunConfig& c, const ojson& doc, std::ostream& out) {
    if (c.format == RunConfig::Format::Json) out << doc.dump(2) << '\n';
    else print_table(doc, out);
}

/// Single-element commands print the bare element in table mode.
void emit_element(const RunConfig& c, ojson doc, const IwasawaElement& x, std::ostream& out) {
    doc["element"] = x.to_string();
    doc["truncated"] = x.truncated();
    if (c.format == RunConfig::Format::Json) out << doc.dump(2) << '\n';
    else out << x.to_string() << '\n';
}

int verdict_exit(Verdict v) {
    switch (v) {
        case Verdict::Pass: return 0;
        case Verdict::Fail: return 1;
        case Verdict::Inconclusive: return 3;
    }
    return 2;
}

ojson factor_rows(const std::vector<FactorEntry>& fs) {
    ojson rows = ojson::array();
    for (const auto& f : fs) {
        rows.push_back(ojson{{"name", f.name},
                             {"role", f.role},
                             {"value", f.value},
                             {"kind", to_string(f.kind)},
                             {"approximate", f.approximate}});
    }
    return rows;
}

// ---------------------------------------------------------------------------
// commands

int cmd_eval(const RunConfig& c, std::ostream& out) {
    RingSpec s = spec_of(c);
    IwasawaElement x = parse_and_elaborate(c.expr, s);
    Character w = parse_character(c.character, s.p, s.nvars);
    CycloInt v = eval_char(x, w);
    ojson doc = header(c);
    doc["element"] = x.to_string();
    std::ostringstream ws;
    ws << w;
    doc["character"] = ws.str();
    doc["value"] = text(v);
    doc["vanishes"] = v.is_zero();
    doc["approximate"] = x.truncated();
    emit(c, doc, out);
    return 0;
}

int cmd_simple(const RunConfig& c, std::ostream& out) {
    RunConfig cc = c;
    if (!cc.d) cc.d = 1;
    RingSpec s = spec_of(cc);
    GroupWord g = parse_group_word(c.gamma, s.nvars);
    RootOfUnity z = root_of_order(s.p, c.zeta_order, c.zeta_exp);
    if (!c.degree_bound) {
        i64 deg = 0;
        bool nonneg = true;
        for (i64 a : g.exponents) {
            deg += a;
            nonneg = nonneg && a >= 0;
        }
        if (nonneg) s.degree_bound = std::max<unsigned>(s.degree_bound, static_cast<unsigned>(deg * degree_delta(z)));
        s.validate();
    }
    IwasawaElement f = simple_element(s, g, z);
    ojson doc = header(c);
    doc["degree_bound"] = s.degree_bound;
    emit_element(c, doc, f, out);
    return 0;
}

int cmd_unary(const RunConfig& c, std::ostream& out) {
    RingSpec s = spec_of(c);
    IwasawaElement x = parse_and_elaborate(c.expr, s);
    IwasawaElement y = c.command == "sharp" ? sharp(x) : specialize_canonical(x);
    emit_element(c, header(c), y, out);
    return 0;
}

int cmd_zeroset(const RunConfig& c, std::ostream& out) {
    RingSpec s = spec_of(c);
    ojson doc = header(c);
    doc["n"] = c.n;
    if (!c.flats.empty()) {
        std::vector<FlatConstraint> cons;
        for (const auto& f : c.flats) cons.push_back(parse_flat(f, s.p, s.nvars));
        ZpFlat t(s.p, s.nvars, cons);
        doc["codim"] = t.codim();
        doc["flat_count"] = flat_count(t, c.n);
        if (c.enumerate) doc["enumerated"] = flat_count_enumerated(t, c.n, enum_opts(c));
        emit(c, doc, out);
        return 0;
    }
    auto gens = parse_gens(c, s);
    if (c.list) {
        auto zs = zero_set(gens, c.n, enum_opts(c));
        doc["count"] = zs.size();
        ojson rows = ojson::array();
        for (const auto& e : zs) {
            std::ostringstream ss;
            ss << Character(s.p, c.n, e);
            rows.push_back(ss.str());
        }
        doc["characters"] = rows;
    } else {
        ZeroSetReport r = zero_count(gens, c.n, enum_opts(c));
        doc["count"] = r.count;
    }
    doc["precision"] = s.precision;
    doc["degree_bound"] = s.degree_bound;
    emit(c, doc, out);
    return 0;
}

int cmd_charideal(const RunConfig& c, std::ostream& out) {
    RingSpec s = spec_of(c);
    ModuleInput m = module_input(c, s);
    ojson doc = header(c);
    if (m.elementary) {
        doc["kind"] = "elementary";
        IwasawaElement g = char_ideal_elementary(*m.elementary);
        doc["char_ideal"] = g.to_string();
        doc["approximate"] = g.truncated();
    } else {
        doc["kind"] = "presented";
        CharIdeal g = char_ideal_presented(*m.presented);
        doc["char_ideal"] = ideal_text(g);
        doc["approximate"] = !g.is_zero_ideal() && g.generator().truncated();
    }
    emit(c, doc, out);
    return 0;
}

int cmd_descent(const RunConfig& c, std::ostream& out) {
    RunConfig cc = c;
    if (!cc.d) cc.d = 2;
    RingSpec s = spec_of(cc);
    ModuleInput m = module_input(cc, s);
    if (!m.elementary) fail(ErrorCode::ValidationError, "descent needs elementary data");
    DescentCheck chk = verify_descent_identity(*m.elementary);
    ojson doc = header(c);
    if (chk.descent) {
        doc["invariants"] = ideal_text(chk.descent->invariants);
        doc["coinvariants"] = ideal_text(chk.descent->coinvariants);
    }
    doc["verdict"] = to_string(chk.verdict);
    doc["detail"] = chk.detail;
    emit(c, doc, out);
    return verdict_exit(chk.verdict);
}

int cmd_factors(const RunConfig& c, std::ostream& out) {
    Scenario sc = scenario_input(c);
    const RingSpec lower = sc.lower();
    ojson doc = header(c);
    ojson rows = ojson::array();
    bool inconclusive = false;
    auto row = [&](const std::string& name, const std::string& role, auto compute) {
        ojson r{{"name", name}, {"role", role}};
        try {
            r["value"] = compute();
            r["kind"] = "pass";
        } catch (const Error& e) {
            if (e.code() != ErrorCode::PrecisionInconclusive) throw;
            r["value"] = e.what();
            r["kind"] = "inconclusive";
            inconclusive = true;
        }
        rows.push_back(r);
    };
    row("rho", "rho", [&] { return rho_factor(sc.top, sc.global).to_string(); });
    for (const auto& v : sc.places) {
        if (const auto* go = std::get_if<GoodOrdinary>(&v.data); go && go->frobenius) {
            row(v.name, "f", [&] { return f_ordinary(lower, *go).to_string(); });
        }
        if (const auto* sm = std::get_if<SplitMultiplicative>(&v.data)) {
            row(v.name, "frak_w", [&] {
                FrakW w = frak_w_v(*sm);
                return w.zero_ideal ? std::string("ZeroIdeal") : "p^" + std::to_string(w.exponent);
            });
        }
        row(v.name, "theta_v:" + std::string(place_type(v)), [&] { return ideal_text(theta_v(lower, v)); });
    }
    doc["p"] = sc.top.p;
    doc["d"] = sc.top.nvars;
    doc["factors"] = rows;
    emit(c, doc, out);
    return inconclusive ? 3 : 0;
}

int cmd_check(const RunConfig& c, std::ostream& out) {
    Scenario sc = scenario_input(c);
    CompatibilityReport rep = check_compatibility(sc.theta_l_element(), sc.theta_lp_element(), sc.places, sc.global);
    ojson doc = header(c);
    doc["p"] = rep.top.p;
    doc["d"] = rep.top.nvars;
    doc["precision"] = rep.top.precision;
    doc["degree_bound"] = rep.top.degree_bound;
    doc["factors"] = factor_rows(rep.factors);
    doc["lhs"] = rep.lhs;
    doc["rhs"] = rep.rhs;
    doc["notes"] = rep.notes;
    doc["verdict"] = to_string(rep.verdict);
    emit(c, doc, out);
    return verdict_exit(rep.verdict);
}

int cmd_screen(const RunConfig& c, std::ostream& out) {
    Scenario sc = scenario_input(c);
    std::vector<unsigned> idx;
    if (c.kill.empty()) idx.push_back(sc.top.nvars - 1);
    for (unsigned k : c.kill) {
        if (k < 1 || k > sc.top.nvars) fail(ErrorCode::IndexError, "--kill index " + std::to_string(k) + " outside [1, d]");
        idx.push_back(k - 1);
    }
    ScreenResult r = nontorsion_screen(sc.theta_l_element(), sc.places, idx);
    ojson doc = header(c);
    doc["classification"] = to_string(r.kind);
    doc["obstructing_places"] = r.obstructing_places;
    doc["specialization"] = r.specialization;
    doc["specialization_vanishes"] = r.specialization_vanishes;
    doc["approximate"] = r.approximate;
    emit(c, doc, out);
    return 0;
}

int cmd_growth(const RunConfig& c, std::ostream& out, std::ostream& err) {
    RingSpec s = spec_of(c);
    auto gens = parse_gens(c, s);
    GrowthSeries series{s.p, s.nvars, {}};
    ojson doc = header(c);
    ojson rows = ojson::array();
    for (unsigned n = c.n_min; n <= c.n_max; ++n) {
        u64 count = rank_quotient(gens, n, enum_opts(c));
        series.samples.emplace_back(n, count);
        rows.push_back(ojson{{"n", n}, {"count", count}});
    }
    doc["samples"] = rows;
    int code = 0;
    if (series.samples.size() >= 3) {
        try {
            KappaFit fit = fit_kappas(series);
            ojson est = ojson::array();
            for (std::size_t i = 0; i < fit.residuals.size(); ++i) {
                const auto& r = fit.residuals[i];
                est.push_back(ojson{{"n", r.n},
                                    {"kappa1_estimate", fit.estimates1[i]},
                                    {"kappa2_estimate", fit.estimates2[i]},
                                    {"residual", static_cast<i64>(r.residual)},
                                    {"scale", r.scale}});
            }
            doc["estimates"] = est;
            doc["kappa1"] = fit.kappa1;
            doc["kappa2"] = fit.kappa2;
            doc["threshold_n"] = series.samples[std::max(fit.threshold1, fit.threshold2)].first;
            doc["pseudo_null_on_range"] = fit.pseudo_null;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NotStabilized) throw;
            err << "error: " << e.what() << '\n';
            doc["kappa1"] = nullptr;
            doc["kappa2"] = nullptr;
            code = 3;
        }
    }
    emit(c, doc, out);
    return code;
}

}  // namespace

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
    try {
        c.validate();
        const std::string& cmd = c.command;
        // build into a buffer so that failed runs print nothing on the report stream
        std::ostringstream buf;
        int code = 2;
        if (cmd == "eval") code = cmd_eval(c, buf);
        else if (cmd == "simple") code = cmd_simple(c, buf);
        else if (cmd == "specialize" || cmd == "sharp") code = cmd_unary(c, buf);
        else if (cmd == "zeroset") code = cmd_zeroset(c, buf);
        else if (cmd == "charideal") code = cmd_charideal(c, buf);
        else if (cmd == "descent") code = cmd_descent(c, buf);
        else if (cmd == "factors") code = cmd_factors(c, buf);
        else if (cmd == "check") code = cmd_check(c, buf);
        else if (cmd == "screen") code = cmd_screen(c, buf);
        else if (cmd == "growth") code = cmd_growth(c, buf, err);
        else fail(ErrorCode::ValidationError, "unknown command '" + cmd + "'");
        out << buf.str();
        return code;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const nlohmann::json::exception& e) {
        err << "error: ValidationError: " << e.what() << '\n';
        return 2;
    }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact arithmetic in truncated Iwasawa algebras Z_p[[t_1..t_d]]"};
    app.footer(std::string("Elements use ") + std::string(kGrammarVersion) +
               ": sums, products and powers of integers, p, t1..td and g1..gd (g = 1 + t), "
               "e.g. \"g1^-1 - 1 + 3 t1 t2\".\n"
               "Scenario files are " + std::string(kScenarioVersion) + " JSON; reports are " +
               std::string(kReportVersion) + ".\n"
               "Exit codes: 0 pass, 1 verification failed, 2 parse/config error, 3 inconclusive.");
    app.require_subcommand(1);
    RunConfig c;
    std::string format = "table";

    auto common = [&](CLI::App* sub) {
        sub->add_option("--p", c.p, "prime");
        sub->add_option("--d", c.d, "number of variables");
        sub->add_option("--precision,-N", c.precision, "coefficients modulo p^N (default 8)");
        sub->add_option("--degree-bound,-D", c.degree_bound, "drop monomials of degree > D (default 8)");
        sub->add_option("--budget", c.budget, "maximal number of enumerated characters");
        sub->add_option("--threads", c.threads, "enumeration workers (0 = hardware)");
        sub->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));
        sub->add_option("--seed", c.seed, "seed for randomised runs");
    };
    struct Sub {
        const char* name;
        const char* help;
    };
    const Sub subs[] = {
        {"eval", "evaluate an element at a character"},
        {"specialize", "apply t_d -> 0"},
        {"sharp", "apply gamma -> gamma^-1"},
        {"simple", "print the simple element f_{gamma,zeta}"},
        {"zeroset", "count characters killing the generators, or points of a flat"},
        {"charideal", "characteristic ideal of elementary or presented data"},
        {"descent", "check the descent identity for psi = gamma_d"},
        {"factors", "list the local and global factors of a scenario"},
        {"check", "check the compatibility identity of a scenario"},
        {"screen", "non-torsion screen for an intermediate extension"},
        {"growth", "ranks of Lambda/(I_n + J) and their asymptotic coefficients"},
    };
    for (const auto& s : subs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        common(sub);
        const std::string name = s.name;
        if (name == "eval" || name == "specialize" || name == "sharp") sub->add_option("--expr,-e", c.expr)->required();
        if (name == "eval") sub->add_option("--char", c.character, "\"[e1,...,ed]@M\"")->required();
        if (name == "simple") {
            sub->add_option("--gamma", c.gamma, "\"[a1,...,ad]\"")->required();
            sub->add_option("--zeta-order", c.zeta_order, "order p^m of zeta")->required();
            sub->add_option("--zeta-exp", c.zeta_exp, "zeta = zeta_{p^m}^exp");
        }
        if (name == "zeroset" || name == "growth") sub->add_option("--gens", c.gens, "comma separated generators");
        if (name == "zeroset") {
            sub->add_option("--n", c.n, "level");
            sub->add_option("--flat", c.flats, "constraint WORD:ORDER[:EXP]; repeat for higher codimension");
            sub->add_flag("--enumerate", c.enumerate, "also count the flat by enumeration");
            sub->add_flag("--list", c.list, "list the characters");
        }
        if (name == "growth") {
            sub->add_option("--n-min", c.n_min);
            sub->add_option("--n-max", c.n_max);
        }
        if (name == "charideal" || name == "descent") {
            sub->add_option("--summand", c.summands, "XI[:R[:A]]");
            sub->add_option("--matrix", c.matrix, "rows separated by ';', entries by ','");
        }
        if (name == "screen") sub->add_option("--kill", c.kill, "1-based indices of the gamma_i generating Gal(L/M)");
        if (name == "charideal" || name == "descent" || name == "factors" || name == "check" || name == "screen") {
            sub->add_option("input", c.inputs, "scenario or module JSON file");
        }
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }
    for (auto* sub : app.get_subcommands()) c.command = sub->get_name();
    c.format = format == "json" ? RunConfig::Format::Json : RunConfig::Format::Table;
    return run(c, out, err);
}

}  // namespace iwasawa
