#include "iwasawa/scenario.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "iwasawa/parser.hpp"

namespace iwasawa {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
    fail(ErrorCode::ValidationError, "scenario " + where + ": " + what);
}

const json& need(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) bad(where, std::string("missing key '") + key + "'");
    return *it;
}

u64 as_u64(const json& v, const std::string& where) {
    if (!v.is_number_integer() || v.get<i64>() < 0) bad(where, "expected a nonnegative integer");
    return v.get<u64>();
}

std::string as_string(const json& v, const std::string& where) {
    if (!v.is_string()) bad(where, "expected a string");
    return v.get<std::string>();
}

GroupWord as_word(const json& v, unsigned nvars, const std::string& where) {
    if (v.is_string()) return parse_group_word(v.get<std::string>(), nvars);
    if (!v.is_array()) bad(where, "expected a group word");
    GroupWord w;
    for (const auto& a : v) {
        if (!a.is_number_integer()) bad(where, "group word entries must be integers");
        w.exponents.push_back(a.get<i64>());
    }
    if (w.size() != nvars) {
        fail(ErrorCode::ShapeMismatch, "scenario " + where + ": word has " + std::to_string(w.size()) +
                                           " entries, expected " + std::to_string(nvars));
    }
    return w;
}

CycloInt as_cyclo(const json& v, const RingSpec& spec, const std::string& where) {
    if (v.is_number_integer()) return CycloInt::constant(spec.p, 0, spec.precision, v.get<i64>());
    if (v.is_string()) {
        IwasawaElement c = parse_and_elaborate(v.get<std::string>(), spec.with_nvars(0));
        return CycloInt::from_padic(c.coeff(Monomial{}), 0);
    }
    if (v.is_object()) {
        unsigned level = static_cast<unsigned>(as_u64(need(v, "level", where), where + ".level"));
        std::vector<u64> coeffs;
        const u64 mod = spec.modulus();
        for (const auto& c : need(v, "coeffs", where)) {
            if (!c.is_number_integer()) bad(where, "coefficients must be integers");
            coeffs.push_back(reduce_signed(c.get<i64>(), mod));
        }
        return CycloInt::from_coeffs(spec.p, level, spec.precision, coeffs);
    }
    bad(where, "expected an eigenvalue descriptor");
}

json cyclo_json(const CycloInt& c) {
    if (c.level() == 0) return c.coeffs()[0];
    return json{{"level", c.level()}, {"coeffs", c.coeffs()}};
}

json word_json(const GroupWord& w) { return w.exponents; }

Place parse_place(const json& v, const Scenario& s, std::size_t index) {
    std::string where = "places[" + std::to_string(index) + "]";
    if (!v.is_object()) bad(where, "expected an object");
    Place out;
    out.name = v.contains("name") ? as_string(v["name"], where + ".name") : "v" + std::to_string(index + 1);
    const std::string type = as_string(need(v, "type", where), where + ".type");
    const RingSpec lower = s.lower();
    if (type == "good_ordinary") {
        GoodOrdinary g;
        for (const auto& a : need(v, "alphas", where)) g.alphas.push_back(as_cyclo(a, lower, where + ".alphas"));
        const json& f = need(v, "frobenius_word", where);
        if (!(f.is_string() && f.get<std::string>() == "RAMIFIED")) g.frobenius = as_word(f, lower.nvars, where);
        out.data = std::move(g);
    } else if (type == "split_multiplicative") {
        SplitMultiplicative m;
        m.g = static_cast<unsigned>(v.contains("g") ? as_u64(v["g"], where + ".g") : 1);
        const json& rows = need(v, "reciprocity", where);
        if (!rows.is_array() || rows.empty()) bad(where, "reciprocity must be a non-empty list of rows");
        std::vector<std::vector<i64>> r;
        for (const auto& row : rows) {
            if (!row.is_array()) bad(where, "reciprocity rows must be lists");
            std::vector<i64> entries;
            for (const auto& e : row) {
                if (!e.is_number_integer()) bad(where, "reciprocity entries must be integers");
                entries.push_back(e.get<i64>());
            }
            if (!r.empty() && entries.size() != r.front().size()) {
                fail(ErrorCode::ShapeMismatch, "scenario " + where + ": ragged reciprocity matrix");
            }
            r.push_back(std::move(entries));
        }
        m.reciprocity = ZpMatrix::from_rows(s.top.p, s.top.precision, r);
        m.gamma_v_rank = static_cast<unsigned>(as_u64(need(v, "gamma_v_rank", where), where + ".gamma_v_rank"));
        m.psi_v_rank = static_cast<unsigned>(as_u64(need(v, "psi_v_rank", where), where + ".psi_v_rank"));
        if (m.psi_v_rank > 1) bad(where, "psi_v_rank must be 0 or 1");
        if (v.contains("sigma_word") && !v["sigma_word"].is_null()) m.sigma = as_word(v["sigma_word"], lower.nvars, where);
        if (v.contains("decomposition_words"))
            for (const auto& w : v["decomposition_words"]) m.decomposition_words.push_back(as_word(w, s.top.nvars, where));
        out.data = std::move(m);
    } else if (type == "unramified_bad") {
        UnramifiedBad u;
        u.pi_v_order = as_u64(need(v, "pi_v_order", where), where + ".pi_v_order");
        const json& psi = need(v, "psi_v_nontrivial", where);
        if (!psi.is_boolean()) bad(where, "psi_v_nontrivial must be a boolean");
        u.psi_v_nontrivial = psi.get<bool>();
        out.data = u;
    } else {
        bad(where, "unknown place type '" + type + "'");
    }
    return out;
}

}  // namespace

IwasawaElement Scenario::theta_l_element() const { return parse_and_elaborate(theta_l, top); }
IwasawaElement Scenario::theta_lp_element() const { return parse_and_elaborate(theta_lp, lower()); }

Scenario parse_scenario(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SyntaxError(e.byte ? e.byte - 1 : 0, std::string("scenario is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) bad("root", "expected an object");
    if (doc.contains("format") && as_string(doc["format"], "format") != kScenarioVersion) {
        bad("format", "unsupported version '" + doc["format"].get<std::string>() + "'");
    }
    Scenario s;
    s.top.p = as_u64(need(doc, "p", "root"), "p");
    s.top.nvars = static_cast<unsigned>(as_u64(need(doc, "d", "root"), "d"));
    if (s.top.nvars < 1) bad("d", "tower dimension must be at least 1");
    s.top.precision = static_cast<unsigned>(doc.contains("precision") ? as_u64(doc["precision"], "precision") : 8);
    s.top.degree_bound =
        static_cast<unsigned>(doc.contains("degree_bound") ? as_u64(doc["degree_bound"], "degree_bound") : 8);
    s.top.validate();
    s.theta_l = as_string(need(doc, "theta_L", "root"), "theta_L");
    s.theta_lp = as_string(need(doc, "theta_Lprime", "root"), "theta_Lprime");

    const json& g = need(doc, "global", "root");
    const std::string mode = as_string(need(g, "mode", "global"), "global.mode");
    if (mode == "d1") {
        s.global.mode = GlobalTorsionData::Mode::D1;
        s.global.order_k = as_u64(need(g, "order_K", "global"), "global.order_K");
        s.global.order_meet = as_u64(need(g, "order_meet", "global"), "global.order_meet");
    } else if (mode == "eigen") {
        s.global.mode = GlobalTorsionData::Mode::Eigen;
        const RingSpec lower = s.lower();
        if (g.contains("eps"))
            for (const auto& e : g["eps"]) s.global.eps.push_back(as_cyclo(e, lower, "global.eps"));
        s.global.sigma = g.contains("sigma_word") ? as_word(g["sigma_word"], lower.nvars, "global.sigma_word")
                                                  : GroupWord{std::vector<i64>(lower.nvars, 0)};
    } else {
        bad("global.mode", "expected \"d1\" or \"eigen\"");
    }
    if (doc.contains("places")) {
        const json& ps = doc["places"];
        if (!ps.is_array()) bad("places", "expected a list");
        for (std::size_t i = 0; i < ps.size(); ++i) s.places.push_back(parse_place(ps[i], s, i));
    }
    // elaborate eagerly so that syntax errors surface at load time
    (void)s.theta_l_element();
    (void)s.theta_lp_element();
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::ValidationError, "cannot read scenario file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_scenario(ss.str());
}

std::string scenario_to_json(const Scenario& s) {
    json doc;
    doc["format"] = kScenarioVersion;
    doc["p"] = s.top.p;
    doc["d"] = s.top.nvars;
    doc["precision"] = s.top.precision;
    doc["degree_bound"] = s.top.degree_bound;
    doc["theta_L"] = s.theta_l;
    doc["theta_Lprime"] = s.theta_lp;
    json g;
    if (s.global.mode == GlobalTorsionData::Mode::D1) {
        g["mode"] = "d1";
        g["order_K"] = s.global.order_k;
        g["order_meet"] = s.global.order_meet;
    } else {
        g["mode"] = "eigen";
        g["eps"] = json::array();
        for (const auto& e : s.global.eps) g["eps"].push_back(cyclo_json(e));
        g["sigma_word"] = word_json(s.global.sigma);
    }
    doc["global"] = g;
    doc["places"] = json::array();
    for (const auto& v : s.places) {
        json pj{{"name", v.name}, {"type", place_type(v)}};
        if (const auto* go = std::get_if<GoodOrdinary>(&v.data)) {
            pj["alphas"] = json::array();
            for (const auto& a : go->alphas) pj["alphas"].push_back(cyclo_json(a));
            pj["frobenius_word"] = go->frobenius ? word_json(*go->frobenius) : json("RAMIFIED");
        } else if (const auto* sm = std::get_if<SplitMultiplicative>(&v.data)) {
            pj["g"] = sm->g;
            json rows = json::array();
            for (std::size_t i = 0; i < sm->reciprocity.rows(); ++i) {
                json row = json::array();
                for (std::size_t j = 0; j < sm->reciprocity.cols(); ++j) row.push_back(sm->reciprocity.residue(i, j));
                rows.push_back(row);
            }
            pj["reciprocity"] = rows;
            pj["gamma_v_rank"] = sm->gamma_v_rank;
            pj["psi_v_rank"] = sm->psi_v_rank;
            pj["sigma_word"] = sm->sigma ? word_json(*sm->sigma) : json(nullptr);
            pj["decomposition_words"] = json::array();
            for (const auto& w : sm->decomposition_words) pj["decomposition_words"].push_back(word_json(w));
        } else {
            const auto& u = std::get<UnramifiedBad>(v.data);
            pj["pi_v_order"] = u.pi_v_order;
            pj["psi_v_nontrivial"] = u.psi_v_nontrivial;
        }
        doc["places"].push_back(pj);
    }
    return doc.dump(2);
}

std::string report_to_json(const CompatibilityReport& r) {
    json doc;
    doc["format"] = kReportVersion;
    doc["command"] = "check";
    doc["verdict"] = to_string(r.verdict);
    doc["p"] = r.top.p;
    doc["d"] = r.top.nvars;
    doc["precision"] = r.top.precision;
    doc["degree_bound"] = r.top.degree_bound;
    doc["lhs"] = r.lhs;
    doc["rhs"] = r.rhs;
    doc["factors"] = json::array();
    for (const auto& f : r.factors) {
        doc["factors"].push_back(json{{"name", f.name},
                                      {"role", f.role},
                                      {"value", f.value},
                                      {"kind", to_string(f.kind)},
                                      {"approximate", f.approximate}});
    }
    doc["notes"] = r.notes;
    return doc.dump(2);
}

std::string screen_to_json(const ScreenResult& r) {
    json doc;
    doc["format"] = kReportVersion;
    doc["command"] = "screen";
    doc["classification"] = to_string(r.kind);
    doc["obstructing_places"] = r.obstructing_places;
    doc["specialization"] = r.specialization;
    doc["specialization_vanishes"] = r.specialization_vanishes;
    doc["approximate"] = r.approximate;
    return doc.dump(2);
}

}  // namespace iwasawa
