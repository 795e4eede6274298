#include "iwasawa/factors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace iwasawa {

std::vector<PadicInt> packet_polynomial(const std::vector<CycloInt>& alphas, u64 p, unsigned precision) {
    unsigned level = 0;
    for (const auto& a : alphas) {
        if (a.prime() != p || a.precision() != precision) {
            fail(ErrorCode::ShapeMismatch, "eigenvalue has different (p, N) from the ring");
        }
        level = std::max(level, a.level());
    }
    std::vector<CycloInt> poly{CycloInt::constant(p, level, precision, 1)};
    for (const auto& a : alphas) {
        if (!a.is_unit()) {
            std::ostringstream ss;
            ss << "eigenvalue " << a << " is not a unit";
            fail(ErrorCode::NotAUnit, ss.str());
        }
        CycloInt neg_inv = -a.embed(level).inv();
        std::vector<CycloInt> next(poly.size() + 1, CycloInt(p, level, precision));
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k] = next[k] + poly[k];
            next[k + 1] = next[k + 1] + poly[k] * neg_inv;
        }
        poly = std::move(next);
    }
    std::vector<PadicInt> out;
    for (std::size_t k = 0; k < poly.size(); ++k) {
        if (!poly[k].is_rational()) {
            fail(ErrorCode::NotRational, "eigenvalue packet is not closed under conjugation (X^" +
                                             std::to_string(k) + " coefficient leaves Z_p)");
        }
        out.push_back(poly[k].rational_value());
    }
    return out;
}

IwasawaElement evaluate_polynomial(const std::vector<PadicInt>& poly, const IwasawaElement& x) {
    // Horner
    IwasawaElement acc = IwasawaElement::zero(x.spec());
    for (std::size_t k = poly.size(); k-- > 0;) acc = acc * x + IwasawaElement::constant(x.spec(), poly[k]);
    return acc;
}

namespace {

GroupWord inverse_word(const GroupWord& w) {
    GroupWord r = w;
    for (auto& a : r.exponents) a = -a;
    return r;
}

IwasawaElement symmetric_product(const RingSpec& spec, const std::vector<CycloInt>& vals, const GroupWord& w) {
    std::vector<PadicInt> poly = packet_polynomial(vals, spec.p, spec.precision);
    return evaluate_polynomial(poly, group_elem(spec, w)) * evaluate_polynomial(poly, group_elem(spec, inverse_word(w)));
}

std::optional<unsigned> p_power_exponent(u64 x, u64 p) {
    if (x == 0) return std::nullopt;
    unsigned k = 0;
    while (x % p == 0) {
        x /= p;
        ++k;
    }
    if (x != 1) return std::nullopt;
    return k;
}

IwasawaElement p_power(const RingSpec& spec, unsigned k) {
    return IwasawaElement::constant(spec, static_cast<i64>(spec.p)).pow(k);
}

}  // namespace

IwasawaElement w_ideal(const RingSpec& spec, const std::vector<CycloInt>& eps, const GroupWord& sigma) {
    return symmetric_product(spec, eps, sigma);
}

IwasawaElement rho_factor(const RingSpec& spec, const GlobalTorsionData& global) {
    if (spec.nvars == 0) fail(ErrorCode::ValidationError, "tower dimension must be at least 1");
    const RingSpec target = spec.with_nvars(spec.nvars - 1);
    if (spec.nvars >= 3) return IwasawaElement::one(target);
    if (spec.nvars == 2) {
        if (global.mode != GlobalTorsionData::Mode::Eigen) {
            fail(ErrorCode::ValidationError, "d = 2 needs eigenvalue torsion data");
        }
        return w_ideal(target, global.eps, global.sigma);
    }
    if (global.mode != GlobalTorsionData::Mode::D1) {
        fail(ErrorCode::ValidationError, "d = 1 needs torsion orders");
    }
    auto ek = p_power_exponent(global.order_k, spec.p);
    auto em = p_power_exponent(global.order_meet, spec.p);
    if (!ek || !em) fail(ErrorCode::ValidationError, "torsion orders must be powers of p");
    if (*em > *ek) {
        fail(ErrorCode::NonDivisible, "order_meet^2 = " + std::to_string(global.order_meet) +
                                          "^2 does not divide order_K^2 = " + std::to_string(global.order_k) + "^2");
    }
    return p_power(target, 2 * (*ek - *em));
}

std::string_view place_type(const Place& v) {
    switch (v.data.index()) {
        case 0: return "good_ordinary";
        case 1: return "split_multiplicative";
        default: return "unramified_bad";
    }
}

IwasawaElement f_ordinary(const RingSpec& spec, const GoodOrdinary& v) {
    if (!v.frobenius) fail(ErrorCode::ValidationError, "place is ramified in L'/K; no Frobenius");
    return symmetric_product(spec, v.alphas, *v.frobenius);
}

FrakW frak_w_v(const SplitMultiplicative& v) {
    const ZpMatrix& r = v.reciprocity;
    FrakW out;
    if (r.cols() < r.rows()) {
        out.zero_ideal = true;
        return out;
    }
    for (Valuation val : smith_valuations(r)) {
        if (val.is_saturated()) {
            out.zero_ideal = true;
            out.exponent = 0;
            return out;
        }
        out.exponent += val.value();
    }
    return out;
}

CharIdeal theta_v(const RingSpec& spec, const Place& v) {
    if (const auto* u = std::get_if<UnramifiedBad>(&v.data)) {
        if (!u->psi_v_nontrivial) return CharIdeal::unit_ideal(spec);
        auto k = p_power_exponent(u->pi_v_order, spec.p);
        if (!k) fail(ErrorCode::ValidationError, v.name + ": component group order must be a power of p");
        if (*k >= spec.precision) {
            fail(ErrorCode::PrecisionInconclusive, v.name + ": p^" + std::to_string(*k) +
                                                       " is zero at precision " + std::to_string(spec.precision));
        }
        return CharIdeal::generated_by(p_power(spec, *k));
    }
    if (const auto* g = std::get_if<GoodOrdinary>(&v.data)) {
        if (!g->frobenius) return CharIdeal::unit_ideal(spec);
        return CharIdeal::generated_by(f_ordinary(spec, *g));
    }
    const auto& s = std::get<SplitMultiplicative>(v.data);
    if (s.gamma_v_rank == 0) {
        FrakW w = frak_w_v(s);
        if (w.zero_ideal) return CharIdeal::zero_ideal(spec);
        if (w.exponent >= static_cast<long>(spec.precision)) {
            fail(ErrorCode::PrecisionInconclusive, v.name + ": cokernel order p^" + std::to_string(w.exponent) +
                                                       " is zero at precision " + std::to_string(spec.precision));
        }
        return CharIdeal::generated_by(p_power(spec, static_cast<unsigned>(w.exponent)));
    }
    if (s.psi_v_rank == 1 && s.gamma_v_rank == 1) {
        if (!s.sigma) fail(ErrorCode::ValidationError, v.name + ": sigma_word required when Gamma'_v has rank 1");
        IwasawaElement x = group_elem(spec, *s.sigma) - IwasawaElement::one(spec);
        return CharIdeal::generated_by(x.pow(s.g));
    }
    return CharIdeal::unit_ideal(spec);
}

namespace {

/// Zero elements become the zero ideal; a zero produced by truncation is inconclusive.
CharIdeal ideal_of(const IwasawaElement& x, const std::string& what) {
    if (x.is_zero()) {
        if (x.truncated()) fail(ErrorCode::PrecisionInconclusive, what + " vanishes only after truncation");
        return CharIdeal::zero_ideal(x.spec());
    }
    return CharIdeal::generated_by(x);
}

}  // namespace

CompatibilityReport check_compatibility(const IwasawaElement& theta_l, const IwasawaElement& theta_lp,
                                        const std::vector<Place>& places, const GlobalTorsionData& global) {
    CompatibilityReport rep;
    rep.top = theta_l.spec();
    if (rep.top.nvars == 0) fail(ErrorCode::ValidationError, "tower dimension must be at least 1");
    const RingSpec lower = rep.top.with_nvars(rep.top.nvars - 1);
    if (!(theta_lp.spec() == lower)) fail(ErrorCode::ShapeMismatch, "Theta_{L'} must live in d - 1 variables");

    bool inconclusive = false;
    auto record = [&](const std::string& name, const std::string& role, auto compute) -> std::optional<CharIdeal> {
        FactorEntry e{name, role, "", Verdict::Pass, false};
        try {
            CharIdeal c = compute();
            e.value = c.is_zero_ideal() ? "ZeroIdeal" : c.generator().to_string();
            e.approximate = !c.is_zero_ideal() && c.generator().truncated();
            rep.factors.push_back(std::move(e));
            return c;
        } catch (const Error& err) {
            if (err.code() != ErrorCode::PrecisionInconclusive) throw;
            e.kind = Verdict::Inconclusive;
            e.value = err.what();
            rep.factors.push_back(std::move(e));
            inconclusive = true;
            return std::nullopt;
        }
    };

    CharIdeal lhs = CharIdeal::unit_ideal(lower);
    if (auto c = record("Theta_L'", "theta_Lprime", [&] { return ideal_of(theta_lp, "Theta_L'"); })) lhs = lhs * *c;
    for (const auto& v : places) {
        std::string role = "theta_v:" + std::string(place_type(v));
        if (auto c = record(v.name, role, [&] { return theta_v(lower, v); })) lhs = lhs * *c;
    }
    CharIdeal rhs = CharIdeal::unit_ideal(lower);
    if (auto c = record("rho", "rho", [&] { return ideal_of(rho_factor(rep.top, global), "rho"); })) rhs = rhs * *c;
    if (auto c = record("p(Theta_L)", "specialization",
                        [&] { return ideal_of(specialize_canonical(theta_l), "p(Theta_L)"); }))
        rhs = rhs * *c;

    rep.lhs = lhs.to_string();
    rep.rhs = rhs.to_string();
    if (rep.top.nvars == 1) {
        rep.notes.push_back("rho uses squared torsion orders; the first-power eta split is not applied");
    }
    if (std::any_of(rep.factors.begin(), rep.factors.end(), [](const FactorEntry& e) { return e.approximate; })) {
        rep.notes.push_back("some factors were truncated at degree " + std::to_string(rep.top.degree_bound));
    }
    rep.verdict = inconclusive ? Verdict::Inconclusive : compare_ideals(lhs, rhs);
    return rep;
}

std::string_view to_string(ScreenResult::Kind k) {
    switch (k) {
        case ScreenResult::Kind::NoObstruction: return "no obstruction";
        case ScreenResult::Kind::Obstructed: return "obstructed";
        case ScreenResult::Kind::TorsionPropagationFails: return "torsion propagation fails";
    }
    return "?";
}

ScreenResult nontorsion_screen(const IwasawaElement& theta_l, const std::vector<Place>& places,
                               const std::vector<unsigned>& indices) {
    const RingSpec& s = theta_l.spec();
    std::set<unsigned> killed;
    for (unsigned i : indices) {
        if (i >= s.nvars) fail(ErrorCode::IndexError, "generator index " + std::to_string(i + 1) + " outside d");
        killed.insert(i);
    }
    ScreenResult out;
    for (const auto& v : places) {
        const auto* sm = std::get_if<SplitMultiplicative>(&v.data);
        if (!sm) continue;
        bool inside = true;
        for (const auto& w : sm->decomposition_words) {
            if (w.size() != s.nvars) fail(ErrorCode::ShapeMismatch, v.name + ": decomposition word has wrong length");
            for (unsigned i = 0; i < s.nvars; ++i)
                if (w.exponents[i] != 0 && !killed.count(i)) inside = false;
        }
        if (inside) out.obstructing_places.push_back(v.name);
    }

    const RingSpec target = s.with_nvars(s.nvars - static_cast<unsigned>(killed.size()));
    std::vector<IwasawaElement> images;
    unsigned next = 0;
    for (unsigned i = 0; i < s.nvars; ++i)
        images.push_back(killed.count(i) ? IwasawaElement::zero(target) : IwasawaElement::variable(target, next++));
    IwasawaElement sp = specialize(theta_l, images);
    out.specialization = sp.to_string();
    out.specialization_vanishes = sp.is_zero();
    out.approximate = sp.truncated();

    if (!out.obstructing_places.empty()) out.kind = ScreenResult::Kind::Obstructed;
    else if (out.specialization_vanishes) out.kind = ScreenResult::Kind::TorsionPropagationFails;
    else out.kind = ScreenResult::Kind::NoObstruction;
    return out;
}

}  // namespace iwasawa
