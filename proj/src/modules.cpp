#include "iwasawa/modules.hpp"

#include <algorithm>

namespace iwasawa {

const IwasawaElement& CharIdeal::generator() const {
    if (!gen_) fail(ErrorCode::ValidationError, "the zero ideal has no nonzero generator");
    return *gen_;
}

std::string CharIdeal::to_string() const { return gen_ ? "(" + gen_->to_string() + ")" : "ZeroIdeal"; }

CharIdeal operator*(const CharIdeal& a, const CharIdeal& b) {
    if (!(a.spec_ == b.spec_)) fail(ErrorCode::ShapeMismatch, "ideals of different rings");
    if (a.is_zero_ideal() || b.is_zero_ideal()) return CharIdeal::zero_ideal(a.spec_);
    return CharIdeal::generated_by(*a.gen_ * *b.gen_);
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

Verdict compare_ideals(const CharIdeal& a, const CharIdeal& b) {
    if (a.is_zero_ideal() || b.is_zero_ideal()) {
        return a.is_zero_ideal() && b.is_zero_ideal() ? Verdict::Pass : Verdict::Fail;
    }
    try {
        return associates(a.generator(), b.generator()) ? Verdict::Pass : Verdict::Fail;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::PrecisionInconclusive) return Verdict::Inconclusive;
        throw;
    }
}

void ElementaryModule::validate() const {
    spec.validate();
    for (const auto& s : summands) {
        if (!(s.xi.spec() == spec)) fail(ErrorCode::ShapeMismatch, "summand lives in a different ring");
        if (s.xi.is_zero()) fail(ErrorCode::ValidationError, "summand generator is zero");
        if (s.xi.is_unit()) fail(ErrorCode::ValidationError, "summand generator " + s.xi.to_string() + " is a unit");
        if (s.r < 1 || s.a < 1) fail(ErrorCode::ValidationError, "multiplicities must be positive");
    }
}

IwasawaElement char_ideal_elementary(const ElementaryModule& w) {
    w.validate();
    IwasawaElement acc = IwasawaElement::one(w.spec);
    for (const auto& s : w.summands) acc = acc * s.xi.pow(static_cast<u64>(s.r) * s.a);
    if (acc.is_zero()) {
        fail(ErrorCode::DegreeOverflow, "characteristic ideal vanishes beyond degree " +
                                            std::to_string(w.spec.degree_bound));
    }
    return acc;
}

IwasawaElement determinant(const std::vector<std::vector<IwasawaElement>>& m, const RingSpec& spec) {
    const std::size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) fail(ErrorCode::ShapeMismatch, "presentation matrix is not square");
        for (const auto& e : row)
            if (!(e.spec() == spec)) fail(ErrorCode::ShapeMismatch, "matrix entry lives in a different ring");
    }
    if (n == 0) return IwasawaElement::one(spec);
    if (n == 1) return m[0][0];
    IwasawaElement acc = IwasawaElement::zero(spec);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) {
            acc.mark_truncated(m[0][j].truncated());
            continue;
        }
        std::vector<std::vector<IwasawaElement>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<IwasawaElement> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        IwasawaElement term = m[0][j] * determinant(minor, spec);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

CharIdeal char_ideal_presented(const PresentedModule& w) {
    w.spec.validate();
    IwasawaElement det = determinant(w.matrix, w.spec);
    if (det.is_zero()) {
        if (det.truncated()) {
            fail(ErrorCode::PrecisionInconclusive, "determinant vanishes only after truncation");
        }
        return CharIdeal::zero_ideal(w.spec);
    }
    return CharIdeal::generated_by(det);
}

DescentResult descend(const ElementaryModule& w) {
    w.validate();
    if (w.spec.nvars == 0) fail(ErrorCode::ShapeMismatch, "descent needs at least one variable");
    const RingSpec target = w.spec.with_nvars(w.spec.nvars - 1);
    DescentResult out{CharIdeal::unit_ideal(target), CharIdeal::unit_ideal(target)};
    for (const auto& s : w.summands) {
        IwasawaElement sp = specialize_canonical(s.xi);
        if (sp.is_zero()) {
            if (sp.truncated()) {
                fail(ErrorCode::PrecisionInconclusive, "specialisation of " + s.xi.to_string() +
                                                           " vanishes only after truncation");
            }
            out.invariants = CharIdeal::zero_ideal(target);
            out.coinvariants = CharIdeal::zero_ideal(target);
            continue;
        }
        out.coinvariants = out.coinvariants * CharIdeal::generated_by(sp.pow(static_cast<u64>(s.r) * s.a));
        if (!out.coinvariants.is_zero_ideal() && out.coinvariants.generator().is_zero()) {
            fail(ErrorCode::PrecisionInconclusive, "coinvariant generator vanishes modulo p^" +
                                                       std::to_string(w.spec.precision));
        }
    }
    return out;
}

DescentCheck verify_descent_identity(const ElementaryModule& w) {
    DescentCheck check;
    try {
        DescentResult d = descend(w);
        IwasawaElement chi = char_ideal_elementary(w);
        IwasawaElement sp = specialize_canonical(chi);
        if (sp.is_zero() && !d.invariants.is_zero_ideal()) {
            fail(ErrorCode::PrecisionInconclusive, "p(chi(W)) vanishes modulo p^" + std::to_string(w.spec.precision) +
                                                       " although no summand specialises to zero");
        }
        CharIdeal rhs_base = sp.is_zero() ? CharIdeal::zero_ideal(d.invariants.spec()) : CharIdeal::generated_by(sp);
        CharIdeal rhs = rhs_base * d.invariants;
        check.verdict = compare_ideals(d.coinvariants, rhs);
        check.detail = d.coinvariants.to_string() + " vs " + rhs.to_string();
        check.descent = std::move(d);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::PrecisionInconclusive) throw;
        check.verdict = Verdict::Inconclusive;
        check.detail = e.what();
    }
    return check;
}

namespace {

bool divides_all(const IwasawaElement& c, const std::vector<IwasawaElement>& fs) {
    for (const auto& f : fs)
        if (!divides(c, f).divides) return false;
    return true;
}

/// Sum of elementary-divisor valuations of the Sylvester matrix of two monic polynomials;
/// nullopt when some divisor is saturated.
std::optional<long> resultant_valuation(const IwasawaElement& a, const IwasawaElement& b) {
    const RingSpec& s = a.spec();
    const unsigned da = a.total_degree(), db = b.total_degree();
    const std::size_t n = da + db;
    if (n == 0) return 0;
    ZpMatrix syl(s.p, s.precision, n, n);
    for (unsigned i = 0; i < db; ++i)
        for (const auto& [m, c] : a.terms()) syl.set_residue(i, i + da - m.e[0], c);
    for (unsigned i = 0; i < da; ++i)
        for (const auto& [m, c] : b.terms()) syl.set_residue(db + i, i + db - m.e[0], c);
    long total = 0;
    for (Valuation v : smith_valuations(syl)) {
        if (v.is_saturated()) return std::nullopt;
        total += v.value();
    }
    return total;
}

}  // namespace

PseudoNullVerdict check_pseudonull(const PseudoNullWitness& w, const std::vector<IwasawaElement>& candidates) {
    const auto& fs = w.annihilators;
    if (fs.size() < 2) fail(ErrorCode::ValidationError, "a pseudo-null witness needs at least two annihilators");
    const RingSpec& s = fs.front().spec();
    for (const auto& f : fs) {
        if (!(f.spec() == s)) fail(ErrorCode::ShapeMismatch, "annihilators live in different rings");
        if (f.is_zero()) fail(ErrorCode::ValidationError, "annihilator is zero");
    }
    for (const auto& c : candidates)
        if (!(c.spec() == s)) fail(ErrorCode::ShapeMismatch, "candidate lives in a different ring");

    PseudoNullVerdict out;
    const bool all_mu = std::all_of(fs.begin(), fs.end(), [](const IwasawaElement& f) {
        Valuation v = f.content_valuation();
        return v.is_saturated() || v.value() > 0;
    });
    if (all_mu) {
        out.common_factor = IwasawaElement::constant(s, static_cast<i64>(s.p));
        out.reason = "p divides every annihilator";
        return out;
    }
    for (const auto& c : candidates) {
        if (c.is_zero() || c.is_unit()) continue;
        if (divides_all(c, fs)) {
            out.common_factor = c;
            out.reason = c.to_string() + " divides every annihilator";
            return out;
        }
    }
    if (s.nvars == 1) {
        std::vector<IwasawaElement> dist;
        for (const auto& f : fs) dist.push_back(weierstrass_d1(f).distinguished);
        for (std::size_t i = 0; i < dist.size(); ++i)
            for (std::size_t j = i + 1; j < dist.size(); ++j) {
                auto v = resultant_valuation(dist[i], dist[j]);
                if (v) {
                    out.pass = true;
                    out.reason = "resultant of distinguished parts " + std::to_string(i + 1) + ", " +
                                 std::to_string(j + 1) + " has valuation " + std::to_string(*v);
                    return out;
                }
            }
        for (const auto& c : dist) {
            if (c.is_unit()) continue;
            if (divides_all(c, fs)) {
                out.common_factor = c;
                out.reason = c.to_string() + " divides every annihilator";
                return out;
            }
        }
        if (fs.size() == 2) {
            fail(ErrorCode::PrecisionInconclusive, "resultant vanishes modulo p^" + std::to_string(s.precision) +
                                                       " without an exhibited common factor");
        }
        fail(ErrorCode::IncompleteFactorBasis, "no coprime pair and no common factor among the distinguished parts");
    }
    if (candidates.empty()) {
        fail(ErrorCode::IncompleteFactorBasis, "relative primality in several variables needs candidate factors");
    }
    out.pass = true;
    out.reason = "no candidate divides every annihilator";
    return out;
}

ElementaryModule x0_shape(const RingSpec& spec, const std::vector<SimpleFactorData>& simple,
                          const std::vector<IwasawaElement>& others) {
    for (std::size_t i = 0; i < simple.size(); ++i) {
        if (simple[i].a < 1 || simple[i].b < 1) fail(ErrorCode::ValidationError, "exponents must be positive");
        for (std::size_t j = i + 1; j < simple.size(); ++j)
            if (associates(simple[i].f, simple[j].f)) {
                fail(ErrorCode::ValidationError, "simple factors " + std::to_string(i + 1) + " and " +
                                                     std::to_string(j + 1) + " are associates");
            }
    }
    for (std::size_t j = 0; j < others.size(); ++j)
        for (const auto& sf : simple)
            if (divides(sf.f, others[j]).divides) {
                fail(ErrorCode::ValidationError, "non-simple factor " + std::to_string(j + 1) +
                                                     " is divisible by " + sf.f.to_string());
            }
    ElementaryModule out{spec, {}};
    for (const auto& sf : simple) out.summands.push_back(Summand{sf.f, 1, sf.a});
    return out;
}

}  // namespace iwasawa
