#include "iwasawa/element.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace iwasawa {

void RingSpec::validate() const {
    modulus_for(p, precision);
    if (nvars > kMaxVars) {
        fail(ErrorCode::ValidationError, "at most " + std::to_string(kMaxVars) + " variables supported");
    }
    if (degree_bound < 1 || degree_bound > kMaxDegree) {
        fail(ErrorCode::ValidationError,
             "degree bound must lie in [1, " + std::to_string(kMaxDegree) + "]");
    }
}

std::ostream& operator<<(std::ostream& os, const RingSpec& s) {
    return os << "(p=" << s.p << ", N=" << s.precision << ", d=" << s.nvars
              << ", D=" << s.degree_bound << ")";
}

std::vector<Monomial> monomials_up_to(unsigned nvars, unsigned bound) {
    std::vector<Monomial> out;
    Monomial cur;
    // depth-first over exponent tuples with bounded total degree
    auto rec = [&](auto&& self, unsigned var, unsigned left) -> void {
        if (var == nvars) {
            out.push_back(cur);
            return;
        }
        for (unsigned k = 0; k <= left; ++k) {
            cur.e[var] = static_cast<std::uint8_t>(k);
            self(self, var + 1, left - k);
        }
        cur.e[var] = 0;
    };
    rec(rec, 0, bound);
    std::sort(out.begin(), out.end(), MonomialOrder{});
    return out;
}

bool GroupWord::is_identity() const {
    return std::all_of(exponents.begin(), exponents.end(), [](i64 a) { return a == 0; });
}

bool GroupWord::in_frattini(u64 p) const {
    return std::all_of(exponents.begin(), exponents.end(),
                       [p](i64 a) { return a % static_cast<i64>(p) == 0; });
}

std::ostream& operator<<(std::ostream& os, const GroupWord& w) {
    os << '[';
    for (std::size_t i = 0; i < w.exponents.size(); ++i) os << (i ? "," : "") << w.exponents[i];
    return os << ']';
}

// ---------------------------------------------------------------------------

IwasawaElement::IwasawaElement(const RingSpec& spec) : spec_(spec), mod_(spec.modulus()) {
    spec_.validate();
}

IwasawaElement IwasawaElement::constant(const RingSpec& spec, i64 c) {
    IwasawaElement r(spec);
    r.add_term(Monomial{}, reduce_signed(c, r.mod_));
    return r;
}

IwasawaElement IwasawaElement::constant(const RingSpec& spec, const PadicInt& c) {
    if (c.prime() != spec.p || c.precision() != spec.precision) {
        fail(ErrorCode::ShapeMismatch, "scalar (p, N) differs from ring");
    }
    IwasawaElement r(spec);
    r.add_term(Monomial{}, c.residue());
    return r;
}

IwasawaElement IwasawaElement::variable(const RingSpec& spec, unsigned index) {
    if (index >= spec.nvars) {
        fail(ErrorCode::IndexError, "variable t" + std::to_string(index + 1) + " outside d = " +
                                        std::to_string(spec.nvars));
    }
    IwasawaElement r(spec);
    if (spec.degree_bound >= 1) r.add_term(Monomial::unit_vector(index), 1);
    return r;
}

IwasawaElement IwasawaElement::monomial(const RingSpec& spec, const Monomial& m, u64 residue) {
    IwasawaElement r(spec);
    if (m.degree() > spec.degree_bound) {
        if (residue % r.mod_ != 0) r.truncated_ = true;
        return r;
    }
    r.add_term(m, residue % r.mod_);
    return r;
}

void IwasawaElement::add_term(const Monomial& m, u64 r) {
    if (r == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, r);
    if (!inserted) {
        it->second = add_mod(it->second, r, mod_);
        if (it->second == 0) terms_.erase(it);
    }
}

void IwasawaElement::require_same(const IwasawaElement& o) const {
    if (!(spec_ == o.spec_)) {
        std::ostringstream ss;
        ss << "ring parameters differ: " << spec_ << " vs " << o.spec_;
        fail(ErrorCode::ShapeMismatch, ss.str());
    }
}

PadicInt IwasawaElement::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return PadicInt::from_residue(spec_.p, spec_.precision, it == terms_.end() ? 0 : it->second);
}

unsigned IwasawaElement::total_degree() const {
    unsigned deg = 0;
    for (const auto& [m, c] : terms_) deg = std::max(deg, m.degree());
    return deg;
}

Valuation IwasawaElement::content_valuation() const {
    Valuation best = Valuation::saturated();
    for (const auto& [m, c] : terms_) best = std::min(best, residue_valuation(c, spec_.p, spec_.precision));
    return best;
}

IwasawaElement IwasawaElement::operator-() const {
    IwasawaElement r = *this;
    for (auto& [m, c] : r.terms_) c = neg_mod(c, mod_);
    return r;
}

IwasawaElement operator+(const IwasawaElement& a, const IwasawaElement& b) {
    a.require_same(b);
    IwasawaElement r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    r.truncated_ = a.truncated_ || b.truncated_;
    return r;
}

IwasawaElement operator-(const IwasawaElement& a, const IwasawaElement& b) { return a + (-b); }

IwasawaElement operator*(const IwasawaElement& a, const IwasawaElement& b) {
    a.require_same(b);
    IwasawaElement r(a.spec_);
    r.truncated_ = a.truncated_ || b.truncated_;
    const unsigned bound = a.spec_.degree_bound;
    for (const auto& [ma, ca] : a.terms_) {
        const unsigned da = ma.degree();
        for (const auto& [mb, cb] : b.terms_) {
            u64 c = mul_mod(ca, cb, a.mod_);
            if (c == 0) continue;
            if (da + mb.degree() > bound) {
                r.truncated_ = true;
                continue;
            }
            r.add_term(ma + mb, c);
        }
    }
    return r;
}

IwasawaElement IwasawaElement::scaled(const PadicInt& c) const {
    return *this * constant(spec_, c);
}

IwasawaElement IwasawaElement::pow(u64 e) const {
    IwasawaElement acc = one(spec_);
    IwasawaElement base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

IwasawaElement IwasawaElement::inverse() const {
    PadicInt c = constant_term();
    if (!c.is_unit()) fail(ErrorCode::NotAUnit, "constant term " + std::to_string(c.residue()) + " is not a unit");
    PadicInt cinv = c.inv();
    // this = c (1 + x) with x in the maximal ideal; (1 + x)^{-1} = sum (-x)^k
    IwasawaElement x = scaled(cinv) - one(spec_);
    IwasawaElement neg_x = -x;
    IwasawaElement sum = one(spec_);
    IwasawaElement power = one(spec_);
    bool overflow = false;
    for (unsigned k = 1; k <= spec_.degree_bound + 1; ++k) {
        power = power * neg_x;
        overflow = overflow || power.truncated_;
        if (k <= spec_.degree_bound) sum = sum + power;
        if (power.is_zero()) break;
    }
    IwasawaElement r = sum.scaled(cinv);
    r.truncated_ = truncated_ || overflow;
    return r;
}

std::string IwasawaElement::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Monomial, u64>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto& x, const auto& y) { return x.first.degree() > y.first.degree(); });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : ordered) {
        if (!first) os << " + ";
        first = false;
        std::vector<std::string> parts;
        for (unsigned i = 0; i < spec_.nvars; ++i) {
            if (m.e[i] == 0) continue;
            std::string v = "t" + std::to_string(i + 1);
            if (m.e[i] > 1) v += "^" + std::to_string(m.e[i]);
            parts.push_back(std::move(v));
        }
        if (parts.empty()) {
            os << c;
            continue;
        }
        if (c != 1) os << c << '*';
        for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "*" : "") << parts[i];
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IwasawaElement& a) { return os << a.to_string(); }

// ---------------------------------------------------------------------------

IwasawaElement group_elem(const RingSpec& spec, const GroupWord& w) {
    if (w.size() != spec.nvars) {
        fail(ErrorCode::ShapeMismatch, "group word has " + std::to_string(w.size()) +
                                           " exponents, ring has " + std::to_string(spec.nvars));
    }
    IwasawaElement acc = IwasawaElement::one(spec);
    for (unsigned i = 0; i < spec.nvars; ++i) {
        i64 a = w.exponents[i];
        if (a == 0) continue;
        IwasawaElement g = IwasawaElement::one(spec) + IwasawaElement::variable(spec, i);
        if (a < 0) g = g.inverse();
        acc = acc * g.pow(static_cast<u64>(a < 0 ? -a : a));
    }
    return acc;
}

namespace {

IwasawaElement substitute(const IwasawaElement& a, std::span<const IwasawaElement> images,
                          const RingSpec& target) {
    const unsigned d = a.spec().nvars;
    std::vector<unsigned> max_exp(d, 0);
    for (const auto& [m, c] : a.terms())
        for (unsigned i = 0; i < d; ++i) max_exp[i] = std::max<unsigned>(max_exp[i], m.e[i]);
    std::vector<std::vector<IwasawaElement>> powers(d);
    for (unsigned i = 0; i < d; ++i) {
        powers[i].push_back(IwasawaElement::one(target));
        for (unsigned k = 1; k <= max_exp[i]; ++k) powers[i].push_back(powers[i].back() * images[i]);
    }
    IwasawaElement out(target);
    for (const auto& [m, c] : a.terms()) {
        IwasawaElement term = IwasawaElement::constant(target, PadicInt::from_residue(target.p, target.precision, c));
        for (unsigned i = 0; i < d; ++i)
            if (m.e[i]) term = term * powers[i][m.e[i]];
        out = out + term;
    }
    out.mark_truncated(a.truncated());
    for (unsigned i = 0; i < d; ++i)
        if (!powers[i].empty()) out.mark_truncated(powers[i].back().truncated());
    return out;
}

}  // namespace

IwasawaElement sharp(const IwasawaElement& a) {
    const RingSpec& s = a.spec();
    std::vector<IwasawaElement> images;
    for (unsigned i = 0; i < s.nvars; ++i) {
        IwasawaElement g = IwasawaElement::one(s) + IwasawaElement::variable(s, i);
        images.push_back(g.inverse() - IwasawaElement::one(s));
    }
    return substitute(a, images, s);
}

IwasawaElement specialize(const IwasawaElement& a, std::span<const IwasawaElement> images) {
    const RingSpec& s = a.spec();
    if (images.size() != s.nvars) {
        fail(ErrorCode::ShapeMismatch, "need " + std::to_string(s.nvars) + " images, got " +
                                           std::to_string(images.size()));
    }
    RingSpec target = images.empty() ? s.with_nvars(0) : images.front().spec();
    for (std::size_t i = 0; i < images.size(); ++i) {
        const RingSpec& t = images[i].spec();
        if (t.p != s.p || t.precision != s.precision || t.degree_bound != s.degree_bound ||
            !(t == target)) {
            fail(ErrorCode::ShapeMismatch, "image of t" + std::to_string(i + 1) + " lives in a different ring");
        }
        if (images[i].is_unit()) {
            fail(ErrorCode::NotContinuous, "image of t" + std::to_string(i + 1) +
                                               " has a unit constant term");
        }
    }
    return substitute(a, images, target);
}

IwasawaElement specialize_canonical(const IwasawaElement& a) {
    const RingSpec& s = a.spec();
    if (s.nvars == 0) fail(ErrorCode::ShapeMismatch, "no variable to specialise");
    RingSpec target = s.with_nvars(s.nvars - 1);
    std::vector<IwasawaElement> images;
    for (unsigned i = 0; i + 1 < s.nvars; ++i) images.push_back(IwasawaElement::variable(target, i));
    images.push_back(IwasawaElement::zero(target));
    return specialize(a, images);
}

// ---------------------------------------------------------------------------

Character::Character(u64 prime, unsigned level, std::vector<u64> exponents)
    : p_(prime), level_(level), e_(std::move(exponents)) {
    auto order = checked_pow(p_, level_);
    if (!order) fail(ErrorCode::RangeError, "character level too large");
    for (auto& x : e_) x %= *order;
    while (level_ > 0 && std::all_of(e_.begin(), e_.end(), [this](u64 x) { return x % p_ == 0; })) {
        for (auto& x : e_) x /= p_;
        --level_;
    }
}

Character Character::trivial(u64 prime, unsigned nvars) {
    return Character(prime, 0, std::vector<u64>(nvars, 0));
}

RootOfUnity Character::value_on(const GroupWord& w) const {
    if (w.size() != e_.size()) fail(ErrorCode::ShapeMismatch, "group word length differs from character");
    u64 order = *checked_pow(p_, level_);
    u64 acc = 0;
    for (std::size_t i = 0; i < e_.size(); ++i)
        acc = add_mod(acc, mul_mod(e_[i], reduce_signed(w.exponents[i], order), order), order);
    return RootOfUnity(p_, level_, acc);
}

std::vector<u64> Character::exponents_at(unsigned target_level) const {
    if (target_level < level_) fail(ErrorCode::LevelMismatch, "character level exceeds target");
    u64 scale = *checked_pow(p_, target_level - level_);
    std::vector<u64> out = e_;
    for (auto& x : out) x *= scale;
    return out;
}

std::ostream& operator<<(std::ostream& os, const Character& w) {
    os << '[';
    for (std::size_t i = 0; i < w.exponents().size(); ++i) os << (i ? "," : "") << w.exponents()[i];
    return os << "]@" << w.level();
}

CharacterEvaluator::CharacterEvaluator(const IwasawaElement& a)
    : spec_(a.spec()), truncated_(a.truncated()) {
    const u64 mod = spec_.modulus();
    const unsigned D = spec_.degree_bound;
    // binomials modulo p^N
    std::vector<std::vector<u64>> binom(D + 1);
    for (unsigned n = 0; n <= D; ++n) {
        binom[n].assign(n + 1, 1 % mod);
        for (unsigned k = 1; k < n; ++k) binom[n][k] = add_mod(binom[n - 1][k - 1], binom[n - 1][k], mod);
    }
    std::map<Monomial, u64, MonomialOrder> acc;
    for (const auto& [m, c] : a.terms()) {
        // t^alpha = prod_i sum_b C(alpha_i, b) (-1)^{alpha_i - b} g_i^b
        std::vector<std::pair<Monomial, u64>> partial{{Monomial{}, c}};
        for (unsigned i = 0; i < spec_.nvars; ++i) {
            const unsigned ai = m.e[i];
            if (ai == 0) continue;
            std::vector<std::pair<Monomial, u64>> next;
            next.reserve(partial.size() * (ai + 1));
            for (const auto& [gm, gc] : partial)
                for (unsigned b = 0; b <= ai; ++b) {
                    u64 coef = mul_mod(gc, binom[ai][b], mod);
                    if ((ai - b) % 2 == 1) coef = neg_mod(coef, mod);
                    Monomial nm = gm;
                    nm.e[i] = static_cast<std::uint8_t>(b);
                    next.emplace_back(nm, coef);
                }
            partial = std::move(next);
        }
        for (const auto& [gm, gc] : partial) {
            u64& slot = acc[gm];
            slot = add_mod(slot, gc, mod);
        }
    }
    for (const auto& [gm, gc] : acc) {
        if (gc == 0) continue;
        std::vector<u64> ex(spec_.nvars);
        for (unsigned i = 0; i < spec_.nvars; ++i) ex[i] = gm.e[i];
        group_terms_.emplace_back(std::move(ex), gc);
    }
}

CycloInt CharacterEvaluator::eval_at(std::span<const u64> exps, unsigned level) const {
    if (exps.size() != spec_.nvars) fail(ErrorCode::ShapeMismatch, "character has wrong number of exponents");
    const u64 mod = spec_.modulus();
    const u64 order = *checked_pow(spec_.p, level);
    scratch_.assign(order, 0);
    for (const auto& [ex, c] : group_terms_) {
        u64 idx = 0;
        for (std::size_t i = 0; i < ex.size(); ++i) idx = (idx + ex[i] * (exps[i] % order)) % order;
        scratch_[idx] = add_mod(scratch_[idx], c, mod);
    }
    return CycloInt::from_coeffs(spec_.p, level, spec_.precision, scratch_);
}

bool CharacterEvaluator::vanishes_at(std::span<const u64> exps, unsigned level) const {
    return eval_at(exps, level).is_zero();
}

CycloInt eval_char(const IwasawaElement& a, const Character& w) {
    if (w.prime() != a.spec().p) fail(ErrorCode::ShapeMismatch, "character prime differs from ring");
    return CharacterEvaluator(a).eval(w);
}

// ---------------------------------------------------------------------------

namespace {

using Dense = std::vector<u64>;

Dense dense_mul(const Dense& a, const Dense& b, std::size_t bound, u64 mod) {
    Dense r(bound + 1, 0);
    for (std::size_t i = 0; i < a.size() && i <= bound; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j <= bound; ++j)
            r[i + j] = add_mod(r[i + j], mul_mod(a[i], b[j], mod), mod);
    }
    return r;
}

Dense dense_inverse(const Dense& a, std::size_t bound, u64 mod) {
    // coefficient recursion for 1/a with a_0 a unit
    Dense r(bound + 1, 0);
    u64 inv0 = inv_mod(a[0] % mod, mod);
    r[0] = inv0;
    for (std::size_t k = 1; k <= bound; ++k) {
        u64 s = 0;
        for (std::size_t j = 1; j <= k && j < a.size(); ++j) s = add_mod(s, mul_mod(a[j], r[k - j], mod), mod);
        r[k] = mul_mod(neg_mod(s, mod), inv0, mod);
    }
    return r;
}

}  // namespace

WeierstrassData weierstrass_d1(const IwasawaElement& a) {
    const RingSpec& s = a.spec();
    if (s.nvars != 1) fail(ErrorCode::ShapeMismatch, "Weierstrass data needs a univariate element");
    if (a.is_zero()) fail(ErrorCode::PrecisionInconclusive, "element is zero modulo p^N");
    const Valuation mu_v = a.content_valuation();
    const int mu = mu_v.value();
    const unsigned reduced_prec = s.precision - static_cast<unsigned>(mu);
    const u64 scale = *checked_pow(s.p, static_cast<unsigned>(mu));
    const u64 mod = *checked_pow(s.p, reduced_prec);

    const unsigned D = s.degree_bound;
    Dense b(D + 1, 0);
    for (const auto& [m, c] : a.terms()) b[m.e[0]] = (c / scale) % mod;
    int lambda = -1;
    for (unsigned i = 0; i <= D; ++i)
        if (b[i] % s.p != 0) {
            lambda = static_cast<int>(i);
            break;
        }
    if (lambda < 0) fail(ErrorCode::DegreeOverflow, "no unit coefficient within the degree bound");
    const std::size_t lam = static_cast<std::size_t>(lambda);

    // fixed point V = h (1 - tau(V * b_low)), h = b_high^{-1}; contraction by p per step
    const std::size_t work = D + (reduced_prec + 1) * lam + 1;
    Dense b_low(lam, 0), b_high(work + 1, 0);
    for (std::size_t i = 0; i <= D; ++i) {
        if (i < lam) b_low[i] = b[i];
        else b_high[i - lam] = b[i];
    }
    Dense h = dense_inverse(b_high, work, mod);
    Dense v = h;
    for (unsigned it = 0; it <= reduced_prec && lam > 0; ++it) {
        Dense prod = dense_mul(v, b_low, work + lam, mod);
        Dense shifted(work + 1, 0);
        shifted[0] = 1 % mod;
        for (std::size_t j = 0; j <= work; ++j)
            if (j + lam < prod.size()) shifted[j] = sub_mod(shifted[j], prod[j + lam], mod);
        v = dense_mul(h, shifted, work, mod);
    }
    Dense low = dense_mul(v, b_low, lam, mod);
    Dense u = dense_inverse(v, D, mod);

    IwasawaElement dist(s), unit(s);
    for (std::size_t i = 0; i < lam; ++i)
        dist = dist + IwasawaElement::monomial(s, Monomial::unit_vector(0, static_cast<unsigned>(i)), low[i]);
    dist = dist + IwasawaElement::monomial(s, Monomial::unit_vector(0, static_cast<unsigned>(lam)), 1);
    for (std::size_t i = 0; i <= D; ++i)
        unit = unit + IwasawaElement::monomial(s, Monomial::unit_vector(0, static_cast<unsigned>(i)), u[i]);
    dist.mark_truncated(a.truncated());
    unit.mark_truncated(a.truncated());
    return WeierstrassData{mu, lambda, dist, unit};
}

// ---------------------------------------------------------------------------

DivisionResult divides(const IwasawaElement& a, const IwasawaElement& b) {
    if (!(a.spec() == b.spec())) fail(ErrorCode::ShapeMismatch, "divisibility across different rings");
    if (a.is_zero()) fail(ErrorCode::PrecisionInconclusive, "divisor is zero modulo p^N");
    const RingSpec& s = a.spec();
    DivisionResult res;
    if (a.is_unit()) {
        res.divides = true;
        res.quotient = b * a.inverse();
        res.quotient_precision = s.precision;
        res.consistent_precision = s.precision;
        return res;
    }
    const std::vector<Monomial> monos = monomials_up_to(s.nvars, s.degree_bound);
    std::map<Monomial, std::size_t, MonomialOrder> index;
    for (std::size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);

    // column j holds the coefficients of t^{monos[j]} * a
    ZpMatrix mat(s.p, s.precision, monos.size(), monos.size());
    for (std::size_t j = 0; j < monos.size(); ++j) {
        const unsigned dj = monos[j].degree();
        for (const auto& [m, c] : a.terms()) {
            if (dj + m.degree() > s.degree_bound) continue;
            mat.set_residue(index.at(m + monos[j]), j, c);
        }
    }
    std::vector<u64> rhs(monos.size(), 0);
    for (const auto& [m, c] : b.terms()) rhs[index.at(m)] = c;

    LinearSolution sol = solve_linear(mat, rhs);
    res.consistent_precision = sol.consistent_precision;
    if (!sol.consistent) return res;
    res.divides = true;
    res.quotient_precision = sol.determined_precision;
    IwasawaElement q(s);
    for (std::size_t j = 0; j < monos.size(); ++j)
        if (sol.x[j]) q = q + IwasawaElement::monomial(s, monos[j], sol.x[j]);
    q.mark_truncated(a.truncated() || b.truncated());
    res.quotient = std::move(q);
    return res;
}

namespace {

/// Lower bound (in ord, ord(p) = 1) up to which a value at a level-M character is trustworthy.
Rational evaluation_cap(const RingSpec& s, unsigned level, bool truncated) {
    Rational cap(static_cast<i64>(s.precision) - 1);
    if (truncated && level > 0) {
        Rational tail(static_cast<i64>(s.degree_bound) + 1,
                      static_cast<i64>(euler_phi_prime_power(s.p, level)));
        cap = std::min(cap, tail);
    }
    return cap;
}

Rational capped_valuation(const CycloInt& v, const Rational& cap) {
    if (v.is_zero()) return cap;
    try {
        return std::min(v.norm_val(), cap);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::PrecisionInconclusive) throw;
        return cap;
    }
}

}  // namespace

bool associates(const IwasawaElement& a, const IwasawaElement& b, const AssociateOptions& opts) {
    if (!(a.spec() == b.spec())) fail(ErrorCode::ShapeMismatch, "associate test across different rings");
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();

    DivisionResult ab = divides(a, b);
    if (!ab.divides || !ab.quotient->is_unit()) return false;
    DivisionResult ba = divides(b, a);
    if (!ba.divides || !ba.quotient->is_unit()) return false;

    const RingSpec& s = a.spec();
    const bool truncated = a.truncated() || b.truncated();
    CharacterEvaluator ea(a), eb(b);
    const u64 order = *checked_pow(s.p, opts.fingerprint_level);
    std::vector<u64> exps(s.nvars, 0);
    u64 total = *checked_pow(order, s.nvars);
    for (u64 code = 0; code < total; ++code) {
        u64 c = code;
        for (unsigned i = 0; i < s.nvars; ++i) {
            exps[i] = c % order;
            c /= order;
        }
        Character w(s.p, opts.fingerprint_level, exps);
        Rational cap = evaluation_cap(s, w.level(), truncated);
        Rational va = capped_valuation(ea.eval(w), cap);
        Rational vb = capped_valuation(eb.eval(w), cap);
        if (va != vb) {
            std::ostringstream ss;
            ss << "mutual divisibility holds but valuations differ at " << w << ": " << va << " vs " << vb;
            fail(ErrorCode::PrecisionInconclusive, ss.str());
        }
    }
    return true;
}

}  // namespace iwasawa
