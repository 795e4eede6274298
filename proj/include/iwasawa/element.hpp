#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "iwasawa/cyclotomic.hpp"
#include "iwasawa/padic.hpp"

namespace iwasawa {

inline constexpr unsigned kMaxVars = 8;
inline constexpr unsigned kMaxDegree = 200;

/// Working context of Lambda_d = Z_p[[t_1..t_d]] truncated at (p^N, total degree > D).
struct RingSpec {
    u64 p = 2;
    unsigned precision = 1;
    unsigned nvars = 1;
    unsigned degree_bound = 1;

    u64 modulus() const { return modulus_for(p, precision); }
    /// Same coefficients and truncation, different number of variables.
    RingSpec with_nvars(unsigned d) const {
        RingSpec s = *this;
        s.nvars = d;
        return s;
    }
    void validate() const;
    friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

std::ostream& operator<<(std::ostream& os, const RingSpec& s);

/// Exponent tuple of t_1^{a_1} ... t_d^{a_d}.
struct Monomial {
    std::array<std::uint8_t, kMaxVars> e{};

    unsigned degree() const {
        unsigned s = 0;
        for (auto x : e) s += x;
        return s;
    }
    static Monomial unit_vector(unsigned i, unsigned power = 1) {
        Monomial m;
        m.e[i] = static_cast<std::uint8_t>(power);
        return m;
    }
    friend Monomial operator+(const Monomial& a, const Monomial& b) {
        Monomial m;
        for (unsigned i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::uint8_t>(a.e[i] + b.e[i]);
        return m;
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Total degree first, then lexicographic with higher powers of earlier variables first.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        unsigned da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.e > b.e;
    }
};

/// All monomials in `nvars` variables of total degree <= bound, in MonomialOrder.
std::vector<Monomial> monomials_up_to(unsigned nvars, unsigned bound);

/// Element gamma_1^{a_1} ... gamma_d^{a_d} of Gamma, integer exponents.
struct GroupWord {
    std::vector<i64> exponents;

    std::size_t size() const { return exponents.size(); }
    bool is_identity() const;
    /// True when every exponent is divisible by p (the word lies in Gamma^p).
    bool in_frattini(u64 p) const;
    friend bool operator==(const GroupWord&, const GroupWord&) = default;
};

std::ostream& operator<<(std::ostream& os, const GroupWord& w);

/// Truncated power series over Z/p^N in t_1..t_d, sparse and normalised.
///
/// The flag `truncated()` records that some product discarded a nonzero
/// monomial of degree > D; it propagates to every derived value.
class IwasawaElement {
public:
    using Terms = std::map<Monomial, u64, MonomialOrder>;

    explicit IwasawaElement(const RingSpec& spec);

    static IwasawaElement zero(const RingSpec& spec) { return IwasawaElement(spec); }
    static IwasawaElement one(const RingSpec& spec) { return constant(spec, 1); }
    static IwasawaElement constant(const RingSpec& spec, i64 c);
    static IwasawaElement constant(const RingSpec& spec, const PadicInt& c);
    /// t_{index+1}
    static IwasawaElement variable(const RingSpec& spec, unsigned index);
    static IwasawaElement monomial(const RingSpec& spec, const Monomial& m, u64 residue);

    const RingSpec& spec() const { return spec_; }
    const Terms& terms() const { return terms_; }
    bool truncated() const { return truncated_; }
    IwasawaElement& mark_truncated(bool flag = true) {
        truncated_ = truncated_ || flag;
        return *this;
    }

    bool is_zero() const { return terms_.empty(); }
    PadicInt coeff(const Monomial& m) const;
    PadicInt constant_term() const { return coeff(Monomial{}); }
    /// Unit iff the constant coefficient is a unit.
    bool is_unit() const { return constant_term().is_unit(); }
    unsigned total_degree() const;
    /// Minimal valuation over all coefficients (saturated for zero).
    Valuation content_valuation() const;

    IwasawaElement inverse() const;
    IwasawaElement pow(u64 e) const;
    IwasawaElement scaled(const PadicInt& c) const;

    IwasawaElement operator-() const;
    friend IwasawaElement operator+(const IwasawaElement& a, const IwasawaElement& b);
    friend IwasawaElement operator-(const IwasawaElement& a, const IwasawaElement& b);
    friend IwasawaElement operator*(const IwasawaElement& a, const IwasawaElement& b);
    IwasawaElement& operator+=(const IwasawaElement& b) { return *this = *this + b; }
    IwasawaElement& operator*=(const IwasawaElement& b) { return *this = *this * b; }
    /// Equality of spec and coefficients; the truncation flag is not compared.
    friend bool operator==(const IwasawaElement& a, const IwasawaElement& b) {
        return a.spec_ == b.spec_ && a.terms_ == b.terms_;
    }

    /// Canonical text "c*t1^a*t2^b + ...", highest degree first, coefficients in [0, p^N).
    std::string to_string() const;

private:
    void require_same(const IwasawaElement& o) const;
    void add_term(const Monomial& m, u64 r);

    RingSpec spec_;
    u64 mod_;
    Terms terms_;
    bool truncated_ = false;
};

std::ostream& operator<<(std::ostream& os, const IwasawaElement& a);

IwasawaElement group_elem(const RingSpec& spec, const GroupWord& w);

/// Involution induced by gamma -> gamma^{-1}: t_i -> (1 + t_i)^{-1} - 1.
IwasawaElement sharp(const IwasawaElement& a);

/// Continuous homomorphism t_i -> images[i]; every image must lie in the maximal ideal.
IwasawaElement specialize(const IwasawaElement& a, std::span<const IwasawaElement> images);

/// Tower map Lambda_d -> Lambda_{d-1}: t_d -> 0, other variables unchanged.
IwasawaElement specialize_canonical(const IwasawaElement& a);

/// Continuous character of Gamma: omega(gamma_i) = zeta_{p^M}^{e_i}, level minimal.
class Character {
public:
    Character(u64 prime, unsigned level, std::vector<u64> exponents);
    static Character trivial(u64 prime, unsigned nvars);

    u64 prime() const { return p_; }
    unsigned level() const { return level_; }
    unsigned nvars() const { return static_cast<unsigned>(e_.size()); }
    const std::vector<u64>& exponents() const { return e_; }

    RootOfUnity value_on(const GroupWord& w) const;
    RootOfUnity value_on_generator(unsigned i) const { return RootOfUnity(p_, level_, e_[i]); }
    /// Exponents of omega(gamma_i) as powers of zeta_{p^target}.
    std::vector<u64> exponents_at(unsigned target_level) const;

    friend bool operator==(const Character&, const Character&) = default;

private:
    u64 p_;
    unsigned level_;
    std::vector<u64> e_;
};

std::ostream& operator<<(std::ostream& os, const Character& w);

/// Evaluates an element at characters by rewriting it in the group basis
/// g_i = 1 + t_i once; each evaluation is then a bucket sum over roots of unity.
class CharacterEvaluator {
public:
    explicit CharacterEvaluator(const IwasawaElement& a);

    /// Value at the character with omega(gamma_i) = zeta_{p^level}^{exps[i]}.
    CycloInt eval_at(std::span<const u64> exps, unsigned level) const;
    CycloInt eval(const Character& w) const { return eval_at(w.exponents(), w.level()); }
    bool vanishes_at(std::span<const u64> exps, unsigned level) const;

    bool truncated() const { return truncated_; }

private:
    RingSpec spec_;
    bool truncated_;
    std::vector<std::pair<std::vector<u64>, u64>> group_terms_;
    mutable std::vector<u64> scratch_;
};

CycloInt eval_char(const IwasawaElement& a, const Character& w);

struct WeierstrassData {
    int mu = 0;
    int lambda = 0;
    IwasawaElement distinguished;
    IwasawaElement unit;
};

/// a = p^mu * unit * distinguished for univariate a.
WeierstrassData weierstrass_d1(const IwasawaElement& a);

struct DivisionResult {
    bool divides = false;
    std::optional<IwasawaElement> quotient;
    /// Quotient coefficients are determined modulo p^quotient_precision.
    unsigned quotient_precision = 0;
    /// Largest precision at which the coefficient system is consistent.
    unsigned consistent_precision = 0;
};

/// Solves b = q * a in the truncated ring.
DivisionResult divides(const IwasawaElement& a, const IwasawaElement& b);

struct AssociateOptions {
    /// Characters of level <= fingerprint_level take part in the evaluation check.
    unsigned fingerprint_level = 1;
};

/// Mutual divisibility with unit cofactors, cross-checked by the valuations of
/// the values at all characters up to the fingerprint level.
bool associates(const IwasawaElement& a, const IwasawaElement& b, const AssociateOptions& opts = {});

}  // namespace iwasawa
