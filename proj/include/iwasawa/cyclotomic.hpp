#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <vector>

#include "iwasawa/padic.hpp"

namespace iwasawa {

/// Exact reduced fraction.
class Rational {
public:
    constexpr Rational() = default;
    Rational(i64 num, i64 den = 1);

    i64 num() const { return num_; }
    i64 den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    i64 num_ = 0;
    i64 den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// phi(p^m)
u64 euler_phi_prime_power(u64 p, unsigned m);

/// Element of Z_p[mu_{p^m}] = Z_p[x]/(Phi_{p^m}(x)) modulo p^N, in the power basis.
class CycloInt {
public:
    CycloInt(u64 prime, unsigned level, unsigned precision);
    static CycloInt constant(u64 prime, unsigned level, unsigned precision, i64 c);
    static CycloInt from_padic(const PadicInt& c, unsigned level);
    /// Reduce an arbitrary coefficient vector (x^k) modulo Phi_{p^m}.
    static CycloInt from_coeffs(u64 prime, unsigned level, unsigned precision,
                                const std::vector<u64>& coeffs);

    u64 prime() const { return p_; }
    unsigned level() const { return m_; }
    unsigned precision() const { return n_; }
    u64 modulus() const { return mod_; }
    std::size_t dim() const { return c_.size(); }
    const std::vector<u64>& coeffs() const { return c_; }
    PadicInt coeff(std::size_t i) const { return PadicInt::from_residue(p_, n_, c_[i]); }

    bool is_zero() const;
    /// True when only the constant coordinate is nonzero, i.e. the value lies in Z_p.
    bool is_rational() const;
    PadicInt rational_value() const;
    /// Unit iff the image in the residue field O/(zeta - 1) = F_p is nonzero.
    bool is_unit() const;

    /// Same element viewed at a higher level (x -> x^{p^{target - level}}).
    CycloInt embed(unsigned target_level) const;
    /// Galois action zeta -> zeta^u, gcd(u, p) = 1.
    CycloInt galois(u64 u) const;
    /// Product of all Galois conjugates; lies in Z_p.
    PadicInt norm() const;
    CycloInt inv() const;

    /// ord(a) normalised so that ord(p) = 1; PrecisionInconclusive when a is zero
    /// modulo p^N or its norm is not determined at this precision.
    Rational norm_val() const;

    /// Matrix of multiplication by this element on the power basis.
    ZpMatrix multiplication_matrix() const;

    CycloInt operator-() const;
    friend CycloInt operator+(const CycloInt& a, const CycloInt& b);
    friend CycloInt operator-(const CycloInt& a, const CycloInt& b);
    friend CycloInt operator*(const CycloInt& a, const CycloInt& b);
    friend bool operator==(const CycloInt& a, const CycloInt& b) = default;

private:
    void check_compatible(const CycloInt& o) const;
    static void reduce_in_place(u64 p, unsigned m, u64 mod, std::vector<u64>& v);

    u64 p_;
    unsigned m_;
    unsigned n_;
    u64 mod_;
    std::vector<u64> c_;
};

std::ostream& operator<<(std::ostream& os, const CycloInt& a);

/// zeta_{p^m}^e in canonical form (m = 0 or p does not divide e).
class RootOfUnity {
public:
    RootOfUnity(u64 prime, unsigned level, u64 exponent);

    u64 prime() const { return p_; }
    unsigned level() const { return m_; }
    u64 exponent() const { return e_; }
    bool is_one() const { return m_ == 0; }

    /// Exponent of this root as a power of zeta_{p^target}.
    u64 exponent_at(unsigned target_level) const;
    RootOfUnity galois(u64 u) const;
    RootOfUnity inverse() const;

    friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;

private:
    u64 p_;
    unsigned m_;
    u64 e_;
};

std::ostream& operator<<(std::ostream& os, const RootOfUnity& z);

CycloInt zeta_embed(const RootOfUnity& z, unsigned target_level, unsigned precision);

/// [Q_p(zeta) : Q_p]
u64 degree_delta(const RootOfUnity& z);

/// Exponents in [1, p^m) coprime to p: the Galois orbit representatives.
std::vector<u64> units_mod_prime_power(u64 p, unsigned m);

}  // namespace iwasawa
