#include "iwasawa/cyclotomic.hpp"

#include <numeric>
#include <sstream>

namespace iwasawa {

Rational::Rational(i64 num, i64 den) {
    if (den == 0) fail(ErrorCode::ValidationError, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i64 g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0) g = 1;
    num_ = num / g;
    den_ = den / g;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    os << r.num();
    if (r.den() != 1) os << '/' << r.den();
    return os;
}

u64 euler_phi_prime_power(u64 p, unsigned m) {
    if (m == 0) return 1;
    return *checked_pow(p, m - 1) * (p - 1);
}

// ---------------------------------------------------------------------------

CycloInt::CycloInt(u64 prime, unsigned level, unsigned precision)
    : p_(prime), m_(level), n_(precision), mod_(modulus_for(prime, precision)),
      c_(euler_phi_prime_power(prime, level), 0) {}

CycloInt CycloInt::constant(u64 prime, unsigned level, unsigned precision, i64 c) {
    CycloInt r(prime, level, precision);
    r.c_[0] = reduce_signed(c, r.mod_);
    return r;
}

CycloInt CycloInt::from_padic(const PadicInt& c, unsigned level) {
    CycloInt r(c.prime(), level, c.precision());
    r.c_[0] = c.residue();
    return r;
}

void CycloInt::reduce_in_place(u64 p, unsigned m, u64 mod, std::vector<u64>& v) {
    const std::size_t phi = euler_phi_prime_power(p, m);
    if (m == 0) {
        // Phi_1 = x - 1: every power of x is 1
        u64 s = 0;
        for (u64 c : v) s = add_mod(s, c % mod, mod);
        v.assign(1, s);
        return;
    }
    const std::size_t step = *checked_pow(p, m - 1);
    // x^phi = -(1 + x^step + ... + x^{(p-2) step})
    for (std::size_t k = v.size(); k-- > phi;) {
        u64 c = v[k] % mod;
        if (c == 0) continue;
        std::size_t base = k - phi;
        for (u64 i = 0; i + 1 < p; ++i) {
            std::size_t t = base + i * step;
            v[t] = sub_mod(v[t] % mod, c, mod);
        }
        v[k] = 0;
    }
    v.resize(phi, 0);
    for (auto& c : v) c %= mod;
}

CycloInt CycloInt::from_coeffs(u64 prime, unsigned level, unsigned precision,
                               const std::vector<u64>& coeffs) {
    CycloInt r(prime, level, precision);
    std::vector<u64> v = coeffs;
    if (v.size() < r.c_.size()) v.resize(r.c_.size(), 0);
    reduce_in_place(prime, level, r.mod_, v);
    r.c_ = std::move(v);
    return r;
}

void CycloInt::check_compatible(const CycloInt& o) const {
    if (p_ != o.p_ || m_ != o.m_ || n_ != o.n_) {
        fail(ErrorCode::LevelMismatch, "cyclotomic operands differ in (p, level, N)");
    }
}

bool CycloInt::is_zero() const {
    for (u64 c : c_)
        if (c != 0) return false;
    return true;
}

bool CycloInt::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

PadicInt CycloInt::rational_value() const {
    if (!is_rational()) fail(ErrorCode::NotRational, "cyclotomic value is not in Z_p");
    return coeff(0);
}

bool CycloInt::is_unit() const {
    u64 s = 0;
    for (u64 c : c_) s = (s + c % p_) % p_;
    return s != 0;
}

CycloInt CycloInt::embed(unsigned target_level) const {
    if (target_level < m_) fail(ErrorCode::LevelMismatch, "cannot embed into a lower level");
    u64 stride = *checked_pow(p_, target_level - m_);
    std::vector<u64> v(static_cast<std::size_t>(c_.size() * stride), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * stride] = c_[i];
    return from_coeffs(p_, target_level, n_, v);
}

CycloInt CycloInt::galois(u64 u) const {
    if (m_ == 0) return *this;
    if (u % p_ == 0) fail(ErrorCode::ValidationError, "Galois exponent must be prime to p");
    u64 order = *checked_pow(p_, m_);
    std::vector<u64> v(order, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        std::size_t t = static_cast<std::size_t>(mul_mod(i, u % order, order));
        v[t] = add_mod(v[t], c_[i], mod_);
    }
    return from_coeffs(p_, m_, n_, v);
}

PadicInt CycloInt::norm() const {
    CycloInt acc = constant(p_, m_, n_, 1);
    for (u64 u : units_mod_prime_power(p_, m_)) acc = acc * galois(u);
    return acc.rational_value();
}

CycloInt CycloInt::inv() const {
    if (!is_unit()) fail(ErrorCode::NotAUnit, "cyclotomic element is not a unit");
    std::vector<u64> e(c_.size(), 0);
    e[0] = 1 % mod_;
    LinearSolution s = solve_linear(multiplication_matrix(), e);
    CycloInt r(p_, m_, n_);
    r.c_ = s.x;
    return r;
}

ZpMatrix CycloInt::multiplication_matrix() const {
    const std::size_t phi = c_.size();
    ZpMatrix mat(p_, n_, phi, phi);
    CycloInt col = *this;
    CycloInt x(p_, m_, n_);
    if (phi > 1) x.c_[1] = 1;
    for (std::size_t j = 0; j < phi; ++j) {
        for (std::size_t i = 0; i < phi; ++i) mat.set_residue(i, j, col.c_[i]);
        if (j + 1 < phi) col = col * x;
    }
    return mat;
}

Rational CycloInt::norm_val() const {
    if (is_zero()) fail(ErrorCode::PrecisionInconclusive, "value is zero modulo p^N");
    // v_p(N(a)) = v_p(det of multiplication) = sum of elementary-divisor valuations
    i64 total = 0;
    for (Valuation v : smith_valuations(multiplication_matrix())) {
        if (v.is_saturated()) {
            fail(ErrorCode::PrecisionInconclusive,
                 "norm valuation not determined modulo p^" + std::to_string(n_));
        }
        total += v.value();
    }
    return Rational(total, static_cast<i64>(c_.size()));
}

CycloInt CycloInt::operator-() const {
    CycloInt r = *this;
    for (auto& c : r.c_) c = neg_mod(c, mod_);
    return r;
}

CycloInt operator+(const CycloInt& a, const CycloInt& b) {
    a.check_compatible(b);
    CycloInt r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = add_mod(a.c_[i], b.c_[i], a.mod_);
    return r;
}

CycloInt operator-(const CycloInt& a, const CycloInt& b) {
    a.check_compatible(b);
    CycloInt r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = sub_mod(a.c_[i], b.c_[i], a.mod_);
    return r;
}

CycloInt operator*(const CycloInt& a, const CycloInt& b) {
    a.check_compatible(b);
    const std::size_t n = a.c_.size();
    std::vector<u64> prod(2 * n - 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
            prod[i + j] = add_mod(prod[i + j], mul_mod(a.c_[i], b.c_[j], a.mod_), a.mod_);
    }
    CycloInt r(a.p_, a.m_, a.n_);
    CycloInt::reduce_in_place(a.p_, a.m_, a.mod_, prod);
    r.c_ = std::move(prod);
    return r;
}

std::ostream& operator<<(std::ostream& os, const CycloInt& a) {
    os << '(';
    for (std::size_t i = 0; i < a.dim(); ++i) os << (i ? ", " : "") << a.coeffs()[i];
    return os << ")@" << a.level();
}

// ---------------------------------------------------------------------------

RootOfUnity::RootOfUnity(u64 prime, unsigned level, u64 exponent) : p_(prime), m_(level) {
    u64 order = *checked_pow(prime, level);
    e_ = exponent % order;
    if (e_ == 0) {
        m_ = 0;
        return;
    }
    while (m_ > 0 && e_ % p_ == 0) {
        e_ /= p_;
        --m_;
    }
}

u64 RootOfUnity::exponent_at(unsigned target_level) const {
    if (target_level < m_) {
        fail(ErrorCode::LevelMismatch, "root of order p^" + std::to_string(m_) +
                                           " does not lie in mu_{p^" +
                                           std::to_string(target_level) + "}");
    }
    return e_ * *checked_pow(p_, target_level - m_);
}

RootOfUnity RootOfUnity::galois(u64 u) const {
    if (m_ == 0) return *this;
    u64 order = *checked_pow(p_, m_);
    return RootOfUnity(p_, m_, mul_mod(e_, u % order, order));
}

RootOfUnity RootOfUnity::inverse() const {
    if (m_ == 0) return *this;
    u64 order = *checked_pow(p_, m_);
    return RootOfUnity(p_, m_, order - e_);
}

std::ostream& operator<<(std::ostream& os, const RootOfUnity& z) {
    return os << "zeta_" << *checked_pow(z.prime(), z.level()) << "^" << z.exponent();
}

CycloInt zeta_embed(const RootOfUnity& z, unsigned target_level, unsigned precision) {
    u64 k = z.exponent_at(target_level);
    u64 order = *checked_pow(z.prime(), target_level);
    std::vector<u64> v(order, 0);
    v[k % order] = 1;
    return CycloInt::from_coeffs(z.prime(), target_level, precision, v);
}

u64 degree_delta(const RootOfUnity& z) { return euler_phi_prime_power(z.prime(), z.level()); }

std::vector<u64> units_mod_prime_power(u64 p, unsigned m) {
    if (m == 0) return {1};
    u64 order = *checked_pow(p, m);
    std::vector<u64> out;
    out.reserve(euler_phi_prime_power(p, m));
    for (u64 u = 1; u < order; ++u)
        if (u % p != 0) out.push_back(u);
    return out;
}

}  // namespace iwasawa
