#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "iwasawa/error.hpp"

namespace iwasawa {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

/// Largest supported working modulus p^N (products are formed in 128 bits).
inline constexpr u64 kMaxModulus = u64{1} << 62;

/// p^e, or nullopt when the result would exceed `limit`.
std::optional<u64> checked_pow(u64 p, unsigned e, u64 limit = ~u64{0});

/// p^N as a working modulus; throws ValidationError when p^N is unsupported.
u64 modulus_for(u64 p, unsigned precision);

inline u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }
inline u64 add_mod(u64 a, u64 b, u64 m) {
    u64 s = a + b;
    return s >= m ? s - m : s;
}
inline u64 sub_mod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }
inline u64 neg_mod(u64 a, u64 m) { return a == 0 ? 0 : m - a; }
u64 reduce_signed(i64 v, u64 m);

/// Valuation of a residue modulo p^N. A zero residue only says "at least N",
/// which is recorded as the saturation marker; it orders above every finite value.
class Valuation {
public:
    constexpr Valuation() = default;
    constexpr explicit Valuation(int v) : value_(v), saturated_(false) {}
    static constexpr Valuation saturated() {
        Valuation v;
        v.saturated_ = true;
        return v;
    }

    constexpr bool is_saturated() const { return saturated_; }
    constexpr bool is_finite() const { return !saturated_; }
    /// Finite value; meaningless when saturated.
    constexpr int value() const { return value_; }

    constexpr std::strong_ordering operator<=>(const Valuation& o) const {
        if (saturated_ || o.saturated_) return saturated_ <=> o.saturated_;
        return value_ <=> o.value_;
    }
    constexpr bool operator==(const Valuation& o) const { return (*this <=> o) == 0; }

    friend constexpr Valuation operator+(Valuation a, Valuation b) {
        if (a.saturated_ || b.saturated_) return saturated();
        return Valuation(a.value_ + b.value_);
    }

private:
    int value_ = 0;
    bool saturated_ = false;
};

std::ostream& operator<<(std::ostream& os, const Valuation& v);

/// Valuation of a raw residue r modulo p^N.
Valuation residue_valuation(u64 r, u64 p, unsigned precision);

/// An element of Z/p^N Z.
class PadicInt {
public:
    PadicInt(u64 prime, unsigned precision, i64 value);
    static PadicInt from_residue(u64 prime, unsigned precision, u64 residue);

    /// Explicit coercion to a lower precision.
    PadicInt reduced_to(unsigned precision) const;

    u64 prime() const { return p_; }
    unsigned precision() const { return n_; }
    u64 residue() const { return r_; }
    u64 modulus() const { return mod_; }

    Valuation val() const { return residue_valuation(r_, p_, n_); }
    bool is_unit() const { return r_ % p_ != 0; }
    bool is_zero() const { return r_ == 0; }
    /// Inverse of a unit; throws NotAUnit otherwise.
    PadicInt inv() const;
    PadicInt pow(u64 e) const;

    PadicInt operator-() const;
    friend PadicInt operator+(const PadicInt& a, const PadicInt& b);
    friend PadicInt operator-(const PadicInt& a, const PadicInt& b);
    friend PadicInt operator*(const PadicInt& a, const PadicInt& b);
    friend bool operator==(const PadicInt& a, const PadicInt& b) {
        return a.p_ == b.p_ && a.n_ == b.n_ && a.r_ == b.r_;
    }

private:
    PadicInt(u64 p, unsigned n, u64 mod, u64 r) : p_(p), n_(n), mod_(mod), r_(r) {}
    void check_compatible(const PadicInt& o) const;

    u64 p_;
    unsigned n_;
    u64 mod_;
    u64 r_;
};

std::ostream& operator<<(std::ostream& os, const PadicInt& x);

/// Inverse of a unit residue modulo m = p^N.
u64 inv_mod(u64 a, u64 m);

/// Dense matrix over Z/p^N Z.
class ZpMatrix {
public:
    ZpMatrix(u64 prime, unsigned precision, std::size_t rows, std::size_t cols);
    static ZpMatrix from_rows(u64 prime, unsigned precision,
                              const std::vector<std::vector<i64>>& rows);
    static ZpMatrix identity(u64 prime, unsigned precision, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    u64 prime() const { return p_; }
    unsigned precision() const { return n_; }
    u64 modulus() const { return mod_; }

    u64 residue(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    void set_residue(std::size_t i, std::size_t j, u64 r) { data_[i * cols_ + j] = r % mod_; }
    PadicInt at(std::size_t i, std::size_t j) const {
        return PadicInt::from_residue(p_, n_, residue(i, j));
    }
    void set(std::size_t i, std::size_t j, const PadicInt& x);

    friend ZpMatrix operator*(const ZpMatrix& a, const ZpMatrix& b);
    friend bool operator==(const ZpMatrix& a, const ZpMatrix& b) = default;

private:
    u64 p_;
    unsigned n_;
    u64 mod_;
    std::size_t rows_, cols_;
    std::vector<u64> data_;
};

/// Elementary-divisor valuations v_1 <= v_2 <= ... of the Smith form, computed by
/// full pivoting on the entry of least valuation (ties: smallest row, then column).
/// Length is min(rows, cols).
std::vector<Valuation> smith_valuations(const ZpMatrix& m);

/// Solution of A x = b over Z/p^N Z.
struct LinearSolution {
    bool consistent = false;
    std::vector<u64> x;  ///< one solution (residues), valid when consistent
    /// x is determined modulo p^determined_precision (N minus the largest pivot valuation).
    unsigned determined_precision = 0;
    /// Largest N' <= N for which the system is consistent modulo p^N'.
    unsigned consistent_precision = 0;
};

LinearSolution solve_linear(const ZpMatrix& a, std::span<const u64> b);

}  // namespace iwasawa
