#include "iwasawa/padic.hpp"

#include <algorithm>
#include <numeric>

namespace iwasawa {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotAUnit: return "NotAUnit";
        case ErrorCode::PrecisionInconclusive: return "PrecisionInconclusive";
        case ErrorCode::LevelMismatch: return "LevelMismatch";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::NotContinuous: return "NotContinuous";
        case ErrorCode::DegreeOverflow: return "DegreeOverflow";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::IndexError: return "IndexError";
        case ErrorCode::RangeError: return "RangeError";
        case ErrorCode::NotPrimitive: return "NotPrimitive";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::ValidationError: return "ValidationError";
        case ErrorCode::IncompleteFactorBasis: return "IncompleteFactorBasis";
        case ErrorCode::NonDivisible: return "NonDivisible";
        case ErrorCode::NotRational: return "NotRational";
        case ErrorCode::NotStabilized: return "NotStabilized";
    }
    return "Unknown";
}

std::optional<u64> checked_pow(u64 p, unsigned e, u64 limit) {
    u64 r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (p != 0 && r > limit / p) return std::nullopt;
        r *= p;
    }
    if (r > limit) return std::nullopt;
    return r;
}

u64 modulus_for(u64 p, unsigned precision) {
    if (p < 2) fail(ErrorCode::ValidationError, "prime must be >= 2");
    if (precision < 1) fail(ErrorCode::ValidationError, "precision must be >= 1");
    auto m = checked_pow(p, precision, kMaxModulus);
    if (!m) {
        fail(ErrorCode::ValidationError, "p^N = " + std::to_string(p) + "^" +
                                             std::to_string(precision) +
                                             " exceeds the supported modulus 2^62");
    }
    return *m;
}

u64 reduce_signed(i64 v, u64 m) {
    if (v >= 0) return static_cast<u64>(v) % m;
    // -(v+1) avoids overflow at INT64_MIN
    u64 a = (static_cast<u64>(-(v + 1)) + 1) % m;
    return neg_mod(a, m);
}

std::ostream& operator<<(std::ostream& os, const Valuation& v) {
    if (v.is_saturated()) return os << "sat";
    return os << v.value();
}

Valuation residue_valuation(u64 r, u64 p, unsigned precision) {
    if (r == 0) return Valuation::saturated();
    int k = 0;
    while (r % p == 0) {
        r /= p;
        ++k;
    }
    return Valuation(std::min(k, static_cast<int>(precision)));
}

u64 inv_mod(u64 a, u64 m) {
    // extended Euclid on signed 128-bit values
    __int128 t = 0, new_t = 1;
    __int128 r = m, new_r = a % m;
    while (new_r != 0) {
        __int128 q = r / new_r;
        __int128 tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) fail(ErrorCode::NotAUnit, "residue " + std::to_string(a) + " has no inverse");
    if (t < 0) t += m;
    return static_cast<u64>(t);
}

PadicInt::PadicInt(u64 prime, unsigned precision, i64 value)
    : p_(prime), n_(precision), mod_(modulus_for(prime, precision)),
      r_(reduce_signed(value, mod_)) {}

PadicInt PadicInt::from_residue(u64 prime, unsigned precision, u64 residue) {
    u64 m = modulus_for(prime, precision);
    return PadicInt(prime, precision, m, residue % m);
}

PadicInt PadicInt::reduced_to(unsigned precision) const {
    if (precision > n_) {
        fail(ErrorCode::ShapeMismatch, "cannot raise precision from " + std::to_string(n_) +
                                           " to " + std::to_string(precision));
    }
    return from_residue(p_, precision, r_);
}

void PadicInt::check_compatible(const PadicInt& o) const {
    if (p_ != o.p_ || n_ != o.n_) {
        fail(ErrorCode::ShapeMismatch, "operands differ in (p, N): (" + std::to_string(p_) + ", " +
                                           std::to_string(n_) + ") vs (" + std::to_string(o.p_) +
                                           ", " + std::to_string(o.n_) + ")");
    }
}

PadicInt PadicInt::inv() const {
    if (!is_unit()) {
        fail(ErrorCode::NotAUnit, std::to_string(r_) + " is divisible by p = " + std::to_string(p_));
    }
    return PadicInt(p_, n_, mod_, inv_mod(r_, mod_));
}

PadicInt PadicInt::pow(u64 e) const {
    u64 base = r_, acc = 1 % mod_;
    while (e) {
        if (e & 1) acc = mul_mod(acc, base, mod_);
        base = mul_mod(base, base, mod_);
        e >>= 1;
    }
    return PadicInt(p_, n_, mod_, acc);
}

PadicInt PadicInt::operator-() const { return PadicInt(p_, n_, mod_, neg_mod(r_, mod_)); }

PadicInt operator+(const PadicInt& a, const PadicInt& b) {
    a.check_compatible(b);
    return PadicInt(a.p_, a.n_, a.mod_, add_mod(a.r_, b.r_, a.mod_));
}

PadicInt operator-(const PadicInt& a, const PadicInt& b) {
    a.check_compatible(b);
    return PadicInt(a.p_, a.n_, a.mod_, sub_mod(a.r_, b.r_, a.mod_));
}

PadicInt operator*(const PadicInt& a, const PadicInt& b) {
    a.check_compatible(b);
    return PadicInt(a.p_, a.n_, a.mod_, mul_mod(a.r_, b.r_, a.mod_));
}

std::ostream& operator<<(std::ostream& os, const PadicInt& x) { return os << x.residue(); }

// ---------------------------------------------------------------------------

ZpMatrix::ZpMatrix(u64 prime, unsigned precision, std::size_t rows, std::size_t cols)
    : p_(prime), n_(precision), mod_(modulus_for(prime, precision)), rows_(rows), cols_(cols),
      data_(rows * cols, 0) {}

ZpMatrix ZpMatrix::from_rows(u64 prime, unsigned precision,
                             const std::vector<std::vector<i64>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    ZpMatrix m(prime, precision, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) fail(ErrorCode::ShapeMismatch, "ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m.data_[i * c + j] = reduce_signed(rows[i][j], m.mod_);
    }
    return m;
}

ZpMatrix ZpMatrix::identity(u64 prime, unsigned precision, std::size_t n) {
    ZpMatrix m(prime, precision, n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1 % m.mod_;
    return m;
}

void ZpMatrix::set(std::size_t i, std::size_t j, const PadicInt& x) {
    if (x.prime() != p_ || x.precision() != n_) fail(ErrorCode::ShapeMismatch, "entry (p, N) mismatch");
    data_[i * cols_ + j] = x.residue();
}

ZpMatrix operator*(const ZpMatrix& a, const ZpMatrix& b) {
    if (a.p_ != b.p_ || a.n_ != b.n_ || a.cols_ != b.rows_) {
        fail(ErrorCode::ShapeMismatch, "matrix product shape mismatch");
    }
    ZpMatrix c(a.p_, a.n_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            u64 aik = a.residue(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                c.data_[i * c.cols_ + j] =
                    add_mod(c.data_[i * c.cols_ + j], mul_mod(aik, b.residue(k, j), a.mod_), a.mod_);
        }
    return c;
}

namespace {

/// Working copy for elimination: entries plus cached valuations.
struct Elim {
    u64 p;
    unsigned n;
    u64 mod;
    std::size_t rows, cols;
    std::vector<u64> a;

    u64& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    Valuation val(std::size_t i, std::size_t j) const {
        return residue_valuation(a[i * cols + j], p, n);
    }

    /// Entry of minimal valuation in the block [k.., k..]; ties broken by (row, col).
    std::optional<std::pair<std::size_t, std::size_t>> pivot(std::size_t k,
                                                             std::size_t col_end) const {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        Valuation best_v = Valuation::saturated();
        for (std::size_t i = k; i < rows; ++i)
            for (std::size_t j = k; j < col_end; ++j) {
                Valuation v = val(i, j);
                if (v.is_saturated()) continue;
                if (!best || v < best_v) {
                    best = {i, j};
                    best_v = v;
                }
            }
        return best;
    }

    void swap_rows(std::size_t r1, std::size_t r2) {
        if (r1 == r2) return;
        for (std::size_t j = 0; j < cols; ++j) std::swap(at(r1, j), at(r2, j));
    }
    void swap_cols(std::size_t c1, std::size_t c2) {
        if (c1 == c2) return;
        for (std::size_t i = 0; i < rows; ++i) std::swap(at(i, c1), at(i, c2));
    }

    /// Quotient q with entry == q * pivot exactly, given val(entry) >= val(pivot).
    u64 ratio(u64 entry, u64 piv) const {
        u64 pv = 1, unit = piv;
        while (unit % p == 0) {
            unit /= p;
            pv *= p;
        }
        // entry = pv * (entry / pv); the quotient is (entry / pv) * unit^{-1} mod p^N
        return mul_mod(entry / pv, inv_mod(unit % mod, mod), mod);
    }

    /// row_t -= q * row_s over columns [from, col_end)
    void row_axpy(std::size_t t, std::size_t s, u64 q, std::size_t from, std::size_t col_end) {
        for (std::size_t j = from; j < col_end; ++j)
            at(t, j) = sub_mod(at(t, j), mul_mod(q, at(s, j), mod), mod);
    }
};

}  // namespace

std::vector<Valuation> smith_valuations(const ZpMatrix& m) {
    Elim e{m.prime(), m.precision(), m.modulus(), m.rows(), m.cols(), {}};
    e.a.resize(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) e.at(i, j) = m.residue(i, j);

    std::size_t len = std::min(m.rows(), m.cols());
    std::vector<Valuation> out;
    out.reserve(len);
    for (std::size_t k = 0; k < len; ++k) {
        auto piv = e.pivot(k, e.cols);
        if (!piv) {
            // remaining block is zero modulo p^N
            while (out.size() < len) out.push_back(Valuation::saturated());
            break;
        }
        e.swap_rows(k, piv->first);
        e.swap_cols(k, piv->second);
        u64 pk = e.at(k, k);
        out.push_back(e.val(k, k));
        for (std::size_t i = k + 1; i < e.rows; ++i) {
            if (e.at(i, k) == 0) continue;
            e.row_axpy(i, k, e.ratio(e.at(i, k), pk), k, e.cols);
        }
        // Column clearing only touches row k, whose off-pivot entries do not
        // affect the remaining block once the column below the pivot is zero.
        for (std::size_t j = k + 1; j < e.cols; ++j) e.at(k, j) = 0;
    }
    std::sort(out.begin(), out.end());
    return out;
}

LinearSolution solve_linear(const ZpMatrix& m, std::span<const u64> b) {
    if (b.size() != m.rows()) fail(ErrorCode::ShapeMismatch, "right-hand side length mismatch");
    const std::size_t rows = m.rows(), cols = m.cols();
    // augmented matrix; the rhs column never takes part in pivot search
    Elim e{m.prime(), m.precision(), m.modulus(), rows, cols + 1, {}};
    e.a.resize(rows * (cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) e.at(i, j) = m.residue(i, j);
        e.at(i, cols) = b[i] % e.mod;
    }
    std::vector<std::size_t> perm(cols);
    std::iota(perm.begin(), perm.end(), std::size_t{0});

    std::size_t rank = 0;
    std::vector<int> pivot_val;
    for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
        auto piv = e.pivot(k, cols);
        if (!piv) break;
        e.swap_rows(k, piv->first);
        e.swap_cols(k, piv->second);
        std::swap(perm[k], perm[piv->second]);
        u64 pk = e.at(k, k);
        pivot_val.push_back(e.val(k, k).value());
        for (std::size_t i = k + 1; i < rows; ++i) {
            if (e.at(i, k) == 0) continue;
            e.row_axpy(i, k, e.ratio(e.at(i, k), pk), k, cols + 1);
        }
        ++rank;
    }

    LinearSolution sol;
    const unsigned n = m.precision();
    unsigned consistent_at = n;
    for (std::size_t i = 0; i < rows; ++i) {
        Valuation rv = e.val(i, cols);
        if (rv.is_saturated()) continue;
        int need = i < rank ? pivot_val[i] : static_cast<int>(n);
        if (rv.value() < need) consistent_at = std::min<unsigned>(consistent_at, rv.value());
    }
    sol.consistent_precision = consistent_at;
    sol.consistent = consistent_at == n;
    if (!sol.consistent) return sol;

    int max_pv = 0;
    for (int v : pivot_val) max_pv = std::max(max_pv, v);
    sol.determined_precision = n - static_cast<unsigned>(max_pv);

    // back substitution in permuted coordinates; free variables are zero
    std::vector<u64> y(cols, 0);
    for (std::size_t ii = rank; ii-- > 0;) {
        u64 num = e.at(ii, cols);
        for (std::size_t j = ii + 1; j < rank; ++j)
            num = sub_mod(num, mul_mod(e.at(ii, j), y[j], e.mod), e.mod);
        y[ii] = num == 0 ? 0 : e.ratio(num, e.at(ii, ii));
    }
    sol.x.assign(cols, 0);
    for (std::size_t k = 0; k < cols; ++k) sol.x[perm[k]] = y[k];
    return sol;
}

}  // namespace iwasawa
