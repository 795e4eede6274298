#include "iwasawa/flats.hpp"

#include <algorithm>
#include <exception>
#include <sstream>
#include <thread>

namespace iwasawa {

unsigned rank_mod_p(const std::vector<GroupWord>& words, u64 p) {
    if (words.empty()) return 0;
    const std::size_t cols = words.front().size();
    std::vector<std::vector<u64>> m;
    for (const auto& w : words) {
        std::vector<u64> row;
        for (i64 a : w.exponents) row.push_back(reduce_signed(a, p));
        m.push_back(std::move(row));
    }
    unsigned rank = 0;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        u64 inv = inv_mod(m[rank][c], p);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c] == 0) continue;
            u64 f = mul_mod(m[r][c], inv, p);
            for (std::size_t k = 0; k < cols; ++k) m[r][k] = sub_mod(m[r][k], mul_mod(f, m[rank][k], p), p);
        }
        ++rank;
    }
    return rank;
}

ZpFlat::ZpFlat(u64 prime, unsigned nvars, std::vector<FlatConstraint> constraints)
    : p_(prime), d_(nvars), c_(std::move(constraints)) {
    std::vector<GroupWord> words;
    for (const auto& c : c_) {
        if (c.word.size() != d_) fail(ErrorCode::ShapeMismatch, "flat word has wrong length");
        if (c.zeta.prime() != p_) fail(ErrorCode::ShapeMismatch, "root of unity for a different prime");
        words.push_back(c.word);
    }
    if (rank_mod_p(words, p_) != c_.size()) {
        fail(ErrorCode::ValidationError, "flat words do not extend to a Z_p-basis");
    }
}

unsigned ZpFlat::max_level() const {
    unsigned m = 0;
    for (const auto& c : c_) m = std::max(m, c.zeta.level());
    return m;
}

IwasawaElement simple_element(const RingSpec& spec, const GroupWord& gamma, const RootOfUnity& zeta) {
    if (gamma.size() != spec.nvars) fail(ErrorCode::ShapeMismatch, "group word has wrong length");
    if (zeta.prime() != spec.p) fail(ErrorCode::ShapeMismatch, "root of unity for a different prime");
    if (gamma.in_frattini(spec.p)) fail(ErrorCode::NotPrimitive, "gamma lies in Gamma^p");
    const unsigned m = zeta.level();
    const bool nonnegative =
        std::all_of(gamma.exponents.begin(), gamma.exponents.end(), [](i64 a) { return a >= 0; });
    i64 word_degree = 0;
    for (i64 a : gamma.exponents) word_degree += a;
    const u64 conjugates = degree_delta(zeta);
    if (nonnegative && static_cast<u64>(word_degree) * conjugates > spec.degree_bound) {
        fail(ErrorCode::DegreeOverflow, "f_{gamma,zeta} has degree " +
                                            std::to_string(static_cast<u64>(word_degree) * conjugates) +
                                            " > D = " + std::to_string(spec.degree_bound));
    }

    // prod_sigma (X - sigma zeta) in O[X], lowest degree first
    std::vector<CycloInt> poly{CycloInt::constant(spec.p, m, spec.precision, 1)};
    for (u64 u : units_mod_prime_power(spec.p, m)) {
        CycloInt root = zeta_embed(zeta.galois(u), m, spec.precision);
        std::vector<CycloInt> next(poly.size() + 1, CycloInt(spec.p, m, spec.precision));
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] = next[k + 1] + poly[k];
            next[k] = next[k] - poly[k] * root;
        }
        poly = std::move(next);
    }

    IwasawaElement g = group_elem(spec, gamma);
    IwasawaElement acc = IwasawaElement::zero(spec);
    IwasawaElement power = IwasawaElement::one(spec);
    for (std::size_t k = 0; k < poly.size(); ++k) {
        if (k) power = power * g;
        acc = acc + power.scaled(poly[k].rational_value());
    }
    return acc;
}

std::vector<ZpFlat> zeros_of_simple(u64 p, unsigned nvars, const GroupWord& gamma, const RootOfUnity& zeta) {
    if (gamma.size() != nvars) fail(ErrorCode::ShapeMismatch, "group word has wrong length");
    if (gamma.in_frattini(p)) fail(ErrorCode::NotPrimitive, "gamma lies in Gamma^p");
    std::vector<ZpFlat> out;
    for (u64 u : units_mod_prime_power(p, zeta.level()))
        out.emplace_back(p, nvars, std::vector<FlatConstraint>{{gamma, zeta.galois(u)}});
    return out;
}

bool flat_contains(const ZpFlat& t, const Character& w) {
    if (w.nvars() != t.nvars() || w.prime() != t.prime()) fail(ErrorCode::ShapeMismatch, "character shape differs from flat");
    for (const auto& c : t.constraints())
        if (!(w.value_on(c.word) == c.zeta)) return false;
    return true;
}

u64 flat_count(const ZpFlat& t, unsigned n) {
    if (t.max_level() > n) return 0;
    auto r = checked_pow(t.prime(), n * (t.nvars() - t.codim()));
    if (!r) fail(ErrorCode::RangeError, "flat count overflows 64 bits");
    return *r;
}

std::vector<u64> decode_exponents(u64 code, u64 order, unsigned nvars) {
    std::vector<u64> e(nvars);
    for (unsigned i = 0; i < nvars; ++i) {
        e[i] = code % order;
        code /= order;
    }
    return e;
}

namespace {

u64 enumeration_size(u64 p, unsigned n, unsigned d, const EnumerationOptions& opts) {
    auto total = checked_pow(p, n * d);
    if (!total || *total > opts.budget) {
        fail(ErrorCode::BudgetExceeded, "p^(nd) characters exceed the enumeration budget of " +
                                            std::to_string(opts.budget));
    }
    return *total;
}

/// Visits codes [0, total) in contiguous chunks, one per worker; `visit(code, state)`
/// returns whether the code is selected. Selected codes are merged in increasing order.
template <class MakeState, class Visit>
std::vector<u64> parallel_select(u64 total, const EnumerationOptions& opts, MakeState make_state, Visit visit) {
    unsigned workers = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    if (total < 4096) workers = 1;
    workers = static_cast<unsigned>(std::min<u64>(workers, total ? total : 1));
    std::vector<std::vector<u64>> found(workers);
    std::vector<std::exception_ptr> errors(workers);
    auto run_chunk = [&](unsigned w) {
        try {
            auto state = make_state();
            u64 lo = total * w / workers, hi = total * (w + 1) / workers;
            for (u64 code = lo; code < hi; ++code)
                if (visit(code, state)) found[w].push_back(code);
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        run_chunk(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_chunk, w);
        for (auto& th : pool) th.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::vector<u64> out;
    for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
    return out;
}

std::vector<u64> zero_codes(const std::vector<IwasawaElement>& gens, unsigned n, const EnumerationOptions& opts) {
    if (gens.empty()) fail(ErrorCode::ValidationError, "zero set needs at least one generator");
    const RingSpec& s = gens.front().spec();
    for (const auto& g : gens) {
        if (!(g.spec() == s)) fail(ErrorCode::ShapeMismatch, "generators live in different rings");
        if (g.is_zero()) fail(ErrorCode::ValidationError, "generator is zero modulo p^N");
    }
    const u64 total = enumeration_size(s.p, n, s.nvars, opts);
    const u64 order = *checked_pow(s.p, n);
    auto make_state = [&] {
        std::vector<CharacterEvaluator> evs;
        for (const auto& g : gens) evs.emplace_back(g);
        return evs;
    };
    auto visit = [&](u64 code, std::vector<CharacterEvaluator>& evs) {
        std::vector<u64> e = decode_exponents(code, order, s.nvars);
        for (const auto& ev : evs) {
            if (!ev.vanishes_at(e, n)) return false;
            if (ev.truncated()) {
                Character w(s.p, n, e);
                std::ostringstream ss;
                ss << "generator vanishes at " << w << " only after truncation at degree " << s.degree_bound;
                fail(ErrorCode::PrecisionInconclusive, ss.str());
            }
        }
        return true;
    };
    return parallel_select(total, opts, make_state, visit);
}

}  // namespace

u64 flat_count_enumerated(const ZpFlat& t, unsigned n, const EnumerationOptions& opts) {
    const u64 total = enumeration_size(t.prime(), n, t.nvars(), opts);
    const u64 order = *checked_pow(t.prime(), n);
    auto codes = parallel_select(
        total, opts, [] { return 0; },
        [&](u64 code, int&) { return flat_contains(t, Character(t.prime(), n, decode_exponents(code, order, t.nvars()))); });
    return codes.size();
}

ZeroSetReport zero_count(const std::vector<IwasawaElement>& gens, unsigned n, const EnumerationOptions& opts) {
    ZeroSetReport r;
    r.n = n;
    r.count = zero_codes(gens, n, opts).size();
    r.precision = gens.front().spec().precision;
    r.degree_bound = gens.front().spec().degree_bound;
    r.truncated = std::any_of(gens.begin(), gens.end(), [](const IwasawaElement& g) { return g.truncated(); });
    return r;
}

std::vector<std::vector<u64>> zero_set(const std::vector<IwasawaElement>& gens, unsigned n,
                                       const EnumerationOptions& opts) {
    std::vector<std::vector<u64>> out;
    const RingSpec& s = gens.empty() ? RingSpec{} : gens.front().spec();
    const u64 order = *checked_pow(s.p, n);
    for (u64 code : zero_codes(gens, n, opts)) out.push_back(decode_exponents(code, order, s.nvars));
    return out;
}

}  // namespace iwasawa
