#pragma once

#include <vector>

#include "iwasawa/element.hpp"

namespace iwasawa {

struct EnumerationOptions {
    u64 budget = 10'000'000;
    /// 0 picks the hardware concurrency.
    unsigned threads = 0;
};

/// One condition omega(gamma_w) = z of a flat.
struct FlatConstraint {
    GroupWord word;
    RootOfUnity zeta;
};

/// {omega : omega(w_i) = z_i for all i}, with the w_i part of a Z_p-basis of Gamma.
class ZpFlat {
public:
    ZpFlat(u64 prime, unsigned nvars, std::vector<FlatConstraint> constraints);

    u64 prime() const { return p_; }
    unsigned nvars() const { return d_; }
    unsigned codim() const { return static_cast<unsigned>(c_.size()); }
    const std::vector<FlatConstraint>& constraints() const { return c_; }
    /// Largest level among the prescribed roots of unity.
    unsigned max_level() const;

private:
    u64 p_;
    unsigned d_;
    std::vector<FlatConstraint> c_;
};

/// Rank over F_p of the exponent vectors, used for the basis-extension check.
unsigned rank_mod_p(const std::vector<GroupWord>& words, u64 p);

/// f_{gamma,zeta} = prod over Galois conjugates of (gamma - sigma zeta).
IwasawaElement simple_element(const RingSpec& spec, const GroupWord& gamma, const RootOfUnity& zeta);

/// Galois orbit of flats {omega(gamma) = sigma zeta} forming the zero set of f_{gamma,zeta}.
std::vector<ZpFlat> zeros_of_simple(u64 p, unsigned nvars, const GroupWord& gamma, const RootOfUnity& zeta);

bool flat_contains(const ZpFlat& t, const Character& w);

/// |T cap Gamma^[p^n]| by the closed form.
u64 flat_count(const ZpFlat& t, unsigned n);
/// Same count by visiting all p^{nd} characters.
u64 flat_count_enumerated(const ZpFlat& t, unsigned n, const EnumerationOptions& opts = {});

struct ZeroSetReport {
    unsigned n = 0;
    u64 count = 0;
    bool enumerated = true;
    unsigned precision = 0;
    unsigned degree_bound = 0;
    bool truncated = false;
};

/// Number of omega in Gamma^[p^n] at which every generator vanishes modulo p^N.
ZeroSetReport zero_count(const std::vector<IwasawaElement>& gens, unsigned n, const EnumerationOptions& opts = {});

/// Exponent vectors (at level n) of the characters counted by zero_count, in enumeration order.
std::vector<std::vector<u64>> zero_set(const std::vector<IwasawaElement>& gens, unsigned n,
                                       const EnumerationOptions& opts = {});

/// Exponent vector with index `code` in the mixed-radix enumeration of (Z/order)^d.
std::vector<u64> decode_exponents(u64 code, u64 order, unsigned nvars);

}  // namespace iwasawa
