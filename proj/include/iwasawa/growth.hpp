#pragma once

#include <utility>
#include <vector>

#include "iwasawa/flats.hpp"

namespace iwasawa {

struct GrowthSeries {
    u64 p = 2;
    unsigned d = 1;
    /// (n, s_n) with n strictly increasing.
    std::vector<std::pair<unsigned, u64>> samples;
};

/// rank_{Z_p} Lambda/(I_n + J), equal to the number of characters of Gamma^[p^n] killing J.
u64 rank_quotient(const std::vector<IwasawaElement>& gens, unsigned n, const EnumerationOptions& opts = {});

struct ResidualRow {
    unsigned n = 0;
    u64 s = 0;
    /// s_n - kappa1 p^{nd} - kappa2 p^{n(d-1)}
    __int128 residual = 0;
    /// E_n = p^{n(d-2)} for d >= 2, 1 for d = 1
    u64 scale = 1;
};

struct KappaFit {
    i64 kappa1 = 0;
    i64 kappa2 = 0;
    /// First sample index from which the estimates stay constant.
    std::size_t threshold1 = 0;
    std::size_t threshold2 = 0;
    std::vector<i64> estimates1;
    std::vector<i64> estimates2;
    std::vector<ResidualRow> residuals;
    /// s_n = O(E_n) on the sampled range (kappa1 = kappa2 = 0).
    bool pseudo_null = false;
};

/// Integer coefficients of s_n = kappa1 p^{nd} + kappa2 p^{n(d-1)} + O(E_n), read off
/// once the rounded ratios agree on the last two samples.
KappaFit fit_kappas(const GrowthSeries& series);

}  // namespace iwasawa
