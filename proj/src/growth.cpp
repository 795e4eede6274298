#include "iwasawa/growth.hpp"

namespace iwasawa {

u64 rank_quotient(const std::vector<IwasawaElement>& gens, unsigned n, const EnumerationOptions& opts) {
    return zero_count(gens, n, opts).count;
}

namespace {

using i128 = __int128;

i128 power(u64 p, unsigned e) {
    i128 r = 1;
    for (unsigned i = 0; i < e; ++i) {
        r *= p;
        if (r > (i128{1} << 100)) fail(ErrorCode::RangeError, "p-power scale overflows");
    }
    return r;
}

/// Nearest integer to a / b (b > 0), halves rounded up.
i128 round_div(i128 a, i128 b) {
    i128 num = 2 * a + b, den = 2 * b;
    i128 q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

std::size_t stable_from(const std::vector<i64>& est) {
    std::size_t k = est.size() - 1;
    while (k > 0 && est[k - 1] == est.back()) --k;
    return k;
}

std::vector<i64> estimates(const std::vector<i128>& values, const std::vector<i128>& scales) {
    std::vector<i64> out;
    for (std::size_t i = 0; i < values.size(); ++i) out.push_back(static_cast<i64>(round_div(values[i], scales[i])));
    return out;
}

}  // namespace

KappaFit fit_kappas(const GrowthSeries& series) {
    const auto& smp = series.samples;
    if (smp.size() < 3) fail(ErrorCode::ValidationError, "fitting needs at least three samples");
    if (series.d < 1) fail(ErrorCode::ValidationError, "d must be at least 1");
    for (std::size_t i = 1; i < smp.size(); ++i)
        if (smp[i].first <= smp[i - 1].first) fail(ErrorCode::ValidationError, "sample levels must increase strictly");

    const unsigned d = series.d;
    std::vector<i128> s, top, sub;
    for (const auto& [n, v] : smp) {
        s.push_back(static_cast<i128>(v));
        top.push_back(power(series.p, n * d));
        sub.push_back(power(series.p, n * (d - 1)));
    }
    KappaFit fit;
    fit.estimates1 = estimates(s, top);
    const std::size_t k = fit.estimates1.size();
    if (fit.estimates1[k - 1] != fit.estimates1[k - 2]) {
        fail(ErrorCode::NotStabilized, "p^{nd} ratios do not stabilise on the sampled range");
    }
    fit.kappa1 = fit.estimates1.back();
    fit.threshold1 = stable_from(fit.estimates1);

    std::vector<i128> rest;
    for (std::size_t i = 0; i < k; ++i) rest.push_back(s[i] - fit.kappa1 * top[i]);
    fit.estimates2 = estimates(rest, sub);
    if (fit.estimates2[k - 1] != fit.estimates2[k - 2]) {
        fail(ErrorCode::NotStabilized, "p^{n(d-1)} ratios do not stabilise on the sampled range");
    }
    fit.kappa2 = fit.estimates2.back();
    fit.threshold2 = stable_from(fit.estimates2);

    for (std::size_t i = 0; i < k; ++i) {
        ResidualRow row;
        row.n = smp[i].first;
        row.s = smp[i].second;
        row.residual = rest[i] - fit.kappa2 * sub[i];
        row.scale = d >= 2 ? static_cast<u64>(power(series.p, row.n * (d - 2))) : 1;
        fit.residuals.push_back(row);
    }
    fit.pseudo_null = fit.kappa1 == 0 && fit.kappa2 == 0;
    return fit;
}

}  // namespace iwasawa
