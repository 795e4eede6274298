#include <doctest.h>

#include <random>

#include "iwasawa/growth.hpp"
#include "iwasawa/parser.hpp"
#include "support/errors.hpp"

using namespace iwasawa;

namespace {

u64 ipow(u64 p, unsigned e) { return *checked_pow(p, e); }

GrowthSeries synthetic(u64 p, unsigned d, i64 k1, i64 k2, unsigned n_lo, unsigned n_hi) {
    GrowthSeries g{p, d, {}};
    for (unsigned n = n_lo; n <= n_hi; ++n)
        g.samples.emplace_back(n, static_cast<u64>(k1) * ipow(p, n * d) + static_cast<u64>(k2) * ipow(p, n * (d - 1)));
    return g;
}

}  // namespace

TEST_CASE("rank_quotient examples") {
    RingSpec s{3, 8, 2, 8};
    IwasawaElement f = simple_element(s, GroupWord{{1, 0}}, RootOfUnity(3, 1, 1));
    CHECK(rank_quotient({f}, 2) == 18);
    CHECK(rank_quotient({IwasawaElement::one(s)}, 2) == 0);
    for (unsigned n = 0; n <= 3; ++n)
        CHECK(rank_quotient({parse_and_elaborate("t1", s), parse_and_elaborate("t2", s)}, n) == 1);
}

TEST_CASE("rank_quotient of powers of a simple element is independent of the exponent") {
    RingSpec s{3, 8, 2, 8};
    IwasawaElement f = simple_element(s, GroupWord{{1, 0}}, RootOfUnity(3, 1, 1));
    for (unsigned n = 1; n <= 3; ++n) {
        const u64 expect = 2 * ipow(3, n);
        for (u64 m = 1; m <= 3; ++m) CHECK(rank_quotient({f.pow(m)}, n) == expect);
    }
}

TEST_CASE("two relatively prime simple elements give O(E_n)") {
    RingSpec s{2, 8, 3, 8};
    IwasawaElement f1 = simple_element(s, GroupWord{{1, 0, 0}}, RootOfUnity(2, 1, 1));
    IwasawaElement f2 = simple_element(s, GroupWord{{0, 1, 0}}, RootOfUnity(2, 2, 1));
    for (unsigned n = 1; n <= 3; ++n) CHECK(rank_quotient({f1, f2}, n) <= 2 * ipow(2, n));
}

TEST_CASE("fit_kappas examples") {
    auto a = fit_kappas(synthetic(3, 2, 0, 2, 1, 4));
    CHECK(a.kappa1 == 0);
    CHECK(a.kappa2 == 2);
    for (const auto& r : a.residuals) CHECK(r.residual == 0);
    CHECK_FALSE(a.pseudo_null);

    auto b = fit_kappas(synthetic(2, 3, 1, 0, 1, 4));
    CHECK(b.kappa1 == 1);
    CHECK(b.kappa2 == 0);

    GrowthSeries c{3, 2, {{1, 5}, {2, 5}, {3, 5}, {4, 5}}};
    auto fc = fit_kappas(c);
    CHECK(fc.kappa1 == 0);
    CHECK(fc.kappa2 == 0);
    CHECK(fc.pseudo_null);
    CHECK(fc.residuals.back().residual == 5);
    CHECK(fc.residuals.back().scale == 1);
    CHECK(fc.threshold2 == 2);
}

TEST_CASE("fit_kappas errors") {
    CHECK_ERROR(fit_kappas(GrowthSeries{3, 2, {{1, 1}, {2, 1}}}), ValidationError);
    CHECK_ERROR(fit_kappas(GrowthSeries{3, 2, {{1, 1}, {1, 1}, {2, 1}}}), ValidationError);
    CHECK_ERROR(fit_kappas(GrowthSeries{2, 1, {{1, 2}, {2, 8}, {3, 8}, {4, 32}}}), NotStabilized);
}

TEST_CASE("fit_kappas recovers random integer coefficients") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        u64 p = trial % 2 ? 3 : 2;
        unsigned d = 1 + trial % 3;
        i64 k1 = std::uniform_int_distribution<i64>(0, 50)(rng);
        i64 k2 = std::uniform_int_distribution<i64>(0, 50)(rng);
        auto fit = fit_kappas(synthetic(p, d, k1, k2, 1, 10));
        CHECK(fit.kappa1 == k1);
        CHECK(fit.kappa2 == k2);
    }
}

TEST_CASE("fit_kappas on counted ranks reproduces the sum of degrees") {
    RingSpec s{3, 8, 2, 8};
    IwasawaElement f1 = simple_element(s, GroupWord{{1, 0}}, RootOfUnity(3, 1, 1));
    IwasawaElement f2 = simple_element(s, GroupWord{{0, 1}}, RootOfUnity(3, 1, 1));
    GrowthSeries g{3, 2, {}};
    for (unsigned n = 1; n <= 3; ++n) g.samples.emplace_back(n, rank_quotient({f1 * f2}, n));
    auto fit = fit_kappas(g);
    CHECK(fit.kappa1 == 0);
    CHECK(fit.kappa2 == 4);
    for (const auto& r : fit.residuals) CHECK(r.residual == -4);
}
