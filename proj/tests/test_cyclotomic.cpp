#include <doctest.h>

#include <random>
#include <set>

#include "iwasawa/cyclotomic.hpp"
#include "support/errors.hpp"

using namespace iwasawa;

namespace {

CycloInt coeffs(u64 p, unsigned m, unsigned N, std::vector<i64> c) {
    u64 mod = modulus_for(p, N);
    std::vector<u64> r;
    for (i64 x : c) r.push_back(reduce_signed(x, mod));
    return CycloInt::from_coeffs(p, m, N, r);
}

}  // namespace

TEST_CASE("zeta_embed") {
    CHECK(zeta_embed(RootOfUnity(2, 1, 1), 1, 4) == CycloInt::constant(2, 1, 4, -1));
    CHECK(zeta_embed(RootOfUnity(3, 1, 1), 1, 4) == coeffs(3, 1, 4, {0, 1}));
    CHECK(zeta_embed(RootOfUnity(3, 1, 2), 1, 4) == coeffs(3, 1, 4, {-1, -1}));
    CHECK_ERROR(zeta_embed(RootOfUnity(3, 2, 1), 1, 4), LevelMismatch);
    // zeta_3 inside mu_9 is zeta_9^3
    CHECK(zeta_embed(RootOfUnity(3, 1, 1), 2, 4) == coeffs(3, 2, 4, {0, 0, 0, 1, 0, 0}));
}

TEST_CASE("root of unity canonical form") {
    RootOfUnity z(3, 2, 3);
    CHECK(z.level() == 1);
    CHECK(z.exponent() == 1);
    CHECK(RootOfUnity(5, 3, 0).is_one());
    CHECK(RootOfUnity(2, 3, 4) == RootOfUnity(2, 1, 1));
}

TEST_CASE("norm_val") {
    CHECK(CycloInt::constant(3, 1, 6, 3).norm_val() == Rational(1));
    CycloInt zm1 = zeta_embed(RootOfUnity(3, 1, 1), 1, 6) - CycloInt::constant(3, 1, 6, 1);
    CHECK(zm1.norm_val() == Rational(1, 2));
    CHECK(CycloInt::constant(3, 1, 6, 1).norm_val() == Rational(0));
    CHECK_ERROR(CycloInt(3, 1, 6).norm_val(), PrecisionInconclusive);
    // zeta_8 - 1 has ord 1/4
    CycloInt z8 = zeta_embed(RootOfUnity(2, 3, 1), 3, 8) - CycloInt::constant(2, 3, 8, 1);
    CHECK(z8.norm_val() == Rational(1, 4));
}

TEST_CASE("norm_val via the Galois norm agrees with the resultant route") {
    std::mt19937_64 rng(3);
    for (u64 p : {2, 3, 5})
        for (unsigned m = 1; m <= 2; ++m) {
            const unsigned N = 10;
            u64 phi = euler_phi_prime_power(p, m);
            for (int trial = 0; trial < 40; ++trial) {
                std::vector<i64> c(phi);
                for (auto& x : c) x = std::uniform_int_distribution<i64>(-9, 9)(rng);
                CycloInt a = coeffs(p, m, N, c);
                if (a.is_zero()) continue;
                PadicInt nrm = a.norm();
                if (nrm.val().is_saturated()) continue;
                CHECK(a.norm_val() == Rational(nrm.val().value(), static_cast<i64>(phi)));
            }
        }
}

TEST_CASE("norm_val is additive") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 100; ++trial) {
        u64 p = trial % 2 ? 3 : 2;
        unsigned m = 1 + trial % 3;
        const unsigned N = 12;
        u64 phi = euler_phi_prime_power(p, m);
        std::vector<i64> ca(phi), cb(phi);
        for (auto& x : ca) x = std::uniform_int_distribution<i64>(-5, 5)(rng);
        for (auto& x : cb) x = std::uniform_int_distribution<i64>(-5, 5)(rng);
        CycloInt a = coeffs(p, m, N, ca), b = coeffs(p, m, N, cb);
        try {
            Rational lhs = (a * b).norm_val();
            CHECK(lhs == a.norm_val() + b.norm_val());
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::PrecisionInconclusive);
        }
    }
}

TEST_CASE("sum of primitive roots") {
    for (u64 p : {2, 3, 5, 7}) {
        CycloInt s(p, 1, 6);
        for (u64 e = 1; e < p; ++e) s = s + zeta_embed(RootOfUnity(p, 1, e), 1, 6);
        CHECK(s == CycloInt::constant(p, 1, 6, -1));
    }
    // primitive 9th roots sum to 0 (the coefficient of x^{phi-1} in Phi_9 vanishes)
    CycloInt s(3, 2, 6);
    for (u64 u : units_mod_prime_power(3, 2)) s = s + zeta_embed(RootOfUnity(3, 2, u), 2, 6);
    CHECK(s.is_zero());
}

TEST_CASE("degree_delta counts the distinct conjugates") {
    CHECK(degree_delta(RootOfUnity(3, 0, 0)) == 1);
    CHECK(degree_delta(RootOfUnity(3, 1, 1)) == 2);
    CHECK(degree_delta(RootOfUnity(2, 3, 1)) == 4);
    for (u64 p : {2, 3, 5})
        for (unsigned m = 1; m <= 3; ++m) {
            RootOfUnity z(p, m, 1);
            std::set<u64> conj;
            for (u64 u : units_mod_prime_power(p, m)) conj.insert(z.galois(u).exponent());
            CHECK(conj.size() == degree_delta(z));
        }
}

TEST_CASE("galois action matches exponent arithmetic") {
    for (u64 u : units_mod_prime_power(3, 2)) {
        CycloInt z = zeta_embed(RootOfUnity(3, 2, 2), 2, 5);
        CHECK(z.galois(u) == zeta_embed(RootOfUnity(3, 2, 2).galois(u), 2, 5));
    }
}

TEST_CASE("inverse and units") {
    CycloInt a = coeffs(3, 2, 5, {2, 1, 0, 4, 0, 1});
    REQUIRE(a.is_unit());
    CHECK(a * a.inv() == CycloInt::constant(3, 2, 5, 1));
    CycloInt zm1 = zeta_embed(RootOfUnity(3, 1, 1), 1, 6) - CycloInt::constant(3, 1, 6, 1);
    CHECK_FALSE(zm1.is_unit());
    CHECK_ERROR(zm1.inv(), NotAUnit);
}

TEST_CASE("level mismatch") {
    CHECK_ERROR(CycloInt(3, 1, 4) + CycloInt(3, 2, 4), LevelMismatch);
    CHECK(CycloInt::constant(3, 1, 4, 5).embed(2) == CycloInt::constant(3, 2, 4, 5));
    CHECK_ERROR(CycloInt(3, 2, 4).embed(1), LevelMismatch);
}

TEST_CASE("rationals") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(-2, -4) == Rational(1, 2));
}
