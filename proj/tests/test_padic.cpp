#include <doctest.h>

#include <random>

#include "iwasawa/padic.hpp"
#include "support/errors.hpp"
#include "support/oracles.hpp"

using namespace iwasawa;

namespace {

std::vector<int> finite(const std::vector<Valuation>& v) {
    std::vector<int> out;
    for (auto x : v) out.push_back(x.is_saturated() ? -1 : x.value());
    return out;
}

ZpMatrix random_unimodular(std::mt19937_64& rng, u64 p, unsigned N, std::size_t n) {
    ZpMatrix u = ZpMatrix::identity(p, N, n);
    std::uniform_int_distribution<int> idx(0, static_cast<int>(n) - 1);
    std::uniform_int_distribution<i64> mult(-7, 7);
    for (int step = 0; step < 12; ++step) {
        ZpMatrix e = ZpMatrix::identity(p, N, n);
        int i = idx(rng), j = idx(rng);
        if (i == j) {
            // unit scaling
            e.set(i, i, PadicInt(p, N, static_cast<i64>(p) + 1));
        } else {
            e.set(i, j, PadicInt(p, N, mult(rng)));
        }
        u = u * e;
    }
    return u;
}

}  // namespace

TEST_CASE("val") {
    CHECK(PadicInt(3, 5, 1).val() == Valuation(0));
    CHECK(PadicInt(3, 5, 18).val() == Valuation(2));
    CHECK(PadicInt(3, 5, 0).val().is_saturated());
    CHECK(PadicInt(3, 5, 243).val().is_saturated());
    CHECK(PadicInt(2, 4, -4).val() == Valuation(2));
}

TEST_CASE("saturation orders above finite valuations and absorbs") {
    CHECK(Valuation(1000) < Valuation::saturated());
    CHECK((Valuation(3) + Valuation::saturated()).is_saturated());
    CHECK(Valuation(2) + Valuation(3) == Valuation(5));
}

TEST_CASE("inv") {
    CHECK(PadicInt(2, 4, 1).inv().residue() == 1);
    CHECK(PadicInt(5, 3, 2).inv().residue() == 63);
    CHECK_ERROR(PadicInt(2, 4, 2).inv(), NotAUnit);
}

TEST_CASE("inv is an involution on units") {
    for (u64 p : {2, 3, 5, 7})
        for (i64 r = 1; r < 200; ++r) {
            PadicInt x(p, 4, r);
            if (!x.is_unit()) continue;
            CHECK(x.inv().inv() == x);
            CHECK((x * x.inv()).residue() == 1);
        }
}

TEST_CASE("arithmetic rejects mixed parameters") {
    CHECK_ERROR(PadicInt(3, 5, 1) + PadicInt(3, 4, 1), ShapeMismatch);
    CHECK_ERROR(PadicInt(3, 5, 1) * PadicInt(5, 5, 1), ShapeMismatch);
    CHECK(PadicInt(3, 5, 100).reduced_to(2).residue() == 1);
}

TEST_CASE("modulus limit") {
    CHECK_ERROR(PadicInt(2, 63, 1), ValidationError);
    CHECK_NOTHROW(PadicInt(2, 62, 1));
    CHECK_ERROR(PadicInt(1, 3, 1), ValidationError);
}

TEST_CASE("smith_valuations examples") {
    CHECK(finite(smith_valuations(ZpMatrix::identity(3, 5, 2))) == std::vector<int>{0, 0});
    CHECK(finite(smith_valuations(ZpMatrix::from_rows(3, 5, {{1, 0}, {0, 9}}))) == std::vector<int>{0, 2});
    CHECK(finite(smith_valuations(ZpMatrix::from_rows(3, 5, {{3, 3}, {3, 6}}))) == std::vector<int>{1, 1});
}

TEST_CASE("smith_valuations marks indistinguishable divisors as saturated") {
    auto v = smith_valuations(ZpMatrix::from_rows(3, 3, {{1, 0}, {0, 27}}));
    CHECK(finite(v) == std::vector<int>{0, -1});
    auto z = smith_valuations(ZpMatrix(2, 4, 2, 3));
    CHECK(z.size() == 2);
    CHECK(z[0].is_saturated());
    auto r = smith_valuations(ZpMatrix::from_rows(2, 6, {{2, 4, 6}}));
    CHECK(finite(r) == std::vector<int>{1});
}

TEST_CASE("sum of smith valuations equals the valuation of the cofactor determinant") {
    std::mt19937_64 rng(7);
    for (u64 p : {2, 3, 5})
        for (std::size_t n = 1; n <= 4; ++n)
            for (int trial = 0; trial < 60; ++trial) {
                std::uniform_int_distribution<i64> ent(-20, 20);
                std::vector<std::vector<i64>> rows(n, std::vector<i64>(n));
                for (auto& row : rows)
                    for (auto& x : row) x = ent(rng);
                const unsigned N = 12;
                auto vals = smith_valuations(ZpMatrix::from_rows(p, N, rows));
                bool all_finite = std::none_of(vals.begin(), vals.end(), [](Valuation v) { return v.is_saturated(); });
                oracle::i128 det = oracle::cofactor_det(rows);
                if (all_finite) {
                    int sum = 0;
                    for (auto v : vals) sum += v.value();
                    REQUIRE(det != 0);
                    CHECK(sum == oracle::int_valuation(det, p));
                } else {
                    CHECK((det == 0 || oracle::int_valuation(det, p) >= static_cast<int>(N)));
                }
            }
}

TEST_CASE("smith_valuations is invariant under unimodular transformations") {
    std::mt19937_64 rng(11);
    for (std::size_t n = 1; n <= 4; ++n) {
        for (int trial = 0; trial < 100; ++trial) {
            u64 p = trial % 2 ? 3 : 2;
            const unsigned N = 6;
            std::uniform_int_distribution<u64> ent(0, modulus_for(p, N) - 1);
            ZpMatrix m(p, N, n, n + trial % 2);
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j) m.set_residue(i, j, trial % 3 ? ent(rng) * p : ent(rng));
            ZpMatrix u = random_unimodular(rng, p, N, m.rows());
            ZpMatrix v = random_unimodular(rng, p, N, m.cols());
            CHECK(finite(smith_valuations(u * m * v)) == finite(smith_valuations(m)));
        }
    }
}

TEST_CASE("solve_linear") {
    // [[3, 0], [0, 1]] x = (6, 5) mod 27
    ZpMatrix a = ZpMatrix::from_rows(3, 3, {{3, 0}, {0, 1}});
    std::vector<u64> b{6, 5};
    auto s = solve_linear(a, b);
    CHECK(s.consistent);
    CHECK(s.determined_precision == 2);
    CHECK((a.residue(0, 0) * s.x[0]) % 27 == 6);
    CHECK(s.x[1] == 5);

    std::vector<u64> bad{1, 0};
    auto t = solve_linear(a, bad);
    CHECK_FALSE(t.consistent);
    CHECK(t.consistent_precision == 0);

    std::vector<u64> partial{9 + 3, 0};
    auto q = solve_linear(ZpMatrix::from_rows(3, 3, {{9, 0}, {0, 1}}), partial);
    CHECK_FALSE(q.consistent);
    CHECK(q.consistent_precision == 1);
}

TEST_CASE("solve_linear agrees with the product on random consistent systems") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        u64 p = 2 + trial % 2;
        const unsigned N = 5;
        u64 mod = modulus_for(p, N);
        std::uniform_int_distribution<u64> ent(0, mod - 1);
        std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 4;
        ZpMatrix a(p, N, r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) a.set_residue(i, j, ent(rng) * (trial % 3 == 0 ? p : 1));
        std::vector<u64> x(c);
        for (auto& v : x) v = ent(rng);
        std::vector<u64> b(r, 0);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) b[i] = add_mod(b[i], mul_mod(a.residue(i, j), x[j], mod), mod);
        auto s = solve_linear(a, b);
        REQUIRE(s.consistent);
        CHECK(s.consistent_precision == N);
        for (std::size_t i = 0; i < r; ++i) {
            u64 acc = 0;
            for (std::size_t j = 0; j < c; ++j) acc = add_mod(acc, mul_mod(a.residue(i, j), s.x[j], mod), mod);
            CHECK(acc == b[i]);
        }
    }
}
