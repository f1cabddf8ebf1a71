#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ug24/fields.hpp"

using namespace ug24;

TEST_CASE("deterministic modulus selection") {
    Field f21(2, 1);
    CHECK(f21.modulus() == std::vector<std::uint32_t>{0, 1});  // x

    Field f22(2, 2);
    CHECK(f22.modulus() == std::vector<std::uint32_t>{1, 1, 1});  // x^2+x+1

    // x^2+1 has no root mod 3 and is the first monic quadratic in encoding order
    Field f32(3, 2);
    CHECK(f32.modulus() == std::vector<std::uint32_t>{1, 0, 1});
    for (felem r = 0; r < 3; ++r) CHECK((r * r + 1) % 3 != 0);

    // construction is reproducible
    Field again(3, 2);
    CHECK(again == f32);
}

TEST_CASE("bad field parameters rejected") {
    CHECK_THROWS_AS(Field(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field(2, 0), std::invalid_argument);
    // reducible modulus rejected
    CHECK_THROWS_AS(Field(2, 2, {0, 0, 1}), std::invalid_argument);
}

TEST_CASE("field arithmetic basics") {
    Field f5(5, 1);
    CHECK(f5.inv(2) == 3);
    CHECK(f5.mul(2, 3) == 1);

    Field f4(2, 2);
    felem w = f4.gen();
    felem w1 = f4.add(w, 1);
    CHECK(f4.mul(w, w1) == 1);  // w^2 = w+1 forces w*(w+1) = 1

    CHECK_THROWS_AS(f5.inv(0), std::invalid_argument);
}

TEST_CASE("Lagrange: a^(q-1) = 1 for all nonzero a") {
    for (auto [p, k] : {std::pair<int, int>{2, 3}, {3, 2}, {5, 1}, {7, 2}}) {
        Field F((std::uint32_t)p, (std::uint32_t)k);
        for (felem a = 1; a < F.q(); ++a) CHECK(F.pow(a, F.q() - 1) == 1);
    }
}

TEST_CASE("Frobenius is additive and multiplicative; fixed field is GF(p)") {
    for (auto [p, k] : {std::pair<int, int>{2, 4}, {3, 3}, {5, 2}}) {
        Field F((std::uint32_t)p, (std::uint32_t)k);
        int fixed = 0;
        for (felem a = 0; a < F.q(); ++a) {
            if (F.frobenius(a) == a) ++fixed;
            for (felem b = 0; b < F.q(); ++b) {
                CHECK(F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b)));
                if (a < 8 && b < 8)
                    CHECK(F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b)));
            }
            CHECK(F.pow(a, F.q()) == a);
        }
        CHECK(fixed == p);
    }
}

TEST_CASE("multiplicative orders") {
    Field f5(5, 1);
    CHECK(f5.mult_order(2) == 4);
    CHECK(f5.mult_order(1) == 1);
    Field f7(7, 1);
    CHECK(f7.mult_order(2) == 3);

    // order divides q-1, exhaustively on all fields of size <= 64
    for (auto [p, k] : {std::pair<int, int>{2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6},
                        {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 1}, {7, 2},
                        {11, 1}, {13, 1}, {61, 1}}) {
        Field F((std::uint32_t)p, (std::uint32_t)k);
        for (felem a = 1; a < F.q(); ++a) CHECK((F.q() - 1) % F.mult_order(a) == 0);
    }

    CHECK_THROWS_AS(f5.mult_order(0), std::invalid_argument);
}

TEST_CASE("frobenius roots invert p^i powers") {
    Field F(3, 3);
    for (felem a = 0; a < F.q(); ++a)
        for (std::uint32_t i = 0; i <= 4; ++i) {
            felem r = F.frobenius_root(a, i);
            felem back = r;
            for (std::uint32_t t = 0; t < i; ++t) back = F.frobenius(back);
            CHECK(back == a);
        }
}

TEST_CASE("cyclotomic splits of small polynomials") {
    Field f2(2, 1);
    auto fac = poly_factor(f2, poly_from({1, 0, 0, 1}, f2));  // x^3 + 1 = x^3 - 1
    REQUIRE(fac.parts.size() == 2);
    CHECK(fac.parts[0].first == poly_from({1, 1}, f2));
    CHECK(fac.parts[1].first == poly_from({1, 1, 1}, f2));

    Field f5(5, 1);
    auto fac2 = poly_factor(f5, poly_from({1, 0, 1}, f5));  // x^2 + 1 = (x-2)(x-3)
    REQUIRE(fac2.parts.size() == 2);
    CHECK(fac2.parts[0].first == poly_from({-3, 1}, f5));
    CHECK(fac2.parts[1].first == poly_from({-2, 1}, f5));

    Field f3(3, 1);
    auto fac3 = poly_factor(f3, poly_from({-1, 0, 0, 0, 0, 0, 0, 0, 1}, f3));  // x^8 - 1
    int linear = 0, quadratic = 0;
    for (auto& [g, m] : fac3.parts) {
        CHECK(m == 1);
        if (g.deg() == 1) ++linear;
        if (g.deg() == 2) ++quadratic;
    }
    CHECK(linear == 2);
    CHECK(quadratic == 3);
}

TEST_CASE("factorization multiplies back on random inputs") {
    std::mt19937_64 rng(12345);
    for (auto [p, k] : {std::pair<int, int>{2, 1}, {2, 2}, {3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
        Field F((std::uint32_t)p, (std::uint32_t)k);
        for (int iter = 0; iter < 30; ++iter) {
            int deg = 1 + (int)(rng() % 24);
            std::vector<felem> c((size_t)deg + 1);
            for (auto& x : c) x = (felem)(rng() % F.q());
            if (c.back() == 0) c.back() = 1;
            Poly f{c};
            auto fac = poly_factor(F, f);
            Poly prod = poly_from({1}, F);
            for (auto& [g, m] : fac.parts) {
                CHECK(g.lead() == 1);
                CHECK(poly_is_irreducible(F, g));
                for (int i = 0; i < m; ++i) prod = poly_mul(F, prod, g);
            }
            prod = poly_scale(F, prod, fac.unit);
            CHECK(prod == f);
        }
    }
}

TEST_CASE("factorization with repeated and p-power factors") {
    Field f3(3, 1);
    // (x+1)^3 * (x^2+1)
    Poly f = poly_from({1, 1}, f3);
    Poly g = poly_mul(f3, poly_mul(f3, f, f), f);
    g = poly_mul(f3, g, poly_from({1, 0, 1}, f3));
    auto fac = poly_factor(f3, g);
    REQUIRE(fac.parts.size() == 2);
    CHECK(fac.parts[0].first == poly_from({1, 1}, f3));
    CHECK(fac.parts[0].second == 3);
    CHECK(fac.parts[1].first == poly_from({1, 0, 1}, f3));
    CHECK(fac.parts[1].second == 1);

    CHECK_THROWS_AS(poly_factor(f3, Poly()), std::invalid_argument);
}

TEST_CASE("factorization is replayable under a fixed seed") {
    Field F(5, 1);
    Poly f = poly_from({-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}, F);  // x^12 - 1
    auto a = poly_factor(F, f, 99);
    auto b = poly_factor(F, f, 99);
    REQUIRE(a.parts.size() == b.parts.size());
    for (size_t i = 0; i < a.parts.size(); ++i) CHECK(a.parts[i].first == b.parts[i].first);
}
