#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gbr/modp.hpp"

using namespace gbr;

TEST_CASE("field axioms hold exhaustively for small p") {
    for (std::uint32_t p : {3u, 5u, 7u}) {
        PrimeField K(p);
        for (std::uint32_t a = 0; a < p; ++a) {
            Fp fa{a};
            CHECK(K.add(fa, K.zero()) == fa);
            CHECK(K.mul(fa, K.one()) == fa);
            CHECK(K.add(fa, K.neg(fa)) == K.zero());
            if (a != 0) CHECK(K.mul(fa, K.inv(fa)) == K.one());
            for (std::uint32_t b = 0; b < p; ++b) {
                Fp fb{b};
                CHECK(K.add(fa, fb) == K.add(fb, fa));
                CHECK(K.mul(fa, fb) == K.mul(fb, fa));
                CHECK(K.sub(fa, fb) == K.add(fa, K.neg(fb)));
                for (std::uint32_t c = 0; c < p; ++c) {
                    Fp fc{c};
                    CHECK(K.add(K.add(fa, fb), fc) == K.add(fa, K.add(fb, fc)));
                    CHECK(K.mul(K.mul(fa, fb), fc) == K.mul(fa, K.mul(fb, fc)));
                    CHECK(K.mul(fa, K.add(fb, fc)) == K.add(K.mul(fa, fb), K.mul(fa, fc)));
                }
            }
        }
    }
}

TEST_CASE("scalar arithmetic examples") {
    PrimeField K3(3);
    CHECK(K3.inv(Fp{2}) == Fp{2});
    CHECK(K3.add(Fp{2}, Fp{2}) == Fp{1});
    PrimeField K5(5);
    CHECK(K5.pow(Fp{2}, 4) == Fp{1});
    CHECK(K5.from_int(-3) == Fp{2});
    CHECK(K5.from_int(12) == Fp{2});
}

TEST_CASE("inverse of zero and bad moduli are rejected") {
    PrimeField K(3);
    CHECK_THROWS_AS(K.inv(Fp{0}), std::domain_error);
    CHECK_THROWS_AS(PrimeField(2), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(9), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
    CHECK(is_odd_prime(10007));
    CHECK_FALSE(is_odd_prime(10005));
}

TEST_CASE("solve_linear on pinned systems") {
    PrimeField K(3);
    SUBCASE("upper triangular") {
        MatrixFp A(2, 2);
        A.at(0, 0) = Fp{1};
        A.at(0, 1) = Fp{1};
        A.at(1, 1) = Fp{1};
        auto x = solve_linear(K, A, {Fp{2}, Fp{1}});
        REQUIRE(x.has_value());
        CHECK(*x == std::vector<Fp>{Fp{1}, Fp{1}});
    }
    SUBCASE("inconsistent") {
        MatrixFp A(2, 1);
        A.at(0, 0) = Fp{1};
        A.at(1, 0) = Fp{1};
        CHECK_FALSE(solve_linear(K, A, {Fp{0}, Fp{1}}).has_value());
    }
    SUBCASE("identity returns rhs") {
        MatrixFp I = MatrixFp::identity(4);
        std::vector<Fp> b{Fp{2}, Fp{0}, Fp{1}, Fp{2}};
        auto x = solve_linear(K, I, b);
        REQUIRE(x.has_value());
        CHECK(*x == b);
    }
    SUBCASE("dimension mismatch") {
        MatrixFp A(2, 2);
        CHECK_THROWS_AS(solve_linear(K, A, {Fp{1}}), std::invalid_argument);
    }
}

TEST_CASE("every returned solution re-multiplies to the rhs") {
    std::mt19937_64 rng(20240811);
    for (std::uint32_t p : {3u, 5u}) {
        PrimeField K(p);
        std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
        for (int trial = 0; trial < 50; ++trial) {
            std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
            MatrixFp A(rows, cols);
            for (auto& e : A.entries) e = Fp{d(rng)};
            // consistent by construction: b = A * x0
            std::vector<Fp> x0(cols);
            for (auto& e : x0) e = Fp{d(rng)};
            std::vector<Fp> b(rows, Fp{0});
            for (std::size_t r = 0; r < rows; ++r)
                for (std::size_t c = 0; c < cols; ++c)
                    b[r] = K.add(b[r], K.mul(A.at(r, c), x0[c]));
            auto x = solve_linear(K, A, b);
            REQUIRE(x.has_value());
            for (std::size_t r = 0; r < rows; ++r) {
                Fp acc{0};
                for (std::size_t c = 0; c < cols; ++c)
                    acc = K.add(acc, K.mul(A.at(r, c), (*x)[c]));
                CHECK(acc == b[r]);
            }
        }
    }
}
