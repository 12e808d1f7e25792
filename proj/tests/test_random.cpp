#include <catch2/catch_amalgamated.hpp>

#include "codual/random.hpp"
#include "codual/duality.hpp"

using namespace codual;

namespace {
RatField Q;
}

TEST_CASE("splitmix64 produces the published sequence") {
    SplitMix64 rng(1234567);
    REQUIRE(rng.next() == 0x599ed017fb08fc85ULL);
    REQUIRE(rng.next() == 0x2c73f08458540fa5ULL);
    REQUIRE(rng.next() == 0x883ebce5a3f27c77ULL);
    REQUIRE(rng.next() == 0x3fbef740e9177b3fULL);
    REQUIRE(rng.next() == 0xe3b8346708cb5ecdULL);
    SplitMix64 zero(0);
    REQUIRE(zero.next() == 0xe220a8397b1dcdafULL);
}

TEST_CASE("identical seeds reproduce identical structures") {
    auto c = matrix_coalgebra(Q, 2);
    SplitMix64 a(99), b(99);
    REQUIRE(random_comodule(c, a).rho == random_comodule(c, b).rho);
}

TEST_CASE("random_invertible returns a matrix with its exact inverse") {
    SplitMix64 rng(7);
    PrimeField f5(5);
    for (std::size_t n = 1; n <= 5; ++n) {
        auto [g, gi] = random_invertible(Q, n, rng);
        REQUIRE(g * gi == Matrix<RatField>::identity(Q, n));
        auto [h, hi] = random_invertible(f5, n, rng);
        REQUIRE(h * hi == Matrix<PrimeField>::identity(f5, n));
    }
}

TEST_CASE("generators always produce certified structures") {
    SplitMix64 rng(31);
    PrimeField f5(5);
    for (const auto& c : coalgebra_zoo(Q)) {
        REQUIRE(check_comodule(random_comodule(c, rng)).pass());
        REQUIRE(check_right_comodule(random_right_comodule(c, rng)).pass());
        REQUIRE(check_contramodule(random_contramodule(c, rng)).pass());
        REQUIRE(check_left_module(random_left_module(c, rng)).pass());
        REQUIRE(check_right_module(random_right_module(c, rng)).pass());
    }
    for (const auto& c : coalgebra_zoo(f5)) {
        REQUIRE(check_comodule(random_comodule(c, rng)).pass());
        REQUIRE(check_contramodule(random_contramodule(c, rng)).pass());
    }
    auto b = random_bicomodule(grouplike(Q, 2), divided_power(Q, 2), rng);
    REQUIRE(check_bicomodule(b).pass());
}

TEST_CASE("mutators always produce failing structures") {
    SplitMix64 rng(41);
    auto zoo = coalgebra_zoo(Q);
    for (int t = 0; t < 12; ++t) {
        const auto& c = zoo[rng.below(zoo.size())];
        REQUIRE_FALSE(check_coalgebra(mutate_coalgebra(c, rng)).pass());
        auto x = random_comodule(c, rng);
        if (x.dim > 0) REQUIRE_FALSE(check_comodule(mutate_comodule(x, rng)).pass());
        auto z = random_contramodule(c, rng);
        if (z.dim > 0) REQUIRE_FALSE(check_contramodule(mutate_contramodule(z, rng)).pass());
    }
}

TEST_CASE("grouplike detection drives the graded generator") {
    REQUIRE(is_grouplike(grouplike(Q, 3)));
    REQUIRE_FALSE(is_grouplike(divided_power(Q, 2)));
    REQUIRE_FALSE(is_grouplike(matrix_coalgebra(Q, 2)));
    REQUIRE_FALSE(is_grouplike(trig(Q)));
}
