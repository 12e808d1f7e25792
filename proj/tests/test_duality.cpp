#include <catch2/catch_amalgamated.hpp>

#include "codual/duality.hpp"
#include "codual/random.hpp"

using namespace codual;
using RatMat = Matrix<RatField>;

namespace {
RatField Q;

bool verdicts_match(const CertReport<RatField>& a, const CertReport<RatField>& b) {
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
        if (a.checks[i].diagram != b.checks[i].diagram) return false;
        if (a.checks[i].pass != b.checks[i].pass) return false;
    }
    return true;
}
}  // namespace

TEST_CASE("the regular comodule transports to a certified contramodule") {
    for (const auto& c : coalgebra_zoo(Q)) {
        auto z = comodule_to_contramodule(regular_comodule(c));
        REQUIRE(z.dim == c.dim);
        REQUIRE(check_contramodule(z).pass());
    }
}

TEST_CASE("a graded comodule over grouplike(2) dualizes to coordinate projections") {
    auto g2 = grouplike(Q, 2);
    auto z = comodule_to_contramodule(graded_comodule(g2, {1, 1}));
    // theta(f) = (f(e0)_0, f(e1)_1): exactly two unit entries
    RatMat expected(Q, 2, 4);
    expected(0, hom_index(2, 0, 0)) = Q.one();
    expected(1, hom_index(2, 1, 1)) = Q.one();
    REQUIRE(z.theta == expected);
    REQUIRE(check_contramodule(z).pass());
}

TEST_CASE("an intentionally broken comodule transports to a failing contramodule") {
    auto g2 = grouplike(Q, 2);
    SplitMix64 rng(13);
    auto bad = mutate_comodule(graded_comodule(g2, {1, 1}), rng);
    REQUIRE_FALSE(check_comodule(bad).pass());
    REQUIRE_FALSE(check_contramodule(comodule_to_contramodule(bad)).pass());
}

TEST_CASE("theorem biconditional holds axiom for axiom on raw structure maps") {
    SplitMix64 rng(37);
    auto zoo = coalgebra_zoo(Q);
    for (int t = 0; t < 40; ++t) {
        const auto& c = zoo[rng.below(zoo.size())];
        Comodule<RatField> x = (t % 2 == 0) ? random_comodule(c, rng) : random_raw_comodule(c, rng);
        REQUIRE(verdicts_match(check_comodule(x),
                               check_contramodule(comodule_to_contramodule(x))));
    }
}

TEST_CASE("both roundtrips of the lower arrow are coordinate identities") {
    SplitMix64 rng(41);
    auto zoo = coalgebra_zoo(Q);
    for (int t = 0; t < 10; ++t) {
        const auto& c = zoo[rng.below(zoo.size())];
        auto x = random_comodule(c, rng);
        REQUIRE(contramodule_to_comodule(comodule_to_contramodule(x)).rho == x.rho);
        auto z = random_contramodule(c, rng);
        REQUIRE(comodule_to_contramodule(contramodule_to_comodule(z)).theta == z.theta);
    }
}

TEST_CASE("dimension-zero structures flow through every functor") {
    auto c = grouplike(Q, 2);
    Comodule<RatField> x{c, 0, RatMat::zero(Q, 0, 0)};
    auto z = comodule_to_contramodule(x);
    REQUIRE(z.dim == 0);
    REQUIRE(contramodule_to_comodule(z).dim == 0);
    auto dm = contramodule_to_dmodule(z);
    REQUIRE(dm.dim == 0);
    REQUIRE(dmodule_to_contramodule(dm, c).dim == 0);
    auto lm = dmodule_to_pcmodule(dm);
    REQUIRE(pcmodule_to_comodule(lm, c).dim == 0);
    REQUIRE(pcmodule_to_dmodule(lm).dim == 0);
}

TEST_CASE("the Simson arrow sends the self action to a certified regular comodule") {
    auto c = grouplike(Q, 2);
    auto a = dual_algebra(c);
    auto x = pcmodule_to_comodule(left_self_action(a), c);
    REQUIRE(x.dim == 2);
    REQUIRE(check_comodule(x).pass());
    REQUIRE(comodule_to_pcmodule(x).action == a.mult);
}

TEST_CASE("the Simson arrow demands a matching dual algebra") {
    auto c = grouplike(Q, 2);
    auto wrong = dual_algebra(grouplike(Q, 3));
    REQUIRE_THROWS_AS(pcmodule_to_comodule(left_self_action(wrong), c), StructureError);
}

TEST_CASE("Pontryagin and Simson roundtrips are coordinate identities") {
    SplitMix64 rng(43);
    auto zoo = coalgebra_zoo(Q);
    for (int t = 0; t < 10; ++t) {
        const auto& c = zoo[rng.below(zoo.size())];
        auto x = random_comodule(c, rng);
        auto lm = comodule_to_pcmodule(x);
        REQUIRE(check_left_module(lm).pass());
        REQUIRE(pcmodule_to_comodule(lm, c).rho == x.rho);
        auto rm = pcmodule_to_dmodule(lm);
        REQUIRE(check_right_module(rm).pass());
        REQUIRE(dmodule_to_pcmodule(rm).action == lm.action);
        REQUIRE(pcmodule_to_dmodule(dmodule_to_pcmodule(rm)).action == rm.action);
        auto z = dmodule_to_contramodule(rm, c);
        REQUIRE(check_contramodule(z).pass());
        REQUIRE(contramodule_to_dmodule(z).action == rm.action);
    }
}

TEST_CASE("the direct right vertical arrow equals the composite of the other three") {
    SplitMix64 rng(47);
    auto zoo = coalgebra_zoo(Q);
    // the self action instance
    auto c0 = matrix_coalgebra(Q, 2);
    auto rm0 = pcmodule_to_dmodule(left_self_action(dual_algebra(c0)));
    auto direct0 = dmodule_to_contramodule(rm0, c0);
    auto composite0 =
        comodule_to_contramodule(pcmodule_to_comodule(dmodule_to_pcmodule(rm0), c0));
    REQUIRE(direct0.theta == composite0.theta);
    // random certified instances
    for (int t = 0; t < 15; ++t) {
        const auto& c = zoo[rng.below(zoo.size())];
        auto rm = contramodule_to_dmodule(random_contramodule(c, rng));
        auto direct = dmodule_to_contramodule(rm, c);
        auto composite =
            comodule_to_contramodule(pcmodule_to_comodule(dmodule_to_pcmodule(rm), c));
        REQUIRE(direct.theta == composite.theta);
    }
}

TEST_CASE("the three reshuffle squares commute for arbitrary structure maps") {
    SplitMix64 rng(53);
    for (int t = 0; t < 12; ++t) {
        std::size_t n = 1 + rng.below(3);
        std::size_t x = 1 + rng.below(3);
        auto delta = random_matrix(Q, n * n, n, rng);  // any map C -> C (x) C
        auto rho = random_matrix(Q, n * x, x, rng);    // any map X -> C (x) X
        auto id_x = RatMat::identity(Q, x);

        // square built from two applications of psi against the nested hom route
        auto lhs1 = psi(Q, n, n * x, 1) * postcompose(psi(Q, n, x, 1), n);
        auto rhs1 = psi(Q, n * n, x, 1) * psi(Q, n, n, x);
        REQUIRE(lhs1 == rhs1);

        // naturality of the reshuffle against delta in the first slot
        auto lhs2 = psi(Q, n, x, 1) * precompose(delta, x);
        auto rhs2 = dual_map(kron(delta, id_x)) * psi(Q, n * n, x, 1);
        REQUIRE(lhs2 == rhs2);

        // naturality against rho in the parameter slot
        auto lhs3 = psi(Q, n, x, 1) * postcompose(dual_map(rho), n);
        auto rhs3 = dual_map(kron(RatMat::identity(Q, n), rho)) * psi(Q, n, n * x, 1);
        REQUIRE(lhs3 == rhs3);
    }
}

TEST_CASE("functors preserve certification in both directions") {
    SplitMix64 rng(59);
    auto c = divided_power(Q, 2);
    for (int t = 0; t < 6; ++t) {
        auto x = random_raw_comodule(c, rng);
        bool valid = check_comodule(x).pass();
        auto lm = LeftModule<RatField>{dual_algebra(c), x.dim, dual_map(x.rho)};
        REQUIRE(check_left_module(lm).pass() == valid);
    }
}
