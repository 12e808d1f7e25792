#include <catch2/catch_amalgamated.hpp>

#include "codual/cohom.hpp"
#include "codual/duality.hpp"
#include "codual/random.hpp"

using namespace codual;
using RatMat = Matrix<RatField>;

namespace {
RatField Q;

bool is_mixed_hom(const RatMat& gamma, const Contramodule<RatField>& n,
                  const RightComodule<RatField>& m) {
    return psi_bar_apply(gamma * n.theta, n.over.dim, n.dim) == m.mu * gamma;
}

template <class Gen>
auto nonzero(Gen gen) {
    auto v = gen();
    while (v.dim == 0) v = gen();
    return v;
}
}  // namespace

TEST_CASE("over the base field every linear map is a mixed homomorphism") {
    auto g1 = grouplike(Q, 1);
    SplitMix64 rng(5);
    auto n = nonzero([&] { return random_contramodule(g1, rng); });
    auto m = nonzero([&] { return random_right_comodule(g1, rng); });
    REQUIRE(mixed_hom(n, m).dim() == n.dim * m.dim);
}

TEST_CASE("graded mixed homs over grouplike(2) follow the blockwise formula") {
    auto g2 = grouplike(Q, 2);
    auto n = comodule_to_contramodule(graded_comodule(g2, {1, 2}));
    auto m = graded_right_comodule(g2, {3, 1});
    // N* has graded dims (1,2); hom dim = 1*3 + 2*1
    REQUIRE(mixed_hom(n, m).dim() == 1 * 3 + 2 * 1);
}

TEST_CASE("mixed homs correspond to module homomorphisms by transposition") {
    SplitMix64 rng(7);
    auto zoo = coalgebra_zoo(Q);
    for (int t = 0; t < 10; ++t) {
        const auto& d = zoo[rng.below(zoo.size())];
        auto n = random_contramodule(d, rng);
        auto m = random_right_comodule(d, rng);
        auto mixed = mixed_hom(n, m);
        auto m_star = right_comodule_to_module(m);
        auto n_star = contramodule_to_dmodule(n);
        auto module_side = hom_right_modules(m_star, n_star);
        REQUIRE(mixed.dim() == module_side.dim());
        for (std::size_t b = 0; b < mixed.dim(); ++b) {
            auto gamma = unvec(column_from(Q, mixed.basis.row(b)), m.dim, n.dim);
            REQUIRE(is_mixed_hom(gamma, n, m));
            REQUIRE(is_right_module_hom(gamma.transpose(), m_star, n_star));
            REQUIRE(contains(module_side, vec(gamma.transpose())));
        }
    }
}

TEST_CASE("cohom over the base field is the dual of the full hom space") {
    auto g1 = grouplike(Q, 1);
    SplitMix64 rng(11);
    auto m = regular_bicomodule(g1, g1);
    auto m2 = direct_sum(m, m);
    auto n = nonzero([&] { return random_contramodule(g1, rng); });
    auto result = cohom(m2, n);
    REQUIRE(result.contra.dim == n.dim * m2.dim);
    REQUIRE(check_contramodule(result.contra).pass());
}

TEST_CASE("graded cohom over grouplike coalgebras is componentwise") {
    auto g2 = grouplike(Q, 2);
    auto m = regular_bicomodule(g2, g2);  // D-graded components both of dimension 2
    auto n = comodule_to_contramodule(graded_comodule(g2, {2, 1}));
    auto result = cohom(m, n);
    // blockwise: sum_s dim M_s * dim (N*)_s = 2*2 + 2*1
    REQUIRE(result.hom_space.dim() == 6);
    REQUIRE(result.contra.dim == 6);
    REQUIRE(check_comodule(result.comod).pass());
}

TEST_CASE("cohom output is always certified on random instances") {
    SplitMix64 rng(13);
    std::vector<Coalgebra<RatField>> zoo{grouplike(Q, 1), grouplike(Q, 2), divided_power(Q, 1),
                                         matrix_coalgebra(Q, 2)};
    for (int t = 0; t < 8; ++t) {
        const auto& c = zoo[rng.below(zoo.size())];
        const auto& d = zoo[rng.below(zoo.size())];
        auto m = random_bicomodule(c, d, rng, 1);
        auto n = random_contramodule(d, rng, 1);
        auto result = cohom(m, n);
        REQUIRE(check_contramodule(result.contra).pass());
        REQUIRE(check_comodule(result.comod).pass());
        REQUIRE(check_right_module(RightModule<RatField>{dual_algebra(c), result.hom_space.dim(),
                                                         result.action})
                    .pass());
    }
}

TEST_CASE("cohom is functorial in the contramodule slot") {
    SplitMix64 rng(17);
    auto g2 = grouplike(Q, 2);
    auto m = regular_bicomodule(g2, g2);
    auto n1 = comodule_to_contramodule(graded_comodule(g2, {1, 1}));
    auto n2 = comodule_to_contramodule(graded_comodule(g2, {2, 1}));
    auto n3 = comodule_to_contramodule(graded_comodule(g2, {2, 2}));
    auto w1 = random_hom_from(hom_contramodules(n1, n2), n2.dim, n1.dim, rng);
    auto w2 = random_hom_from(hom_contramodules(n2, n3), n3.dim, n2.dim, rng);

    auto h1 = cohom(m, n1);
    auto h2 = cohom(m, n2);
    auto h3 = cohom(m, n3);

    // h(M,w): carrier map built from precomposition on the solved hom-spaces
    auto induced = [&](const CohomResult<RatField>& from, const CohomResult<RatField>& to,
                       const RatMat& w, std::size_t n_to_dim, std::size_t m_dim) {
        RatMat v(Q, from.hom_space.dim(), to.hom_space.dim());
        for (std::size_t b = 0; b < to.hom_space.dim(); ++b) {
            auto sigma = unvec(column_from(Q, to.hom_space.basis.row(b)), m_dim, n_to_dim);
            auto coords = coords_in(from.hom_space, vec(sigma * w));
            REQUIRE(coords.has_value());
            for (std::size_t a = 0; a < from.hom_space.dim(); ++a) v(a, b) = (*coords)[a];
        }
        return v.transpose();
    };
    auto h_w1 = induced(h1, h2, w1, n2.dim, m.dim);  // h(M,N1) -> h(M,N2)
    auto h_w2 = induced(h2, h3, w2, n3.dim, m.dim);  // h(M,N2) -> h(M,N3)
    auto h_w21 = induced(h1, h3, w2 * w1, n3.dim, m.dim);
    REQUIRE(h_w21 == h_w2 * h_w1);
    // induced maps are contramodule homomorphisms over C
    REQUIRE(is_contramodule_hom(h_w1, h1.contra, h2.contra));
    REQUIRE(is_contramodule_hom(h_w2, h2.contra, h3.contra));
}

TEST_CASE("adjunction over the base field is plain tensor-hom currying") {
    auto g1 = grouplike(Q, 1);
    SplitMix64 rng(19);
    auto l = nonzero([&] { return random_right_comodule(g1, rng); });
    auto m = regular_bicomodule(g1, g1);
    auto n = nonzero([&] { return random_contramodule(g1, rng); });
    auto report = adjunction_check(l, m, n);
    REQUIRE(report.pass());
    REQUIRE(report.lhs_dim == n.dim * l.dim * m.dim);
    REQUIRE(report.rhs_dim == report.lhs_dim);
}

TEST_CASE("adjunction with the matrix coalgebra and the regular bicomodule") {
    SplitMix64 rng(23);
    auto c = matrix_coalgebra(Q, 2);
    auto g1 = grouplike(Q, 1);
    // M = C itself as a C-k-bicomodule
    auto m = regular_bicomodule(c, g1);
    auto l = nonzero([&] { return random_right_comodule(c, rng, 1); });
    auto n = nonzero([&] { return random_contramodule(g1, rng); });
    auto report = adjunction_check(l, m, n);
    REQUIRE(report.pass());
    REQUIRE(report.lhs_dim == report.rhs_dim);
    REQUIRE(report.bijective);
}

TEST_CASE("adjunction naturality squares commute on generated homomorphisms") {
    SplitMix64 rng(29);
    std::vector<Coalgebra<RatField>> zoo{grouplike(Q, 1), grouplike(Q, 2), divided_power(Q, 1)};
    for (int t = 0; t < 5; ++t) {
        const auto& c = zoo[rng.below(zoo.size())];
        const auto& d = zoo[rng.below(zoo.size())];
        auto l = nonzero([&] { return random_right_comodule(c, rng); });
        auto m = random_bicomodule(c, d, rng, 1);
        auto n = random_contramodule(d, rng);
        auto l2 = nonzero([&] { return random_right_comodule(c, rng); });
        auto n2 = random_contramodule(d, rng);
        auto u = random_hom_from(hom_right_comodules(l, l2), l2.dim, l.dim, rng);
        auto w = random_hom_from(hom_contramodules(n, n2), n2.dim, n.dim, rng);
        AdjunctionNaturality<RatField> nat{l2, u, n2, w};
        auto report = adjunction_check(l, m, n, &nat);
        INFO(report.detail);
        REQUIRE(report.pass());
        REQUIRE(report.natural_in_l.value_or(false));
        REQUIRE(report.natural_in_n.value_or(false));
    }
}

TEST_CASE("adjunction rejects non-homomorphisms as naturality data") {
    SplitMix64 rng(31);
    auto g2 = grouplike(Q, 2);
    auto l = graded_right_comodule(g2, {1, 1});
    auto m = regular_bicomodule(g2, g2);
    auto n = comodule_to_contramodule(graded_comodule(g2, {1, 1}));
    RatMat swap(Q, 2, 2);
    swap(0, 1) = Q.one();
    swap(1, 0) = Q.one();
    AdjunctionNaturality<RatField> nat{l, swap, std::nullopt, std::nullopt};
    REQUIRE_FALSE(is_right_comodule_hom(swap, l, l));
    REQUIRE_THROWS_AS(adjunction_check(l, m, n, &nat), PreconditionError);
}

TEST_CASE("mixed homs over GF(5) behave like the rational case") {
    PrimeField f5(5);
    SplitMix64 rng(37);
    auto d = divided_power(f5, 1);
    auto n = random_contramodule(d, rng, 1);
    auto m = random_right_comodule(d, rng, 1);
    auto mixed = mixed_hom(n, m);
    auto module_side =
        hom_right_modules(right_comodule_to_module(m), contramodule_to_dmodule(n));
    REQUIRE(mixed.dim() == module_side.dim());
}
