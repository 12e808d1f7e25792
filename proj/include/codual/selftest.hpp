#pragma once

// The randomized invariant suite behind `codual selftest`: seeded, fully
// deterministic, one line per suite. Exercises the duality biconditionals, the
// commuting square of functors, the psi contract, cotensor/tensor duality, the
// cohom adjunction, module formulation equivalence, towers, and the negative
// (mutation) soundness of every certifier.

#include <cstdint>
#include <string>
#include <vector>

#include "codual/cohom.hpp"
#include "codual/duality.hpp"
#include "codual/hom.hpp"
#include "codual/random.hpp"
#include "codual/tower.hpp"

namespace codual {

struct SuiteResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t total = 0;
};

struct SelftestResult {
    std::vector<SuiteResult> suites;

    bool pass() const {
        for (const auto& s : suites)
            if (s.passed != s.total) return false;
        return true;
    }
};

namespace selftest_detail {

template <FieldType F>
Comodule<F> nonzero_comodule(const Coalgebra<F>& c, SplitMix64& rng) {
    for (;;) {
        auto x = random_comodule(c, rng);
        if (x.dim > 0) return x;
    }
}

template <FieldType F>
RightComodule<F> nonzero_right_comodule(const Coalgebra<F>& c, SplitMix64& rng) {
    for (;;) {
        auto x = random_right_comodule(c, rng);
        if (x.dim > 0) return x;
    }
}

template <FieldType F>
bool verdicts_match(const CertReport<F>& a, const CertReport<F>& b) {
    if (a.checks.size() != b.checks.size()) return false;
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
        if (a.checks[i].diagram != b.checks[i].diagram) return false;
        if (a.checks[i].pass != b.checks[i].pass) return false;
    }
    return true;
}

}  // namespace selftest_detail

/// Object half of the duality theorem: comodule verdicts equal contramodule
/// verdicts of the transported structure, axiom for axiom, on valid, mutated
/// and raw structure maps alike.
template <FieldType F>
SuiteResult selftest_theorem_biconditional(const F& field, SplitMix64& rng, std::size_t count) {
    SuiteResult suite{"theorem biconditional", 0, count};
    auto zoo = coalgebra_zoo(field);
    for (std::size_t i = 0; i < count; ++i) {
        const auto& c = zoo[rng.below(zoo.size())];
        Comodule<F> x{c, 0, Matrix<F>(field, 0, 0)};
        switch (i % 3) {
            case 0: x = random_comodule(c, rng); break;
            case 1: x = mutate_comodule(selftest_detail::nonzero_comodule(c, rng), rng); break;
            default: x = random_raw_comodule(c, rng); break;
        }
        if (selftest_detail::verdicts_match(check_comodule(x),
                                            check_contramodule(comodule_to_contramodule(x))))
            ++suite.passed;
    }
    return suite;
}

/// Morphism half: alpha is a comodule homomorphism iff alpha* is a contramodule
/// homomorphism; dimensions agree and transposition carries one solved basis
/// into the other space.
template <FieldType F>
SuiteResult selftest_morphism_biconditional(const F& field, SplitMix64& rng, std::size_t count) {
    SuiteResult suite{"morphism biconditional", 0, count};
    auto zoo = coalgebra_zoo(field);
    for (std::size_t i = 0; i < count; ++i) {
        const auto& c = zoo[rng.below(zoo.size())];
        auto x = random_comodule(c, rng);
        auto y = random_comodule(c, rng);
        auto hom_x_y = hom_comodules(x, y);
        auto hom_duals = hom_contramodules(comodule_to_contramodule(y), comodule_to_contramodule(x));
        bool ok = hom_x_y.dim() == hom_duals.dim();
        for (std::size_t b = 0; ok && b < hom_x_y.dim(); ++b) {
            auto alpha = unvec(column_from(field, hom_x_y.basis.row(b)), y.dim, x.dim);
            ok = contains(hom_duals, vec(alpha.transpose()));
        }
        if (ok) ++suite.passed;
    }
    return suite;
}

/// Diagram commutation: the direct right-vertical functor equals the composite
/// of the other three, and all eight roundtrips are coordinate identities.
template <FieldType F>
SuiteResult selftest_duality_square(const F& field, SplitMix64& rng, std::size_t count) {
    SuiteResult suite{"duality square", 0, count};
    auto zoo = coalgebra_zoo(field);
    for (std::size_t i = 0; i < count; ++i) {
        const auto& c = zoo[rng.below(zoo.size())];
        auto x = random_comodule(c, rng);
        auto z = comodule_to_contramodule(x);
        auto dm = contramodule_to_dmodule(z);
        auto pm = dmodule_to_pcmodule(dm);

        bool ok = contramodule_to_comodule(z).rho == x.rho;
        ok = ok && comodule_to_contramodule(contramodule_to_comodule(z)).theta == z.theta;
        ok = ok && pcmodule_to_comodule(comodule_to_pcmodule(x), c).rho == x.rho;
        ok = ok && comodule_to_pcmodule(pcmodule_to_comodule(pm, c)).action == pm.action;
        ok = ok && dmodule_to_pcmodule(pcmodule_to_dmodule(pm)).action == pm.action;
        ok = ok && pcmodule_to_dmodule(dmodule_to_pcmodule(dm)).action == dm.action;
        ok = ok && contramodule_to_dmodule(dmodule_to_contramodule(dm, c)).action == dm.action;
        ok = ok && dmodule_to_contramodule(contramodule_to_dmodule(z), c).theta == z.theta;

        auto direct = dmodule_to_contramodule(dm, c);
        auto composite = comodule_to_contramodule(pcmodule_to_comodule(dmodule_to_pcmodule(dm), c));
        ok = ok && direct.theta == composite.theta;
        if (ok) ++suite.passed;
    }
    return suite;
}

/// psi: exhaustive evaluation identity on small dimensions, then naturality in
/// the outer variables with random maps.
template <FieldType F>
SuiteResult selftest_psi_contract(const F& field, SplitMix64& rng, std::size_t count) {
    SuiteResult suite{"psi contract", 0, 0};
    for (std::size_t a = 0; a <= 3; ++a)
        for (std::size_t b = 0; b <= 3; ++b)
            for (std::size_t z = 0; z <= 3; ++z) {
                ++suite.total;
                auto p = psi(field, a, b, z);
                bool ok = rank(p) == a * b * z;  // invertible permutation
                // evaluation identity on every basis triple
                for (std::size_t ca = 0; ok && ca < a; ++ca)
                    for (std::size_t cb = 0; ok && cb < b; ++cb)
                        for (std::size_t rz = 0; ok && rz < z; ++rz) {
                            Matrix<F> gamma(field, b * z * a, 1);
                            gamma(hom_index(b * z, hom_index(z, rz, cb), ca), 0) = field.one();
                            auto image = p * gamma;  // vec of psi(gamma)
                            auto as_map = unvec(image, z, a * b);
                            for (std::size_t i = 0; ok && i < a; ++i)
                                for (std::size_t j = 0; ok && j < b; ++j)
                                    for (std::size_t r = 0; ok && r < z; ++r) {
                                        bool expect = (i == ca && j == cb && r == rz);
                                        ok = field.eq(as_map(r, tensor_index(b, i, j)),
                                                      expect ? field.one() : field.zero());
                                    }
                        }
                if (ok) ++suite.passed;
            }
    for (std::size_t i = 0; i < count; ++i) {
        ++suite.total;
        std::size_t a = 1 + rng.below(3), a2 = 1 + rng.below(3), b = 1 + rng.below(3);
        std::size_t z = 1 + rng.below(3), z2 = 1 + rng.below(3);
        auto alpha = random_matrix(field, a, a2, rng);   // A' -> A
        auto zeta = random_matrix(field, z2, z, rng);    // Z -> Z'
        auto id_b = Matrix<F>::identity(field, b);
        // naturality in A: psi(A',B,Z) (alpha* applied inside) = (alpha(x)id)* after psi
        auto lhs_a = psi(field, a2, b, z) * precompose(alpha, b * z);
        auto rhs_a = precompose(kron(alpha, id_b), z) * psi(field, a, b, z);
        // naturality in Z
        auto lhs_z = psi(field, a, b, z2) * postcompose(postcompose(zeta, b), a);
        auto rhs_z = postcompose(zeta, a * b) * psi(field, a, b, z);
        if (lhs_a == rhs_a && lhs_z == rhs_z) ++suite.passed;
    }
    return suite;
}

template <FieldType F>
SuiteResult selftest_cotensor_duality(const F& field, SplitMix64& rng, std::size_t count) {
    SuiteResult suite{"cotensor duality", 0, count};
    auto zoo = coalgebra_zoo(field);
    for (std::size_t i = 0; i < count; ++i) {
        const auto& c = zoo[rng.below(zoo.size())];
        auto l = random_right_comodule(c, rng);
        auto m = random_comodule(c, rng);
        auto ct = cotensor(l, m);
        auto t = tensor_over_algebra(right_comodule_to_module(l), comodule_to_left_module(m));
        if (ct.space.dim() == t.dim) ++suite.passed;
    }
    return suite;
}

template <FieldType F>
SuiteResult selftest_adjunction(const F& field, SplitMix64& rng, std::size_t count) {
    SuiteResult suite{"cohom adjunction", 0, count};
    std::vector<Coalgebra<F>> zoo{grouplike(field, 1), grouplike(field, 2), divided_power(field, 1)};
    for (std::size_t i = 0; i < count; ++i) {
        const auto& c = zoo[rng.below(zoo.size())];
        const auto& d = zoo[rng.below(zoo.size())];
        auto l = selftest_detail::nonzero_right_comodule(c, rng);
        auto m = random_bicomodule(c, d, rng, 1);
        auto n = random_contramodule(d, rng);
        auto l2 = selftest_detail::nonzero_right_comodule(c, rng);
        auto n2 = random_contramodule(d, rng);
        auto u = random_hom_from(hom_right_comodules(l, l2), l2.dim, l.dim, rng);
        auto w = random_hom_from(hom_contramodules(n, n2), n2.dim, n.dim, rng);
        AdjunctionNaturality<F> nat{l2, u, n2, w};
        if (adjunction_check(l, m, n, &nat).pass()) ++suite.passed;
    }
    return suite;
}

/// Theta formulation: the roundtrip is the identity and both formulations have
/// identical solved hom-spaces.
template <FieldType F>
SuiteResult selftest_module_formulations(const F& field, SplitMix64& rng, std::size_t count) {
    SuiteResult suite{"module formulations", 0, count};
    auto zoo = coalgebra_zoo(field);
    for (std::size_t i = 0; i < count; ++i) {
        const auto& c = zoo[rng.below(zoo.size())];
        auto p = random_right_module(c, rng);
        auto q = random_right_module(c, rng);
        bool ok = theta_to_module(module_to_theta(p)).action == p.action;
        ok = ok && hom_right_modules(p, q) == hom_theta_modules(module_to_theta(p), module_to_theta(q));
        if (ok) ++suite.passed;
    }
    return suite;
}

template <FieldType F>
SuiteResult selftest_towers(const F& field, SplitMix64& rng, std::size_t count) {
    SuiteResult suite{"tower limits", 0, count};
    auto zoo = coalgebra_zoo(field);
    for (std::size_t i = 0; i < count; ++i) {
        const auto& c = zoo[rng.below(zoo.size())];
        std::size_t len = 1 + rng.below(4);
        FiniteTower<F> t{c, {}, {}};
        auto top = random_contramodule(c, rng);
        t.levels.assign(1, top);
        for (std::size_t s = 1; s < len; ++s) {
            // extend downward with isomorphic levels so transitions exist
            auto [g, g_inv] = random_invertible(field, top.dim, rng);
            auto lower = conjugate(t.levels.front(), g, g_inv);
            t.levels.insert(t.levels.begin(), lower);
            t.transitions.insert(t.transitions.begin(), g);
        }
        if (check_tower(t).pass()) ++suite.passed;
    }
    return suite;
}

/// Negative soundness: the mutators must always produce failing structures and
/// every failure must carry a witness.
template <FieldType F>
SuiteResult selftest_negative(const F& field, SplitMix64& rng, std::size_t count) {
    SuiteResult suite{"negative mutations", 0, count};
    auto zoo = coalgebra_zoo(field);
    auto witnessed_fail = [](const auto& report) {
        if (report.pass()) return false;
        for (const auto& c : report.checks)
            if (!c.pass && c.witness) return true;
        return false;
    };
    for (std::size_t i = 0; i < count; ++i) {
        const auto& c = zoo[rng.below(zoo.size())];
        bool ok = true;
        switch (i % 4) {
            case 0: ok = witnessed_fail(check_coalgebra(mutate_coalgebra(c, rng))); break;
            case 1:
                ok = witnessed_fail(check_comodule(
                    mutate_comodule(selftest_detail::nonzero_comodule(c, rng), rng)));
                break;
            case 2: {
                auto z = comodule_to_contramodule(selftest_detail::nonzero_comodule(c, rng));
                ok = witnessed_fail(check_contramodule(mutate_contramodule(z, rng)));
                break;
            }
            default: {
                auto m = contramodule_to_dmodule(
                    comodule_to_contramodule(selftest_detail::nonzero_comodule(c, rng)));
                ok = witnessed_fail(check_right_module(mutate_right_module(m, rng)));
                break;
            }
        }
        if (ok) ++suite.passed;
    }
    return suite;
}

template <FieldType F>
SelftestResult run_selftest(const F& field, std::uint64_t seed, std::size_t count) {
    SelftestResult result;
    auto run = [&](auto&& fn, std::size_t n) {
        SplitMix64 rng(seed ^ (0x9E3779B97F4A7C15ULL * (result.suites.size() + 1)));
        auto suite = fn(field, rng, n);
        suite.name = field.name() + " " + suite.name;
        result.suites.push_back(suite);
    };
    run([](const F& f, SplitMix64& r, std::size_t n) { return selftest_theorem_biconditional(f, r, n); },
        count);
    run([](const F& f, SplitMix64& r, std::size_t n) { return selftest_morphism_biconditional(f, r, n); },
        count);
    run([](const F& f, SplitMix64& r, std::size_t n) { return selftest_duality_square(f, r, n); }, count);
    run([](const F& f, SplitMix64& r, std::size_t n) { return selftest_psi_contract(f, r, n); },
        std::max<std::size_t>(1, count / 2));
    run([](const F& f, SplitMix64& r, std::size_t n) { return selftest_cotensor_duality(f, r, n); },
        count);
    run([](const F& f, SplitMix64& r, std::size_t n) { return selftest_adjunction(f, r, n); },
        std::max<std::size_t>(1, count / 5));
    run([](const F& f, SplitMix64& r, std::size_t n) { return selftest_module_formulations(f, r, n); },
        count);
    run([](const F& f, SplitMix64& r, std::size_t n) { return selftest_towers(f, r, n); },
        std::max<std::size_t>(1, count / 2));
    run([](const F& f, SplitMix64& r, std::size_t n) { return selftest_negative(f, r, n); }, count);
    return result;
}

}  // namespace codual
