#pragma once

// Seeded deterministic generators. SplitMix64 is fully specified, so the same
// seed yields the same structures on every platform; reports record the
// algorithm name. Valid structures are produced by conjugating certified
// examples (gradings over group-like coalgebras, sums of regular objects
// otherwise); invalid ones by perturbing a single entry and re-sampling until
// the certifier actually fails, so the mutator's output is failing by
// construction.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "codual/cohom.hpp"
#include "codual/comodule.hpp"
#include "codual/contramodule.hpp"
#include "codual/duality.hpp"
#include "codual/module.hpp"
#include "codual/tower.hpp"

namespace codual {

struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    long int_range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    static constexpr const char* algorithm = "splitmix64";
};

template <FieldType F>
typename F::Elem random_scalar(const F& field, SplitMix64& rng) {
    if constexpr (std::is_same_v<F, PrimeField>) {
        return field.from_int(rng.int_range(0, static_cast<long>(field.modulus()) - 1));
    } else {
        return field.from_int(rng.int_range(-2, 2));
    }
}

template <FieldType F>
typename F::Elem random_nonzero_scalar(const F& field, SplitMix64& rng) {
    for (;;) {
        auto e = random_scalar(field, rng);
        if (!field.is_zero(e)) return e;
    }
}

template <FieldType F>
Matrix<F> random_matrix(const F& field, std::size_t rows, std::size_t cols, SplitMix64& rng) {
    Matrix<F> m(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar(field, rng);
    return m;
}

/// Invertible by construction: permutation * unitriangular * unitriangular.
/// Returns (g, g^-1), both exact.
template <FieldType F>
std::pair<Matrix<F>, Matrix<F>> random_invertible(const F& field, std::size_t n, SplitMix64& rng) {
    Matrix<F> lower = Matrix<F>::identity(field, n);
    Matrix<F> upper = Matrix<F>::identity(field, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            if (rng.below(3) == 0) lower(i, j) = random_nonzero_scalar(field, rng);
            if (rng.below(3) == 0) upper(j, i) = random_nonzero_scalar(field, rng);
        }
    Matrix<F> perm(field, n, n);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
    for (std::size_t i = 0; i < n; ++i) perm(order[i], i) = field.one();
    Matrix<F> g = perm * lower * upper;
    return {g, inverse(g)};
}

/// Detects group-like coalgebras (Delta(e_i) = e_i (x) e_i, eps = 1) so the
/// generator can use arbitrary gradings instead of sums of regular comodules.
template <FieldType F>
bool is_grouplike(const Coalgebra<F>& c) {
    return c == grouplike(c.field, c.dim);
}

/// A certified comodule: a random grading over a group-like base, otherwise a
/// direct sum of copies of the regular comodule, conjugated either way.
template <FieldType F>
Comodule<F> random_comodule(const Coalgebra<F>& c, SplitMix64& rng, std::size_t max_copies = 2) {
    Comodule<F> base{c, 0, Matrix<F>(c.field, 0, 0)};
    if (is_grouplike(c)) {
        std::vector<std::size_t> dims(c.dim);
        for (auto& d : dims) d = rng.below(3);
        base = graded_comodule(c, dims);
    } else {
        std::size_t copies = rng.below(max_copies + 1);
        for (std::size_t i = 0; i < copies; ++i) base = direct_sum(base, regular_comodule(c));
    }
    if (base.dim == 0) return base;
    auto [g, g_inv] = random_invertible(c.field, base.dim, rng);
    return conjugate(base, g, g_inv);
}

template <FieldType F>
RightComodule<F> random_right_comodule(const Coalgebra<F>& c, SplitMix64& rng,
                                       std::size_t max_copies = 2) {
    RightComodule<F> base{c, 0, Matrix<F>(c.field, 0, 0)};
    if (is_grouplike(c)) {
        std::vector<std::size_t> dims(c.dim);
        for (auto& d : dims) d = rng.below(3);
        base = graded_right_comodule(c, dims);
    } else {
        std::size_t copies = rng.below(max_copies + 1);
        for (std::size_t i = 0; i < copies; ++i) base = direct_sum(base, regular_right_comodule(c));
    }
    if (base.dim == 0) return base;
    auto [g, g_inv] = random_invertible(c.field, base.dim, rng);
    return conjugate(base, g, g_inv);
}

template <FieldType F>
Contramodule<F> random_contramodule(const Coalgebra<F>& c, SplitMix64& rng,
                                    std::size_t max_copies = 2) {
    return comodule_to_contramodule(random_comodule(c, rng, max_copies));
}

template <FieldType F>
Bicomodule<F> random_bicomodule(const Coalgebra<F>& c, const Coalgebra<F>& d, SplitMix64& rng,
                                std::size_t max_copies = 2) {
    std::size_t copies = 1 + rng.below(max_copies);
    Bicomodule<F> base = regular_bicomodule(c, d);
    for (std::size_t i = 1; i < copies; ++i) base = direct_sum(base, regular_bicomodule(c, d));
    auto [g, g_inv] = random_invertible(c.field, base.dim, rng);
    return conjugate(base, g, g_inv);
}

template <FieldType F>
LeftModule<F> random_left_module(const Coalgebra<F>& c, SplitMix64& rng, std::size_t max_copies = 2) {
    return comodule_to_pcmodule(random_comodule(c, rng, max_copies));
}

template <FieldType F>
RightModule<F> random_right_module(const Coalgebra<F>& c, SplitMix64& rng,
                                   std::size_t max_copies = 2) {
    return contramodule_to_dmodule(random_contramodule(c, rng, max_copies));
}

/// Random element of a solved hom-space (a random linear combination of the
/// basis, reshaped to a map).
template <FieldType F>
Matrix<F> random_hom_from(const Subspace<F>& space, std::size_t rows, std::size_t cols,
                          SplitMix64& rng) {
    const F& k = space.field();
    Matrix<F> v(k, space.ambient, 1);
    for (std::size_t b = 0; b < space.dim(); ++b) {
        auto coeff = random_scalar(k, rng);
        if (k.is_zero(coeff)) continue;
        for (std::size_t j = 0; j < space.ambient; ++j)
            v(j, 0) = k.add(v(j, 0), k.mul(coeff, space.basis(b, j)));
    }
    return unvec(v, rows, cols);
}

// ---------------------------------------------------------------------------
// mutators: single-entry perturbations re-sampled until the certifier fails

template <FieldType F>
void perturb_entry(Matrix<F>& m, SplitMix64& rng) {
    if (m.rows() == 0 || m.cols() == 0) return;
    std::size_t i = rng.below(m.rows());
    std::size_t j = rng.below(m.cols());
    m(i, j) = m.field().add(m(i, j), random_nonzero_scalar(m.field(), rng));
}

namespace detail {

template <class Structure, class Mutate, class Check>
Structure mutate_until_failing(const Structure& s, Mutate&& mutate, Check&& check, SplitMix64& rng) {
    for (int attempt = 0; attempt < 256; ++attempt) {
        Structure candidate = s;
        mutate(candidate, rng);
        if (!check(candidate).pass()) return candidate;
    }
    throw InternalInvariantError("mutator could not produce a failing structure");
}

}  // namespace detail

template <FieldType F>
Coalgebra<F> mutate_coalgebra(const Coalgebra<F>& c, SplitMix64& rng) {
    return detail::mutate_until_failing(
        c,
        [](Coalgebra<F>& x, SplitMix64& r) {
            if (r.below(4) == 0)
                perturb_entry(x.eps, r);
            else
                perturb_entry(x.delta, r);
        },
        [](const Coalgebra<F>& x) { return check_coalgebra(x); }, rng);
}

template <FieldType F>
Comodule<F> mutate_comodule(const Comodule<F>& x, SplitMix64& rng) {
    return detail::mutate_until_failing(
        x, [](Comodule<F>& y, SplitMix64& r) { perturb_entry(y.rho, r); },
        [](const Comodule<F>& y) { return check_comodule(y); }, rng);
}

template <FieldType F>
RightComodule<F> mutate_right_comodule(const RightComodule<F>& m, SplitMix64& rng) {
    return detail::mutate_until_failing(
        m, [](RightComodule<F>& y, SplitMix64& r) { perturb_entry(y.mu, r); },
        [](const RightComodule<F>& y) { return check_right_comodule(y); }, rng);
}

template <FieldType F>
Contramodule<F> mutate_contramodule(const Contramodule<F>& z, SplitMix64& rng) {
    return detail::mutate_until_failing(
        z, [](Contramodule<F>& y, SplitMix64& r) { perturb_entry(y.theta, r); },
        [](const Contramodule<F>& y) { return check_contramodule(y); }, rng);
}

template <FieldType F>
LeftModule<F> mutate_left_module(const LeftModule<F>& m, SplitMix64& rng) {
    return detail::mutate_until_failing(
        m, [](LeftModule<F>& y, SplitMix64& r) { perturb_entry(y.action, r); },
        [](const LeftModule<F>& y) { return check_left_module(y); }, rng);
}

template <FieldType F>
RightModule<F> mutate_right_module(const RightModule<F>& m, SplitMix64& rng) {
    return detail::mutate_until_failing(
        m, [](RightModule<F>& y, SplitMix64& r) { perturb_entry(y.action, r); },
        [](const RightModule<F>& y) { return check_right_module(y); }, rng);
}

template <FieldType F>
Bicomodule<F> mutate_bicomodule(const Bicomodule<F>& b, SplitMix64& rng) {
    return detail::mutate_until_failing(
        b,
        [](Bicomodule<F>& y, SplitMix64& r) {
            if (r.below(2) == 0)
                perturb_entry(y.lambda, r);
            else
                perturb_entry(y.mu, r);
        },
        [](const Bicomodule<F>& y) { return check_bicomodule(y); }, rng);
}

/// Only comodule structure maps are mutated; a raw rho paired with the functor
/// image is exactly what the duality biconditional consumes.
template <FieldType F>
Comodule<F> random_raw_comodule(const Coalgebra<F>& c, SplitMix64& rng) {
    std::size_t x = 1 + rng.below(3);
    return Comodule<F>{c, x, random_matrix(c.field, c.dim * x, x, rng)};
}

/// The standard test menagerie: group-likes, a matrix coalgebra, divided
/// powers, and (away from characteristic 2) the trigonometric coalgebra.
template <FieldType F>
std::vector<Coalgebra<F>> coalgebra_zoo(const F& field) {
    std::vector<Coalgebra<F>> zoo;
    for (std::size_t n = 1; n <= 3; ++n) zoo.push_back(grouplike(field, n));
    zoo.push_back(matrix_coalgebra(field, 2));
    for (std::size_t n = 0; n <= 3; ++n) zoo.push_back(divided_power(field, n));
    bool char2 = false;
    if constexpr (std::is_same_v<F, PrimeField>) char2 = field.modulus() == 2;
    if (!char2) zoo.push_back(trig(field));
    return zoo;
}

}  // namespace codual
