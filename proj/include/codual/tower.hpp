#pragma once

// Finite inverse towers of contramodules Z_0 <- Z_1 <- ... <- Z_T and their
// limit: the subspace of compatible tuples in the product, carrying the induced
// structure map. For a finite chain the projection to the top level is an
// isomorphism; the checker certifies that too.

#include <cstddef>
#include <vector>

#include "codual/contramodule.hpp"
#include "codual/hom.hpp"
#include "codual/linalg.hpp"

namespace codual {

template <FieldType F>
struct FiniteTower {
    Coalgebra<F> over;
    std::vector<Contramodule<F>> levels;       // Z_0 .. Z_T
    std::vector<Matrix<F>> transitions;        // f_i : Z_{i+1} -> Z_i
};

template <FieldType F>
void validate_shapes(const FiniteTower<F>& t) {
    validate_shapes(t.over);
    if (t.levels.empty()) throw StructureError("tower needs at least one level");
    if (t.transitions.size() + 1 != t.levels.size())
        throw StructureError("tower needs exactly one transition per adjacent pair of levels");
    for (const auto& z : t.levels) {
        validate_shapes(z);
        if (!(z.over == t.over)) throw StructureError("tower level over a different coalgebra");
    }
    for (std::size_t i = 0; i < t.transitions.size(); ++i)
        if (t.transitions[i].rows() != t.levels[i].dim || t.transitions[i].cols() != t.levels[i + 1].dim)
            throw StructureError("tower transition " + std::to_string(i) + " has shape " +
                                 t.transitions[i].shape_str());
}

/// The product contramodule structure on Z_0 + ... + Z_T (blockwise theta).
template <FieldType F>
Contramodule<F> product_contramodule(const Coalgebra<F>& c, const std::vector<Contramodule<F>>& zs) {
    std::size_t total = 0;
    for (const auto& z : zs) total += z.dim;
    Matrix<F> theta(c.field, total, c.dim * total);
    std::size_t off = 0;
    for (const auto& z : zs) {
        for (std::size_t r = 0; r < z.dim; ++r)
            for (std::size_t cc = 0; cc < c.dim; ++cc)
                for (std::size_t j = 0; j < z.dim; ++j)
                    theta(off + r, hom_index(total, off + j, cc)) = z.theta(r, hom_index(z.dim, j, cc));
        off += z.dim;
    }
    return Contramodule<F>{c, total, theta};
}

template <FieldType F>
struct TowerLimit {
    Contramodule<F> limit;
    Subspace<F> tuples;           // compatible tuples inside the product
    Matrix<F> projection_to_top;  // limit -> Z_T
};

/// Kernel of (z_i - f_i(z_{i+1}))_i inside the product, with the restricted
/// structure map. Requires every level and transition to be certified.
template <FieldType F>
TowerLimit<F> tower_limit(const FiniteTower<F>& t) {
    validate_shapes(t);
    const F& k = t.over.field;
    for (std::size_t i = 0; i < t.levels.size(); ++i) {
        auto r = check_contramodule(t.levels[i]);
        if (!r.pass())
            throw PreconditionError("tower level " + std::to_string(i) + " fails " + r.first_failure());
    }
    for (std::size_t i = 0; i < t.transitions.size(); ++i)
        if (!is_contramodule_hom(t.transitions[i], t.levels[i + 1], t.levels[i]))
            throw PreconditionError("tower transition " + std::to_string(i) +
                                    " is not a contramodule homomorphism");

    std::vector<std::size_t> offsets;
    std::size_t total = 0;
    for (const auto& z : t.levels) {
        offsets.push_back(total);
        total += z.dim;
    }
    std::size_t rows = total - t.levels.back().dim;  // one row block per transition
    Matrix<F> compat(k, rows, total);
    for (std::size_t i = 0; i < t.transitions.size(); ++i) {
        for (std::size_t r = 0; r < t.levels[i].dim; ++r) {
            compat(offsets[i] + r, offsets[i] + r) = k.one();
            for (std::size_t c = 0; c < t.levels[i + 1].dim; ++c)
                compat(offsets[i] + r, offsets[i + 1] + c) = k.neg(t.transitions[i](r, c));
        }
    }
    Subspace<F> tuples = kernel_basis(compat);

    auto prod = product_contramodule(t.over, t.levels);
    auto incl = inclusion_of(tuples);
    auto sel = selector_of(tuples);
    // theta of the product must map Hom(C, tuples) into tuples; transitions
    // being homomorphisms guarantees it, so a failure here is a bug.
    Matrix<F> restricted = prod.theta * postcompose(incl, t.over.dim);
    for (std::size_t j = 0; j < restricted.cols(); ++j) {
        Matrix<F> colv(k, total, 1);
        for (std::size_t i = 0; i < total; ++i) colv(i, 0) = restricted(i, j);
        if (!contains(tuples, colv))
            throw InternalInvariantError("tower limit: structure map does not restrict to the limit");
    }
    Contramodule<F> limit{t.over, tuples.dim(), sel * restricted};

    // projection limit -> Z_T: read the top block of each basis tuple
    std::size_t top_dim = t.levels.back().dim;
    Matrix<F> proj(k, top_dim, tuples.dim());
    for (std::size_t b = 0; b < tuples.dim(); ++b)
        for (std::size_t r = 0; r < top_dim; ++r)
            proj(r, b) = tuples.basis(b, offsets.back() + r);
    return TowerLimit<F>{limit, tuples, proj};
}

/// Certifies levels, transitions, the limit, and the finite-chain property
/// (projection to the top level is an isomorphism of contramodules).
template <FieldType F>
CertReport<F> check_tower(const FiniteTower<F>& t) {
    validate_shapes(t);
    CertReport<F> report;
    bool structurally_ok = true;
    for (std::size_t i = 0; i < t.levels.size(); ++i) {
        auto r = check_contramodule(t.levels[i]);
        for (auto& c : r.checks) {
            c.diagram = "level " + std::to_string(i) + " " + c.diagram;
            structurally_ok = structurally_ok && c.pass;
            report.checks.push_back(c);
        }
    }
    for (std::size_t i = 0; i < t.transitions.size(); ++i) {
        auto lhs = t.transitions[i] * t.levels[i + 1].theta;
        auto rhs = t.levels[i].theta * postcompose(t.transitions[i], t.over.dim);
        auto c = compare_composites<F>("transition " + std::to_string(i) + " square", lhs, rhs);
        structurally_ok = structurally_ok && c.pass;
        report.checks.push_back(c);
    }
    if (!structurally_ok) return report;

    auto lim = tower_limit(t);
    auto limit_report = check_contramodule(lim.limit);
    for (auto& c : limit_report.checks) {
        c.diagram = "limit " + c.diagram;
        report.checks.push_back(c);
    }
    bool proj_is_hom = is_contramodule_hom(lim.projection_to_top, lim.limit, t.levels.back());
    bool proj_bijective = lim.limit.dim == t.levels.back().dim &&
                          rank(lim.projection_to_top) == t.levels.back().dim;
    report.checks.push_back(DiagramCheck<F>{"limit projection homomorphism", proj_is_hom, std::nullopt});
    report.checks.push_back(DiagramCheck<F>{"limit projection isomorphism", proj_bijective, std::nullopt});
    return report;
}

}  // namespace codual
