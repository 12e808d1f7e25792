#pragma once

// The cotensor product of a right C-comodule with a left C-comodule (or a
// C-D-bicomodule), and tensor products over an algebra presented as quotients.
// The cotensor is literally the kernel of mu_L (x) id - id (x) lambda_M inside
// L (x) M; when M is a bicomodule the right D-costructure restricts to that
// kernel and the restriction is certified.

#include <cstddef>
#include <optional>

#include "codual/comodule.hpp"
#include "codual/linalg.hpp"
#include "codual/module.hpp"

namespace codual {

template <FieldType F>
struct CotensorSpace {
    Subspace<F> space;  // inside L (x) M coordinates
    Matrix<F> inclusion;
    Matrix<F> selector;
    std::optional<RightComodule<F>> induced;  // right D-comodule when M is a bicomodule
};

namespace detail {

template <FieldType F>
Matrix<F> cotensor_equalizer(const RightComodule<F>& l, const Coalgebra<F>& c,
                             const Matrix<F>& lambda_m, std::size_t m_dim) {
    auto id_l = Matrix<F>::identity(c.field, l.dim);
    auto id_m = Matrix<F>::identity(c.field, m_dim);
    return kron(l.mu, id_m) - kron(id_l, lambda_m);
}

}  // namespace detail

template <FieldType F>
CotensorSpace<F> cotensor(const RightComodule<F>& l, const Comodule<F>& m) {
    if (!(l.over == m.over)) throw StructureError("cotensor: different base coalgebras");
    require_certified(l, "cotensor");
    require_certified(m, "cotensor");
    auto ker = kernel_basis(detail::cotensor_equalizer(l, l.over, m.rho, m.dim));
    return CotensorSpace<F>{ker, inclusion_of(ker), selector_of(ker), std::nullopt};
}

/// Bicomodule version: also restricts id_L (x) mu_D to the kernel and certifies
/// the induced right D-comodule.
template <FieldType F>
CotensorSpace<F> cotensor(const RightComodule<F>& l, const Bicomodule<F>& m) {
    if (!(l.over == m.over_left)) throw StructureError("cotensor: different base coalgebras");
    require_certified(l, "cotensor");
    require_certified(m, "cotensor");
    const F& k = l.over.field;
    auto ker = kernel_basis(detail::cotensor_equalizer(l, l.over, m.lambda, m.dim));
    auto incl = inclusion_of(ker);
    auto sel = selector_of(ker);

    std::size_t d = m.over_right.dim;
    auto id_l = Matrix<F>::identity(k, l.dim);
    Matrix<F> costructure = kron(id_l, m.mu) * incl;  // (l*m*d) x s
    // each D-component column must stay in the kernel subspace
    std::size_t lm = l.dim * m.dim;
    for (std::size_t j = 0; j < costructure.cols(); ++j)
        for (std::size_t cd = 0; cd < d; ++cd) {
            Matrix<F> comp(k, lm, 1);
            for (std::size_t r = 0; r < lm; ++r)
                comp(r, 0) = costructure(tensor_index(d, r, cd), j);
            if (!contains(ker, comp))
                throw InternalInvariantError("cotensor: D-costructure does not restrict to the kernel");
        }
    Matrix<F> induced_mu = kron(sel, Matrix<F>::identity(k, d)) * costructure;
    RightComodule<F> induced{m.over_right, ker.dim(), induced_mu};
    auto rep = check_right_comodule(induced);
    if (!rep.pass())
        throw InternalInvariantError("cotensor: induced costructure fails " + rep.first_failure());
    return CotensorSpace<F>{ker, incl, sel, induced};
}

// ---------------------------------------------------------------------------
// tensor over an algebra

template <FieldType F>
struct QuotientPresentation {
    Subspace<F> relations;  // span{ (p.a)(x)q - p(x)(a.q) } inside P (x) Q
    Matrix<F> projection;   // quotient map P (x) Q -> coordinates of the quotient
    std::size_t dim = 0;
};

/// P (x)_A Q as the quotient of P (x) Q by the bilinearity relations. The
/// relation subspace is the column space of act_P (x) id - id (x) act_Q on
/// P (x) A (x) Q.
template <FieldType F>
QuotientPresentation<F> tensor_over_algebra(const RightModule<F>& p, const LeftModule<F>& q) {
    if (!(p.over == q.over)) throw StructureError("tensor_over_algebra: different base algebras");
    require_certified(p, "tensor_over_algebra");
    require_certified(q, "tensor_over_algebra");
    const F& k = p.over.field;
    auto id_p = Matrix<F>::identity(k, p.dim);
    auto id_q = Matrix<F>::identity(k, q.dim);
    Matrix<F> rel = kron(p.action, id_q) - kron(id_p, q.action);  // (p*q) x (p*a*q)
    Subspace<F> relations = subspace_from_span(rel.transpose());
    Matrix<F> projection = quotient_map(p.dim * q.dim, relations);
    return QuotientPresentation<F>{relations, projection, p.dim * q.dim - relations.dim()};
}

}  // namespace codual
