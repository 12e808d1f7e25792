#pragma once

// Mixed homomorphisms from a contramodule to a comodule, the cohom functor
// h(M,-) = Hom_D(-,M)*, and the mechanical verification of the adjunction
//   Hom_D(N, L cotensor_C M)  =  Hom_C(h(M,N), L).
//
// The adjunction isomorphism is not assumed: it is constructed through the
// module-side currying (slice a map N -> L(x)M along L, land each slice in
// Hom_D(N,M), read coordinates) and then verified to be a linear bijection
// between the two independently solved hom-spaces, with naturality squares
// checked on explicit homomorphisms.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "codual/cotensor.hpp"
#include "codual/duality.hpp"
#include "codual/hom.hpp"

namespace codual {

/// Solutions of psi_bar(gamma . theta) = mu . gamma inside Hom(N, M).
template <FieldType F>
Subspace<F> mixed_hom(const Contramodule<F>& n, const RightComodule<F>& m) {
    if (!(n.over == m.over)) throw StructureError("mixed_hom: different base coalgebras");
    require_certified(n, "mixed_hom");
    require_certified(m, "mixed_hom");
    std::size_t d = n.over.dim;
    return solve_linear_maps(n.over.field, n.dim, m.dim, [&](const Matrix<F>& gamma) {
        return psi_bar_apply(gamma * n.theta, d, n.dim) - m.mu * gamma;
    });
}

template <FieldType F>
struct CohomResult {
    Contramodule<F> contra;   // h(M,N), carrier = dual of the solved hom-space
    Comodule<F> comod;        // the left C-comodule structure on Hom_D(N,M)
    Subspace<F> hom_space;    // Hom_D(N,M) inside Hom(N,M) vec-coordinates
    Matrix<F> action;         // right C*-action matrix on hom-space coordinates
};

namespace detail {

/// c-th block row of a left costructure lambda: the matrix L_c with
/// lambda(x) = sum_c e_c (x) (L_c x).
template <FieldType F>
Matrix<F> lambda_component(const Matrix<F>& lambda, std::size_t c, std::size_t m_dim) {
    Matrix<F> comp(lambda.field(), m_dim, lambda.cols());
    for (std::size_t r = 0; r < m_dim; ++r)
        for (std::size_t j = 0; j < lambda.cols(); ++j) comp(r, j) = lambda(c * m_dim + r, j);
    return comp;
}

}  // namespace detail

/// h(M,N): solve Hom_D(N,M), equip it with the right C*-action
/// (gamma . c*) = L_c gamma coming from the left costructure of M, convert
/// through the theta formulation and dualize. Every induced structure is
/// re-certified; failures indicate bugs, not bad input.
template <FieldType F>
CohomResult<F> cohom(const Bicomodule<F>& m, const Contramodule<F>& n) {
    if (!(n.over == m.over_right)) throw StructureError("cohom: different base coalgebras");
    require_certified(m, "cohom");
    const F& k = n.over.field;
    const Coalgebra<F>& c = m.over_left;
    std::size_t nc = c.dim;

    Subspace<F> h = mixed_hom(n, RightComodule<F>{m.over_right, m.dim, m.mu});
    std::size_t hd = h.dim();

    Matrix<F> action(k, hd, hd * nc);
    for (std::size_t alpha = 0; alpha < hd; ++alpha) {
        Matrix<F> gamma = unvec(column_from(k, h.basis.row(alpha)), m.dim, n.dim);
        for (std::size_t cc = 0; cc < nc; ++cc) {
            Matrix<F> image = detail::lambda_component(m.lambda, cc, m.dim) * gamma;
            auto coords = coords_in(h, vec(image));
            if (!coords)
                throw InternalInvariantError("cohom: C*-action does not preserve the hom-space");
            for (std::size_t beta = 0; beta < hd; ++beta)
                action(beta, tensor_index(nc, alpha, cc)) = (*coords)[beta];
        }
    }
    RightModule<F> w{dual_algebra(c), hd, action};
    auto wr = check_right_module(w);
    if (!wr.pass())
        throw InternalInvariantError("cohom: induced C*-action fails " + wr.first_failure());

    Contramodule<F> contra = dmodule_to_contramodule(w, c);
    Comodule<F> comod = contramodule_to_comodule(contra);
    auto cr = check_contramodule(contra);
    if (!cr.pass()) throw InternalInvariantError("cohom: output fails " + cr.first_failure());
    return CohomResult<F>{contra, comod, h, action};
}

template <FieldType F>
struct AdjunctionReport {
    std::size_t lhs_dim = 0;  // dim Hom_D(N, L cotensor M)
    std::size_t rhs_dim = 0;  // dim Hom_C(h(M,N), L)
    bool dims_equal = false;
    bool bijective = false;
    std::optional<bool> natural_in_l;
    std::optional<bool> natural_in_n;
    std::string detail;

    bool pass() const {
        return dims_equal && bijective && natural_in_l.value_or(true) && natural_in_n.value_or(true);
    }
};

namespace detail {

/// The currying transport: a mixed hom gamma: N -> S (cotensor coordinates)
/// becomes the map delta: h(M,N)-carrier -> L whose j-th row reads off the
/// coordinates of the j-th L-slice of iota_S . gamma inside Hom_D(N,M).
/// Returns nullopt when a slice escapes the hom-space (which would falsify the
/// construction).
template <FieldType F>
std::optional<Matrix<F>> curry_through_homspace(const Matrix<F>& gamma, const CotensorSpace<F>& ct,
                                                const Subspace<F>& hom_space, std::size_t l_dim,
                                                std::size_t m_dim, std::size_t n_dim) {
    const F& k = gamma.field();
    Matrix<F> lifted = ct.inclusion * gamma;  // (l*m) x n
    Matrix<F> delta(k, l_dim, hom_space.dim());
    for (std::size_t j = 0; j < l_dim; ++j) {
        Matrix<F> slice(k, m_dim, n_dim);
        for (std::size_t r = 0; r < m_dim; ++r)
            for (std::size_t cn = 0; cn < n_dim; ++cn)
                slice(r, cn) = lifted(tensor_index(m_dim, j, r), cn);
        auto coords = coords_in(hom_space, vec(slice));
        if (!coords) return std::nullopt;
        for (std::size_t beta = 0; beta < hom_space.dim(); ++beta) delta(j, beta) = (*coords)[beta];
    }
    return delta;
}

}  // namespace detail

/// Caller-supplied homomorphisms for the naturality squares.
template <FieldType F>
struct AdjunctionNaturality {
    std::optional<RightComodule<F>> other_l;  // L2 over C
    std::optional<Matrix<F>> hom_l;           // comodule hom L -> L2
    std::optional<Contramodule<F>> other_n;   // N2 over D
    std::optional<Matrix<F>> hom_n;           // contramodule hom N -> N2
};

template <FieldType F>
AdjunctionReport<F> adjunction_check(const RightComodule<F>& l, const Bicomodule<F>& m,
                                     const Contramodule<F>& n,
                                     const AdjunctionNaturality<F>* nat = nullptr) {
    if (!(l.over == m.over_left)) throw StructureError("adjunction_check: L and M base mismatch");
    if (!(n.over == m.over_right)) throw StructureError("adjunction_check: N and M base mismatch");
    const F& k = l.over.field;

    CotensorSpace<F> ct = cotensor(l, m);
    CohomResult<F> ch = cohom(m, n);
    Subspace<F> lhs = mixed_hom(n, *ct.induced);
    Subspace<F> rhs = mixed_hom(ch.contra, l);

    AdjunctionReport<F> report;
    report.lhs_dim = lhs.dim();
    report.rhs_dim = rhs.dim();
    report.dims_equal = lhs.dim() == rhs.dim();
    auto describe = [&](const std::string& what) {
        return what + " [dim L=" + std::to_string(l.dim) + ", dim M=" + std::to_string(m.dim) +
               ", dim N=" + std::to_string(n.dim) + ", dim cotensor=" + std::to_string(ct.space.dim()) +
               ", dim hom-space=" + std::to_string(ch.hom_space.dim()) + "]";
    };

    // assemble the transport matrix on the solved bases
    Matrix<F> iso(k, rhs.dim(), lhs.dim());
    bool transport_ok = true;
    for (std::size_t a = 0; a < lhs.dim() && transport_ok; ++a) {
        Matrix<F> gamma = unvec(column_from(k, lhs.basis.row(a)), ct.space.dim(), n.dim);
        auto delta = detail::curry_through_homspace(gamma, ct, ch.hom_space, l.dim, m.dim, n.dim);
        if (!delta) {
            transport_ok = false;
            report.detail = describe("currying left a slice outside Hom_D(N,M)");
            break;
        }
        auto coords = coords_in(rhs, vec(*delta));
        if (!coords) {
            transport_ok = false;
            report.detail = describe("transported map is not a contramodule-to-comodule homomorphism");
            break;
        }
        for (std::size_t b = 0; b < rhs.dim(); ++b) iso(b, a) = (*coords)[b];
    }
    report.bijective = transport_ok && report.dims_equal && rank(iso) == lhs.dim();
    if (!report.bijective && report.detail.empty()) report.detail = describe("transport not bijective");

    if (nat && nat->other_l && nat->hom_l) {
        const RightComodule<F>& l2 = *nat->other_l;
        const Matrix<F>& u = *nat->hom_l;
        if (!is_right_comodule_hom(u, l, l2))
            throw PreconditionError("adjunction_check: supplied L-map is not a comodule homomorphism");
        CotensorSpace<F> ct2 = cotensor(l2, m);
        // u cotensor id on the kernel subspaces
        Matrix<F> pushed = kron(u, Matrix<F>::identity(k, m.dim)) * ct.inclusion;
        bool ok = true;
        for (std::size_t col = 0; col < pushed.cols() && ok; ++col) {
            Matrix<F> v(k, pushed.rows(), 1);
            for (std::size_t r = 0; r < pushed.rows(); ++r) v(r, 0) = pushed(r, col);
            ok = contains(ct2.space, v);
        }
        if (!ok) throw InternalInvariantError("adjunction_check: u (x) id does not restrict");
        Matrix<F> u_box = ct2.selector * pushed;  // s2 x s
        bool natural = true;
        for (std::size_t a = 0; a < lhs.dim() && natural; ++a) {
            Matrix<F> gamma = unvec(column_from(k, lhs.basis.row(a)), ct.space.dim(), n.dim);
            auto left = detail::curry_through_homspace(u_box * gamma, ct2, ch.hom_space, l2.dim,
                                                       m.dim, n.dim);
            auto right = detail::curry_through_homspace(gamma, ct, ch.hom_space, l.dim, m.dim, n.dim);
            natural = left && right && *left == u * *right;
        }
        report.natural_in_l = natural;
        if (!natural && report.detail.empty()) report.detail = describe("naturality square in L broken");
    }

    if (nat && nat->other_n && nat->hom_n) {
        const Contramodule<F>& n2 = *nat->other_n;
        const Matrix<F>& w = *nat->hom_n;
        if (!is_contramodule_hom(w, n, n2))
            throw PreconditionError("adjunction_check: supplied N-map is not a contramodule homomorphism");
        CohomResult<F> ch2 = cohom(m, n2);
        Subspace<F> lhs2 = mixed_hom(n2, *ct.induced);
        // h(M,w): dual of precomposition Hom_D(N2,M) -> Hom_D(N,M)
        Matrix<F> precomp(k, ch.hom_space.dim(), ch2.hom_space.dim());
        for (std::size_t b = 0; b < ch2.hom_space.dim(); ++b) {
            Matrix<F> sigma = unvec(column_from(k, ch2.hom_space.basis.row(b)), m.dim, n2.dim);
            auto coords = coords_in(ch.hom_space, vec(sigma * w));
            if (!coords)
                throw InternalInvariantError("adjunction_check: precomposition leaves the hom-space");
            for (std::size_t a = 0; a < ch.hom_space.dim(); ++a) precomp(a, b) = (*coords)[a];
        }
        Matrix<F> h_of_w = precomp.transpose();  // h(M,N)-carrier -> h(M,N2)-carrier
        bool natural = true;
        for (std::size_t a = 0; a < lhs2.dim() && natural; ++a) {
            Matrix<F> gamma2 = unvec(column_from(k, lhs2.basis.row(a)), ct.space.dim(), n2.dim);
            auto left = detail::curry_through_homspace(gamma2 * w, ct, ch.hom_space, l.dim, m.dim,
                                                       n.dim);
            auto right = detail::curry_through_homspace(gamma2, ct, ch2.hom_space, l.dim, m.dim,
                                                        n2.dim);
            natural = left && right && *left == *right * h_of_w;
        }
        report.natural_in_n = natural;
        if (!natural && report.detail.empty()) report.detail = describe("naturality square in N broken");
    }
    return report;
}

}  // namespace codual
