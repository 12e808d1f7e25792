#pragma once

// Index conventions, fixed once and used by every structure in the library.
//
//   tensor:  e_i (x) e_j in k^a (x) k^b sits at coordinate i*b + j
//            (first factor major); kron respects this.
//   hom:     Hom(k^a, k^b) = k^{b*a} by column-stacking, entry M(r,c) at
//            coordinate c*b + r; vec/unvec respect this.
//   dual:    (k^n)* = k^n via the dual basis; the dual of a map is its
//            transpose. Under these identifications the canonical map
//            (A (x) B)* -> A* (x) B* is the identity on coordinates, and so is
//            the double dual X ~ X**.
//
// The reshuffle isomorphisms below are not hand-derived index formulas: each is
// generated entrywise from its defining evaluation identity, so the identity
// itself is what the tests exercise.

#include <cstddef>

#include "codual/linalg.hpp"
#include "codual/matrix.hpp"

namespace codual {

inline std::size_t tensor_index(std::size_t b_dim, std::size_t i, std::size_t j) {
    return i * b_dim + j;
}

inline std::size_t hom_index(std::size_t codomain_dim, std::size_t r, std::size_t c) {
    return c * codomain_dim + r;
}

/// psi: Hom(A, Hom(B,Z)) -> Hom(A (x) B, Z), psi(g)(a (x) b) = g(a)(b), as a
/// permutation of vec-coordinates. Defined by sending the element "e_cA maps to
/// the elementary matrix E_{rZ,cB}" to the elementary matrix supported at
/// (rZ, cA (x) cB).
template <FieldType F>
Matrix<F> psi(const F& field, std::size_t a_dim, std::size_t b_dim, std::size_t z_dim) {
    std::size_t size = a_dim * b_dim * z_dim;
    Matrix<F> m(field, size, size);
    for (std::size_t ca = 0; ca < a_dim; ++ca)
        for (std::size_t cb = 0; cb < b_dim; ++cb)
            for (std::size_t rz = 0; rz < z_dim; ++rz) {
                std::size_t src = hom_index(b_dim * z_dim, hom_index(z_dim, rz, cb), ca);
                std::size_t dst = hom_index(z_dim, rz, tensor_index(b_dim, ca, cb));
                m(dst, src) = field.one();
            }
    return m;
}

/// Matrix of F |-> F o g on vec-coordinates: Hom(A', Z) -> Hom(A, Z) for
/// g: A -> A'.
template <FieldType F>
Matrix<F> precompose(const Matrix<F>& g, std::size_t z_dim) {
    return kron(g.transpose(), Matrix<F>::identity(g.field(), z_dim));
}

/// Matrix of F |-> h o F on vec-coordinates: Hom(A, Z) -> Hom(A, Z') for
/// h: Z -> Z'.
template <FieldType F>
Matrix<F> postcompose(const Matrix<F>& h, std::size_t a_dim) {
    return kron(Matrix<F>::identity(h.field(), a_dim), h);
}

/// psi_bar: Hom(Hom(D,N), M) -> Hom(N, M (x) D), the dualized currying used by
/// mixed homomorphisms. Defining identity: psi_bar(Phi)(v) = sum_c Phi(e_c* (x) v)
/// (x) e_c, where e_c* (x) v is the rank-one map d |-> e_c*(d) v in Hom(D,N).
template <FieldType F>
Matrix<F> psi_bar(const F& field, std::size_t d_dim, std::size_t n_dim, std::size_t m_dim) {
    std::size_t size = d_dim * n_dim * m_dim;
    Matrix<F> perm(field, size, size);
    for (std::size_t c = 0; c < d_dim; ++c)
        for (std::size_t j = 0; j < n_dim; ++j)
            for (std::size_t r = 0; r < m_dim; ++r) {
                // Phi supported at (r, rank-one map e_c* (x) e_j)
                std::size_t src = hom_index(m_dim, r, hom_index(n_dim, j, c));
                // image supported at (e_r (x) e_c, e_j) in Hom(N, M (x) D)
                std::size_t dst = hom_index(m_dim * d_dim, tensor_index(d_dim, r, c), j);
                perm(dst, src) = field.one();
            }
    return perm;
}

/// Direct application of psi_bar to a concrete Phi: Hom(D,N) -> M, given as an
/// m x (d*n) matrix; returns the (m*d) x n matrix of psi_bar(Phi): N -> M (x) D.
template <FieldType F>
Matrix<F> psi_bar_apply(const Matrix<F>& phi, std::size_t d_dim, std::size_t n_dim) {
    if (phi.cols() != d_dim * n_dim) throw StructureError("psi_bar_apply: shape mismatch");
    std::size_t m_dim = phi.rows();
    Matrix<F> out(phi.field(), m_dim * d_dim, n_dim);
    for (std::size_t c = 0; c < d_dim; ++c)
        for (std::size_t j = 0; j < n_dim; ++j)
            for (std::size_t r = 0; r < m_dim; ++r)
                out(tensor_index(d_dim, r, c), j) = phi(r, hom_index(n_dim, j, c));
    return out;
}

}  // namespace codual
