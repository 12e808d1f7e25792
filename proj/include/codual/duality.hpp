#pragma once

// The four duality functors between comodules, pseudocompact modules, discrete
// modules and contramodules, each with its inverse. On objects every arrow is
// X |-> X*; the structure maps are transposed and reshuffled through psi, with
// every identification ((C(x)X)* = C*(x)X*, X = X**, Hom(A,X)* = Hom(A*,X*))
// the identity on coordinates.
//
// The right vertical arrow (discrete right C*-modules -> contramodules) is
// implemented directly from the theta formulation; that it agrees with the
// composite of the other three arrows is a theorem, and the test suite checks
// it matrix-exactly rather than defining it that way.

#include <cstddef>

#include "codual/comodule.hpp"
#include "codual/contramodule.hpp"
#include "codual/module.hpp"

namespace codual {

/// Lower horizontal arrow: (X, rho) |-> (X*, rho_bar) with
/// rho_bar = rho* . psi_{C,k}^X. Accepts raw structure maps: the output passes
/// check_contramodule exactly when the input passes check_comodule.
template <FieldType F>
Contramodule<F> comodule_to_contramodule(const Comodule<F>& x) {
    validate_shapes(x);
    const F& k = x.over.field;
    return Contramodule<F>{x.over, x.dim, dual_map(x.rho) * psi(k, x.over.dim, x.dim, 1)};
}

/// Inverse of the lower arrow through X = X**.
template <FieldType F>
Comodule<F> contramodule_to_comodule(const Contramodule<F>& z) {
    validate_shapes(z);
    const F& k = z.over.field;
    return Comodule<F>{z.over, z.dim, psi(k, z.over.dim, z.dim, 1) * dual_map(z.theta)};
}

template <FieldType F>
void require_matching_dual(const Algebra<F>& a, const Coalgebra<F>& c, const char* who) {
    if (!(a == dual_algebra(c)))
        throw StructureError(std::string(who) + ": module algebra is not the dual of the coalgebra");
}

/// Left vertical arrow, inverse direction: a pseudocompact left C*-module
/// (X, a: C*(x)X -> X) dualizes to the comodule (X*, a*) through
/// (C*(x)X)* = C(x)X*.
template <FieldType F>
Comodule<F> pcmodule_to_comodule(const LeftModule<F>& m, const Coalgebra<F>& c) {
    validate_shapes(m);
    require_matching_dual(m.over, c, "pcmodule_to_comodule");
    return Comodule<F>{c, m.dim, dual_map(m.action)};
}

template <FieldType F>
LeftModule<F> comodule_to_pcmodule(const Comodule<F>& x) {
    validate_shapes(x);
    return LeftModule<F>{dual_algebra(x.over), x.dim, dual_map(x.rho)};
}

/// Horizontal arrow: left A-module (X, l) |-> right A-module (X*, r) with
/// r(f (x) a) = f(a . -); entrywise r(j, i*a + c) = l(i, c*x + j).
template <FieldType F>
RightModule<F> pcmodule_to_dmodule(const LeftModule<F>& m) {
    validate_shapes(m);
    std::size_t a = m.over.dim, x = m.dim;
    Matrix<F> action(m.over.field, x, x * a);
    for (std::size_t j = 0; j < x; ++j)
        for (std::size_t i = 0; i < x; ++i)
            for (std::size_t c = 0; c < a; ++c)
                action(j, tensor_index(a, i, c)) = m.action(i, tensor_index(x, c, j));
    return RightModule<F>{m.over, x, action};
}

template <FieldType F>
LeftModule<F> dmodule_to_pcmodule(const RightModule<F>& m) {
    validate_shapes(m);
    std::size_t a = m.over.dim, x = m.dim;
    Matrix<F> action(m.over.field, x, a * x);
    for (std::size_t j = 0; j < x; ++j)
        for (std::size_t i = 0; i < x; ++i)
            for (std::size_t c = 0; c < a; ++c)
                action(i, tensor_index(x, c, j)) = m.action(j, tensor_index(a, i, c));
    return LeftModule<F>{m.over, x, action};
}

/// Right vertical arrow, direct construction: dualize the theta formulation of
/// the right C*-module. The stored theta matrix of the module IS the
/// contramodule structure map on X* over C.
template <FieldType F>
Contramodule<F> dmodule_to_contramodule(const RightModule<F>& m, const Coalgebra<F>& c) {
    validate_shapes(m);
    require_matching_dual(m.over, c, "dmodule_to_contramodule");
    std::size_t a = m.over.dim, x = m.dim;
    Matrix<F> theta(m.over.field, x, a * x);
    for (std::size_t j = 0; j < x; ++j)
        for (std::size_t c2 = 0; c2 < a; ++c2)
            for (std::size_t r = 0; r < x; ++r)
                theta(j, hom_index(x, r, c2)) = m.action(r, tensor_index(a, j, c2));
    return Contramodule<F>{c, x, theta};
}

template <FieldType F>
RightModule<F> contramodule_to_dmodule(const Contramodule<F>& z) {
    validate_shapes(z);
    std::size_t a = z.over.dim, x = z.dim;
    Matrix<F> action(z.over.field, x, x * a);
    for (std::size_t j = 0; j < x; ++j)
        for (std::size_t c = 0; c < a; ++c)
            for (std::size_t r = 0; r < x; ++r)
                action(r, tensor_index(a, j, c)) = z.theta(j, hom_index(x, r, c));
    return RightModule<F>{dual_algebra(z.over), x, action};
}

/// A right C-comodule (M, mu) dualizes to the right C*-module (M*, mu*) through
/// (M(x)C)* = M*(x)C*. Used by the cotensor/tensor duality.
template <FieldType F>
RightModule<F> right_comodule_to_module(const RightComodule<F>& m) {
    validate_shapes(m);
    return RightModule<F>{dual_algebra(m.over), m.dim, dual_map(m.mu)};
}

/// A left C-comodule (X, rho) dualizes to the left C*-module (X*, rho*); the
/// inverse reading of the Simson arrow without re-dualizing the algebra.
template <FieldType F>
LeftModule<F> comodule_to_left_module(const Comodule<F>& x) {
    return comodule_to_pcmodule(x);
}

}  // namespace codual
