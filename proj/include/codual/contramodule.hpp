#pragma once

// Contramodules (Z, theta: Hom(C,Z) -> Z). The structure matrix acts on the
// vec-coordinates of Hom(C,Z); the square composes theta against Hom(C,theta)
// one way and against Hom(Delta,Z) after the psi reshuffle the other way.

#include <cstddef>

#include "codual/cert.hpp"
#include "codual/coalgebra.hpp"

namespace codual {

template <FieldType F>
struct Contramodule {
    Coalgebra<F> over;
    std::size_t dim = 0;
    Matrix<F> theta;  // dim x (n*dim)
};

template <FieldType F>
void validate_shapes(const Contramodule<F>& z) {
    validate_shapes(z.over);
    if (z.theta.rows() != z.dim || z.theta.cols() != z.over.dim * z.dim)
        throw StructureError("contramodule theta must be dim x (n*dim), got " + z.theta.shape_str());
}

/// Square: theta . Hom(C,theta) = theta . Hom(Delta,Z) . psi on
/// Hom(C, Hom(C,Z)); triangle: theta . Hom(eps,Z) = id through Hom(k,Z) = Z.
template <FieldType F>
CertReport<F> check_contramodule(const Contramodule<F>& z) {
    validate_shapes(z);
    const F& k = z.over.field;
    std::size_t n = z.over.dim;
    CertReport<F> report;
    auto via_theta = z.theta * postcompose(z.theta, n);
    auto via_delta = z.theta * precompose(z.over.delta, z.dim) * psi(k, n, n, z.dim);
    report.checks.push_back(compare_composites<F>("square", via_theta, via_delta));
    report.checks.push_back(compare_composites<F>("triangle", z.theta * precompose(z.over.eps, z.dim),
                                                  Matrix<F>::identity(k, z.dim)));
    return report;
}

template <FieldType F>
void require_certified(const Contramodule<F>& z, const char* who) {
    auto r = check_contramodule(z);
    if (!r.pass())
        throw PreconditionError(std::string(who) + ": contramodule fails " + r.first_failure());
}

/// Transport along invertible g: theta' = g . theta . Hom(C, g^-1).
template <FieldType F>
Contramodule<F> conjugate(const Contramodule<F>& z, const Matrix<F>& g, const Matrix<F>& g_inv) {
    return Contramodule<F>{z.over, z.dim, g * z.theta * postcompose(g_inv, z.over.dim)};
}

}  // namespace codual
