#pragma once

// Hom-space solvers. Each homomorphism condition is linear in the candidate
// map, so the solution space is the kernel of a constraint matrix assembled by
// evaluating the residual on every elementary matrix of Hom(domain, codomain).
// Solutions are returned as canonical subspaces of the vec-coordinates.

#include <cstddef>
#include <functional>

#include "codual/comodule.hpp"
#include "codual/contramodule.hpp"
#include "codual/linalg.hpp"
#include "codual/module.hpp"

namespace codual {

/// Kernel of alpha |-> residual(alpha) over Hom(k^dom, k^cod); residual must be
/// linear and return a fixed-shape matrix.
template <FieldType F, class Residual>
Subspace<F> solve_linear_maps(const F& field, std::size_t dom, std::size_t cod,
                              Residual&& residual) {
    std::size_t hom_dim = cod * dom;
    if (hom_dim == 0) return zero_subspace(field, hom_dim);
    Matrix<F> probe(field, cod, dom);
    Matrix<F> first = residual(probe);  // residual of the zero map fixes the shape
    std::size_t out_dim = first.rows() * first.cols();
    Matrix<F> constraints(field, out_dim, hom_dim);
    for (std::size_t k = 0; k < hom_dim; ++k) {
        Matrix<F> e(field, cod, dom);
        e(k % cod, k / cod) = field.one();
        Matrix<F> r = residual(e);
        auto v = vec(r);
        for (std::size_t i = 0; i < out_dim; ++i) constraints(i, k) = v(i, 0);
    }
    return kernel_basis(constraints);
}

// ---------------------------------------------------------------------------
// membership checks for explicit maps

template <FieldType F>
bool is_comodule_hom(const Matrix<F>& alpha, const Comodule<F>& x, const Comodule<F>& y) {
    auto id_c = Matrix<F>::identity(x.over.field, x.over.dim);
    return kron(id_c, alpha) * x.rho == y.rho * alpha;
}

template <FieldType F>
bool is_right_comodule_hom(const Matrix<F>& alpha, const RightComodule<F>& x,
                           const RightComodule<F>& y) {
    auto id_c = Matrix<F>::identity(x.over.field, x.over.dim);
    return kron(alpha, id_c) * x.mu == y.mu * alpha;
}

template <FieldType F>
bool is_contramodule_hom(const Matrix<F>& alpha, const Contramodule<F>& z,
                         const Contramodule<F>& t) {
    return alpha * z.theta == t.theta * postcompose(alpha, z.over.dim);
}

template <FieldType F>
bool is_left_module_hom(const Matrix<F>& alpha, const LeftModule<F>& p, const LeftModule<F>& q) {
    auto id_a = Matrix<F>::identity(p.over.field, p.over.dim);
    return alpha * p.action == q.action * kron(id_a, alpha);
}

template <FieldType F>
bool is_right_module_hom(const Matrix<F>& alpha, const RightModule<F>& p, const RightModule<F>& q) {
    auto id_a = Matrix<F>::identity(p.over.field, p.over.dim);
    return alpha * p.action == q.action * kron(alpha, id_a);
}

template <FieldType F>
bool is_theta_module_hom(const Matrix<F>& alpha, const ThetaModule<F>& p, const ThetaModule<F>& q) {
    // Hom(A, alpha) . theta_p = theta_q . alpha on the underlying maps X -> Hom(A,X)
    return postcompose(alpha, p.over.dim) * p.theta.transpose() == q.theta.transpose() * alpha;
}

// ---------------------------------------------------------------------------
// solvers

template <FieldType F>
Subspace<F> hom_comodules(const Comodule<F>& x, const Comodule<F>& y) {
    if (!(x.over == y.over)) throw StructureError("hom_comodules: different base coalgebras");
    require_certified(x, "hom_comodules");
    require_certified(y, "hom_comodules");
    auto id_c = Matrix<F>::identity(x.over.field, x.over.dim);
    return solve_linear_maps(x.over.field, x.dim, y.dim, [&](const Matrix<F>& a) {
        return kron(id_c, a) * x.rho - y.rho * a;
    });
}

template <FieldType F>
Subspace<F> hom_right_comodules(const RightComodule<F>& x, const RightComodule<F>& y) {
    if (!(x.over == y.over)) throw StructureError("hom_right_comodules: different base coalgebras");
    require_certified(x, "hom_right_comodules");
    require_certified(y, "hom_right_comodules");
    auto id_c = Matrix<F>::identity(x.over.field, x.over.dim);
    return solve_linear_maps(x.over.field, x.dim, y.dim, [&](const Matrix<F>& a) {
        return kron(a, id_c) * x.mu - y.mu * a;
    });
}

template <FieldType F>
Subspace<F> hom_contramodules(const Contramodule<F>& z, const Contramodule<F>& t) {
    if (!(z.over == t.over)) throw StructureError("hom_contramodules: different base coalgebras");
    require_certified(z, "hom_contramodules");
    require_certified(t, "hom_contramodules");
    return solve_linear_maps(z.over.field, z.dim, t.dim, [&](const Matrix<F>& a) {
        return a * z.theta - t.theta * postcompose(a, z.over.dim);
    });
}

template <FieldType F>
Subspace<F> hom_left_modules(const LeftModule<F>& p, const LeftModule<F>& q) {
    if (!(p.over == q.over)) throw StructureError("hom_left_modules: different base algebras");
    require_certified(p, "hom_left_modules");
    require_certified(q, "hom_left_modules");
    auto id_a = Matrix<F>::identity(p.over.field, p.over.dim);
    return solve_linear_maps(p.over.field, p.dim, q.dim, [&](const Matrix<F>& a) {
        return a * p.action - q.action * kron(id_a, a);
    });
}

template <FieldType F>
Subspace<F> hom_right_modules(const RightModule<F>& p, const RightModule<F>& q) {
    if (!(p.over == q.over)) throw StructureError("hom_right_modules: different base algebras");
    require_certified(p, "hom_right_modules");
    require_certified(q, "hom_right_modules");
    auto id_a = Matrix<F>::identity(p.over.field, p.over.dim);
    return solve_linear_maps(p.over.field, p.dim, q.dim, [&](const Matrix<F>& a) {
        return a * p.action - q.action * kron(a, id_a);
    });
}

template <FieldType F>
Subspace<F> hom_theta_modules(const ThetaModule<F>& p, const ThetaModule<F>& q) {
    if (!(p.over == q.over)) throw StructureError("hom_theta_modules: different base algebras");
    require_certified(p, "hom_theta_modules");
    require_certified(q, "hom_theta_modules");
    Matrix<F> tp = p.theta.transpose();
    Matrix<F> tq = q.theta.transpose();
    return solve_linear_maps(p.over.field, p.dim, q.dim, [&](const Matrix<F>& a) {
        return postcompose(a, p.over.dim) * tp - tq * a;
    });
}

}  // namespace codual
