#pragma once

// Modules over a finite-dimensional algebra: left actions A(x)X -> X, right
// actions X(x)A -> X, and the theta formulation of a right module (a map
// X -> Hom(A,X) subject to two diagrams). The theta matrix is stored in the
// same vec-convention as a contramodule structure map, so dualizing it is a
// transpose plus the (here trivial) psi reshuffle.

#include <cstddef>

#include "codual/cert.hpp"
#include "codual/coalgebra.hpp"
#include "codual/contramodule.hpp"

namespace codual {

template <FieldType F>
struct LeftModule {
    Algebra<F> over;
    std::size_t dim = 0;
    Matrix<F> action;  // dim x (a*dim), coordinates of A (x) X
};

template <FieldType F>
struct RightModule {
    Algebra<F> over;
    std::size_t dim = 0;
    Matrix<F> action;  // dim x (dim*a), coordinates of X (x) A
};

/// theta: X -> Hom(A,X), stored dualized as a dim x (a*dim) matrix: entry
/// (r, c*dim + j) is the e_j-coefficient of theta(e_r)(e_c), i.e. of e_r . e_c.
template <FieldType F>
struct ThetaModule {
    Algebra<F> over;
    std::size_t dim = 0;
    Matrix<F> theta;  // dim x (a*dim)
};

template <FieldType F>
void validate_shapes(const LeftModule<F>& m) {
    validate_shapes(m.over);
    if (m.action.rows() != m.dim || m.action.cols() != m.over.dim * m.dim)
        throw StructureError("left module action must be dim x (a*dim), got " + m.action.shape_str());
}

template <FieldType F>
void validate_shapes(const RightModule<F>& m) {
    validate_shapes(m.over);
    if (m.action.rows() != m.dim || m.action.cols() != m.dim * m.over.dim)
        throw StructureError("right module action must be dim x (dim*a), got " + m.action.shape_str());
}

template <FieldType F>
void validate_shapes(const ThetaModule<F>& m) {
    validate_shapes(m.over);
    if (m.theta.rows() != m.dim || m.theta.cols() != m.over.dim * m.dim)
        throw StructureError("theta module theta must be dim x (a*dim), got " + m.theta.shape_str());
}

template <FieldType F>
CertReport<F> check_left_module(const LeftModule<F>& m) {
    validate_shapes(m);
    auto id_a = Matrix<F>::identity(m.over.field, m.over.dim);
    auto id_x = Matrix<F>::identity(m.over.field, m.dim);
    CertReport<F> report;
    report.checks.push_back(compare_composites<F>("associativity",
                                                  m.action * kron(m.over.mult, id_x),
                                                  m.action * kron(id_a, m.action)));
    report.checks.push_back(compare_composites<F>("unit", m.action * kron(m.over.unit, id_x), id_x));
    return report;
}

template <FieldType F>
CertReport<F> check_right_module(const RightModule<F>& m) {
    validate_shapes(m);
    auto id_a = Matrix<F>::identity(m.over.field, m.over.dim);
    auto id_x = Matrix<F>::identity(m.over.field, m.dim);
    CertReport<F> report;
    report.checks.push_back(compare_composites<F>("associativity",
                                                  m.action * kron(m.action, id_a),
                                                  m.action * kron(id_x, m.over.mult)));
    report.checks.push_back(compare_composites<F>("unit", m.action * kron(id_x, m.over.unit), id_x));
    return report;
}

/// The two theta diagrams. With T the (a*dim) x dim matrix of theta: X -> Hom(A,X):
/// square Hom(A,theta) . theta = psi^-1 . Hom(mult,X) . theta, triangle
/// Hom(unit,X) . theta = id.
template <FieldType F>
CertReport<F> check_theta_module(const ThetaModule<F>& m) {
    validate_shapes(m);
    const F& k = m.over.field;
    std::size_t a = m.over.dim;
    Matrix<F> t = m.theta.transpose();  // the map X -> Hom(A,X)
    CertReport<F> report;
    auto via_theta = postcompose(t, a) * t;
    auto via_mult = psi(k, a, a, m.dim).transpose() * precompose(m.over.mult, m.dim) * t;
    report.checks.push_back(compare_composites<F>("square", via_theta, via_mult));
    report.checks.push_back(compare_composites<F>("triangle", precompose(m.over.unit, m.dim) * t,
                                                  Matrix<F>::identity(k, m.dim)));
    return report;
}

template <FieldType F>
void require_certified(const LeftModule<F>& m, const char* who) {
    auto r = check_left_module(m);
    if (!r.pass())
        throw PreconditionError(std::string(who) + ": left module fails " + r.first_failure());
}

template <FieldType F>
void require_certified(const RightModule<F>& m, const char* who) {
    auto r = check_right_module(m);
    if (!r.pass())
        throw PreconditionError(std::string(who) + ": right module fails " + r.first_failure());
}

template <FieldType F>
void require_certified(const ThetaModule<F>& m, const char* who) {
    auto r = check_theta_module(m);
    if (!r.pass())
        throw PreconditionError(std::string(who) + ": theta module fails " + r.first_failure());
}

// ---------------------------------------------------------------------------
// conversions between the action and theta formulations

/// theta(e_r)(e_c) = e_r . e_c, re-stored in the contramodule vec-convention.
template <FieldType F>
ThetaModule<F> module_to_theta(const RightModule<F>& m) {
    require_certified(m, "module_to_theta");
    std::size_t a = m.over.dim, x = m.dim;
    Matrix<F> s(m.over.field, x, a * x);
    for (std::size_t r = 0; r < x; ++r)
        for (std::size_t c = 0; c < a; ++c)
            for (std::size_t j = 0; j < x; ++j)
                s(j, hom_index(x, r, c)) = m.action(r, tensor_index(a, j, c));
    return ThetaModule<F>{m.over, x, s};
}

template <FieldType F>
RightModule<F> theta_to_module(const ThetaModule<F>& t) {
    require_certified(t, "theta_to_module");
    std::size_t a = t.over.dim, x = t.dim;
    Matrix<F> action(t.over.field, x, x * a);
    for (std::size_t r = 0; r < x; ++r)
        for (std::size_t c = 0; c < a; ++c)
            for (std::size_t j = 0; j < x; ++j)
                action(r, tensor_index(a, j, c)) = t.theta(j, hom_index(x, r, c));
    return RightModule<F>{t.over, x, action};
}

// ---------------------------------------------------------------------------
// constructions

template <FieldType F>
LeftModule<F> left_self_action(const Algebra<F>& a) {
    return LeftModule<F>{a, a.dim, a.mult};
}

template <FieldType F>
RightModule<F> right_self_action(const Algebra<F>& a) {
    return RightModule<F>{a, a.dim, a.mult};
}

template <FieldType F>
LeftModule<F> conjugate(const LeftModule<F>& m, const Matrix<F>& g, const Matrix<F>& g_inv) {
    auto id_a = Matrix<F>::identity(m.over.field, m.over.dim);
    return LeftModule<F>{m.over, m.dim, g * m.action * kron(id_a, g_inv)};
}

template <FieldType F>
RightModule<F> conjugate(const RightModule<F>& m, const Matrix<F>& g, const Matrix<F>& g_inv) {
    auto id_a = Matrix<F>::identity(m.over.field, m.over.dim);
    return RightModule<F>{m.over, m.dim, g * m.action * kron(g_inv, id_a)};
}

template <FieldType F>
LeftModule<F> direct_sum(const LeftModule<F>& p, const LeftModule<F>& q) {
    if (!(p.over == q.over)) throw StructureError("direct_sum: modules over different algebras");
    std::size_t a = p.over.dim, x = p.dim, y = q.dim, t = x + y;
    Matrix<F> action(p.over.field, t, a * t);
    for (std::size_t c = 0; c < a; ++c) {
        for (std::size_t i = 0; i < x; ++i)
            for (std::size_t j = 0; j < x; ++j)
                action(i, tensor_index(t, c, j)) = p.action(i, tensor_index(x, c, j));
        for (std::size_t i = 0; i < y; ++i)
            for (std::size_t j = 0; j < y; ++j)
                action(x + i, tensor_index(t, c, x + j)) = q.action(i, tensor_index(y, c, j));
    }
    return LeftModule<F>{p.over, t, action};
}

template <FieldType F>
RightModule<F> direct_sum(const RightModule<F>& p, const RightModule<F>& q) {
    if (!(p.over == q.over)) throw StructureError("direct_sum: modules over different algebras");
    std::size_t a = p.over.dim, x = p.dim, y = q.dim, t = x + y;
    Matrix<F> action(p.over.field, t, t * a);
    for (std::size_t c = 0; c < a; ++c) {
        for (std::size_t i = 0; i < x; ++i)
            for (std::size_t j = 0; j < x; ++j)
                action(i, tensor_index(a, j, c)) = p.action(i, tensor_index(a, j, c));
        for (std::size_t i = 0; i < y; ++i)
            for (std::size_t j = 0; j < y; ++j)
                action(x + i, tensor_index(a, x + j, c)) = q.action(i, tensor_index(a, j, c));
    }
    return RightModule<F>{p.over, t, action};
}

}  // namespace codual
